/*
 * Copyright 2026 The tropgame authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "tropgame/convexity.hpp"

#include <algorithm>
#include <utility>

namespace tropgame {

namespace {

std::vector<int> support_of(const WeightVec& x) {
  std::vector<int> s;
  for (size_t j = 0; j < x.size(); ++j)
    if (x[j].is_finite()) s.push_back(static_cast<int>(j));
  return s;
}

bool leq(const WeightVec& a, const WeightVec& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (!(a[i] <= b[i])) return false;
  return true;
}

void verify_witness(const TropMatrix& a, const TropMatrix& b, const WeightVec& x) {
  if (!leq(matvec(a, x), matvec(b, x)))
    throw InternalError("feasibility witness failed to re-verify Ax <= Bx");
}

/** Columns of A and B restricted to an ascending index set. */
std::pair<TropMatrix, TropMatrix> restrict_columns(const TropMatrix& a,
                                                   const TropMatrix& b,
                                                   const std::vector<int>& cols) {
  TropMatrix ra(a.rows, static_cast<int>(cols.size()));
  TropMatrix rb(b.rows, static_cast<int>(cols.size()));
  for (int i = 0; i < a.rows; ++i)
    for (size_t k = 0; k < cols.size(); ++k) {
      ra.at(i, static_cast<int>(k)) = a.at(i, cols[k]);
      rb.at(i, static_cast<int>(k)) = b.at(i, cols[k]);
    }
  for (size_t k = 0; k < cols.size(); ++k) {
    ra.col_labels[k] = cols[k];
    rb.col_labels[k] = cols[k];
  }
  return {std::move(ra), std::move(rb)};
}

Int max_abs_entries(const TropMatrix& a, const TropMatrix& b) {
  Int m = 0;
  for (const Weight& w : a.entries)
    if (w.is_finite() && abs(w.value()) > m) m = abs(w.value());
  for (const Weight& w : b.entries)
    if (w.is_finite() && abs(w.value()) > m) m = abs(w.value());
  return m;
}

/**
 * Monotone fixed-point iteration z <- min(f(z), z) from z = 0 on a reduced
 * all-winning system. Terminates at an all-finite integer fixed point (the
 * iterates stay within a bounded distance of any finite solution and are
 * nonincreasing integers).
 */
WeightVec descend_to_fixed_point(const MinMaxOperator& op) {
  const int n = op.dim();
  WeightVec z(n, Weight(0));
  const Int big_m = max_abs_entries(op.A, op.B);
  const Int nm = Int(n) + op.constraint_count();
  const Int guard = 8 * Int(n) * nm * nm * (big_m + 1) + 64;
  for (Int it = 0; it <= guard; ++it) {
    WeightVec fz = minmax_apply(op, z);
    bool fixed = true;
    for (int j = 0; j < n; ++j)
      if (fz[j] < z[j]) {
        z[j] = fz[j];
        fixed = false;
      }
    if (fixed) return z;
  }
  throw InternalError("support witness iteration failed to reach a fixed point");
}

/** The support-realising witness: all-finite on the support columns,
 *  -inf elsewhere. `support` holds original column indices. */
WeightVec build_support_witness(const TropMatrix& a, const TropMatrix& b,
                                const std::vector<int>& support) {
  auto [ra, rb] = restrict_columns(a, b, support);
  MinMaxOperator rop = enforce_assumptions(ra, rb);
  if (!rop.elim.forced.empty())
    throw InternalError("support restriction eliminated a supported variable");
  WeightVec z = descend_to_fixed_point(rop);
  for (const Weight& w : z)
    if (w.is_bottom())
      throw InternalError("support witness is not finite on the support");
  WeightVec full(a.cols, Weight::bottom());
  for (size_t k = 0; k < support.size(); ++k) full[support[k]] = z[k];
  return full;
}

void attach_losing_strategy(FeasibilityReport& report, const MinMaxOperator& op) {
  GameValue gv = solve_exact(op);
  for (const Rational& r : gv.chi)
    if (r >= 0)
      throw InternalError("infeasible verdict but a state has nonnegative value");
  report.certificate = FeasibilityReport::Certificate::strategy;
  report.losing_strategy = gv.pi;
  report.strategy_values = certify_strategy(op, gv.pi);
  for (const Rational& r : report.strategy_values)
    if (r >= 0)
      throw InternalError("losing certificate has a nonnegative strategy value");
}

}  // namespace

FeasibilityReport cone_nontrivial(const TropMatrix& a, const TropMatrix& b) {
  FeasibilityReport report;
  MinMaxOperator op = enforce_assumptions(a, b);
  report.elim = op.elim;
  if (op.elim.all_forced()) {
    report.feasible = false;
    report.certificate = FeasibilityReport::Certificate::elimination;
    return report;
  }

  PowerTrace trace = power_algorithm(op);
  if (!trace.nonneg) {
    report.feasible = false;
    attach_losing_strategy(report, op);
    return report;
  }

  report.feasible = true;
  report.certificate = FeasibilityReport::Certificate::witness;
  WeightVec witness;
  if (trace.witness) {
    witness = op.elim.extend(*trace.witness);
  } else {
    // Horizon verdict carries no witness; the support construction does.
    FeasibilityReport sup = cone_support(a, b);
    if (!sup.feasible || !sup.witness)
      throw InternalError("horizon verdict but the support is empty");
    witness = *sup.witness;
  }
  verify_witness(a, b, witness);
  report.support = support_of(witness);
  report.witness = std::move(witness);
  return report;
}

FeasibilityReport cone_support(const TropMatrix& a, const TropMatrix& b) {
  FeasibilityReport report;
  MinMaxOperator op = enforce_assumptions(a, b);
  report.elim = op.elim;
  if (op.elim.all_forced()) {
    report.feasible = false;
    report.certificate = FeasibilityReport::Certificate::elimination;
    return report;
  }

  std::vector<bool> winners = winning_states(op);
  std::vector<int> support;
  for (size_t k = 0; k < winners.size(); ++k)
    if (winners[k]) support.push_back(op.elim.kept_cols[k]);

  if (support.empty()) {
    report.feasible = false;
    attach_losing_strategy(report, op);
    return report;
  }

  WeightVec witness = build_support_witness(a, b, support);
  verify_witness(a, b, witness);
  if (support_of(witness) != support)
    throw InternalError("support witness has the wrong support");
  report.feasible = true;
  report.certificate = FeasibilityReport::Certificate::witness;
  report.support = std::move(support);
  report.witness = std::move(witness);
  return report;
}

std::optional<WeightVec> finite_solution(const TropMatrix& a, const TropMatrix& b) {
  FeasibilityReport report = cone_support(a, b);
  if (!report.feasible) return std::nullopt;
  if (static_cast<int>(report.support.size()) != a.cols) return std::nullopt;
  return report.witness;
}

FeasibilityReport poly_nonempty(const TropMatrix& a, const TropMatrix& b,
                                const WeightVec& c, const WeightVec& d) {
  auto [ha, hb] = homogenize(a, b, c, d);
  FeasibilityReport cone = cone_support(ha, hb);
  const int hom = a.cols;  // index of the homogenizing column

  FeasibilityReport report;
  report.elim = cone.elim;
  bool hom_supported =
      std::find(cone.support.begin(), cone.support.end(), hom) != cone.support.end();
  if (!cone.feasible || !hom_supported) {
    report.feasible = false;
    report.certificate = cone.certificate;
    report.losing_strategy = cone.losing_strategy;
    report.strategy_values = cone.strategy_values;
    return report;
  }

  const WeightVec& y = *cone.witness;
  const Int& base = y[hom].value();
  WeightVec x(a.cols, Weight::bottom());
  for (int j = 0; j < a.cols; ++j)
    if (y[j].is_finite()) x[j] = Weight(y[j].value() - base);

  // Re-verify the affine system directly.
  WeightVec lhs = matvec(a, x);
  WeightVec rhs = matvec(b, x);
  for (int i = 0; i < a.rows; ++i)
    if (!(tmax_add(lhs[i], c[i]) <= tmax_add(rhs[i], d[i])))
      throw InternalError("polyhedron witness failed to re-verify");

  report.feasible = true;
  report.certificate = FeasibilityReport::Certificate::witness;
  report.support = support_of(x);
  report.witness = std::move(x);
  return report;
}

std::optional<WeightVec> integer_witness(const TropMatrix& a, const TropMatrix& b) {
  FeasibilityReport report = cone_support(a, b);
  if (!report.feasible) return std::nullopt;
  return report.witness;
}

PolyhedronFromGame game_to_polyhedron(const MinMaxOperator& op, int r,
                                      const Rational& lambda) {
  if (r < 0 || r >= op.dim())
    throw DomainError("game_to_polyhedron: state index out of range");
  const Int p = numerator(lambda);
  const Int q = denominator(lambda);
  const int m = op.constraint_count();
  const int n = op.dim();

  PolyhedronFromGame sys;
  sys.scale = q;
  sys.A = TropMatrix(m, n - 1);
  sys.B = TropMatrix(m, n - 1);
  sys.c.assign(m, Weight::bottom());
  sys.d.assign(m, Weight::bottom());
  for (int i = 0; i < m; ++i) {
    int col = 0;
    for (int j = 0; j < n; ++j) {
      const Weight& aij = op.A.at(i, j);
      const Weight& bij = op.B.at(i, j);
      if (j == r) {
        if (aij.is_finite()) sys.c[i] = Weight(q * aij.value() + p);
        if (bij.is_finite()) sys.d[i] = Weight(q * bij.value());
      } else {
        if (aij.is_finite()) sys.A.at(i, col) = Weight(q * aij.value() + p);
        if (bij.is_finite()) sys.B.at(i, col) = Weight(q * bij.value());
        ++col;
      }
    }
  }
  return sys;
}

}  // namespace tropgame
