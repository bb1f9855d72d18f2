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

#include "tropgame/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace tropgame {

TropMatrix::TropMatrix(int m, int n, const Weight& fill)
    : rows(m), cols(n), entries(static_cast<size_t>(m) * n, fill) {
  if (m < 0 || n < 0) throw DimensionError("negative matrix dimension");
  row_labels.resize(m);
  col_labels.resize(n);
  std::iota(row_labels.begin(), row_labels.end(), 0);
  std::iota(col_labels.begin(), col_labels.end(), 0);
}

TropMatrix TropMatrix::identity_pattern(int n) {
  TropMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Weight(0);
  return m;
}

ExtMatrix::ExtMatrix(int m, int n, const ExtNumber& fill)
    : rows(m), cols(n), entries(static_cast<size_t>(m) * n, fill) {
  if (m < 0 || n < 0) throw DimensionError("negative matrix dimension");
}

ExtMatrix to_ext(const TropMatrix& b) {
  ExtMatrix a(b.rows, b.cols);
  for (int i = 0; i < b.rows; ++i)
    for (int j = 0; j < b.cols; ++j) a.at(i, j) = inject(b.at(i, j));
  return a;
}

WeightVec matvec(const TropMatrix& b, const WeightVec& x) {
  if (static_cast<int>(x.size()) != b.cols)
    throw DimensionError("matvec: vector length does not match column count");
  WeightVec out(b.rows, Weight::bottom());
  for (int i = 0; i < b.rows; ++i) {
    Weight acc = Weight::bottom();
    for (int j = 0; j < b.cols; ++j) acc = tmax_add(acc, tmax_mul(b.at(i, j), x[j]));
    out[i] = acc;
  }
  return out;
}

std::vector<ExtendedWeight> residual_apply(const TropMatrix& a,
                                           const std::vector<ExtendedWeight>& y) {
  if (static_cast<int>(y.size()) != a.rows)
    throw DimensionError("residual_apply: vector length does not match row count");
  std::vector<ExtendedWeight> out(a.cols, ExtendedWeight::pos_inf());
  for (int j = 0; j < a.cols; ++j) {
    // Empty infimum (all -inf column) stays +inf under the stated convention.
    ExtendedWeight acc = ExtendedWeight::pos_inf();
    for (int i = 0; i < a.rows; ++i) {
      const Weight& aij = a.at(i, j);
      if (aij.is_bottom()) continue;  // -A_ij = +inf dominates the min away
      ExtendedWeight term;
      switch (y[i].tag) {
        case ExtendedWeight::Tag::neg_inf:
          term = ExtendedWeight::neg_inf();
          break;
        case ExtendedWeight::Tag::pos_inf:
          term = ExtendedWeight::pos_inf();
          break;
        case ExtendedWeight::Tag::finite:
          term = ExtendedWeight(y[i].value - aij.value());
          break;
      }
      if (term < acc) acc = term;
    }
    out[j] = acc;
  }
  return out;
}

std::vector<ExtendedWeight> residual_apply(const TropMatrix& a, const WeightVec& y) {
  std::vector<ExtendedWeight> lifted(y.size());
  for (size_t i = 0; i < y.size(); ++i) lifted[i] = ExtendedWeight::from_weight(y[i]);
  return residual_apply(a, lifted);
}

WeightVec EliminationRecord::extend(const WeightVec& reduced) const {
  if (reduced.size() != kept_cols.size())
    throw DimensionError("extend: reduced vector length does not match record");
  WeightVec out(original_vars, Weight::bottom());
  for (size_t k = 0; k < kept_cols.size(); ++k) out[kept_cols[k]] = reduced[k];
  return out;
}

EliminationRecord EliminationRecord::identity(int n) {
  EliminationRecord rec;
  rec.original_vars = n;
  rec.kept_cols.resize(n);
  std::iota(rec.kept_cols.begin(), rec.kept_cols.end(), 0);
  return rec;
}

namespace {

bool column_has_finite(const TropMatrix& a, int j) {
  for (int i = 0; i < a.rows; ++i)
    if (a.at(i, j).is_finite()) return true;
  return false;
}

bool row_has_finite(const TropMatrix& b, int i) {
  for (int j = 0; j < b.cols; ++j)
    if (b.at(i, j).is_finite()) return true;
  return false;
}

}  // namespace

MinMaxOperator make_operator(TropMatrix a, TropMatrix b) {
  if (a.rows != b.rows || a.cols != b.cols)
    throw DimensionError("make_operator: A and B must have equal shape");
  MinMaxOperator op;
  op.assumption1_ok = true;
  for (int j = 0; j < a.cols; ++j)
    if (!column_has_finite(a, j)) op.assumption1_ok = false;
  op.assumption2_ok = true;
  for (int i = 0; i < b.rows; ++i)
    if (!row_has_finite(b, i)) op.assumption2_ok = false;
  op.elim = EliminationRecord::identity(a.cols);
  op.A = std::move(a);
  op.B = std::move(b);
  return op;
}

WeightVec minmax_apply(const MinMaxOperator& op, const WeightVec& x) {
  const WeightVec bx = matvec(op.B, x);
  WeightVec out(op.dim(), Weight::bottom());
  for (int j = 0; j < op.dim(); ++j) {
    bool any = false;
    Weight acc = Weight::bottom();
    for (int i = 0; i < op.A.rows; ++i) {
      const Weight& aij = op.A.at(i, j);
      if (aij.is_bottom()) continue;
      Weight term = bx[i].is_bottom() ? Weight::bottom()
                                      : Weight(bx[i].value() - aij.value());
      acc = (!any || term < acc) ? term : acc;
      any = true;
    }
    if (!any)
      throw DomainError(
          "minmax_apply: column " + std::to_string(j + 1) +
          " of A is identically -inf (Assumption 1 violated, +inf component)");
    out[j] = acc;
  }
  return out;
}

std::vector<RatOrBottom> minmax_apply_rational(const MinMaxOperator& op,
                                               const std::vector<RatOrBottom>& x) {
  if (static_cast<int>(x.size()) != op.dim())
    throw DimensionError("minmax_apply_rational: bad vector length");
  const int m = op.A.rows;
  std::vector<RatOrBottom> bx(m);
  for (int i = 0; i < m; ++i) {
    RatOrBottom acc;
    for (int j = 0; j < op.B.cols; ++j) {
      const Weight& bij = op.B.at(i, j);
      if (bij.is_bottom() || !x[j].finite) continue;
      Rational term = x[j].value + Rational(bij.value());
      if (!acc.finite || acc.value < term) acc = RatOrBottom(term);
    }
    bx[i] = acc;
  }
  std::vector<RatOrBottom> out(op.dim());
  for (int j = 0; j < op.dim(); ++j) {
    bool any = false;
    RatOrBottom acc;  // running minimum; -inf dominates
    for (int i = 0; i < m; ++i) {
      const Weight& aij = op.A.at(i, j);
      if (aij.is_bottom()) continue;
      RatOrBottom term;
      if (bx[i].finite) term = RatOrBottom(bx[i].value - Rational(aij.value()));
      if (!any || !term.finite || (acc.finite && term.value < acc.value))
        acc = term;
      any = true;
    }
    if (!any)
      throw DomainError("minmax_apply_rational: Assumption 1 violated");
    out[j] = acc;
  }
  return out;
}

MinMaxOperator enforce_assumptions(const TropMatrix& a, const TropMatrix& b) {
  if (a.rows != b.rows || a.cols != b.cols)
    throw DimensionError("enforce_assumptions: A and B must have equal shape");
  const int m = a.rows;
  const int n = a.cols;

  // Working copy: original rows first, then one trivial row x_j <= x_j per
  // column of A without a finite entry (restores Assumption 1).
  std::vector<int> trivial_for;
  for (int j = 0; j < n; ++j)
    if (!column_has_finite(a, j)) trivial_for.push_back(j);
  const int total_rows = m + static_cast<int>(trivial_for.size());

  TropMatrix wa(total_rows, n);
  TropMatrix wb(total_rows, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      wa.at(i, j) = a.at(i, j);
      wb.at(i, j) = b.at(i, j);
    }
  std::vector<int> row_label(total_rows);
  for (int i = 0; i < m; ++i) row_label[i] = i;
  for (size_t t = 0; t < trivial_for.size(); ++t) {
    int i = m + static_cast<int>(t);
    int j = trivial_for[t];
    wa.at(i, j) = Weight(0);
    wb.at(i, j) = Weight(0);
    row_label[i] = -(j + 1);
  }

  std::vector<bool> row_alive(total_rows, true);
  std::vector<bool> col_alive(n, true);
  EliminationRecord rec;
  rec.original_vars = n;

  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < total_rows; ++i) {
      if (!row_alive[i]) continue;
      bool b_all_bottom = true;
      bool a_all_bottom = true;
      for (int j = 0; j < n; ++j) {
        if (!col_alive[j]) continue;
        if (wb.at(i, j).is_finite()) b_all_bottom = false;
        if (wa.at(i, j).is_finite()) a_all_bottom = false;
      }
      if (a_all_bottom) {
        // Left-hand side identically -inf: trivially satisfied.
        row_alive[i] = false;
        changed = true;
        continue;
      }
      if (b_all_bottom) {
        // Right-hand side identically -inf: every variable with a finite
        // A-entry in this row must be -inf.
        for (int j = 0; j < n; ++j) {
          if (col_alive[j] && wa.at(i, j).is_finite()) {
            col_alive[j] = false;
            rec.forced.push_back(j);
          }
        }
        row_alive[i] = false;
        changed = true;
      }
    }
  }

  for (int j = 0; j < n; ++j)
    if (col_alive[j]) rec.kept_cols.push_back(j);
  for (int i = 0; i < m; ++i)
    if (!row_alive[i]) rec.dropped_rows.push_back(i);

  int kept_rows = 0;
  for (int i = 0; i < total_rows; ++i) kept_rows += row_alive[i] ? 1 : 0;

  TropMatrix ra(kept_rows, static_cast<int>(rec.kept_cols.size()));
  TropMatrix rb(kept_rows, static_cast<int>(rec.kept_cols.size()));
  int r = 0;
  for (int i = 0; i < total_rows; ++i) {
    if (!row_alive[i]) continue;
    ra.row_labels[r] = row_label[i];
    rb.row_labels[r] = row_label[i];
    for (size_t k = 0; k < rec.kept_cols.size(); ++k) {
      ra.at(r, static_cast<int>(k)) = wa.at(i, rec.kept_cols[k]);
      rb.at(r, static_cast<int>(k)) = wb.at(i, rec.kept_cols[k]);
    }
    ++r;
  }
  for (size_t k = 0; k < rec.kept_cols.size(); ++k) {
    ra.col_labels[k] = rec.kept_cols[k];
    rb.col_labels[k] = rec.kept_cols[k];
  }

  MinMaxOperator op = make_operator(std::move(ra), std::move(rb));
  if (!rec.kept_cols.empty() && (!op.assumption1_ok || !op.assumption2_ok))
    throw InternalError("enforce_assumptions: reduction failed to restore assumptions");
  op.assumption1_ok = op.assumption2_ok = true;
  op.elim = std::move(rec);
  return op;
}

std::pair<TropMatrix, TropMatrix> homogenize(const TropMatrix& a,
                                             const TropMatrix& b,
                                             const WeightVec& c,
                                             const WeightVec& d) {
  if (a.rows != b.rows || a.cols != b.cols)
    throw DimensionError("homogenize: A and B must have equal shape");
  if (static_cast<int>(c.size()) != a.rows || static_cast<int>(d.size()) != a.rows)
    throw DimensionError("homogenize: c and d must have one entry per row");
  TropMatrix ha(a.rows, a.cols + 1);
  TropMatrix hb(b.rows, b.cols + 1);
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < a.cols; ++j) {
      ha.at(i, j) = a.at(i, j);
      hb.at(i, j) = b.at(i, j);
    }
    ha.at(i, a.cols) = c[i];
    hb.at(i, a.cols) = d[i];
  }
  return {std::move(ha), std::move(hb)};
}

std::vector<ExtNumber> ext_matvec(const ExtMatrix& a,
                                  const std::vector<ExtNumber>& x) {
  if (static_cast<int>(x.size()) != a.cols)
    throw DimensionError("ext_matvec: vector length does not match column count");
  for (const ExtNumber& e : x)
    if (!e.is_real()) throw DomainError("ext_matvec: x must be real-typed");
  std::vector<ExtNumber> out(a.rows, ExtNumber::zero());
  for (int i = 0; i < a.rows; ++i) {
    ExtNumber acc = ExtNumber::zero();
    for (int j = 0; j < a.cols; ++j) acc = ext_add(acc, ext_mul(a.at(i, j), x[j]));
    out[i] = acc;
  }
  return out;
}

bool check_balance_zero(const ExtMatrix& a, const std::vector<ExtNumber>& x) {
  for (const ExtNumber& e : ext_matvec(a, x))
    if (!e.is_ghost_typed()) return false;
  return true;
}

}  // namespace tropgame
