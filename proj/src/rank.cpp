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

#include "tropgame/rank.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "tropgame/convexity.hpp"

namespace tropgame {

namespace {

// ---------------------------------------------------------------------------
// Exact Hungarian assignment (minimisation form with potentials).
// Forbidden arcs are padded with a cost too large to appear in any optimum
// that has an all-genuine alternative.
// ---------------------------------------------------------------------------

struct Hungarian {
  std::vector<int> row_to_col;
  std::vector<int> col_to_row;
  std::vector<Int> u, v;  // u[i] + v[j] <= cost[i][j], equality on matches
};

Hungarian solve_min_assignment(const std::vector<std::vector<Int>>& cost) {
  const int n = static_cast<int>(cost.size());
  std::vector<Int> u(n + 1), v(n + 1);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<std::optional<Int>> minv(n + 1);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      int i0 = p[j0], j1 = -1;
      std::optional<Int> delta;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        Int cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (!minv[j] || cur < *minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (!delta || *minv[j] < *delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += *delta;
          v[j] -= *delta;
        } else if (minv[j]) {
          *minv[j] -= *delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  Hungarian h;
  h.row_to_col.assign(n, -1);
  h.col_to_row.assign(n, -1);
  for (int j = 1; j <= n; ++j) {
    h.row_to_col[p[j] - 1] = j - 1;
    h.col_to_row[j - 1] = p[j] - 1;
  }
  h.u.assign(u.begin() + 1, u.end());
  h.v.assign(v.begin() + 1, v.end());
  return h;
}

/** Does the tight-arc graph admit a perfect matching other than the one
 *  found?  Equivalent to a directed cycle over rows, where a non-matched
 *  tight genuine arc (i, j) yields the edge i -> owner(j). */
bool has_alternate_matching(const std::vector<std::vector<Int>>& cost,
                            const std::vector<std::vector<bool>>& genuine,
                            const Hungarian& h) {
  const int n = static_cast<int>(cost.size());
  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!genuine[i][j] || h.row_to_col[i] == j) continue;
      if (cost[i][j] == h.u[i] + h.v[j]) adj[i].push_back(h.col_to_row[j]);
    }
  // Any directed cycle works; iterative coloring DFS.
  std::vector<int> color(n, 0);
  for (int s = 0; s < n; ++s) {
    if (color[s] != 0) continue;
    std::vector<std::pair<int, size_t>> stack{{s, 0}};
    color[s] = 1;
    while (!stack.empty()) {
      int v = stack.back().first;
      size_t ei = stack.back().second;
      if (ei < adj[v].size()) {
        ++stack.back().second;
        int w = adj[v][ei];
        if (color[w] == 1) return true;
        if (color[w] == 0) {
          color[w] = 1;
          stack.emplace_back(w, 0);
        }
      } else {
        color[v] = 2;
        stack.pop_back();
      }
    }
  }
  return false;
}

}  // namespace

AssignmentResult optimal_assignment(const ExtMatrix& a) {
  if (a.rows != a.cols) throw DimensionError("optimal_assignment: square matrix required");
  const int n = a.rows;
  AssignmentResult res;
  if (n == 0) {  // the empty permutation, value 0
    res.value = Weight(0);
    res.unique = true;
    return res;
  }

  Int max_abs = 0;
  for (const ExtNumber& e : a.entries)
    if (!e.is_zero() && abs(e.magnitude().value()) > max_abs)
      max_abs = abs(e.magnitude().value());
  // A single padded arc must lose against any all-genuine permutation.
  const Int pad = Int(n) * (2 * max_abs + 1) + 1;

  std::vector<std::vector<Int>> cost(n, std::vector<Int>(n));
  std::vector<std::vector<bool>> genuine(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const ExtNumber& e = a.at(i, j);
      if (e.is_zero()) {
        cost[i][j] = pad;
      } else {
        cost[i][j] = -e.magnitude().value();
        genuine[i][j] = true;
      }
    }

  Hungarian h = solve_min_assignment(cost);
  Int total = 0;
  bool hit_pad = false;
  for (int i = 0; i < n; ++i) {
    if (!genuine[i][h.row_to_col[i]]) hit_pad = true;
    total -= cost[i][h.row_to_col[i]];
  }
  if (hit_pad) {
    res.value = Weight::bottom();
    res.unique = false;
    return res;
  }
  res.value = Weight(total);
  res.permutation = h.row_to_col;
  res.unique = !has_alternate_matching(cost, genuine, h);
  if (res.unique) {
    for (int i = 0; i < n; ++i)
      if (a.at(i, h.row_to_col[i]).mult() == Mult::ghost) res.ghost_contaminated = true;
  }
  return res;
}

AssignmentResult optimal_assignment(const TropMatrix& b) {
  return optimal_assignment(to_ext(b));
}

bool is_tropically_singular(const TropMatrix& b) {
  AssignmentResult r = optimal_assignment(b);
  return r.value.is_bottom() || !r.unique;
}

ExtNumber tropical_permanent(const ExtMatrix& a) {
  AssignmentResult r = optimal_assignment(a);
  if (r.value.is_bottom()) return ExtNumber::zero();
  if (!r.unique || r.ghost_contaminated) return ghost(r.value);
  return inject(r.value);
}

// ---------------------------------------------------------------------------
// The independence game
// ---------------------------------------------------------------------------

MinMaxOperator independence_operator(const ExtMatrix& a) {
  const int m = a.rows;
  const int n = a.cols;
  std::vector<std::pair<int, int>> arcs;  // E, row-major order
  std::vector<bool> col_ok(n, false);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      if (a.at(i, j).is_invertible()) {
        arcs.emplace_back(i, j);
        col_ok[j] = true;
      }
  for (int j = 0; j < n; ++j)
    if (!col_ok[j])
      throw DomainError("independence_operator: column " + std::to_string(j + 1) +
                        " has no real non-zero entry (columns trivially dependent)");

  TropMatrix c(static_cast<int>(arcs.size()), n);
  TropMatrix d(static_cast<int>(arcs.size()), n);
  for (size_t r = 0; r < arcs.size(); ++r) {
    auto [i, j] = arcs[r];
    c.at(static_cast<int>(r), j) = project(a.at(i, j));
    for (int k = 0; k < n; ++k)
      if (k != j) d.at(static_cast<int>(r), k) = project(a.at(i, k));
    c.row_labels[r] = i;
    d.row_labels[r] = i;
  }
  return make_operator(std::move(c), std::move(d));
}

namespace {

std::vector<ExtNumber> unit_vector(int n, int j) {
  std::vector<ExtNumber> x(n, ExtNumber::zero());
  x[j] = ExtNumber::one();
  return x;
}

std::optional<int> all_ghost_column(const ExtMatrix& a) {
  for (int j = 0; j < a.cols; ++j) {
    bool all = true;
    for (int i = 0; i < a.rows; ++i)
      if (!a.at(i, j).is_ghost_typed()) all = false;
    if (all) return j;
  }
  return std::nullopt;
}

ExtMatrix row_submatrix(const ExtMatrix& a, const std::vector<int>& rows) {
  ExtMatrix sub(static_cast<int>(rows.size()), a.cols);
  for (size_t r = 0; r < rows.size(); ++r)
    for (int j = 0; j < a.cols; ++j)
      sub.at(static_cast<int>(r), j) = a.at(rows[r], j);
  return sub;
}

ExtMatrix col_submatrix(const ExtMatrix& a, const std::vector<int>& cols) {
  ExtMatrix sub(a.rows, static_cast<int>(cols.size()));
  for (int i = 0; i < a.rows; ++i)
    for (size_t c = 0; c < cols.size(); ++c)
      sub.at(i, static_cast<int>(c)) = a.at(i, cols[c]);
  return sub;
}

std::optional<std::vector<int>> exhaustive_nonsingular_rows(const ExtMatrix& a) {
  const int m = a.rows;
  const int n = a.cols;
  std::vector<int> pick(n);
  for (int i = 0; i < n; ++i) pick[i] = i;
  while (true) {
    if (tropical_permanent(row_submatrix(a, pick)).is_invertible()) return pick;
    int t = n - 1;
    while (t >= 0 && pick[t] == m - n + t) --t;
    if (t < 0) return std::nullopt;
    ++pick[t];
    for (int s = t + 1; s < n; ++s) pick[s] = pick[s - 1] + 1;
  }
}

/**
 * Extract rows of a tropically nonsingular n x n submatrix from a matrix
 * with independent columns, following the proof of the rank theorem: build
 * a finite w with f(w) <= lambda + w for some lambda < 0 and pick the
 * minimising row of each coordinate.
 *
 * Coordinates j whose game row (i, j) leaves Max without a move have
 * f_j === -inf; they are eliminated in stages (the removal cascades) and
 * receive stage-decreasing finite penalties so that the certificate
 * inequality still holds. The surviving subgame is solved exactly and the
 * inequality is re-verified over rationals before rows are extracted.
 */
std::optional<std::vector<int>> extract_nonsingular_rows(const ExtMatrix& a) {
  const int m = a.rows;
  const int n = a.cols;
  TropMatrix b(m, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) b.at(i, j) = project(a.at(i, j));
  std::vector<std::vector<int>> rows_e(n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < m; ++i)
      if (a.at(i, j).is_invertible()) rows_e[j].push_back(i);

  // Staged elimination of coordinates with f_j === -inf in the restriction.
  std::vector<int> stage(n, 0);  // 0 = live
  int stages = 0;
  for (bool changed = true; changed;) {
    changed = false;
    ++stages;
    std::vector<int> dying;
    for (int j = 0; j < n; ++j) {
      if (stage[j] != 0) continue;
      bool dead = false;
      for (int i : rows_e[j]) {
        bool any_live_target = false;
        for (int k = 0; k < n; ++k)
          if (k != j && stage[k] == 0 && b.at(i, k).is_finite())
            any_live_target = true;
        if (!any_live_target) dead = true;
      }
      if (dead) dying.push_back(j);
    }
    for (int j : dying) {
      stage[j] = stages;
      changed = true;
    }
  }

  std::vector<int> live;
  for (int j = 0; j < n; ++j)
    if (stage[j] == 0) live.push_back(j);

  Rational lambda(-1);
  std::vector<Rational> w_live(live.size(), Rational(0));
  if (!live.empty()) {
    // Restricted independence operator on the live coordinates.
    std::vector<int> pos(n, -1);
    for (size_t t = 0; t < live.size(); ++t) pos[live[t]] = static_cast<int>(t);
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < m; ++i)
      for (int j : live)
        if (a.at(i, j).is_invertible()) arcs.emplace_back(i, j);
    TropMatrix c(static_cast<int>(arcs.size()), static_cast<int>(live.size()));
    TropMatrix d(static_cast<int>(arcs.size()), static_cast<int>(live.size()));
    for (size_t r = 0; r < arcs.size(); ++r) {
      auto [i, j] = arcs[r];
      c.at(static_cast<int>(r), pos[j]) = b.at(i, j);
      for (int k : live)
        if (k != j) d.at(static_cast<int>(r), pos[k]) = b.at(i, k);
    }
    MinMaxOperator live_op = make_operator(std::move(c), std::move(d));
    if (!live_op.assumption1_ok || !live_op.assumption2_ok)
      throw InternalError("nonsingular_submatrix: live subgame is malformed");
    GameValue gv = solve_exact(live_op);
    lambda = gv.chi[0];
    for (const Rational& g : gv.chi) lambda = std::max(lambda, g);
    if (lambda >= 0) return std::nullopt;  // dependent after all

    // Walk out along the half-line until f(w) <= lambda + w holds exactly.
    for (Int t = 1;; t *= 2) {
      for (size_t k = 0; k < live.size(); ++k)
        w_live[k] = gv.potential[k] + Rational(t) * gv.chi[k];
      std::vector<RatOrBottom> wv;
      wv.reserve(live.size());
      for (const Rational& r : w_live) wv.emplace_back(r);
      std::vector<RatOrBottom> fw = minmax_apply_rational(live_op, wv);
      bool ok = true;
      for (size_t k = 0; k < live.size(); ++k)
        if (fw[k].finite && fw[k].value > lambda + w_live[k]) ok = false;
      if (ok) break;
      if (t > (Int(1) << 62))
        throw InternalError("nonsingular_submatrix: half-line does not settle");
    }
  }

  // Stage-decreasing penalties for the dead coordinates, then verify the
  // certificate for the full operator over rationals.
  Rational big(1);
  for (const Weight& e : b.entries)
    if (e.is_finite() && Rational(abs(e.value())) > big) big = Rational(abs(e.value()));
  for (const Rational& r : w_live)
    if (abs(r) > big) big = abs(r);
  Rational base = 8 * (big + abs(lambda) + 1);

  std::vector<Rational> w(n);
  std::vector<int> sigma(n, -1);
  for (int tries = 0; tries < 64; ++tries, base *= 2) {
    for (int j = 0; j < n; ++j)
      w[j] = stage[j] == 0
                 ? w_live[std::find(live.begin(), live.end(), j) - live.begin()]
                 : -Rational(stages + 1 - stage[j]) * base;
    bool ok = true;
    for (int j = 0; j < n && ok; ++j) {
      // f_j(w) = min over rows in E of (-B_ij + max_{k != j} (B_ik + w_k))
      bool have = false;
      Rational fj;
      int argmin = -1;
      for (int i : rows_e[j]) {
        bool inner_have = false;
        Rational inner;
        for (int k = 0; k < n; ++k) {
          if (k == j || b.at(i, k).is_bottom()) continue;
          Rational cand = Rational(b.at(i, k).value()) + w[k];
          if (!inner_have || cand > inner) {
            inner = cand;
            inner_have = true;
          }
        }
        if (!inner_have) {  // Max stuck: this row pins f_j to -inf
          argmin = i;
          have = false;
          break;
        }
        Rational val = inner - Rational(b.at(i, j).value());
        if (!have || val < fj) {
          fj = val;
          argmin = i;
          have = true;
        }
      }
      sigma[j] = argmin;
      if (have && fj > lambda + w[j]) ok = false;
    }
    if (!ok) continue;
    std::vector<int> rows(sigma.begin(), sigma.end());
    std::sort(rows.begin(), rows.end());
    if (std::adjacent_find(rows.begin(), rows.end()) != rows.end())
      throw InternalError("nonsingular_submatrix: extracted rows are not distinct");
    if (tropical_permanent(row_submatrix(a, rows)).is_invertible()) return rows;
    // Self-check failed; fall back to the exhaustive search.
    return exhaustive_nonsingular_rows(a);
  }
  throw InternalError("nonsingular_submatrix: certificate never verified");
}

}  // namespace

IndependenceReport columns_independent(const ExtMatrix& a) {
  IndependenceReport rep;
  if (std::optional<int> j = all_ghost_column(a)) {
    rep.independent = false;
    rep.witness = unit_vector(a.cols, *j);
    return rep;
  }
  if (a.cols == 0) {
    rep.independent = true;  // the empty family
    rep.certificate_rows = std::vector<int>{};
    return rep;
  }

  MinMaxOperator op = independence_operator(a);
  PowerTrace trace = power_algorithm(op);
  if (trace.nonneg) {
    rep.independent = false;
    WeightVec u;
    if (trace.witness) {
      u = *trace.witness;
    } else {
      FeasibilityReport sup = cone_support(op.A, op.B);
      if (!sup.feasible || !sup.witness)
        throw InternalError("columns_independent: nonneg verdict without witness");
      u = *sup.witness;
    }
    std::vector<ExtNumber> x(u.size());
    for (size_t j = 0; j < u.size(); ++j) x[j] = inject(u[j]);
    if (!check_balance_zero(a, x))
      throw InternalError("columns_independent: dependence witness fails Ax nabla 0");
    rep.witness = std::move(x);
    return rep;
  }

  rep.independent = true;
  if (a.rows < a.cols)
    throw InternalError("columns_independent: independence verdict with m < n");
  rep.certificate_rows = extract_nonsingular_rows(a);
  if (!rep.certificate_rows)
    throw InternalError("columns_independent: certificate extraction disagreed");
  return rep;
}

std::optional<std::vector<int>> nonsingular_submatrix(const ExtMatrix& a) {
  if (a.rows < a.cols)
    throw DomainError("nonsingular_submatrix: requires at least as many rows as columns");
  if (all_ghost_column(a)) return std::nullopt;
  if (a.cols == 0) return std::vector<int>{};
  MinMaxOperator op = independence_operator(a);
  if (power_algorithm(op).nonneg) return std::nullopt;  // dependent
  return extract_nonsingular_rows(a);
}

std::optional<std::vector<ExtNumber>> cramer_solve(const ExtMatrix& a,
                                                   const std::vector<ExtNumber>& b) {
  if (a.rows != a.cols) throw DimensionError("cramer_solve: square matrix required");
  if (static_cast<int>(b.size()) != a.rows)
    throw DimensionError("cramer_solve: right-hand side has wrong length");
  const int n = a.rows;

  ExtNumber per = tropical_permanent(a);
  if (!per.is_invertible()) return std::nullopt;

  // (A^adj)_{ji} = per A(i|j)
  ExtMatrix adj(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      ExtMatrix minor(n - 1, n - 1);
      for (int r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (int s = 0, ss = 0; s < n; ++s) {
          if (s == j) continue;
          minor.at(rr, ss) = a.at(r, s);
          ++ss;
        }
        ++rr;
      }
      adj.at(j, i) = tropical_permanent(minor);
    }

  std::vector<ExtNumber> y(n, ExtNumber::zero());
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      y[j] = ext_add(y[j], ext_mul(adj.at(j, i), b[i]));
  for (const ExtNumber& e : y)
    if (!e.is_real()) return std::nullopt;

  ExtNumber inv = ext_inv(per);
  std::vector<ExtNumber> x(n);
  for (int j = 0; j < n; ++j) x[j] = ext_mul(inv, y[j]);

  // The theorem guarantees x solves Ax nabla b; re-verify componentwise.
  for (int i = 0; i < n; ++i) {
    ExtNumber row = ExtNumber::zero();
    for (int j = 0; j < n; ++j) row = ext_add(row, ext_mul(a.at(i, j), x[j]));
    if (!balances(row, b[i]))
      throw InternalError("cramer_solve: verified solution fails Ax nabla b");
  }
  return x;
}

bool rank_at_least(const ExtMatrix& a, int r) {
  if (r < 0 || r > std::min(a.rows, a.cols))
    throw DomainError("rank_at_least: r must lie in [0, min(m, n)]");
  if (r == 0) return true;
  std::vector<int> pick(r);
  for (int i = 0; i < r; ++i) pick[i] = i;
  while (true) {
    if (columns_independent(col_submatrix(a, pick)).independent) return true;
    int t = r - 1;
    while (t >= 0 && pick[t] == a.cols - r + t) --t;
    if (t < 0) return false;
    ++pick[t];
    for (int s = t + 1; s < r; ++s) pick[s] = pick[s - 1] + 1;
  }
}

int tropical_rank(const ExtMatrix& a, int size_cap) {
  if (std::min(a.rows, a.cols) > size_cap)
    throw SizeCapError("tropical_rank: matrix exceeds the size cap of " +
                       std::to_string(size_cap));
  for (int r = std::min(a.rows, a.cols); r >= 1; --r)
    if (rank_at_least(a, r)) return r;
  return 0;
}

}  // namespace tropgame
