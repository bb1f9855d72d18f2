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

#include "tropgame/games.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <utility>

namespace tropgame {

namespace {

Int max_abs_finite(const MinMaxOperator& op) {
  Int m = 0;
  for (const Weight& w : op.A.entries)
    if (w.is_finite() && abs(w.value()) > m) m = abs(w.value());
  for (const Weight& w : op.B.entries)
    if (w.is_finite() && abs(w.value()) > m) m = abs(w.value());
  return m;
}

void require_assumptions(const MinMaxOperator& op, const char* who) {
  if (!op.assumption1_ok || !op.assumption2_ok)
    throw DomainError(std::string(who) + ": operator must satisfy Assumptions 1-2 "
                      "(run enforce_assumptions first)");
}

// ---------------------------------------------------------------------------
// One-player machinery: weighted digraphs, SCCs, Karp cycle means, gain/bias.
// ---------------------------------------------------------------------------

struct Digraph {
  int n = 0;
  std::vector<std::vector<std::pair<int, Int>>> adj;  // (target, weight)

  explicit Digraph(int nodes = 0) : n(nodes), adj(nodes) {}
  void add_edge(int u, int v, Int w) { adj[u].emplace_back(v, std::move(w)); }
};

struct SccResult {
  std::vector<int> comp;                 // component id per node
  std::vector<std::vector<int>> members; // ids in reverse topological order
};

SccResult tarjan_scc(const Digraph& g) {
  const int n = g.n;
  SccResult res;
  res.comp.assign(n, -1);
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack;
  int next_index = 0;

  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    std::vector<std::pair<int, size_t>> dfs;
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    dfs.emplace_back(root, 0);
    while (!dfs.empty()) {
      int v = dfs.back().first;
      size_t ei = dfs.back().second;
      if (ei < g.adj[v].size()) {
        ++dfs.back().second;
        int w = g.adj[v][ei].first;
        if (index[w] == -1) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          dfs.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
      } else {
        if (low[v] == index[v]) {
          res.members.emplace_back();
          int w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            res.comp[w] = static_cast<int>(res.members.size()) - 1;
            res.members.back().push_back(w);
          } while (w != v);
          std::sort(res.members.back().begin(), res.members.back().end());
        }
        dfs.pop_back();
        if (!dfs.empty()) {
          int p = dfs.back().first;
          low[p] = std::min(low[p], low[v]);
        }
      }
    }
  }
  return res;
}

/**
 * Karp's maximal cycle mean over a strongly connected node set with at least
 * one internal arc: mu = max_v min_k (D_s(v) - D_k(v)) / (s - k), where
 * D_k(v) is the maximal weight of a k-arc walk from a fixed source.
 */
Rational karp_max_mean(const Digraph& g, const std::vector<int>& nodes) {
  const int s = static_cast<int>(nodes.size());
  std::vector<int> local(g.n, -1);
  for (int i = 0; i < s; ++i) local[nodes[i]] = i;

  std::vector<std::vector<std::optional<Int>>> d(
      s + 1, std::vector<std::optional<Int>>(s));
  d[0][0] = 0;  // source = nodes[0]
  for (int k = 1; k <= s; ++k) {
    for (int lu = 0; lu < s; ++lu) {
      if (!d[k - 1][lu]) continue;
      for (const auto& [v, w] : g.adj[nodes[lu]]) {
        int lv = local[v];
        if (lv < 0) continue;
        Int cand = *d[k - 1][lu] + w;
        if (!d[k][lv] || cand > *d[k][lv]) d[k][lv] = cand;
      }
    }
  }

  std::optional<Rational> best;
  for (int v = 0; v < s; ++v) {
    if (!d[s][v]) continue;
    std::optional<Rational> inner;
    for (int k = 0; k < s; ++k) {
      if (!d[k][v]) continue;
      Rational r(*d[s][v] - *d[k][v], Int(s - k));
      if (!inner || r < *inner) inner = r;
    }
    if (inner && (!best || *inner > *best)) best = inner;
  }
  if (!best) throw InternalError("karp_max_mean: no closed walk found");
  return *best;
}

/** Per-node gain of the one-player Max game: the maximal mean of a cycle
 *  reachable from the node. Every node needs out-degree >= 1. */
std::vector<Rational> max_gains(const Digraph& g) {
  SccResult scc = tarjan_scc(g);
  const int c = static_cast<int>(scc.members.size());
  std::vector<std::optional<Rational>> comp_gain(c);

  // members come out of Tarjan in reverse topological order, so every
  // cross arc points at an already-finished component.
  for (int ci = 0; ci < c; ++ci) {
    const std::vector<int>& nodes = scc.members[ci];
    bool cyclic = false;
    std::optional<Rational> gain;
    for (int u : nodes)
      for (const auto& [v, w] : g.adj[u]) {
        (void)w;
        if (scc.comp[v] == ci) {
          cyclic = true;
        } else {
          const auto& down = comp_gain[scc.comp[v]];
          if (!down) throw InternalError("max_gains: condensation order broken");
          if (!gain || *down > *gain) gain = down;
        }
      }
    if (cyclic) {
      Rational mu = karp_max_mean(g, nodes);
      if (!gain || mu > *gain) gain = mu;
    }
    if (!gain) throw InternalError("max_gains: node cannot reach any cycle");
    comp_gain[ci] = gain;
  }

  std::vector<Rational> out(g.n);
  for (int v = 0; v < g.n; ++v) out[v] = *comp_gain[scc.comp[v]];
  return out;
}

struct OnePlayerEval {
  std::vector<Rational> gain;
  std::vector<Rational> bias;
};

/**
 * Exact evaluation of a one-player Max game: gains as above, bias as
 * longest-walk transfer to the critical graph so that (bias, gain) is an
 * invariant half-line of the operator x_j -> max_k (w_jk + x_k).
 */
OnePlayerEval evaluate_max_game(const Digraph& g) {
  const int n = g.n;
  OnePlayerEval ev;
  ev.gain = max_gains(g);

  // Gain-homogeneous subgraph H with normalised weights w - gain.
  struct HEdge {
    int to;
    Rational wt;
  };
  std::vector<std::vector<HEdge>> h(n);
  Digraph h_shape(n);
  for (int u = 0; u < n; ++u)
    for (const auto& [v, w] : g.adj[u]) {
      if (ev.gain[v] > ev.gain[u])
        throw InternalError("evaluate_max_game: gain increases along an arc");
      if (ev.gain[v] == ev.gain[u]) {
        h[u].push_back({v, Rational(w) - ev.gain[u]});
        h_shape.add_edge(u, v, 0);
      }
    }

  // Critical nodes: nodes on a cycle of H with normalised weight zero.
  std::vector<bool> critical(n, false);
  SccResult hscc = tarjan_scc(h_shape);
  for (const std::vector<int>& nodes : hscc.members) {
    const int s = static_cast<int>(nodes.size());
    std::vector<int> local(n, -1);
    for (int i = 0; i < s; ++i) local[nodes[i]] = i;
    bool internal = false;
    std::vector<std::vector<std::optional<Rational>>> dist(
        s, std::vector<std::optional<Rational>>(s));
    for (int lu = 0; lu < s; ++lu)
      for (const HEdge& e : h[nodes[lu]]) {
        int lv = local[e.to];
        if (lv < 0) continue;
        internal = true;
        if (!dist[lu][lv] || e.wt > *dist[lu][lv]) dist[lu][lv] = e.wt;
      }
    if (!internal) continue;
    for (int k = 0; k < s; ++k)
      for (int i = 0; i < s; ++i) {
        if (!dist[i][k]) continue;
        for (int j = 0; j < s; ++j) {
          if (!dist[k][j]) continue;
          Rational via = *dist[i][k] + *dist[k][j];
          if (!dist[i][j] || via > *dist[i][j]) dist[i][j] = via;
        }
      }
    for (int i = 0; i < s; ++i) {
      if (!dist[i][i]) continue;
      if (*dist[i][i] > 0)
        throw InternalError("evaluate_max_game: positive normalised cycle");
      if (*dist[i][i] == 0) critical[nodes[i]] = true;
    }
  }

  // Bias: maximal normalised walk weight into the critical set.
  std::vector<std::optional<Rational>> u(n);
  for (int v = 0; v < n; ++v)
    if (critical[v]) u[v] = Rational(0);
  for (int round = 0; round <= n + 1; ++round) {
    bool changed = false;
    for (int v = 0; v < n; ++v)
      for (const HEdge& e : h[v]) {
        if (!u[e.to]) continue;
        Rational cand = e.wt + *u[e.to];
        if (!u[v] || cand > *u[v]) {
          u[v] = cand;
          changed = true;
        }
      }
    if (!changed) break;
    if (round == n + 1)
      throw InternalError("evaluate_max_game: bias relaxation did not settle");
  }

  ev.bias.resize(n);
  for (int v = 0; v < n; ++v) {
    if (!u[v])
      throw InternalError("evaluate_max_game: node cannot reach the critical graph");
    ev.bias[v] = *u[v];
  }

  // Self-check the half-line equations; cheap and must always hold.
  for (int v = 0; v < n; ++v) {
    std::optional<Rational> m1;
    for (const auto& [t, w] : g.adj[v]) {
      (void)w;
      if (!m1 || ev.gain[t] > *m1) m1 = ev.gain[t];
    }
    if (!m1 || *m1 != ev.gain[v])
      throw InternalError("evaluate_max_game: gain equation violated");
    std::optional<Rational> m2;
    for (const HEdge& e : h[v]) {
      Rational cand = e.wt + ev.bias[e.to];
      if (!m2 || cand > *m2) m2 = cand;
    }
    if (!m2 || *m2 != ev.bias[v])
      throw InternalError("evaluate_max_game: bias equation violated");
  }
  return ev;
}

std::vector<int> finite_rows_of_column(const TropMatrix& a, int j) {
  std::vector<int> out;
  for (int i = 0; i < a.rows; ++i)
    if (a.at(i, j).is_finite()) out.push_back(i);
  return out;
}

std::vector<int> finite_cols_of_row(const TropMatrix& b, int i) {
  std::vector<int> out;
  for (int j = 0; j < b.cols; ++j)
    if (b.at(i, j).is_finite()) out.push_back(j);
  return out;
}

/** The one-player graph of h^pi on circle nodes. */
Digraph min_strategy_graph(const MinMaxOperator& op, const std::vector<int>& pi) {
  Digraph g(op.dim());
  for (int j = 0; j < op.dim(); ++j) {
    int i = pi[j];
    for (int k = 0; k < op.B.cols; ++k) {
      const Weight& bik = op.B.at(i, k);
      if (bik.is_finite())
        g.add_edge(j, k, bik.value() - op.A.at(i, j).value());
    }
  }
  return g;
}

}  // namespace

// ---------------------------------------------------------------------------
// Game graph and DOT export
// ---------------------------------------------------------------------------

GameGraph build_game(const MinMaxOperator& op) {
  require_assumptions(op, "build_game");
  GameGraph g;
  g.circles = op.dim();
  g.squares = op.A.rows;
  g.from_circle.resize(g.circles);
  g.from_square.resize(g.squares);
  for (int j = 0; j < g.circles; ++j)
    for (int i = 0; i < g.squares; ++i)
      if (op.A.at(i, j).is_finite())
        g.from_circle[j].push_back({i, -op.A.at(i, j).value()});
  for (int i = 0; i < g.squares; ++i)
    for (int k = 0; k < g.circles; ++k)
      if (op.B.at(i, k).is_finite())
        g.from_square[i].push_back({k, op.B.at(i, k).value()});
  g.max_abs_weight = max_abs_finite(op);
  return g;
}

std::string to_dot(const GameGraph& g) {
  std::ostringstream out;
  out << "digraph game {\n  rankdir=LR;\n";
  for (int i = 0; i < g.squares; ++i)
    out << "  r" << (i + 1) << " [shape=box];\n";
  for (int j = 0; j < g.circles; ++j)
    out << "  c" << (j + 1) << " [shape=circle];\n";
  for (int j = 0; j < g.circles; ++j)
    for (const GameGraph::Arc& a : g.from_circle[j])
      out << "  c" << (j + 1) << " -> r" << (a.to + 1) << " [label=\"" << a.weight
          << "\"];\n";
  for (int i = 0; i < g.squares; ++i)
    for (const GameGraph::Arc& a : g.from_square[i])
      out << "  r" << (i + 1) << " -> c" << (a.to + 1) << " [label=\"" << a.weight
          << "\"];\n";
  out << "}\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Value iteration, power algorithm, winning states
// ---------------------------------------------------------------------------

WeightVec value_iteration(const MinMaxOperator& op, const WeightVec& x0,
                          const Int& n_steps) {
  if (n_steps < 0) throw DomainError("value_iteration: negative horizon");
  WeightVec x = x0;
  for (Int k = 0; k < n_steps; ++k) x = minmax_apply(op, x);
  return x;
}

PowerTrace power_algorithm(const MinMaxOperator& op) {
  if (!op.assumption1_ok)
    throw DomainError("power_algorithm: Assumption 1 must hold");
  const int n = op.dim();
  const Int m = op.constraint_count();
  const Int big_m = max_abs_finite(op);
  const Int horizon = 2 * (n + m) * (n + m) * big_m + 1;

  const Weight zero(0);
  PowerTrace trace;
  WeightVec x(n, zero);
  trace.iterates.push_back(x);

  auto g_apply = [&op](const WeightVec& v) {
    WeightVec fv = minmax_apply(op, v);
    for (size_t j = 0; j < fv.size(); ++j)
      if (v[j] < fv[j]) fv[j] = v[j];
    return fv;
  };

  for (Int k = 0; k < horizon; ++k) {
    WeightVec xn = g_apply(x);

    if (xn == x) {  // (3) fixed point: x <= f(x), x not identically -inf
      trace.stop = PowerTrace::Stop::fixed_point;
      trace.nonneg = true;
      trace.witness = x;
      return trace;
    }
    trace.iterates.push_back(xn);

    bool all_negative = true;
    for (const Weight& w : xn)
      if (!(w < zero)) all_negative = false;
    if (all_negative) {  // (1) certificate that chibar < 0
      trace.stop = PowerTrace::Stop::all_negative;
      trace.nonneg = false;
      return trace;
    }

    // (4) partial fixed point: freeze the strictly decreasing coordinates.
    std::vector<bool> dropped(n, false);
    int drop_count = 0;
    for (int j = 0; j < n; ++j)
      if (xn[j] < x[j]) {
        dropped[j] = true;
        ++drop_count;
      }
    if (drop_count > 0 && drop_count < n) {
      WeightVec y(n, Weight::bottom());
      bool nonzero = false;
      for (int j = 0; j < n; ++j)
        if (!dropped[j]) {
          y[j] = x[j];
          if (y[j].is_finite()) nonzero = true;
        }
      if (nonzero && g_apply(y) == y) {
        trace.stop = PowerTrace::Stop::partial_fixed_point;
        trace.nonneg = true;
        trace.witness = y;
        return trace;
      }
    }
    x = std::move(xn);
  }

  trace.stop = PowerTrace::Stop::horizon;  // (2) chibar >= 0, no witness here
  trace.nonneg = true;
  return trace;
}

std::vector<bool> winning_states(const MinMaxOperator& op) {
  require_assumptions(op, "winning_states");
  const int n = op.dim();
  const Int nm = Int(n) + op.constraint_count();
  const Int big_m = max_abs_finite(op);
  const Int horizon = 4 * nm * nm * big_m + 1;
  const Int threshold = -2 * nm * big_m;

  WeightVec v = value_iteration(op, WeightVec(n, Weight(0)), horizon);
  std::vector<bool> winners(n, false);
  for (int j = 0; j < n; ++j)
    winners[j] = v[j].is_finite() && v[j].value() >= threshold;
  return winners;
}

// ---------------------------------------------------------------------------
// Exact solution by policy iteration
// ---------------------------------------------------------------------------

GameValue solve_exact(const MinMaxOperator& op) {
  require_assumptions(op, "solve_exact");
  const int n = op.dim();
  const int m = op.constraint_count();

  std::vector<std::vector<int>> act(n), succ(m);
  for (int j = 0; j < n; ++j) act[j] = finite_rows_of_column(op.A, j);
  for (int i = 0; i < m; ++i) succ[i] = finite_cols_of_row(op.B, i);

  std::vector<int> pi(n);
  for (int j = 0; j < n; ++j) pi[j] = act[j][0];

  std::set<std::vector<int>> seen;
  const long guard = 1000 + 50L * (n + 1) * (m + 1);
  OnePlayerEval ev;

  for (long iter = 0;; ++iter) {
    if (iter > guard)
      throw InternalError("solve_exact: policy iteration guard exceeded");
    if (!seen.insert(pi).second)
      throw InternalError("solve_exact: policy iteration revisited a strategy");

    ev = evaluate_max_game(min_strategy_graph(op, pi));

    bool improved = false;
    for (int j = 0; j < n; ++j) {
      Rational best_gain = ev.gain[j];
      Rational best_val = ev.gain[j] + ev.bias[j];
      int best_i = pi[j];
      for (int i : act[j]) {
        Rational cand_gain = ev.gain[succ[i][0]];
        for (int k : succ[i])
          if (ev.gain[k] > cand_gain) cand_gain = ev.gain[k];
        if (cand_gain > best_gain) continue;
        std::optional<Rational> inner;
        for (int k : succ[i]) {
          if (ev.gain[k] != cand_gain) continue;
          Rational c = Rational(op.B.at(i, k).value()) + ev.bias[k];
          if (!inner || c > *inner) inner = c;
        }
        Rational cand_val = *inner - Rational(op.A.at(i, j).value());
        if (cand_gain < best_gain ||
            (cand_gain == best_gain && cand_val < best_val)) {
          best_gain = cand_gain;
          best_val = cand_val;
          best_i = i;
        }
      }
      if (best_i != pi[j]) {
        pi[j] = best_i;
        improved = true;
      }
    }
    if (!improved) break;
  }

  GameValue gv;
  gv.chi = ev.gain;
  gv.potential = ev.bias;
  gv.winning.resize(n);
  for (int j = 0; j < n; ++j) gv.winning[j] = ev.gain[j] >= 0;
  gv.pi.kind = Strategy::Kind::min_player;
  gv.pi.choice = pi;

  // Optimal Max strategy from the half-line: sigma(i) maximises
  // (gain_k, B_ik + bias_k) lexicographically.
  gv.sigma.kind = Strategy::Kind::max_player;
  gv.sigma.choice.assign(m, -1);
  for (int i = 0; i < m; ++i) {
    int best = succ[i][0];
    for (int k : succ[i]) {
      if (ev.gain[k] > ev.gain[best]) {
        best = k;
      } else if (ev.gain[k] == ev.gain[best]) {
        Rational a = Rational(op.B.at(i, k).value()) + ev.bias[k];
        Rational b = Rational(op.B.at(i, best).value()) + ev.bias[best];
        if (a > b) best = k;
      }
    }
    gv.sigma.choice[i] = best;
  }
  return gv;
}

// ---------------------------------------------------------------------------
// Strategy certificates and duality
// ---------------------------------------------------------------------------

std::vector<Rational> certify_strategy(const MinMaxOperator& op, const Strategy& s) {
  require_assumptions(op, "certify_strategy");
  const int n = op.dim();
  const int m = op.constraint_count();

  if (s.kind == Strategy::Kind::max_player) {
    if (static_cast<int>(s.choice.size()) != m)
      throw DomainError("certify_strategy: Max strategy needs one move per row");
    for (int i = 0; i < m; ++i) {
      int k = s.choice[i];
      if (k < 0 || k >= n || op.B.at(i, k).is_bottom())
        throw DomainError("certify_strategy: B is -inf on the arc of row " +
                          std::to_string(i + 1));
    }
    // g^sigma is a one-player Min game; evaluate through the negated graph.
    Digraph g(n);
    for (int j = 0; j < n; ++j)
      for (int i : finite_rows_of_column(op.A, j)) {
        int k = s.choice[i];
        g.add_edge(j, k, op.A.at(i, j).value() - op.B.at(i, k).value());
      }
    std::vector<Rational> neg = max_gains(g);
    for (Rational& r : neg) r = -r;
    return neg;
  }

  if (static_cast<int>(s.choice.size()) != n)
    throw DomainError("certify_strategy: Min strategy needs one move per column");
  for (int j = 0; j < n; ++j) {
    int i = s.choice[j];
    if (i < 0 || i >= m || op.A.at(i, j).is_bottom())
      throw DomainError("certify_strategy: A is -inf on the arc of column " +
                        std::to_string(j + 1));
  }
  return max_gains(min_strategy_graph(op, s.choice));
}

MinMaxOperator dual(const MinMaxOperator& op) {
  const int m = op.A.rows;
  const int n = op.A.cols;
  TropMatrix a2(n, m), b2(n, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      a2.at(j, i) = negate(op.A.at(i, j));
      b2.at(j, i) = negate(op.B.at(i, j));
    }
  return make_operator(std::move(a2), std::move(b2));
}

}  // namespace tropgame
