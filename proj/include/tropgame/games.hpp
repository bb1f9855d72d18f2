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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tropgame/linalg.hpp"

namespace tropgame {

/**
 * The bipartite mean payoff game coded by the matrices A and B: Min owns the
 * n circle nodes (columns), Max owns the m square nodes (rows). A finite
 * A_ij yields the arc circle j -> square i with weight -A_ij (Max pays A_ij
 * to Min); a finite B_ik yields square i -> circle k with weight B_ik.
 */
struct GameGraph {
  struct Arc {
    int to;
    Int weight;
  };

  int circles = 0;  // n, Min plays
  int squares = 0;  // m, Max plays
  std::vector<std::vector<Arc>> from_circle;  // arcs to squares
  std::vector<std::vector<Arc>> from_square;  // arcs to circles
  Int max_abs_weight;                         // M
};

/** Build the game graph; both assumptions must hold. */
GameGraph build_game(const MinMaxOperator& op);

/** DOT export: squares as boxes named r<i>, circles named c<j>, arc label =
 *  weight. Indices are 1-based. */
std::string to_dot(const GameGraph& g);

/** A positional strategy: for Max a map square -> circle with B finite on
 *  every chosen arc, for Min a map circle -> square with A finite. */
struct Strategy {
  enum class Kind { max_player, min_player };
  Kind kind = Kind::max_player;
  std::vector<int> choice;
};

/** Outcome of the power algorithm. */
struct PowerTrace {
  enum class Stop { all_negative, fixed_point, partial_fixed_point, horizon };

  std::vector<WeightVec> iterates;  // x^0 .. x^k, componentwise nonincreasing
  Stop stop = Stop::horizon;
  bool nonneg = false;              // verdict: chibar(f) >= 0
  std::optional<WeightVec> witness; // u != -inf vector with u <= f(u)
};

/**
 * Power algorithm: iterate x^{k+1} = g(x^k) with g = min(f, id) from x^0 = 0
 * and stop on (1) all components negative -> chibar < 0, (3) fixed point ->
 * chibar >= 0 with witness x^k, (4) partial fixed point y^k (x^k with -inf on
 * the strictly decreasing coordinates) with g(y^k) = y^k -> chibar >= 0 with
 * witness y^k, or (2) the horizon K = 2(n+m)^2 M + 1 -> chibar >= 0, no
 * witness. Requires Assumption 1 and integer weights.
 */
PowerTrace power_algorithm(const MinMaxOperator& op);

/** N-fold application f^N(x0); exact arbitrary-precision accumulators. */
WeightVec value_iteration(const MinMaxOperator& op, const WeightVec& x0, const Int& n_steps);

/**
 * The set {j : chi_j(f) >= 0} decided by value iteration with horizon
 * N* = 4(n+m)^2 M + 1 and the per-component threshold v_j >= -2(n+m)M.
 * Requires both assumptions and integer weights.
 */
std::vector<bool> winning_states(const MinMaxOperator& op);

/** Exact solution of the mean payoff game. (chi, potential) form an
 *  invariant half-line of f: f(potential + t chi) = potential + (t+1) chi
 *  for all large t, which certifies chi(f) = chi. */
struct GameValue {
  std::vector<Rational> chi;
  std::vector<bool> winning;        // chi_j >= 0
  Strategy sigma;                   // optimal Max strategy
  Strategy pi;                      // optimal Min strategy
  std::vector<Rational> potential;  // bias vector of the half-line
};

/**
 * Policy iteration over Min strategies. Each one-player operator h^pi is
 * evaluated exactly (Karp maximal-circuit-mean per strongly connected
 * component, gains propagated over the condensation, bias by longest-path
 * transfer to the critical graph); a strategy switch needs a strict
 * lexicographic (gain, bias) improvement. On convergence the optimality
 * equations are re-verified, so the returned value is certified whatever
 * path the iteration took. Requires both assumptions and integer weights.
 */
GameValue solve_exact(const MinMaxOperator& op);

/**
 * Exact per-state value of the one-player game induced by a positional
 * strategy: minimal-circuit-mean values of g^sigma for a Max strategy,
 * maximal-circuit-mean values of h^pi for a Min strategy. These bound
 * chi(f) from below resp. above.
 */
std::vector<Rational> certify_strategy(const MinMaxOperator& op, const Strategy& s);

/**
 * The dual operator x -> -f(-x), realized as the transposed, negated pair
 * (-A^T, -B^T): the game with all arcs reversed, weights negated and player
 * roles swapped. An involution; requires an operator preserving finite
 * vectors for the duality chibar(dual) = -chilower(op) to be meaningful.
 */
MinMaxOperator dual(const MinMaxOperator& op);

}  // namespace tropgame
