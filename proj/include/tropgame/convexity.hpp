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
#include <vector>

#include "tropgame/games.hpp"

namespace tropgame {

/**
 * Outcome of a feasibility question about a tropical cone or polyhedron.
 *
 * Feasible reports carry a witness in the original coordinates whose support
 * equals the support field and which re-verifies Ax <= Bx. Infeasible cone
 * reports carry either a Min strategy on the reduced game whose one-player
 * values are all negative (every state losing), or an empty reduced system
 * when preprocessing forced every variable to -inf.
 */
struct FeasibilityReport {
  bool feasible = false;
  std::vector<int> support;          // 0-based original coordinates, ascending
  std::optional<WeightVec> witness;  // original coordinates

  enum class Certificate { witness, strategy, elimination, none };
  Certificate certificate = Certificate::none;
  std::optional<Strategy> losing_strategy;   // reduced-game Min strategy
  std::vector<Rational> strategy_values;     // chi(h^pi) on the reduced game
  EliminationRecord elim;                    // maps reduced data back
};

/** Does Ax <= Bx admit a solution not identically -inf?  Pipeline:
 *  enforce_assumptions, then the power algorithm; a horizon verdict falls
 *  back to the support construction for the witness. */
FeasibilityReport cone_nontrivial(const TropMatrix& a, const TropMatrix& b);

/** The support S = {j : exists u in P with u_j finite} = winning states of
 *  the associated game, with a witness realising all of S at once. */
FeasibilityReport cone_support(const TropMatrix& a, const TropMatrix& b);

/** An all-finite solution; present iff the support is everything and no
 *  variable was eliminated by preprocessing. */
std::optional<WeightVec> finite_solution(const TropMatrix& a, const TropMatrix& b);

/** Is the tropical polyhedron Ax + c <= Bx + d nonempty?  Decided through
 *  homogenization and the support of the cone. */
FeasibilityReport poly_nonempty(const TropMatrix& a, const TropMatrix& b,
                                const WeightVec& c, const WeightVec& d);

/** An integer/-inf member of the cone with the same (maximal) support as
 *  cone_support's witness; absent iff the cone is trivial. */
std::optional<WeightVec> integer_witness(const TropMatrix& a, const TropMatrix& b);

/** The converse reduction: a tropical polyhedron that is nonempty iff
 *  chi_r(f) >= lambda. Rational lambda = p/q is handled by scaling every
 *  weight by q; the scale is returned with the system. */
struct PolyhedronFromGame {
  TropMatrix A;
  TropMatrix B;
  WeightVec c;
  WeightVec d;
  Int scale;
};
PolyhedronFromGame game_to_polyhedron(const MinMaxOperator& op, int r,
                                      const Rational& lambda);

}  // namespace tropgame
