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
 * Outcome of the optimal assignment problem max_sigma sum_i B_{i sigma(i)}.
 * value is -inf exactly when no permutation with all-finite entries exists;
 * uniqueness is decided through the tight-arc graph of the dual potentials
 * (a second perfect matching exists iff that graph has an alternating
 * cycle), in O(n^3) overall.
 */
struct AssignmentResult {
  Weight value;
  std::vector<int> permutation;  // row -> column; empty when value is -inf
  bool unique = false;
  bool ghost_contaminated = false;  // optimal permutation uses a ghost entry
};

AssignmentResult optimal_assignment(const TropMatrix& b);
AssignmentResult optimal_assignment(const ExtMatrix& a);

/** Singular iff the assignment value is -inf or attained twice. */
bool is_tropically_singular(const TropMatrix& b);

/**
 * The T_e permanent: magnitude = optimal assignment value of pi(A); ghost if
 * at least two optimal permutations exist or the unique optimum traverses a
 * ghost entry; zero if the value is -inf. A is tropically nonsingular iff
 * the result is invertible.
 */
ExtNumber tropical_permanent(const ExtMatrix& a);

/**
 * The independence game operator f_j(x) = min over real non-zero A_ij of
 * (-B_ij + max_{k != j} (B_ik + x_k)), B = pi(A), in matrix form f = C# D
 * with one row per pair (i,j) with A_ij invertible. Rows of D may be
 * identically -inf (Max stuck); Assumption 2 is deliberately not enforced.
 * Requires every column to hold a real non-zero entry (otherwise the
 * columns are trivially dependent and a DomainError is thrown).
 */
MinMaxOperator independence_operator(const ExtMatrix& a);

struct IndependenceReport {
  bool independent = false;
  /** Dependent case: a real non-zero x with Ax balancing the zero vector. */
  std::optional<std::vector<ExtNumber>> witness;
  /** Independent case (m >= n): rows of a tropically nonsingular submatrix. */
  std::optional<std::vector<int>> certificate_rows;
};

/** Tropical linear independence of the columns, decided by running the
 *  power algorithm on the independence game: dependent iff chibar >= 0. */
IndependenceReport columns_independent(const ExtMatrix& a);

/**
 * A row set I with A[I,.] tropically nonsingular; absent iff the columns
 * are dependent. Requires m >= n. The certificate is extracted from a
 * super-fixed-point f(w) <= lambda + w, lambda < 0, obtained from
 * solve_exact potentials, and re-verified by tropical_permanent.
 */
std::optional<std::vector<int>> nonsingular_submatrix(const ExtMatrix& a);

/**
 * Tropical Cramer solving: x = per(A)^{-1} (A^adj b) with
 * (A^adj)_{ji} = per A(i|j); returned iff per(A) is invertible and A^adj b
 * is real-typed, in which case x is the unique real solution of Ax nabla b
 * (re-verified componentwise before returning).
 */
std::optional<std::vector<ExtNumber>> cramer_solve(const ExtMatrix& a,
                                                   const std::vector<ExtNumber>& b);

/** True iff some r-column subset is tropically independent. */
bool rank_at_least(const ExtMatrix& a, int r);

/** Largest r with rank_at_least(a, r), searched downward from min(m, n).
 *  The general problem is NP-hard; min(m, n) is capped. */
int tropical_rank(const ExtMatrix& a, int size_cap = 12);

}  // namespace tropgame
