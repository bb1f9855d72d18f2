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
#include <utility>
#include <vector>

#include "tropgame/semiring.hpp"

namespace tropgame {

using WeightVec = std::vector<Weight>;

/**
 * Dense matrix over R_max with provenance labels.
 *
 * Row/column labels track original indices across preprocessing: labels >= 0
 * refer to rows/columns of the matrix the user supplied, a row label -(j+1)
 * marks the synthetic trivial row x_j <= x_j added to restore Assumption 1.
 */
struct TropMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Weight> entries;  // row-major
  std::vector<int> row_labels;
  std::vector<int> col_labels;

  TropMatrix() = default;
  TropMatrix(int m, int n, const Weight& fill = Weight::bottom());

  Weight& at(int i, int j) { return entries[static_cast<size_t>(i) * cols + j]; }
  const Weight& at(int i, int j) const {
    return entries[static_cast<size_t>(i) * cols + j];
  }

  /** 0 on the diagonal, -inf elsewhere: the tropical identity pattern. */
  static TropMatrix identity_pattern(int n);
};

/** Dense matrix over the extended tropical semiring T_e. */
struct ExtMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<ExtNumber> entries;  // row-major

  ExtMatrix() = default;
  ExtMatrix(int m, int n, const ExtNumber& fill = ExtNumber::zero());

  ExtNumber& at(int i, int j) { return entries[static_cast<size_t>(i) * cols + j]; }
  const ExtNumber& at(int i, int j) const {
    return entries[static_cast<size_t>(i) * cols + j];
  }
};

/** All-real lift of an R_max matrix into T_e. */
ExtMatrix to_ext(const TropMatrix& b);

/** An element of R with both infinities adjoined; +inf only ever arises
 *  through residuation of an all -inf column. */
struct ExtendedWeight {
  enum class Tag { neg_inf, finite, pos_inf };
  Tag tag = Tag::neg_inf;
  Int value;

  ExtendedWeight() = default;
  explicit ExtendedWeight(Int v) : tag(Tag::finite), value(std::move(v)) {}
  static ExtendedWeight neg_inf() { return ExtendedWeight(); }
  static ExtendedWeight pos_inf() {
    ExtendedWeight w;
    w.tag = Tag::pos_inf;
    return w;
  }
  static ExtendedWeight from_weight(const Weight& w) {
    return w.is_bottom() ? neg_inf() : ExtendedWeight(w.value());
  }

  friend bool operator==(const ExtendedWeight& a, const ExtendedWeight& b) {
    if (a.tag != b.tag) return false;
    return a.tag != Tag::finite || a.value == b.value;
  }
  friend bool operator<(const ExtendedWeight& a, const ExtendedWeight& b) {
    if (a.tag == b.tag) return a.tag == Tag::finite && a.value < b.value;
    if (a.tag == Tag::neg_inf) return true;
    if (a.tag == Tag::pos_inf) return false;
    return b.tag == Tag::pos_inf;
  }
  friend bool operator<=(const ExtendedWeight& a, const ExtendedWeight& b) {
    return !(b < a);
  }
};

/** Tropical matrix-vector product, (Bx)_i = max_j (B_ij + x_j). */
WeightVec matvec(const TropMatrix& b, const WeightVec& x);

/**
 * Residuated operator A#: (A#y)_j = min_i (-A_ij + y_i), with the
 * convention (+inf) + (-inf) = +inf. Component j is +inf exactly when
 * column j of A is identically -inf.
 */
std::vector<ExtendedWeight> residual_apply(const TropMatrix& a,
                                           const std::vector<ExtendedWeight>& y);
std::vector<ExtendedWeight> residual_apply(const TropMatrix& a, const WeightVec& y);

/**
 * Bookkeeping of the preprocessing that enforces Assumptions 1-2.
 * Maps witnesses of the reduced system back to original coordinates.
 */
struct EliminationRecord {
  int original_vars = 0;
  std::vector<int> forced;        // original columns forced to -inf, in order
  std::vector<int> kept_cols;     // original columns surviving, ascending
  std::vector<int> dropped_rows;  // original rows removed, ascending

  bool all_forced() const { return kept_cols.empty(); }

  /** Reduced-coordinate vector -> original coordinates (-inf where forced). */
  WeightVec extend(const WeightVec& reduced) const;

  static EliminationRecord identity(int n);
};

/**
 * A min-max function f = A# B, the dynamic programming operator of a
 * deterministic mean payoff game. Assumption 1 holds iff every column of A
 * has a finite entry, Assumption 2 iff every row of B has one.
 */
struct MinMaxOperator {
  TropMatrix A;
  TropMatrix B;
  bool assumption1_ok = false;
  bool assumption2_ok = false;
  EliminationRecord elim;

  int dim() const { return A.cols; }
  int constraint_count() const { return A.rows; }
};

/** Wrap matrices into an operator, computing the assumption flags. */
MinMaxOperator make_operator(TropMatrix a, TropMatrix b);

/**
 * One application of f = A#(Bx). Requires Assumption 1, otherwise a +inf
 * component would arise and a DomainError is thrown; the result stays in
 * (R u {-inf})^n.
 */
WeightVec minmax_apply(const MinMaxOperator& op, const WeightVec& x);

/** A rational value or -inf; used to evaluate f on rational vectors when
 *  checking Collatz-Wielandt style certificates exactly. */
struct RatOrBottom {
  bool finite = false;
  Rational value;

  RatOrBottom() = default;
  explicit RatOrBottom(Rational v) : finite(true), value(std::move(v)) {}
  static RatOrBottom bottom() { return RatOrBottom(); }
};

std::vector<RatOrBottom> minmax_apply_rational(const MinMaxOperator& op,
                                               const std::vector<RatOrBottom>& x);

/**
 * Preprocess the system Ax <= Bx into an equivalent reduced system
 * satisfying Assumptions 1-2.
 *
 * For every column of A without a finite entry the trivial row x_j <= x_j is
 * appended. Then, scanning rows in index order until a full pass changes
 * nothing: a row whose B-part is identically -inf forces every variable
 * with a finite A-entry in that row to -inf and is deleted; rows whose
 * A-part is (or became) identically -inf are deleted as trivially satisfied.
 * Forced variables are recorded so witnesses map back to the original
 * coordinates. All variables may end up forced; then the reduced system is
 * empty and the only solution of the original one is the zero vector.
 */
MinMaxOperator enforce_assumptions(const TropMatrix& a, const TropMatrix& b);

/** Append the affine parts c, d as an (n+1)-th column of A and B. */
std::pair<TropMatrix, TropMatrix> homogenize(const TropMatrix& a,
                                             const TropMatrix& b,
                                             const WeightVec& c,
                                             const WeightVec& d);

/** T_e matrix-vector product; x must be real-typed (entries in T_e^vee). */
std::vector<ExtNumber> ext_matvec(const ExtMatrix& a,
                                  const std::vector<ExtNumber>& x);

/** True iff Ax balances the zero vector, i.e. every component of Ax is
 *  ghost-typed or zero ("Ax nabla 0"). x must be real-typed. */
bool check_balance_zero(const ExtMatrix& a, const std::vector<ExtNumber>& x);

}  // namespace tropgame
