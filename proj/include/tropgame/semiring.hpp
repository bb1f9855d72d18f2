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

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>

#include "tropgame/errors.hpp"

namespace tropgame {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/**
 * An element of the max-plus semiring R_max: a finite payoff or -inf.
 *
 * Semiring addition is max (neutral element -inf), semiring multiplication
 * is + (-inf absorbing). Finite values are arbitrary-precision integers, so
 * accumulated products of long iteration chains never overflow.
 */
class Weight {
 public:
  Weight() : finite_(false) {}
  Weight(int v) : finite_(true), value_(v) {}
  Weight(long long v) : finite_(true), value_(v) {}
  explicit Weight(Int v) : finite_(true), value_(std::move(v)) {}

  static Weight bottom() { return Weight(); }

  bool is_bottom() const { return !finite_; }
  bool is_finite() const { return finite_; }

  /** Finite value; throws DomainError on -inf. */
  const Int& value() const {
    if (!finite_) throw DomainError("value() called on -inf");
    return value_;
  }

  friend bool operator==(const Weight& a, const Weight& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.value_ == b.value_;
  }
  friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
  // Total order of R_max: -inf below every finite value.
  friend bool operator<(const Weight& a, const Weight& b) {
    if (!a.finite_) return b.finite_;
    if (!b.finite_) return false;
    return a.value_ < b.value_;
  }
  friend bool operator<=(const Weight& a, const Weight& b) { return !(b < a); }
  friend bool operator>(const Weight& a, const Weight& b) { return b < a; }
  friend bool operator>=(const Weight& a, const Weight& b) { return !(a < b); }

 private:
  bool finite_;
  Int value_;  // zero whenever finite_ is false
};

/** Tropical sum: max(a, b). */
inline Weight tmax_add(const Weight& a, const Weight& b) {
  return a < b ? b : a;
}

/** Tropical product: a + b, with -inf absorbing. */
inline Weight tmax_mul(const Weight& a, const Weight& b) {
  if (a.is_bottom() || b.is_bottom()) return Weight::bottom();
  return Weight(a.value() + b.value());
}

inline Weight negate(const Weight& a) {
  return a.is_bottom() ? a : Weight(-a.value());
}

/** Multiplicity tag of T_e, the quotient N_2 = {0, 1, >= 2}. */
enum class Mult : std::uint8_t { zero, real, ghost };

/**
 * An element of the extended tropical semiring T_e: a magnitude in R_max
 * together with a multiplicity recording whether the magnitude was attained
 * once (real) or at least twice (ghost).
 *
 * Invariants: multiplicity == zero iff magnitude == -inf. A ghost with -inf
 * magnitude normalises to the zero element on construction, so the carrier
 * is exactly (N_2* x R_max*) plus the zero element.
 */
class ExtNumber {
 public:
  ExtNumber() : mult_(Mult::zero) {}
  ExtNumber(Weight magnitude, Mult mult) : mag_(std::move(magnitude)), mult_(mult) {
    if (mag_.is_bottom()) {
      mult_ = Mult::zero;
    } else if (mult_ == Mult::zero) {
      throw DomainError("finite magnitude with zero multiplicity");
    }
  }

  static ExtNumber zero() { return ExtNumber(); }
  static ExtNumber one() { return ExtNumber(Weight(0), Mult::real); }

  const Weight& magnitude() const { return mag_; }
  Mult mult() const { return mult_; }

  bool is_zero() const { return mult_ == Mult::zero; }
  /** Member of T_e^vee (the zero element is real-typed). */
  bool is_real() const { return mult_ != Mult::ghost; }
  /** Member of T_e^circ (the zero element is ghost-typed too). */
  bool is_ghost_typed() const { return mult_ != Mult::real; }
  /** The invertible elements are exactly the real non-zero ones. */
  bool is_invertible() const { return mult_ == Mult::real; }

  friend bool operator==(const ExtNumber& a, const ExtNumber& b) {
    return a.mult_ == b.mult_ && a.mag_ == b.mag_;
  }
  friend bool operator!=(const ExtNumber& a, const ExtNumber& b) {
    return !(a == b);
  }

 private:
  Weight mag_;
  Mult mult_;
};

/** T_e addition: larger magnitude wins; equal magnitudes sum multiplicities
 *  (saturating at ghost). */
inline ExtNumber ext_add(const ExtNumber& a, const ExtNumber& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.magnitude() < b.magnitude()) return b;
  if (b.magnitude() < a.magnitude()) return a;
  return ExtNumber(a.magnitude(), Mult::ghost);
}

/** T_e multiplication: magnitudes add, multiplicities multiply in N_2. */
inline ExtNumber ext_mul(const ExtNumber& a, const ExtNumber& b) {
  if (a.is_zero() || b.is_zero()) return ExtNumber::zero();
  Mult m = (a.mult() == Mult::real && b.mult() == Mult::real) ? Mult::real
                                                              : Mult::ghost;
  return ExtNumber(tmax_mul(a.magnitude(), b.magnitude()), m);
}

/** Canonical injection R_max -> T_e, b |-> b^vee. Multiplicative and order
 *  preserving but not additive. */
inline ExtNumber inject(const Weight& b) {
  if (b.is_bottom()) return ExtNumber::zero();
  return ExtNumber(b, Mult::real);
}

/** b |-> b^circ. Normalises to the zero element when b = -inf. */
inline ExtNumber ghost(const Weight& b) {
  if (b.is_bottom()) return ExtNumber::zero();
  return ExtNumber(b, Mult::ghost);
}

/** The projection pi : T_e -> R_max (a surjective semiring morphism). */
inline const Weight& project(const ExtNumber& e) { return e.magnitude(); }

/** Balance relation: a nabla b iff a + b lies in T_e^circ. Reflexive and
 *  symmetric, not transitive. */
inline bool balances(const ExtNumber& a, const ExtNumber& b) {
  return ext_add(a, b).is_ghost_typed();
}

/** Multiplicative inverse; requires an invertible element. */
inline ExtNumber ext_inv(const ExtNumber& a) {
  if (!a.is_invertible()) throw DomainError("ext_inv of a non-invertible element");
  return ExtNumber(negate(a.magnitude()), Mult::real);
}

/**
 * Natural order of T_e: x <= y iff x + z = y for some z. Explicitly:
 * the zero element is below everything; otherwise compare magnitudes, and
 * on equal magnitudes real <= ghost.
 */
inline bool ext_leq(const ExtNumber& a, const ExtNumber& b) {
  if (a.is_zero()) return true;
  if (b.is_zero()) return false;
  if (a.magnitude() < b.magnitude()) return true;
  if (b.magnitude() < a.magnitude()) return false;
  return a.mult() == b.mult() || b.mult() == Mult::ghost;
}

/** Least upper bound for the natural order. */
inline ExtNumber ext_join(const ExtNumber& a, const ExtNumber& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.magnitude() < b.magnitude()) return b;
  if (b.magnitude() < a.magnitude()) return a;
  if (a.mult() == b.mult()) return a;
  return ExtNumber(a.magnitude(), Mult::ghost);
}

}  // namespace tropgame
