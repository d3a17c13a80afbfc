/* Copyright 2026 The phishuffle Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#pragma once

#include "phishuffle/qpoly.hpp"

#include <string>

namespace phishuffle {

// Element of the rational function field Q(q): a ratio of polynomials in q,
// kept in canonical form (denominator monic, gcd(num, den) = 1, zero = 0/1).
class Scalar {
 public:
  Scalar() : num_(), den_(1) {}
  Scalar(int c) : num_(c), den_(1) {}                  // NOLINT
  Scalar(const Rational& c) : num_(c), den_(1) {}      // NOLINT
  Scalar(const QPoly& p) : num_(p), den_(1) {}         // NOLINT
  static Scalar q() { return Scalar(QPoly::variable()); }
  // Canonicalizes; throws std::domain_error on zero denominator.
  static Scalar fraction(const QPoly& num, const QPoly& den);

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_one() && num_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_rational_constant() const { return den_.is_one() && num_.is_constant(); }
  // Valid only when is_rational_constant().
  Rational rational_value() const { return num_.coeff(0); }
  // True for q^k with k >= 1 (unit coefficient, polynomial).
  bool is_unit_q_power() const;
  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }

  // Sign convention used when printing: a Scalar counts as negative when the
  // leading coefficient of its numerator is negative (denominator is monic).
  bool is_negative() const { return !num_.is_zero() && num_.leading() < 0; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);  // throws "division by zero scalar"
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar pow(int n) const;  // n >= 0

  bool operator==(const Scalar&) const = default;

  // Exact evaluation at q = q0; throws std::domain_error("pole at q0") when
  // the denominator vanishes there.
  Rational specialize(const Rational& q0) const;
  // Scalar-valued substitution (used for --q specialization of outputs).
  Scalar specialized(const Rational& q0) const { return Scalar(specialize(q0)); }

  // Standalone text form: "q", "q/2", "(q^2+1)/2", "(q+1)/(q-1)", "-1/2".
  std::string str() const;

 private:
  QPoly num_, den_;
  void canonicalize();
};

}  // namespace phishuffle
