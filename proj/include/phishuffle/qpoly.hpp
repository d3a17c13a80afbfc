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

#include "phishuffle/rational.hpp"

#include <string>
#include <vector>

namespace phishuffle {

// Univariate polynomial in the deformation parameter q with rational
// coefficients, stored densely by ascending power with no trailing zeros.
class QPoly {
 public:
  QPoly() = default;
  QPoly(const Rational& c);  // NOLINT: implicit from constants is intended
  QPoly(int c);              // NOLINT
  static QPoly variable();   // q
  static QPoly monomial(const Rational& coeff, int power);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  bool is_constant() const { return coeffs_.size() <= 1; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  Rational coeff(int power) const;
  const Rational& leading() const;  // undefined on zero
  size_t term_count() const;

  QPoly operator-() const;
  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  QPoly scaled(const Rational& c) const;

  // Polynomial division; requires b nonzero.
  static void divmod(const QPoly& a, const QPoly& b, QPoly& quot, QPoly& rem);
  // Monic gcd; gcd(0, 0) = 0.
  static QPoly gcd(QPoly a, QPoly b);
  QPoly monic() const;

  Rational eval(const Rational& q0) const;

  bool operator==(const QPoly&) const = default;

  // "0", "1/2", "q", "2*q", "q^2+1", "3*q^2/2", "q^2-q".
  std::string str() const;

 private:
  std::vector<Rational> coeffs_;
  void trim();
};

}  // namespace phishuffle
