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

#include "phishuffle/scalar.hpp"

#include <stdexcept>

namespace phishuffle {

Scalar Scalar::fraction(const QPoly& num, const QPoly& den) {
  if (den.is_zero()) throw std::domain_error("division by zero scalar");
  Scalar s;
  s.num_ = num;
  s.den_ = den;
  s.canonicalize();
  return s;
}

void Scalar::canonicalize() {
  if (num_.is_zero()) {
    den_ = QPoly(1);
    return;
  }
  QPoly g = QPoly::gcd(num_, den_);
  if (!g.is_one()) {
    QPoly q, r;
    QPoly::divmod(num_, g, q, r);
    num_ = q;
    QPoly::divmod(den_, g, q, r);
    den_ = q;
  }
  // Make the denominator monic, folding its leading coefficient into num.
  Rational lead = den_.leading();
  if (lead != 1) {
    den_ = den_.scaled(Rational(1) / lead);
    num_ = num_.scaled(Rational(1) / lead);
  }
}

bool Scalar::is_unit_q_power() const {
  if (!den_.is_one() || num_.is_zero()) return false;
  int d = num_.degree();
  return d >= 1 && num_.term_count() == 1 && num_.leading() == 1;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  canonicalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ = den_ * o.den_;
  canonicalize();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  canonicalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("division by zero scalar");
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  canonicalize();
  return *this;
}

Scalar Scalar::pow(int n) const {
  if (n < 0) throw std::domain_error("negative scalar power");
  Scalar acc = 1, base = *this;
  while (n) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

Rational Scalar::specialize(const Rational& q0) const {
  Rational d = den_.eval(q0);
  if (d == 0) throw std::domain_error("pole at q0");
  return num_.eval(q0) / d;
}

std::string Scalar::str() const {
  if (den_.is_one()) return num_.str();
  std::string ns = num_.str();
  if (num_.term_count() > 1) ns = "(" + ns + ")";
  std::string ds = den_.str();
  if (den_.term_count() > 1) ds = "(" + ds + ")";
  return ns + "/" + ds;
}

}  // namespace phishuffle
