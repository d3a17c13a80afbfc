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

#include "phishuffle/qpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace phishuffle {

QPoly::QPoly(const Rational& c) {
  if (c != 0) coeffs_.push_back(c);
}

QPoly::QPoly(int c) : QPoly(Rational(c)) {}

QPoly QPoly::variable() { return monomial(1, 1); }

QPoly QPoly::monomial(const Rational& coeff, int power) {
  QPoly p;
  if (coeff != 0) {
    p.coeffs_.assign(static_cast<size_t>(power) + 1, Rational(0));
    p.coeffs_.back() = coeff;
  }
  return p;
}

bool QPoly::is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

Rational QPoly::coeff(int power) const {
  if (power < 0 || power >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<size_t>(power)];
}

const Rational& QPoly::leading() const { return coeffs_.back(); }

size_t QPoly::term_count() const {
  size_t n = 0;
  for (const auto& c : coeffs_)
    if (c != 0) ++n;
  return n;
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return QPoly();
  QPoly r;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j)
      if (b.coeffs_[j] != 0) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  r.trim();
  return r;
}

QPoly QPoly::scaled(const Rational& c) const {
  if (c == 0) return QPoly();
  QPoly r = *this;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

void QPoly::divmod(const QPoly& a, const QPoly& b, QPoly& quot, QPoly& rem) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  quot = QPoly();
  rem = a;
  if (a.degree() < b.degree()) return;
  quot.coeffs_.assign(static_cast<size_t>(a.degree() - b.degree()) + 1, Rational(0));
  const Rational lead = b.leading();
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    int shift = rem.degree() - b.degree();
    Rational factor = rem.leading() / lead;
    quot.coeffs_[static_cast<size_t>(shift)] += factor;
    for (size_t i = 0; i < b.coeffs_.size(); ++i)
      rem.coeffs_[static_cast<size_t>(shift) + i] -= factor * b.coeffs_[i];
    rem.trim();
  }
  quot.trim();
}

QPoly QPoly::gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.monic();
}

QPoly QPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(Rational(1) / leading());
}

Rational QPoly::eval(const Rational& q0) const {
  Rational acc = 0;
  for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * q0 + coeffs_[i];
  return acc;
}

std::string QPoly::str() const {
  if (is_zero()) return "0";
  // Pull out the common denominator so e.g. q^2/2 + 1/2 prints (q^2+1)/2.
  Integer common = 1;
  for (const auto& c : coeffs_)
    if (c != 0) common = lcm(common, denominator(c));
  std::ostringstream os;
  bool first = true;
  size_t printed = 0;
  for (size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i] == 0) continue;
    Rational scaled = coeffs_[i] * common;
    Integer n = numerator(scaled);
    bool neg = n < 0;
    if (neg) n = -n;
    if (first) {
      if (neg) os << '-';
      first = false;
    } else {
      os << (neg ? '-' : '+');
    }
    if (i == 0) {
      os << n.str();
    } else {
      if (n != 1) os << n.str() << '*';
      os << 'q';
      if (i > 1) os << '^' << i;
    }
    ++printed;
  }
  if (common == 1) return os.str();
  std::string body = os.str();
  if (printed > 1) body = "(" + body + ")";
  return body + "/" + common.str();
}

}  // namespace phishuffle
