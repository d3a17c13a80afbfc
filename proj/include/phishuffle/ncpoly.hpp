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

#include "phishuffle/scalar.hpp"
#include "phishuffle/words.hpp"

#include <functional>
#include <map>

namespace phishuffle {

// Noncommutative polynomial: a finite Word -> Scalar map with no stored
// zeros. Terms iterate in the canonical order (weight, length, lex), which
// makes every printed form reproducible bit for bit.
class NCPoly {
 public:
  using TermMap = std::map<Word, Scalar, WordCanonicalLess>;

  NCPoly() = default;
  static NCPoly zero() { return NCPoly(); }
  static NCPoly one() { return monomial(Word::one()); }
  static NCPoly monomial(const Word& w, const Scalar& c = Scalar(1));

  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  Scalar coeff(const Word& w) const;
  Scalar constant_term() const { return coeff(Word::one()); }
  // Largest support weight; 0 for the zero polynomial.
  int max_weight() const;

  void add_term(const Word& w, const Scalar& c);

  NCPoly operator-() const;
  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  NCPoly scaled(const Scalar& c) const;
  friend NCPoly operator*(const Scalar& c, const NCPoly& p) { return p.scaled(c); }

  // Concatenation product (bilinear extension of word concatenation).
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
  NCPoly prepended(const Letter& a) const;  // a . P

  NCPoly truncated(int weight_bound) const;
  NCPoly without_constant() const;
  // Applies f to every coefficient, dropping zeros.
  NCPoly map_coeffs(const std::function<Scalar(const Scalar&)>& f) const;

  bool operator==(const NCPoly&) const = default;

 private:
  TermMap terms_;
};

NCPoly conc_mul(const NCPoly& a, const NCPoly& b);
// Commutator [a, b] = ab - ba under concatenation.
NCPoly bracket(const NCPoly& a, const NCPoly& b);
// Sum over the common support of coefficient products. Both arguments are
// finite maps, so the sum is always finite.
Scalar pairing(const NCPoly& a, const NCPoly& b);

// Weight-truncated series: the same sparse map plus its truncation bound.
// Operations on mismatched bounds use the minimum bound.
class TruncSeries {
 public:
  TruncSeries() = default;
  TruncSeries(NCPoly p, int weight_bound);

  const NCPoly& poly() const { return poly_; }
  int weight_bound() const { return bound_; }
  Scalar coeff(const Word& w) const { return poly_.coeff(w); }
  Scalar constant_term() const { return poly_.constant_term(); }

  TruncSeries operator-() const { return TruncSeries(-poly_, bound_); }
  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);  // conc
  TruncSeries scaled(const Scalar& c) const { return TruncSeries(poly_.scaled(c), bound_); }

  bool operator==(const TruncSeries&) const = default;

 private:
  NCPoly poly_;
  int bound_ = 0;
};

// log(1 + h) for S = 1 + h; requires constant term 1.
TruncSeries series_log(const TruncSeries& s);
// exp(h); requires constant term 0.
TruncSeries series_exp(const TruncSeries& s);

Scalar pairing(const TruncSeries& s, const NCPoly& p);
Scalar pairing(const NCPoly& p, const TruncSeries& s);
Scalar pairing(const TruncSeries& a, const TruncSeries& b);

}  // namespace phishuffle
