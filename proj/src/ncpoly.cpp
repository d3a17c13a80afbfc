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

#include "phishuffle/ncpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace phishuffle {

NCPoly NCPoly::monomial(const Word& w, const Scalar& c) {
  NCPoly p;
  if (!c.is_zero()) p.terms_.emplace(w, c);
  return p;
}

Scalar NCPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar(0) : it->second;
}

int NCPoly::max_weight() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.weight();
}

void NCPoly::add_term(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NCPoly NCPoly::operator-() const {
  NCPoly r;
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
  return r;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NCPoly NCPoly::scaled(const Scalar& c) const {
  NCPoly r;
  if (c.is_zero()) return r;
  for (const auto& [w, x] : terms_) r.terms_.emplace(w, x * c);
  return r;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  NCPoly r;
  for (const auto& [u, cu] : a.terms_)
    for (const auto& [v, cv] : b.terms_) r.add_term(u.concat(v), cu * cv);
  return r;
}

NCPoly NCPoly::prepended(const Letter& a) const {
  NCPoly r;
  for (const auto& [w, c] : terms_) r.terms_.emplace(w.prepended(a), c);
  return r;
}

NCPoly NCPoly::truncated(int weight_bound) const {
  NCPoly r;
  for (const auto& [w, c] : terms_)
    if (w.weight() <= weight_bound) r.terms_.emplace(w, c);
  return r;
}

NCPoly NCPoly::without_constant() const {
  NCPoly r = *this;
  r.terms_.erase(Word::one());
  return r;
}

NCPoly NCPoly::map_coeffs(const std::function<Scalar(const Scalar&)>& f) const {
  NCPoly r;
  for (const auto& [w, c] : terms_) {
    Scalar m = f(c);
    if (!m.is_zero()) r.terms_.emplace(w, m);
  }
  return r;
}

NCPoly conc_mul(const NCPoly& a, const NCPoly& b) { return a * b; }

NCPoly bracket(const NCPoly& a, const NCPoly& b) { return a * b - b * a; }

Scalar pairing(const NCPoly& a, const NCPoly& b) {
  // Iterate the smaller support.
  const NCPoly& small = a.term_count() <= b.term_count() ? a : b;
  const NCPoly& large = a.term_count() <= b.term_count() ? b : a;
  Scalar acc(0);
  for (const auto& [w, c] : small.terms()) {
    Scalar o = large.coeff(w);
    if (!o.is_zero()) acc += c * o;
  }
  return acc;
}

TruncSeries::TruncSeries(NCPoly p, int weight_bound)
    : poly_(p.truncated(weight_bound)), bound_(weight_bound) {
  if (weight_bound < 0) throw std::invalid_argument("weight bound must be >= 0");
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
  int bound = std::min(a.bound_, b.bound_);
  return TruncSeries(a.poly_ + b.poly_, bound);
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
  int bound = std::min(a.bound_, b.bound_);
  return TruncSeries(a.poly_ - b.poly_, bound);
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  int bound = std::min(a.bound_, b.bound_);
  return TruncSeries(a.poly_ * b.poly_, bound);
}

namespace {

// Sum_{n>=1} coeff(n) h^n truncated; h must have no constant term.
NCPoly power_sum(const NCPoly& h, int bound, const std::function<Scalar(int)>& coeff) {
  NCPoly acc;
  NCPoly pw = NCPoly::one();
  for (int n = 1;; ++n) {
    pw = (pw * h).truncated(bound);
    if (pw.is_zero()) break;
    acc += pw.scaled(coeff(n));
  }
  return acc;
}

}  // namespace

TruncSeries series_log(const TruncSeries& s) {
  if (!s.constant_term().is_one())
    throw std::domain_error("log requires constant term 1");
  NCPoly h = s.poly().without_constant();
  NCPoly r = power_sum(h, s.weight_bound(), [](int n) {
    Scalar c(Rational(1, n));
    return n % 2 == 0 ? -c : c;
  });
  return TruncSeries(std::move(r), s.weight_bound());
}

TruncSeries series_exp(const TruncSeries& s) {
  if (!s.constant_term().is_zero())
    throw std::domain_error("exp requires constant term 0");
  Integer fact = 1;
  int k = 0;
  NCPoly r = NCPoly::one() + power_sum(s.poly(), s.weight_bound(), [&](int n) {
               while (k < n) fact *= ++k;
               return Scalar(Rational(Integer(1), fact));
             });
  return TruncSeries(std::move(r), s.weight_bound());
}

Scalar pairing(const TruncSeries& s, const NCPoly& p) { return pairing(s.poly(), p); }
Scalar pairing(const NCPoly& p, const TruncSeries& s) { return pairing(p, s.poly()); }
Scalar pairing(const TruncSeries& a, const TruncSeries& b) {
  return pairing(a.poly(), b.poly());
}

}  // namespace phishuffle
