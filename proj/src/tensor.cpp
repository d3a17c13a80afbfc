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

#include "phishuffle/tensor.hpp"

#include <stdexcept>

namespace phishuffle {

bool LegsLess::operator()(const std::vector<Word>& a, const std::vector<Word>& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  for (size_t i = 0; i < a.size(); ++i) {
    if (canonical_less(a[i], b[i])) return true;
    if (canonical_less(b[i], a[i])) return false;
  }
  return false;
}

TensorPoly::TensorPoly(int arity) : arity_(arity) {
  if (arity < 1) throw std::invalid_argument("tensor arity must be >= 1");
}

TensorPoly TensorPoly::unit(int arity) {
  return monomial(std::vector<Word>(static_cast<size_t>(arity)));
}

TensorPoly TensorPoly::monomial(std::vector<Word> legs, const Scalar& c) {
  TensorPoly t(static_cast<int>(legs.size()));
  if (!c.is_zero()) t.terms_.emplace(std::move(legs), c);
  return t;
}

Scalar TensorPoly::coeff(const std::vector<Word>& legs) const {
  auto it = terms_.find(legs);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void TensorPoly::add_term(const std::vector<Word>& legs, const Scalar& c) {
  if (c.is_zero()) return;
  if (legs.size() != static_cast<size_t>(arity_))
    throw std::invalid_argument("tensor term arity mismatch");
  auto [it, inserted] = terms_.emplace(legs, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorPoly TensorPoly::operator-() const {
  TensorPoly r(arity_);
  for (const auto& [legs, c] : terms_) r.terms_.emplace(legs, -c);
  return r;
}

TensorPoly& TensorPoly::operator+=(const TensorPoly& o) {
  if (o.arity_ != arity_) throw std::invalid_argument("tensor arity mismatch");
  for (const auto& [legs, c] : o.terms_) add_term(legs, c);
  return *this;
}

TensorPoly& TensorPoly::operator-=(const TensorPoly& o) {
  if (o.arity_ != arity_) throw std::invalid_argument("tensor arity mismatch");
  for (const auto& [legs, c] : o.terms_) add_term(legs, -c);
  return *this;
}

TensorPoly TensorPoly::scaled(const Scalar& c) const {
  TensorPoly r(arity_);
  if (c.is_zero()) return r;
  for (const auto& [legs, x] : terms_) r.terms_.emplace(legs, x * c);
  return r;
}

TensorPoly TensorPoly::truncated_legs(int weight_bound) const {
  TensorPoly r(arity_);
  for (const auto& [legs, c] : terms_) {
    bool keep = true;
    for (const auto& w : legs)
      if (w.weight() > weight_bound) {
        keep = false;
        break;
      }
    if (keep) r.terms_.emplace(legs, c);
  }
  return r;
}

TensorPoly tensor_conc_mul(const TensorPoly& a, const TensorPoly& b) {
  if (a.arity() != b.arity()) throw std::invalid_argument("tensor arity mismatch");
  TensorPoly r(a.arity());
  for (const auto& [la, ca] : a.terms())
    for (const auto& [lb, cb] : b.terms()) {
      std::vector<Word> legs;
      legs.reserve(la.size());
      for (size_t i = 0; i < la.size(); ++i) legs.push_back(la[i].concat(lb[i]));
      r.add_term(legs, ca * cb);
    }
  return r;
}

TensorPoly tensor_of(const NCPoly& left, const NCPoly& right) {
  TensorPoly r(2);
  for (const auto& [u, cu] : left.terms())
    for (const auto& [v, cv] : right.terms()) r.add_term({u, v}, cu * cv);
  return r;
}

}  // namespace phishuffle
