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

#include "phishuffle/products.hpp"

#include <stdexcept>

namespace phishuffle {

NCPoly ShuffleCache::shuffle(const Word& u, const Word& v) {
  if (u.empty()) return NCPoly::monomial(v);
  if (v.empty()) return NCPoly::monomial(u);
  {
    std::lock_guard lock(mu_);
    auto it = memo_.find({u, v});
    if (it != memo_.end()) return it->second;
  }
  NCPoly r = shuffle_words(u, v);
  std::lock_guard lock(mu_);
  return memo_.emplace(std::pair{u, v}, std::move(r)).first->second;
}

NCPoly ShuffleCache::shuffle_words(const Word& u, const Word& v) {
  const Letter a = u.front();
  const Letter b = v.front();
  const Word ur = u.suffix(1), vr = v.suffix(1);
  NCPoly r = shuffle(ur, v).prepended(a);
  r += shuffle(u, vr).prepended(b);
  const NCPoly contra = law_.apply(a, b);
  if (!contra.is_zero()) {
    NCPoly rest = shuffle(ur, vr);
    for (const auto& [z, c] : contra.terms()) r += rest.prepended(z.at(0)).scaled(c);
  }
  return r;
}

NCPoly ShuffleCache::shuffle(const NCPoly& p, const NCPoly& q) {
  NCPoly r;
  for (const auto& [u, cu] : p.terms())
    for (const auto& [v, cv] : q.terms()) r += shuffle(u, v).scaled(cu * cv);
  return r;
}

NCPoly ShuffleCache::power(const NCPoly& p, int n) {
  if (n < 0) throw std::invalid_argument("negative shuffle power");
  NCPoly acc = NCPoly::one();
  for (int i = 0; i < n; ++i) acc = shuffle(acc, p);
  return acc;
}

NCPoly phi_shuffle(const PhiLaw& law, const NCPoly& p, const NCPoly& q) {
  ShuffleCache cache(law);
  return cache.shuffle(p, q);
}

NCPoly phi_shuffle_power(const PhiLaw& law, const NCPoly& p, int n) {
  if (n >= 3) law.require_associative("phi_shuffle_power");
  ShuffleCache cache(law);
  return cache.power(p, n);
}

namespace {

// Delta on one letter, arity 2.
TensorPoly delta_letter(const PhiLaw& law, const Letter& y) {
  TensorPoly t(2);
  t.add_term({Word({y}), Word::one()}, Scalar(1));
  t.add_term({Word::one(), Word({y})}, Scalar(1));
  for (const auto& [a, b, c] : law.pairs_into(y)) t.add_term({Word({a}), Word({b})}, c);
  return t;
}

// Replace leg `leg` of every term by its binary Delta, splicing the two new
// legs in place; this is (id^leg (x) Delta (x) id^rest).
TensorPoly expand_leg(const PhiLaw& law, const TensorPoly& t, size_t leg) {
  TensorPoly out(t.arity() + 1);
  for (const auto& [legs, c] : t.terms()) {
    // Delta of the leg word as a conc-morphism.
    TensorPoly dw = TensorPoly::unit(2);
    for (const auto& l : legs[leg].letters()) dw = tensor_conc_mul(dw, delta_letter(law, l));
    for (const auto& [pair_legs, pc] : dw.terms()) {
      std::vector<Word> nl;
      nl.reserve(legs.size() + 1);
      for (size_t i = 0; i < leg; ++i) nl.push_back(legs[i]);
      nl.push_back(pair_legs[0]);
      nl.push_back(pair_legs[1]);
      for (size_t i = leg + 1; i < legs.size(); ++i) nl.push_back(legs[i]);
      out.add_term(nl, c * pc);
    }
  }
  return out;
}

}  // namespace

TensorPoly delta_phi(const PhiLaw& law, const NCPoly& p, int arity) {
  if (arity < 2) throw std::invalid_argument("coproduct arity must be >= 2");
  law.require_associative("delta_phi");
  law.require_dualizable("delta_phi");
  TensorPoly acc(arity);
  for (const auto& [w, c] : p.terms()) {
    TensorPoly t = TensorPoly::monomial({w}, c);
    for (int k = 1; k < arity; ++k) t = expand_leg(law, t, 0);
    acc += t;
  }
  return acc;
}

TensorPoly delta_phi(const PhiLaw& law, const TruncSeries& s, int arity) {
  return delta_phi(law, s.poly(), arity).truncated_legs(s.weight_bound());
}

TensorPoly delta_phi_plus(const PhiLaw& law, const NCPoly& p) {
  if (!p.constant_term().is_zero())
    throw std::invalid_argument("delta_phi_plus needs a constant-term-free argument");
  TensorPoly t = delta_phi(law, p, 2);
  for (const auto& [w, c] : p.terms()) {
    t.add_term({w, Word::one()}, -c);
    t.add_term({Word::one(), w}, -c);
  }
  return t;
}

TensorPoly delta_conc(const NCPoly& p, int arity) {
  if (arity < 2) throw std::invalid_argument("coproduct arity must be >= 2");
  TensorPoly acc(arity);
  std::vector<Word> legs(static_cast<size_t>(arity));
  for (const auto& [w, c] : p.terms()) {
    // all ordered splittings w = u_1 ... u_arity with possibly empty parts
    std::vector<size_t> cuts(static_cast<size_t>(arity) - 1);
    auto rec = [&](auto&& self, size_t slot, size_t from) -> void {
      if (slot + 1 == static_cast<size_t>(arity)) {
        legs[slot] = w.sub(from, w.length());
        acc.add_term(legs, c);
        return;
      }
      for (size_t to = from; to <= w.length(); ++to) {
        legs[slot] = w.sub(from, to);
        self(self, slot + 1, to);
      }
    };
    rec(rec, 0, 0);
  }
  return acc;
}

const char* element_class_str(ElementClass c) {
  switch (c) {
    case ElementClass::primitive: return "primitive";
    case ElementClass::grouplike: return "grouplike";
    default: return "neither";
  }
}

ClassifyResult classify_element(const PhiLaw& law, const TruncSeries& s) {
  law.require_associative("classify_element");
  law.require_commutative("classify_element");
  law.require_dualizable("classify_element");
  const int bound = s.weight_bound();
  ClassifyResult res;
  res.verified_up_to_weight = bound;
  ShuffleCache cache(law);
  auto words = words_up_to_weight(law.letters_up_to(bound), bound);

  Scalar c0 = s.constant_term();
  if (c0.is_zero()) {
    for (const auto& u : words)
      for (const auto& v : words) {
        if (u.weight() + v.weight() > bound) continue;
        if (!pairing(s.poly(), cache.shuffle(u, v)).is_zero()) return res;  // neither
      }
    res.cls = ElementClass::primitive;
    return res;
  }
  if (c0.is_one()) {
    for (const auto& u : words)
      for (const auto& v : words) {
        if (u.weight() + v.weight() > bound) continue;
        Scalar lhs = pairing(s.poly(), cache.shuffle(u, v));
        Scalar rhs = s.coeff(u) * s.coeff(v);
        if (!(lhs == rhs)) return res;  // neither
      }
    res.cls = ElementClass::grouplike;
    return res;
  }
  return res;
}

TensorPoly tensor_double_mul(ShuffleCache& cache, const TensorPoly& a, const TensorPoly& b,
                             int weight_bound) {
  if (a.arity() != 2 || b.arity() != 2)
    throw std::invalid_argument("double algebra needs two legs");
  TensorPoly r(2);
  for (const auto& [la, ca] : a.terms())
    for (const auto& [lb, cb] : b.terms()) {
      if (la[1].weight() + lb[1].weight() > weight_bound) continue;
      Word right = la[1].concat(lb[1]);
      NCPoly left = cache.shuffle(la[0], lb[0]).truncated(weight_bound);
      Scalar c = ca * cb;
      for (const auto& [u, cu] : left.terms()) r.add_term({u, right}, cu * c);
    }
  return r;
}

TensorPoly tensor_double_exp(ShuffleCache& cache, const TensorPoly& t, int weight_bound) {
  if (!t.coeff({Word::one(), Word::one()}).is_zero())
    throw std::invalid_argument("exp requires no unit term");
  TensorPoly acc = TensorPoly::unit(2);
  TensorPoly pw = TensorPoly::unit(2);
  Integer fact = 1;
  for (int n = 1;; ++n) {
    pw = tensor_double_mul(cache, pw, t, weight_bound);
    if (pw.is_zero()) break;
    fact *= n;
    acc += pw.scaled(Scalar(Rational(Integer(1), fact)));
  }
  return acc;
}

TensorPoly tensor_double_log(ShuffleCache& cache, const TensorPoly& t, int weight_bound) {
  if (!t.coeff({Word::one(), Word::one()}).is_one())
    throw std::invalid_argument("log requires unit term 1");
  TensorPoly h = t;
  h.add_term({Word::one(), Word::one()}, Scalar(-1));
  TensorPoly acc(2);
  TensorPoly pw = TensorPoly::unit(2);
  for (int n = 1;; ++n) {
    pw = tensor_double_mul(cache, pw, h, weight_bound);
    if (pw.is_zero()) break;
    Scalar c(Rational(1, n));
    acc += pw.scaled(n % 2 == 0 ? -c : c);
  }
  return acc;
}

}  // namespace phishuffle
