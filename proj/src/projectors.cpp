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

#include "phishuffle/projectors.hpp"

#include <stdexcept>

namespace phishuffle {

CoeffSeq CoeffSeq::identity_x() {
  return CoeffSeq([](int k) { return Scalar(k == 1 ? 1 : 0); });
}

CoeffSeq CoeffSeq::log1p() {
  return CoeffSeq([](int k) {
    Scalar c(Rational(1, k));
    return k % 2 == 0 ? -c : c;
  });
}

CoeffSeq CoeffSeq::alternating() {
  return CoeffSeq([](int k) { return Scalar(k % 2 == 0 ? 1 : -1); });
}

ProjectorEngine::ProjectorEngine(PhiLaw law) : cache_(std::move(law)) {}

void ProjectorEngine::check_moderate(const char* op) const {
  law().require_associative(op);
  law().require_dualizable(op);
  law().require_moderate(op);
}

NCPoly ProjectorEngine::phi_of_series(const CoeffSeq& coeffs, const NCPoly& p) {
  law().require_associative("phi_of_series");
  NCPoly out;
  for (const auto& [w, c] : p.terms()) {
    const size_t n = w.length();
    if (n == 0) continue;
    // split[i][k] = sum over splittings of w[i:] into k nonempty factors of
    // their phi-shuffle product.
    std::vector<std::vector<NCPoly>> split(n + 1, std::vector<NCPoly>(n + 1));
    for (size_t i = n; i-- > 0;) {
      split[i][1] = NCPoly::monomial(w.suffix(i));
      for (size_t k = 2; k <= n - i; ++k) {
        NCPoly acc;
        for (size_t j = i + 1; j + (k - 1) <= n; ++j)
          acc += cache_.shuffle(NCPoly::monomial(w.sub(i, j)), split[j][k - 1]);
        split[i][k] = std::move(acc);
      }
    }
    NCPoly val;
    for (size_t k = 1; k <= n; ++k) {
      Scalar a = coeffs.at(static_cast<int>(k));
      if (!a.is_zero()) val += split[0][k].scaled(a);
    }
    out += val.scaled(c);
  }
  return out;
}

NCPoly ProjectorEngine::pi1_adj_word(const Word& w) {
  {
    std::lock_guard lock(mu_);
    auto it = adj_memo_.find(w);
    if (it != adj_memo_.end()) return it->second;
  }
  NCPoly r = phi_of_series(CoeffSeq::log1p(), NCPoly::monomial(w));
  std::lock_guard lock(mu_);
  return adj_memo_.emplace(w, std::move(r)).first->second;
}

std::vector<Word> ProjectorEngine::candidate_words(const Word& w) const {
  if (law().is_weight_additive())
    return words_of_weight(law().letters_up_to(w.weight()), w.weight());
  int max_len = static_cast<int>(w.length()) * std::max(1, law().properties().moderation_index);
  return words_up_to_length(law().table_alphabet()->letters(), max_len);
}

NCPoly ProjectorEngine::pi1_std_word(const Word& w) {
  {
    std::lock_guard lock(mu_);
    auto it = std_memo_.find(w);
    if (it != std_memo_.end()) return it->second;
  }
  NCPoly r;
  NCPoly wm = NCPoly::monomial(w);
  for (const auto& v : candidate_words(w)) {
    Scalar c = pairing(wm, pi1_adj_word(v));
    if (!c.is_zero()) r.add_term(v, c);
  }
  std::lock_guard lock(mu_);
  return std_memo_.emplace(w, std::move(r)).first->second;
}

NCPoly ProjectorEngine::pi1(const NCPoly& p, Side side) {
  if (side == Side::adjoint) {
    law().require_associative("pi1");
    NCPoly r;
    for (const auto& [w, c] : p.terms())
      if (!w.empty()) r += pi1_adj_word(w).scaled(c);
    return r;
  }
  check_moderate("pi1");
  NCPoly r;
  for (const auto& [w, c] : p.terms())
    if (!w.empty()) r += pi1_std_word(w).scaled(c);
  return r;
}

const std::vector<std::pair<NCPoly, NCPoly>>& ProjectorEngine::graded_tuples(int n, int weight) {
  {
    std::lock_guard lock(mu_);
    auto it = tuple_memo_.find({n, weight});
    if (it != tuple_memo_.end()) return it->second;
  }
  std::vector<std::pair<NCPoly, NCPoly>> list;
  std::vector<Word> tuple(static_cast<size_t>(n));
  auto rec = [&](auto&& self, int slot, int remaining) -> void {
    if (slot == n) {
      if (remaining != 0) return;
      NCPoly m = NCPoly::one(), prod = NCPoly::one();
      for (const auto& u : tuple) {
        m = cache_.shuffle(m, pi1_adj_word(u));
        prod = prod * pi1_std_word(u);
      }
      list.emplace_back(std::move(m), std::move(prod));
      return;
    }
    int slots_left = n - slot - 1;
    for (int wt = 1; wt + slots_left <= remaining; ++wt)
      for (const auto& u : words_of_weight(law().letters_up_to(wt), wt)) {
        tuple[static_cast<size_t>(slot)] = u;
        self(self, slot + 1, remaining - wt);
      }
  };
  rec(rec, 0, weight);
  std::lock_guard lock(mu_);
  return tuple_memo_.emplace(std::pair{n, weight}, std::move(list)).first->second;
}

NCPoly ProjectorEngine::pi_n(const NCPoly& p, int n, Side side) {
  check_moderate("pi_n");
  law().require_commutative("pi_n");
  if (n < 0) throw std::invalid_argument("pi_n needs n >= 0");
  if (n == 0) return NCPoly::monomial(Word::one(), p.constant_term());

  Integer fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  const Scalar inv_fact(Rational(Integer(1), fact));

  NCPoly out;
  if (law().is_weight_additive()) {
    for (const auto& [w, cw] : p.terms()) {
      if (w.empty()) continue;
      NCPoly wm = NCPoly::monomial(w);
      NCPoly acc;
      for (const auto& [m, prod] : graded_tuples(n, w.weight())) {
        Scalar c = pairing(wm, side == Side::standard ? m : prod);
        if (!c.is_zero()) acc += (side == Side::standard ? prod : m).scaled(c);
      }
      out += acc.scaled(inv_fact * cw);
    }
    return out;
  }

  // Moderate finite table: enumerate n-tuples of nonempty words with total
  // length bounded by |w| times the moderation index.
  for (const auto& [w, cw] : p.terms()) {
    if (w.empty()) continue;
    NCPoly wm = NCPoly::monomial(w);
    int max_total =
        static_cast<int>(w.length()) * std::max(1, law().properties().moderation_index);
    auto alphabet = law().table_alphabet()->letters();
    NCPoly acc;
    std::vector<Word> tuple(static_cast<size_t>(n));
    auto rec = [&](auto&& self, int slot, int remaining_len) -> void {
      if (slot == n) {
        NCPoly m = NCPoly::one(), prod = NCPoly::one();
        for (const auto& u : tuple) {
          m = cache_.shuffle(m, pi1_adj_word(u));
          prod = prod * pi1_std_word(u);
        }
        Scalar c = pairing(wm, side == Side::standard ? m : prod);
        if (!c.is_zero()) acc += (side == Side::standard ? prod : m).scaled(c);
        return;
      }
      int slots_left = n - slot - 1;
      for (const auto& u : words_up_to_length(alphabet, remaining_len - slots_left)) {
        tuple[static_cast<size_t>(slot)] = u;
        self(self, slot + 1, remaining_len - static_cast<int>(u.length()));
      }
    };
    if (max_total >= n) rec(rec, 0, max_total);
    out += acc.scaled(inv_fact * cw);
  }
  return out;
}

NCPoly ProjectorEngine::antipode(const NCPoly& p) {
  law().require_associative("antipode");
  NCPoly r = phi_of_series(CoeffSeq::alternating(), p);
  r.add_term(Word::one(), p.constant_term());  // a(1) = 1
  return r;
}

std::pair<NCPoly, NCPoly> ProjectorEngine::word_expansion_identity(const Word& w) {
  check_moderate("word_expansion_identity");
  law().require_commutative("word_expansion_identity");
  if (w.empty()) return {NCPoly::one(), NCPoly::one()};

  // Route one: sum_k 1/k! sum_{u_1..u_k} <w, u_1 (*) ... (*) u_k> pi1(u_1)...pi1(u_k),
  // over tuples of nonempty words of total weight (graded case) or bounded
  // length (finite-table case).
  NCPoly lhs;
  NCPoly wm = NCPoly::monomial(w);
  const bool graded = law().is_weight_additive();
  const int max_k = graded ? w.weight()
                           : static_cast<int>(w.length()) *
                                 std::max(1, law().properties().moderation_index);
  Integer fact = 1;
  for (int k = 1; k <= max_k; ++k) {
    fact *= k;
    const Scalar inv_fact(Rational(Integer(1), fact));
    NCPoly acc;
    std::vector<Word> tuple(static_cast<size_t>(k));
    if (graded) {
      auto rec = [&](auto&& self, int slot, int remaining) -> void {
        if (slot == k) {
          if (remaining != 0) return;
          NCPoly m = NCPoly::one(), prod = NCPoly::one();
          for (const auto& u : tuple) {
            m = cache_.shuffle(m, NCPoly::monomial(u));
            prod = prod * pi1_std_word(u);
          }
          Scalar c = pairing(wm, m);
          if (!c.is_zero()) acc += prod.scaled(c);
          return;
        }
        int slots_left = k - slot - 1;
        for (int wt = 1; wt + slots_left <= remaining; ++wt)
          for (const auto& u : words_of_weight(law().letters_up_to(wt), wt)) {
            tuple[static_cast<size_t>(slot)] = u;
            self(self, slot + 1, remaining - wt);
          }
      };
      rec(rec, 0, w.weight());
    } else {
      auto alphabet = law().table_alphabet()->letters();
      auto rec = [&](auto&& self, int slot, int remaining_len) -> void {
        if (slot == k) {
          NCPoly m = NCPoly::one(), prod = NCPoly::one();
          for (const auto& u : tuple) {
            m = cache_.shuffle(m, NCPoly::monomial(u));
            prod = prod * pi1_std_word(u);
          }
          Scalar c = pairing(wm, m);
          if (!c.is_zero()) acc += prod.scaled(c);
          return;
        }
        int slots_left = k - slot - 1;
        for (const auto& u : words_up_to_length(alphabet, remaining_len - slots_left)) {
          tuple[static_cast<size_t>(slot)] = u;
          self(self, slot + 1, remaining_len - static_cast<int>(u.length()));
        }
      };
      rec(rec, 0, max_k);
    }
    lhs += acc.scaled(inv_fact);
  }

  // Route two: sum_k 1/k! sum_{u_1...u_k = w} pi1adj(u_1) (*) ... (*) pi1adj(u_k)
  // over ordered splittings into nonempty factors.
  NCPoly rhs;
  const size_t n = w.length();
  fact = 1;
  for (size_t k = 1; k <= n; ++k) {
    fact *= k;
    const Scalar inv_fact(Rational(Integer(1), fact));
    NCPoly acc;
    std::vector<size_t> cuts;
    auto rec = [&](auto&& self, size_t slot, size_t from, NCPoly prod) -> void {
      if (slot + 1 == k) {
        acc += cache_.shuffle(prod, pi1_adj_word(w.sub(from, n)));
        return;
      }
      for (size_t to = from + 1; to + (k - slot - 1) <= n; ++to)
        self(self, slot + 1, to, cache_.shuffle(prod, pi1_adj_word(w.sub(from, to))));
    };
    rec(rec, 0, 0, NCPoly::one());
    rhs += acc.scaled(inv_fact);
  }
  return {lhs, rhs};
}

TensorPoly ProjectorEngine::hausdorff(int weight_bound) {
  check_moderate("hausdorff");
  law().require_commutative("hausdorff");
  TensorPoly h(2);
  for (const auto& w : words_up_to_weight(law().letters_up_to(weight_bound), weight_bound)) {
    NCPoly img = pi1_std_word(w).truncated(weight_bound);
    for (const auto& [v, c] : img.terms()) h.add_term({w, v}, c);
  }
  return h;
}

TensorPoly ProjectorEngine::sigma(int weight_bound, const Scalar& t) {
  TensorPoly h = hausdorff(weight_bound).scaled(t);
  return tensor_double_exp(cache_, h, weight_bound);
}

NCPoly phi_of_series(const PhiLaw& law, const CoeffSeq& coeffs, const NCPoly& p) {
  return ProjectorEngine(law).phi_of_series(coeffs, p);
}

NCPoly pi1(const PhiLaw& law, const NCPoly& p, Side side) {
  return ProjectorEngine(law).pi1(p, side);
}

NCPoly pi_n(const PhiLaw& law, const NCPoly& p, int n, Side side) {
  return ProjectorEngine(law).pi_n(p, n, side);
}

NCPoly antipode(const PhiLaw& law, const NCPoly& p) {
  return ProjectorEngine(law).antipode(p);
}

std::pair<NCPoly, NCPoly> word_expansion_identity(const PhiLaw& law, const Word& w) {
  return ProjectorEngine(law).word_expansion_identity(w);
}

TensorPoly hausdorff(const PhiLaw& law, int weight_bound) {
  return ProjectorEngine(law).hausdorff(weight_bound);
}

TensorPoly hausdorff_sigma(const PhiLaw& law, int weight_bound, const Scalar& t) {
  return ProjectorEngine(law).sigma(weight_bound, t);
}

}  // namespace phishuffle
