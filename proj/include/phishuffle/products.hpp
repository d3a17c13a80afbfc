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

#include "phishuffle/law.hpp"
#include "phishuffle/tensor.hpp"

#include <mutex>

namespace phishuffle {

// Memo for word-by-word phi-shuffles, shared by all product-heavy
// operations. Results are pure functions of the law, so caching is
// semantically invisible; lookups are mutex-guarded.
class ShuffleCache {
 public:
  explicit ShuffleCache(PhiLaw law) : law_(std::move(law)) {}
  const PhiLaw& law() const { return law_; }

  NCPoly shuffle(const Word& u, const Word& v);
  NCPoly shuffle(const NCPoly& p, const NCPoly& q);
  NCPoly power(const NCPoly& p, int n);

 private:
  PhiLaw law_;
  std::map<std::pair<Word, Word>, NCPoly> memo_;
  std::mutex mu_;

  NCPoly shuffle_words(const Word& u, const Word& v);
};

// The phi-deformed shuffle: bilinear extension of
//   a u (*) b v = a (u (*) b v) + b (a u (*) v) + phi(a,b) (u (*) v),
// with the empty word as unit.
NCPoly phi_shuffle(const PhiLaw& law, const NCPoly& p, const NCPoly& q);
// n-fold power; n = 0 gives 1. Requires an associative stamp for n >= 3.
NCPoly phi_shuffle_power(const PhiLaw& law, const NCPoly& p, int n);

// Coproduct dual to the phi-shuffle, as an arity-n tensor (n >= 2). On a
// letter, Delta(y) = y(x)1 + 1(x)y + sum gamma_{a,b}^y a(x)b; on words it is
// a conc-morphism. Requires associative + dualizable stamps.
TensorPoly delta_phi(const PhiLaw& law, const NCPoly& p, int arity = 2);
// Series variant: every tensor leg truncates at the series bound.
TensorPoly delta_phi(const PhiLaw& law, const TruncSeries& s, int arity = 2);
// Delta without its primitive part: Delta(p) - p(x)1 - 1(x)p for
// constant-term-free p; the vanishing test for primitivity.
TensorPoly delta_phi_plus(const PhiLaw& law, const NCPoly& p);
// Deconcatenation: all ordered splittings into `arity` (possibly empty)
// factors.
TensorPoly delta_conc(const NCPoly& p, int arity = 2);

enum class ElementClass { primitive, grouplike, neither };
const char* element_class_str(ElementClass c);

struct ClassifyResult {
  ElementClass cls = ElementClass::neither;
  int verified_up_to_weight = 0;  // classification is exact up to this bound
};

// phi-extended Friedrichs criterion, decided exhaustively for all word pairs
// with weight(u) + weight(v) <= the series bound. Requires associative,
// commutative and dualizable stamps.
ClassifyResult classify_element(const PhiLaw& law, const TruncSeries& s);

// Two-leg double-algebra operations: the left legs multiply by phi-shuffle,
// the right legs by concatenation; both legs truncate at `weight_bound`.
TensorPoly tensor_double_mul(ShuffleCache& cache, const TensorPoly& a, const TensorPoly& b,
                             int weight_bound);
// exp of a tensor with no 1(x)1 term.
TensorPoly tensor_double_exp(ShuffleCache& cache, const TensorPoly& t, int weight_bound);
// log of 1(x)1 + higher terms.
TensorPoly tensor_double_log(ShuffleCache& cache, const TensorPoly& t, int weight_bound);

}  // namespace phishuffle
