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

// Test-only brute-force oracles, independent of the library code paths they
// check (suffix-condition Lyndon test, greedy CFL, naive shuffles, ranks).

#pragma once

#include "phishuffle/lyndon.hpp"
#include "phishuffle/ncpoly.hpp"
#include "phishuffle/words.hpp"

#include <random>
#include <vector>

namespace phishuffle::oracle {

// Lyndon by definition: nonempty and lex-smaller than every proper suffix.
inline bool is_lyndon_naive(const Word& w, const LetterOrder& order) {
  if (w.empty()) return false;
  for (size_t i = 1; i < w.length(); ++i)
    if (!lex_less(w, w.suffix(i), order)) return false;
  return true;
}

// All Lyndon words of weight <= bound by filtering the full word list.
inline std::vector<Word> lyndon_naive(const Alphabet& alphabet, const LetterOrder& order,
                                      int bound) {
  std::vector<Word> out;
  for (const auto& w : words_up_to_weight(alphabet.letters(), bound))
    if (is_lyndon_naive(w, order)) out.push_back(w);
  std::sort(out.begin(), out.end(),
            [&](const Word& a, const Word& b) { return lex_less(a, b, order); });
  return out;
}

// CFL by the greedy characterization: the first factor is the longest Lyndon
// prefix.
inline std::vector<Word> cfl_greedy(const Word& w, const LetterOrder& order) {
  std::vector<Word> factors;
  size_t i = 0;
  while (i < w.length()) {
    size_t best = i + 1;
    for (size_t j = i + 1; j <= w.length(); ++j)
      if (is_lyndon_naive(w.sub(i, j), order)) best = j;
    factors.push_back(w.sub(i, best));
    i = best;
  }
  return factors;
}

// Word primitivity: w is not u^k for k >= 2.
inline bool is_primitive_word(const Word& w) {
  for (size_t p = 1; p < w.length(); ++p) {
    if (w.length() % p != 0) continue;
    bool periodic = true;
    for (size_t i = p; i < w.length() && periodic; ++i)
      if (!(w.at(i) == w.at(i - p))) periodic = false;
    if (periodic) return false;
  }
  return true;
}

// Deterministic small rationals for property tests.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}
  int geti(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }
  Rational rat() {
    int num = geti(-3, 3);
    int den = geti(1, 3);
    return Rational(num, den);
  }
  Rational nonzero_rat() {
    for (;;) {
      Rational r = rat();
      if (r != 0) return r;
    }
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace phishuffle::oracle
