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

#include "phishuffle/lyndon.hpp"

#include <algorithm>
#include <stdexcept>

namespace phishuffle {

bool is_lyndon(const Word& w, const LetterOrder& order) {
  if (w.empty()) return false;
  for (size_t i = 1; i < w.length(); ++i)
    if (!lex_less(w, w.suffix(i), order)) return false;
  return true;
}

namespace {

// Duval-tree generation of prenecklaces: position t may carry any letter >=
// the letter one period back; the prefix a[0..t) is Lyndon exactly when its
// period equals t. Children extend the current prefix, so a depth-first walk
// with letters taken in ascending order emits Lyndon words lexicographically
// ascending. Pruning by residual weight is sound because letter weights are
// positive: an overweight prefix cannot lead to an admissible word.
void gen_lyndon(const std::vector<Letter>& asc, int weight_bound, std::vector<Letter>& a,
                int weight_so_far, size_t period, const LetterOrder& order,
                std::vector<Word>& out) {
  size_t t = a.size();
  for (const auto& c : asc) {
    if (t > 0) {
      const Letter floor = a[t - period];  // copy: push_back may reallocate
      if (order.less(c, floor)) continue;
      if (weight_so_far + c.weight > weight_bound) continue;
      a.push_back(c);
      size_t new_period = (c == floor) ? period : t + 1;
      if (new_period == t + 1) out.emplace_back(a);
      gen_lyndon(asc, weight_bound, a, weight_so_far + c.weight, new_period, order, out);
      a.pop_back();
    } else {
      if (c.weight > weight_bound) continue;
      a.push_back(c);
      out.emplace_back(a);
      gen_lyndon(asc, weight_bound, a, c.weight, 1, order, out);
      a.pop_back();
    }
  }
}

}  // namespace

std::vector<Word> lyndon_up_to(const Alphabet& alphabet, const LetterOrder& order,
                               int weight_bound) {
  if (alphabet.empty()) throw std::invalid_argument("empty alphabet");
  if (weight_bound < 1) throw std::invalid_argument("weight bound must be >= 1");
  std::vector<Letter> asc = alphabet.letters();
  std::sort(asc.begin(), asc.end(),
            [&](const Letter& a, const Letter& b) { return order.less(a, b); });
  std::vector<Word> out;
  std::vector<Letter> a;
  gen_lyndon(asc, weight_bound, a, 0, 0, order, out);
  return out;
}

std::pair<Word, Word> standard_factorization(const Word& l, const LetterOrder& order) {
  if (l.length() < 2 || !is_lyndon(l, order))
    throw std::invalid_argument("no standard factorization");
  for (size_t i = 1; i < l.length(); ++i) {
    Word r = l.suffix(i);
    if (is_lyndon(r, order)) return {l.prefix(i), r};
  }
  throw std::logic_error("lyndon word without lyndon suffix");  // unreachable
}

std::vector<std::pair<Word, int>> cfl_factorization(const Word& w, const LetterOrder& order) {
  std::vector<Word> factors;
  const size_t n = w.length();
  size_t i = 0;
  while (i < n) {
    size_t j = i + 1, k = i;
    while (j < n && !order.less(w.at(j), w.at(k))) {
      if (order.less(w.at(k), w.at(j)))
        k = i;
      else
        ++k;
      ++j;
    }
    while (i <= k) {
      factors.push_back(w.sub(i, i + (j - k)));
      i += j - k;
    }
  }
  std::vector<std::pair<Word, int>> grouped;
  for (auto& f : factors) {
    if (!grouped.empty() && grouped.back().first == f)
      ++grouped.back().second;
    else
      grouped.emplace_back(std::move(f), 1);
  }
  return grouped;
}

}  // namespace phishuffle
