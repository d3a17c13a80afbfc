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

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace phishuffle {

// Weighted letter y_k. The default grading gives y_k weight k.
struct Letter {
  int index = 0;   // k >= 1
  int weight = 0;  // >= 1

  auto operator<=>(const Letter&) const = default;
};

inline Letter letter(int index) { return Letter{index, index}; }
inline Letter letter(int index, int weight) { return Letter{index, weight}; }

// Total order on letters. The default follows y_1 > y_2 > ... (a smaller
// index means a greater letter); `ascending_index` flips that convention.
struct LetterOrder {
  bool ascending_index = false;

  bool less(const Letter& a, const Letter& b) const {
    if (a.index != b.index)
      return ascending_index ? a.index < b.index : a.index > b.index;
    return a.weight < b.weight;
  }
};

// Element of the free monoid Y*: a finite sequence of letters with its weight
// (sum of letter weights) cached. The empty word is the monoid unit.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);
  explicit Word(std::initializer_list<Letter> letters);
  static Word one() { return Word(); }

  bool empty() const { return letters_.empty(); }
  size_t length() const { return letters_.size(); }
  int weight() const { return weight_; }
  const Letter& at(size_t i) const { return letters_[i]; }
  const std::vector<Letter>& letters() const { return letters_; }
  const Letter& front() const { return letters_.front(); }
  const Letter& back() const { return letters_.back(); }

  Word concat(const Word& o) const;
  Word prepended(const Letter& a) const;
  // Subword [from, to).
  Word sub(size_t from, size_t to) const;
  Word suffix(size_t from) const { return sub(from, length()); }
  Word prefix(size_t to) const { return sub(0, to); }

  bool operator==(const Word&) const = default;

 private:
  std::vector<Letter> letters_;
  int weight_ = 0;
};

// Lexicographic order induced by a letter order; a proper prefix is smaller
// than its extensions.
bool lex_less(const Word& u, const Word& v, const LetterOrder& order = {});

// Canonical order used for all term maps and printed output: weight, then
// length, then lexicographic under the default letter order.
bool canonical_less(const Word& u, const Word& v);

struct WordCanonicalLess {
  bool operator()(const Word& u, const Word& v) const { return canonical_less(u, v); }
};

// Finite alphabet: distinct indices, each with a positive weight.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<Letter> letters);  // throws on duplicate index
  // { y_1, ..., y_bound } with weight(y_k) = k.
  static Alphabet default_up_to_weight(int bound);

  bool empty() const { return letters_.empty(); }
  size_t size() const { return letters_.size(); }
  const std::vector<Letter>& letters() const { return letters_; }
  std::optional<Letter> find(int index) const;
  bool contains(const Letter& l) const;
  std::vector<Letter> letters_up_to(int max_weight) const;
  int min_weight() const;  // throws on empty alphabet

 private:
  std::vector<Letter> letters_;  // sorted by index
};

// All nonempty words of the given exact weight over `letters`, in canonical
// order. Weights are >= 1, so both enumerations are finite.
std::vector<Word> words_of_weight(const std::vector<Letter>& letters, int weight);
// All nonempty words of weight <= bound, canonical order.
std::vector<Word> words_up_to_weight(const std::vector<Letter>& letters, int bound);
// All nonempty words of length <= max_len, canonical order.
std::vector<Word> words_up_to_length(const std::vector<Letter>& letters, int max_len);

}  // namespace phishuffle
