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

#include "phishuffle/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace phishuffle {

namespace {

void check_letter(const Letter& l) {
  if (l.index < 1) throw std::invalid_argument("letter index must be >= 1");
  if (l.weight < 1) throw std::invalid_argument("letter weight must be >= 1");
}

}  // namespace

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  for (const auto& l : letters_) {
    check_letter(l);
    weight_ += l.weight;
  }
}

Word::Word(std::initializer_list<Letter> letters) : Word(std::vector<Letter>(letters)) {}

Word Word::concat(const Word& o) const {
  Word r = *this;
  r.letters_.insert(r.letters_.end(), o.letters_.begin(), o.letters_.end());
  r.weight_ += o.weight_;
  return r;
}

Word Word::prepended(const Letter& a) const {
  check_letter(a);
  Word r;
  r.letters_.reserve(letters_.size() + 1);
  r.letters_.push_back(a);
  r.letters_.insert(r.letters_.end(), letters_.begin(), letters_.end());
  r.weight_ = weight_ + a.weight;
  return r;
}

Word Word::sub(size_t from, size_t to) const {
  Word r;
  r.letters_.assign(letters_.begin() + static_cast<ptrdiff_t>(from),
                    letters_.begin() + static_cast<ptrdiff_t>(to));
  for (const auto& l : r.letters_) r.weight_ += l.weight;
  return r;
}

bool lex_less(const Word& u, const Word& v, const LetterOrder& order) {
  size_t n = std::min(u.length(), v.length());
  for (size_t i = 0; i < n; ++i) {
    if (order.less(u.at(i), v.at(i))) return true;
    if (order.less(v.at(i), u.at(i))) return false;
  }
  return u.length() < v.length();
}

bool canonical_less(const Word& u, const Word& v) {
  if (u.weight() != v.weight()) return u.weight() < v.weight();
  if (u.length() != v.length()) return u.length() < v.length();
  return lex_less(u, v, LetterOrder{});
}

Alphabet::Alphabet(std::vector<Letter> letters) : letters_(std::move(letters)) {
  for (const auto& l : letters_) check_letter(l);
  std::sort(letters_.begin(), letters_.end(),
            [](const Letter& a, const Letter& b) { return a.index < b.index; });
  for (size_t i = 1; i < letters_.size(); ++i)
    if (letters_[i].index == letters_[i - 1].index)
      throw std::invalid_argument("duplicate letter index in alphabet");
}

Alphabet Alphabet::default_up_to_weight(int bound) {
  std::vector<Letter> ls;
  for (int k = 1; k <= bound; ++k) ls.push_back(letter(k));
  return Alphabet(std::move(ls));
}

std::optional<Letter> Alphabet::find(int index) const {
  for (const auto& l : letters_)
    if (l.index == index) return l;
  return std::nullopt;
}

bool Alphabet::contains(const Letter& l) const {
  auto f = find(l.index);
  return f && f->weight == l.weight;
}

std::vector<Letter> Alphabet::letters_up_to(int max_weight) const {
  std::vector<Letter> r;
  for (const auto& l : letters_)
    if (l.weight <= max_weight) r.push_back(l);
  return r;
}

int Alphabet::min_weight() const {
  if (letters_.empty()) throw std::invalid_argument("empty alphabet");
  int m = letters_.front().weight;
  for (const auto& l : letters_) m = std::min(m, l.weight);
  return m;
}

namespace {

void grow_words(const std::vector<Letter>& letters, int budget, std::vector<Letter>& cur,
                std::vector<Word>& out, bool exact) {
  for (const auto& l : letters) {
    if (l.weight > budget) continue;
    cur.push_back(l);
    if (!exact || budget == l.weight) out.emplace_back(cur);
    grow_words(letters, budget - l.weight, cur, out, exact);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Word> words_of_weight(const std::vector<Letter>& letters, int weight) {
  std::vector<Word> out;
  std::vector<Letter> cur;
  grow_words(letters, weight, cur, out, /*exact=*/true);
  std::sort(out.begin(), out.end(), WordCanonicalLess{});
  return out;
}

std::vector<Word> words_up_to_weight(const std::vector<Letter>& letters, int bound) {
  std::vector<Word> out;
  std::vector<Letter> cur;
  grow_words(letters, bound, cur, out, /*exact=*/false);
  std::sort(out.begin(), out.end(), WordCanonicalLess{});
  return out;
}

std::vector<Word> words_up_to_length(const std::vector<Letter>& letters, int max_len) {
  std::vector<Word> out;
  std::vector<Word> frontier = {Word::one()};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const auto& w : frontier)
      for (const auto& l : letters) {
        Word e = w.concat(Word({l}));
        out.push_back(e);
        next.push_back(std::move(e));
      }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(), WordCanonicalLess{});
  return out;
}

}  // namespace phishuffle
