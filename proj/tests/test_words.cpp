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
#include "phishuffle/text.hpp"
#include "phishuffle/words.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace phishuffle;

namespace {

Word W(const std::string& s) { return parse_word(s); }

}  // namespace

TEST_SUITE_BEGIN("words");

TEST_CASE("word basics") {
  Word u = W("y2.y1");
  CHECK(u.length() == 2);
  CHECK(u.weight() == 3);
  CHECK(W("1").empty());
  CHECK(W("1").weight() == 0);
  CHECK(u.concat(W("y1")) == W("y2.y1.y1"));
  CHECK(W("y1").concat(W("y2")).weight() == 3);
  CHECK(to_string(u) == "y2.y1");
  CHECK(to_string(Word::one()) == "1");
}

TEST_CASE("default order: y1 > y2 > ...") {
  LetterOrder ord;
  CHECK(ord.less(letter(2), letter(1)));
  CHECK_FALSE(ord.less(letter(1), letter(2)));
  CHECK(lex_less(W("y2"), W("y1"), ord));
  CHECK(lex_less(W("y2.y1"), W("y1"), ord));
  // A proper prefix precedes its extensions.
  CHECK(lex_less(W("y2"), W("y2.y1"), ord));
  LetterOrder rev{true};
  CHECK(rev.less(letter(1), letter(2)));
}

TEST_CASE("canonical term order: weight, length, lex") {
  CHECK(canonical_less(W("y1"), W("y2")));          // weight 1 < 2
  CHECK(canonical_less(W("y2"), W("y1.y1")));       // same weight, shorter first
  CHECK(canonical_less(W("y2.y1"), W("y1.y2")));    // same weight+length, y2 < y1
  CHECK(canonical_less(W("1"), W("y1")));
}

TEST_CASE("word enumeration matches composition counts") {
  auto letters = Alphabet::default_up_to_weight(5).letters();
  // 2^(n-1) words of weight n when all parts are available.
  CHECK(words_of_weight(letters, 1).size() == 1);
  CHECK(words_of_weight(letters, 3).size() == 4);
  CHECK(words_of_weight(letters, 5).size() == 16);
  CHECK(words_up_to_weight(letters, 5).size() == 31);
  auto l2 = Alphabet::default_up_to_weight(2).letters();
  CHECK(words_up_to_length(l2, 2).size() == 6);
}

TEST_CASE("lyndon: oracle agreement on several alphabets") {
  LetterOrder ord;
  std::vector<Alphabet> alphabets = {
      Alphabet::default_up_to_weight(1),
      Alphabet::default_up_to_weight(2),
      Alphabet::default_up_to_weight(3),
      Alphabet::default_up_to_weight(6),
      Alphabet({letter(1, 2), letter(2, 1), letter(5, 3)}),  // custom weights
  };
  for (const auto& alph : alphabets) {
    for (int bound = 1; bound <= 7; ++bound) {
      auto got = lyndon_up_to(alph, ord, bound);
      auto want = oracle::lyndon_naive(alph, ord, bound);
      REQUIRE(got == want);
    }
  }
  // Reversed order as well.
  LetterOrder rev{true};
  auto got = lyndon_up_to(Alphabet::default_up_to_weight(3), rev, 6);
  auto want = oracle::lyndon_naive(Alphabet::default_up_to_weight(3), rev, 6);
  CHECK(got == want);
}

TEST_CASE("lyndon: pinned small cases") {
  LetterOrder ord;
  auto one_letter = lyndon_up_to(Alphabet::default_up_to_weight(1), ord, 3);
  CHECK(one_letter == std::vector<Word>{W("y1")});  // powers are not Lyndon

  // Over {y1, y2}, weight <= 3: the Lyndon words are y2, y2.y1, y1 in
  // ascending lexicographic order (y2 is a proper prefix of y2.y1).
  auto two = lyndon_up_to(Alphabet::default_up_to_weight(2), ord, 3);
  CHECK(two == std::vector<Word>{W("y2"), W("y2.y1"), W("y1")});

  auto four = lyndon_up_to(Alphabet::default_up_to_weight(2), ord, 4);
  CHECK(std::count(four.begin(), four.end(), W("y2.y1.y1")) == 1);
  CHECK(std::count(four.begin(), four.end(), W("y2.y2")) == 0);  // square

  CHECK_THROWS_WITH(lyndon_up_to(Alphabet(), ord, 3), doctest::Contains("empty alphabet"));
}

TEST_CASE("lyndon words are primitive") {
  LetterOrder ord;
  for (const auto& l : lyndon_up_to(Alphabet::default_up_to_weight(6), ord, 6))
    CHECK(oracle::is_primitive_word(l));
}

TEST_CASE("standard factorization") {
  CHECK(standard_factorization(W("y2.y1")) == std::pair{W("y2"), W("y1")});
  CHECK(standard_factorization(W("y2.y1.y1")) == std::pair{W("y2.y1"), W("y1")});
  CHECK_THROWS_WITH(standard_factorization(W("y1")),
                    doctest::Contains("no standard factorization"));
  CHECK_THROWS_WITH(standard_factorization(W("y1.y2")),
                    doctest::Contains("no standard factorization"));

  // Brute-force confirmation over all Lyndon words of weight <= 6: r is the
  // longest proper Lyndon suffix, both parts Lyndon, s.r < r.s.
  LetterOrder ord;
  for (const auto& l : lyndon_up_to(Alphabet::default_up_to_weight(3), ord, 6)) {
    if (l.length() < 2) continue;
    auto [s, r] = standard_factorization(l, ord);
    CHECK(s.concat(r) == l);
    CHECK(oracle::is_lyndon_naive(s, ord));
    CHECK(oracle::is_lyndon_naive(r, ord));
    for (size_t i = 1; i + r.length() < l.length(); ++i)
      CHECK_FALSE(oracle::is_lyndon_naive(l.suffix(i), ord));
    CHECK(lex_less(s.concat(r), r.concat(s), ord));
  }
}

TEST_CASE("cfl factorization") {
  CHECK(cfl_factorization(W("1")).empty());
  CHECK(cfl_factorization(W("y1.y1.y2")) ==
        std::vector<std::pair<Word, int>>{{W("y1"), 2}, {W("y2"), 1}});
  CHECK(cfl_factorization(W("y2.y1")) == std::vector<std::pair<Word, int>>{{W("y2.y1"), 1}});
  // A bordered word whose factorization needs y2.y1 > y2.
  CHECK(cfl_factorization(W("y2.y1.y2")) ==
        std::vector<std::pair<Word, int>>{{W("y2.y1"), 1}, {W("y2"), 1}});

  LetterOrder ord;
  for (const auto& w : words_up_to_weight(Alphabet::default_up_to_weight(3).letters(), 6)) {
    auto got = cfl_factorization(w, ord);
    // Greedy longest-Lyndon-prefix oracle.
    auto greedy = oracle::cfl_greedy(w, ord);
    std::vector<Word> flat;
    Word cat;
    for (const auto& [l, i] : got) {
      CHECK(oracle::is_lyndon_naive(l, ord));
      CHECK(i >= 1);
      for (int k = 0; k < i; ++k) {
        flat.push_back(l);
        cat = cat.concat(l);
      }
    }
    CHECK(cat == w);
    CHECK(flat == greedy);
    for (size_t i = 1; i < got.size(); ++i)
      CHECK(lex_less(got[i].first, got[i - 1].first, ord));  // strictly decreasing
  }
}

TEST_SUITE_END();
