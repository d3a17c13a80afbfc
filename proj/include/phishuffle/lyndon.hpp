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

#include "phishuffle/words.hpp"

#include <utility>
#include <vector>

namespace phishuffle {

// A word is Lyndon when it is nonempty and strictly smaller, in the
// lexicographic order induced by `order`, than each of its proper suffixes.
bool is_lyndon(const Word& w, const LetterOrder& order = {});

// All Lyndon words of weight <= weight_bound over the alphabet, sorted
// lexicographically ascending. Throws "empty alphabet" on an empty alphabet.
std::vector<Word> lyndon_up_to(const Alphabet& alphabet, const LetterOrder& order,
                               int weight_bound);

// Standard factorization l = s.r of a Lyndon word of length >= 2: r is the
// longest proper suffix of l that is Lyndon; s is then Lyndon as well.
// Throws "no standard factorization" otherwise.
std::pair<Word, Word> standard_factorization(const Word& l, const LetterOrder& order = {});

// Chen-Fox-Lyndon factorization w = l_1^{i_1} ... l_k^{i_k} with the Lyndon
// factors strictly decreasing lexicographically. Empty word -> empty list.
std::vector<std::pair<Word, int>> cfl_factorization(const Word& w,
                                                    const LetterOrder& order = {});

}  // namespace phishuffle
