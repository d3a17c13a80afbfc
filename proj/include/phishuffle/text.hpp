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

#include "phishuffle/ncpoly.hpp"

#include <nlohmann/json_fwd.hpp>

#include <string>

namespace phishuffle {

class TensorPoly;

// Text forms. Grammar, also accepted back by the parsers:
//   poly   := ['-'] term (('+'|'-') term)*  |  '0'
//   term   := factor ('*' factor)* with at most one word factor,
//             '/' allowed before scalar atoms
//   factor := word | scalar-atom
//   word   := '1' | letter ('.' letter)* ;  letter := 'y' uint
//   scalar-atom := uint['/'uint] | 'q'['^'uint] | '(' scalar-expr ')'
// Printed coefficients are bare for integers and unit q-powers and
// parenthesized otherwise, e.g. `2*y1.y1`, `q*y2`, `(q/2)*y1.y1`.
std::string to_string(const Letter& l);
std::string to_string(const Word& w);
std::string to_string(const Scalar& c) ;
std::string to_string(const NCPoly& p);
std::string to_string(const TensorPoly& t);  // legs joined with "(x)"

// Parsers throw std::invalid_argument on malformed input. When an alphabet is
// given, letters are resolved against it (unknown index -> error); otherwise
// letters get the default weight(y_k) = k.
Word parse_word(const std::string& text, const Alphabet* alphabet = nullptr);
NCPoly parse_poly(const std::string& text, const Alphabet* alphabet = nullptr);
Scalar parse_scalar(const std::string& text);

nlohmann::json poly_to_json(const NCPoly& p);
nlohmann::json tensor_to_json(const TensorPoly& t);
nlohmann::json scalar_to_json(const Scalar& c);

}  // namespace phishuffle
