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

#include "phishuffle/rational.hpp"

#include <stdexcept>

namespace phishuffle {

Rational parse_rational(const std::string& text) {
  size_t pos = 0;
  auto parse_int = [&](const char* what) -> Integer {
    bool neg = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
      neg = text[pos] == '-';
      ++pos;
    }
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw std::invalid_argument(std::string("malformed rational: expected ") + what);
    Integer v(text.substr(start, pos - start));
    return neg ? Integer(-v) : v;
  };
  Integer num = parse_int("numerator");
  Integer den = 1;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    den = parse_int("denominator");
    if (den == 0) throw std::invalid_argument("malformed rational: zero denominator");
  }
  if (pos != text.size()) throw std::invalid_argument("malformed rational: trailing characters");
  return Rational(num, den);
}

std::string rational_str(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace phishuffle
