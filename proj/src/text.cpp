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

#include "phishuffle/text.hpp"

#include "phishuffle/tensor.hpp"

#include <nlohmann/json.hpp>

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace phishuffle {

std::string to_string(const Letter& l) { return "y" + std::to_string(l.index); }

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < w.length(); ++i) {
    if (i) s += '.';
    s += to_string(w.at(i));
  }
  return s;
}

std::string to_string(const Scalar& c) { return c.str(); }

namespace {

// Coefficient in term position: bare for integers and unit q-powers,
// parenthesized otherwise.
std::string coeff_str(const Scalar& c) {
  if (c.is_rational_constant() && denominator(c.rational_value()) == 1) return c.str();
  if (c.is_unit_q_power()) return c.str();
  return "(" + c.str() + ")";
}

void append_term(std::ostringstream& os, bool first, const Word& w, const Scalar& c) {
  bool neg = c.is_negative();
  Scalar mag = neg ? -c : c;
  if (first) {
    if (neg) os << '-';
  } else {
    os << (neg ? " - " : " + ");
  }
  if (mag.is_one()) {
    os << to_string(w);
  } else if (w.empty()) {
    os << coeff_str(mag);
  } else {
    os << coeff_str(mag) << '*' << to_string(w);
  }
}

}  // namespace

std::string to_string(const NCPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : p.terms()) {
    append_term(os, first, w, c);
    first = false;
  }
  return os.str();
}

std::string to_string(const TensorPoly& t) {
  if (t.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [legs, c] : t.terms()) {
    bool neg = c.is_negative();
    Scalar mag = neg ? -c : c;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    if (!mag.is_one()) os << coeff_str(mag) << '*';
    for (size_t i = 0; i < legs.size(); ++i) {
      if (i) os << "(x)";
      os << to_string(legs[i]);
    }
    first = false;
  }
  return os.str();
}

namespace {

class Parser {
 public:
  Parser(const std::string& text, const Alphabet* alphabet)
      : text_(text), alphabet_(alphabet) {}

  NCPoly parse_poly() {
    NCPoly acc;
    skip_ws();
    bool neg = accept('-');
    acc += term().scaled(Scalar(neg ? -1 : 1));
    skip_ws();
    while (peek() == '+' || peek() == '-') {
      bool minus = get() == '-';
      NCPoly t = term();
      acc += minus ? -t : t;
      skip_ws();
    }
    expect_end();
    return acc;
  }

  Word parse_word_only() {
    skip_ws();
    Word w = word();
    expect_end();
    return w;
  }

  Scalar parse_scalar_only() {
    Scalar s = scalar_expr();
    expect_end();
    return s;
  }

 private:
  const std::string& text_;
  const Alphabet* alphabet_;
  size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument("parse error at position " + std::to_string(pos_) + ": " + msg);
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char get() { return pos_ < text_.size() ? text_[pos_++] : '\0'; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  void expect_end() {
    skip_ws();
    if (pos_ != text_.size()) fail("trailing characters");
  }

  long long integer() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected integer");
    return std::stoll(text_.substr(start, pos_ - start));
  }

  Letter letter_token() {
    expect('y');
    long long k = integer();
    if (k < 1) fail("letter index must be >= 1");
    if (alphabet_) {
      auto l = alphabet_->find(static_cast<int>(k));
      if (!l) fail("letter y" + std::to_string(k) + " not in alphabet");
      return *l;
    }
    return letter(static_cast<int>(k));
  }

  Word word() {
    skip_ws();
    if (peek() == '1') {
      ++pos_;
      return Word::one();
    }
    std::vector<Letter> ls = {letter_token()};
    while (peek() == '.') {
      ++pos_;
      ls.push_back(letter_token());
    }
    return Word(std::move(ls));
  }

  // A term is a '*'/'/' chain of scalar atoms and at most one word.
  NCPoly term() {
    Scalar coeff(1);
    bool have_word = false;
    Word w = Word::one();
    bool first = true;
    for (;;) {
      skip_ws();
      char c = peek();
      bool divide = false;
      if (!first) {
        if (c == '*')
          ++pos_;
        else if (c == '/') {
          ++pos_;
          divide = true;
        } else
          break;
        skip_ws();
        c = peek();
      }
      // `1` as a factor parses as the rational 1, which is the same monomial
      // as the empty word, so the word grammar's `1` needs no special case.
      if (c == 'y') {
        if (divide) fail("cannot divide by a word");
        if (have_word) fail("more than one word factor in a term");
        w = word();
        have_word = true;
      } else if (c == 'q' || c == '(' || std::isdigit(static_cast<unsigned char>(c))) {
        Scalar s = scalar_atom();
        coeff = divide ? coeff / s : coeff * s;
      } else if (first) {
        fail("expected term");
      } else {
        fail("expected factor");
      }
      first = false;
    }
    return NCPoly::monomial(w, coeff);
  }

  Scalar scalar_atom() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      ++pos_;
      Scalar s = scalar_expr();
      expect(')');
      return s;
    }
    if (c == 'q') {
      ++pos_;
      int p = 1;
      if (peek() == '^') {
        ++pos_;
        p = static_cast<int>(integer());
        if (p < 0) fail("negative exponent");
      }
      return Scalar::q().pow(p);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      // A '/' after the integer is handled by the enclosing factor chain.
      return Scalar(Rational(integer()));
    }
    fail("expected scalar");
  }

  Scalar scalar_expr() {
    skip_ws();
    bool neg = accept('-');
    Scalar acc = scalar_term();
    if (neg) acc = -acc;
    skip_ws();
    while (peek() == '+' || peek() == '-') {
      bool minus = get() == '-';
      Scalar t = scalar_term();
      acc = minus ? acc - t : acc + t;
      skip_ws();
    }
    return acc;
  }

  Scalar scalar_term() {
    Scalar acc = scalar_atom();
    for (;;) {
      skip_ws();
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc *= scalar_atom();
      } else if (c == '/') {
        ++pos_;
        acc /= scalar_atom();
      } else {
        return acc;
      }
    }
  }
};

}  // namespace

Word parse_word(const std::string& text, const Alphabet* alphabet) {
  return Parser(text, alphabet).parse_word_only();
}

NCPoly parse_poly(const std::string& text, const Alphabet* alphabet) {
  return Parser(text, alphabet).parse_poly();
}

Scalar parse_scalar(const std::string& text) {
  return Parser(text, nullptr).parse_scalar_only();
}

nlohmann::json scalar_to_json(const Scalar& c) {
  return nlohmann::json{{"num", c.num().str()}, {"den", c.den().str()}};
}

namespace {

nlohmann::json word_to_json(const Word& w) {
  nlohmann::json names = nlohmann::json::array();
  for (const auto& l : w.letters()) names.push_back(to_string(l));
  return names;
}

}  // namespace

nlohmann::json poly_to_json(const NCPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [w, c] : p.terms()) {
    nlohmann::json t = scalar_to_json(c);
    t["word"] = word_to_json(w);
    terms.push_back(std::move(t));
  }
  return nlohmann::json{{"terms", std::move(terms)}};
}

nlohmann::json tensor_to_json(const TensorPoly& t) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [legs, c] : t.terms()) {
    nlohmann::json e = scalar_to_json(c);
    nlohmann::json ws = nlohmann::json::array();
    for (const auto& w : legs) ws.push_back(word_to_json(w));
    e["words"] = std::move(ws);
    terms.push_back(std::move(e));
  }
  return nlohmann::json{{"terms", std::move(terms)}};
}

}  // namespace phishuffle
