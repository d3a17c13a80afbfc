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

#include "phishuffle/catalog.hpp"

#include "phishuffle/text.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <stdexcept>

namespace phishuffle {

namespace {

LawProperties all_good() {
  LawProperties p;
  p.associative = p.commutative = p.dualizable = p.moderate = Flag::yes;
  return p;
}

PhiLaw index_additive(std::string name, std::function<Scalar(int, int)> coeff) {
  PhiLaw law = PhiLaw::weight_additive(
      std::move(name),
      [coeff = std::move(coeff)](const Letter& a, const Letter& b)
          -> std::vector<std::pair<Letter, Scalar>> {
        Scalar c = coeff(a.index, b.index);
        if (c.is_zero()) return {};
        return {{letter(a.index + b.index, a.weight + b.weight), c}};
      });
  law.set_properties(all_good());
  return law;
}

}  // namespace

PhiLaw make_shuffle() {
  PhiLaw law = PhiLaw::weight_additive(
      "shuffle", [](const Letter&, const Letter&) -> std::vector<std::pair<Letter, Scalar>> {
        return {};
      });
  law.set_properties(all_good());
  return law;
}

PhiLaw make_quasi_shuffle() {
  return index_additive("quasi-shuffle", [](int, int) { return Scalar(1); });
}

PhiLaw make_min_stuffle() {
  return index_additive("min-stuffle", [](int, int) { return Scalar(-1); });
}

PhiLaw make_q_stuffle(const Scalar& q) {
  return index_additive("q-stuffle", [q](int, int) { return q; });
}

PhiLaw make_q_shuffle(const Scalar& q) {
  return index_additive("q-shuffle", [q](int i, int j) { return q.pow(i * j); });
}

PhiLaw make_semigroup_shuffle(std::string name, const Alphabet& alphabet,
                              const std::function<int(int, int)>& op) {
  PhiLaw::TableEntries entries;
  for (const auto& a : alphabet.letters())
    for (const auto& b : alphabet.letters()) {
      auto z = alphabet.find(op(a.index, b.index));
      if (z) entries[{a.index, b.index}] = NCPoly::monomial(Word({*z}));
    }
  return PhiLaw::finite_table(std::move(name), alphabet, std::move(entries));
}

PhiLaw make_q_infiltration(const Alphabet& alphabet, const Scalar& q) {
  PhiLaw::TableEntries entries;
  for (const auto& a : alphabet.letters())
    if (!q.is_zero()) entries[{a.index, a.index}] = NCPoly::monomial(Word({a}), q);
  PhiLaw law = PhiLaw::finite_table("q-infiltration", alphabet, std::move(entries));
  LawProperties p;
  p.associative = p.commutative = p.dualizable = Flag::yes;
  p.moderate = Flag::unknown;
  law.set_properties(p);
  return law;
}

namespace {

std::string squeeze(const std::string& s) {
  std::string r;
  for (char c : s)
    if (c != '-' && c != '_' && c != ' ') r += static_cast<char>(std::tolower(c));
  return r;
}

}  // namespace

PhiLaw builtin_law(const std::string& name, const Scalar& q, const Alphabet& table_alphabet) {
  std::string n = squeeze(name);
  if (n == "shuffle") return make_shuffle();
  if (n == "quasishuffle" || n == "stuffle") return make_quasi_shuffle();
  if (n == "minstuffle" || n == "minshuffle") return make_min_stuffle();
  if (n == "qstuffle") return make_q_stuffle(q);
  if (n == "qshuffle") return make_q_shuffle(q);
  if (n == "qinfiltration" || n == "infiltration") return make_q_infiltration(table_alphabet, q);
  throw std::invalid_argument("unknown law '" + name + "'");
}

PhiLaw law_from_json(const nlohmann::json& doc) {
  std::string variant = doc.at("variant").get<std::string>();
  std::string name = doc.value("name", variant);
  if (variant == "weight_additive") {
    Scalar q = Scalar::q();
    if (doc.contains("q")) {
      std::string qs = doc["q"].get<std::string>();
      if (qs != "q") q = Scalar(parse_rational(qs));
    }
    Alphabet alph = Alphabet::default_up_to_weight(1);
    if (doc.contains("alphabet")) {
      std::vector<Letter> ls;
      for (const auto& e : doc["alphabet"]) {
        Word w = parse_word(e.at("letter").get<std::string>());
        ls.push_back(letter(w.at(0).index, e.value("weight", w.at(0).index)));
      }
      alph = Alphabet(std::move(ls));
    }
    PhiLaw law = builtin_law(doc.at("builtin").get<std::string>(), q, alph);
    return law;
  }
  if (variant == "finite_table") {
    std::vector<Letter> ls;
    for (const auto& e : doc.at("alphabet")) {
      Word w = parse_word(e.at("letter").get<std::string>());
      ls.push_back(letter(w.at(0).index, e.value("weight", w.at(0).index)));
    }
    Alphabet alph(std::move(ls));
    PhiLaw::TableEntries entries;
    for (const auto& e : doc.at("entries")) {
      Word a = parse_word(e.at("a").get<std::string>(), &alph);
      Word b = parse_word(e.at("b").get<std::string>(), &alph);
      if (a.length() != 1 || b.length() != 1)
        throw std::invalid_argument("table entry keys must be single letters");
      NCPoly value = parse_poly(e.at("value").get<std::string>(), &alph);
      if (!value.is_zero()) entries[{a.at(0).index, b.at(0).index}] = std::move(value);
    }
    return PhiLaw::finite_table(std::move(name), std::move(alph), std::move(entries));
  }
  throw std::invalid_argument("unknown law variant '" + variant + "'");
}

}  // namespace phishuffle
