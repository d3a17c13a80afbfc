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

#include "phishuffle/law.hpp"

#include "phishuffle/text.hpp"

#include <stdexcept>

namespace phishuffle {

const char* flag_str(Flag f) {
  switch (f) {
    case Flag::yes: return "true";
    case Flag::no: return "false";
    default: return "unknown";
  }
}

namespace {

std::vector<Letter> default_universe(int weight_bound) {
  std::vector<Letter> ls;
  for (int k = 1; k <= weight_bound; ++k) ls.push_back(letter(k));
  return ls;
}

void check_letter_supported(const NCPoly& p, const Alphabet& alphabet) {
  for (const auto& [w, c] : p.terms()) {
    (void)c;
    if (w.length() != 1 || !alphabet.contains(w.at(0)))
      throw std::invalid_argument("table entry not supported on alphabet letters");
  }
}

}  // namespace

PhiLaw PhiLaw::weight_additive(std::string name, Rule rule) {
  return weight_additive(std::move(name), std::move(rule), default_universe);
}

PhiLaw PhiLaw::weight_additive(std::string name, Rule rule, Universe universe) {
  PhiLaw law;
  law.name_ = std::move(name);
  law.rule_ = std::move(rule);
  law.universe_ = std::move(universe);
  return law;
}

PhiLaw PhiLaw::finite_table(std::string name, Alphabet alphabet, TableEntries entries) {
  PhiLaw law;
  law.name_ = std::move(name);
  law.table_ = true;
  law.alphabet_ = std::move(alphabet);
  for (const auto& [key, value] : entries) {
    if (!law.alphabet_.find(key.first) || !law.alphabet_.find(key.second))
      throw std::invalid_argument("table entry key outside alphabet");
    check_letter_supported(value, law.alphabet_);
  }
  law.entries_ = std::move(entries);
  return law;
}

NCPoly PhiLaw::apply(const Letter& a, const Letter& b) const {
  if (table_) {
    if (!alphabet_.contains(a) || !alphabet_.contains(b))
      throw std::domain_error("letter outside alphabet");
    auto it = entries_.find({a.index, b.index});
    return it == entries_.end() ? NCPoly() : it->second;
  }
  NCPoly r;
  for (const auto& [z, c] : rule_(a, b)) {
    if (z.weight != a.weight + b.weight)
      throw std::logic_error("weight additivity violated by law '" + name_ + "'");
    r.add_term(Word({z}), c);
  }
  return r;
}

std::vector<Letter> PhiLaw::letters_up_to(int weight_bound) const {
  if (table_) return alphabet_.letters_up_to(weight_bound);
  return universe_(weight_bound);
}

std::vector<std::tuple<Letter, Letter, Scalar>> PhiLaw::pairs_into(const Letter& target) const {
  std::vector<std::tuple<Letter, Letter, Scalar>> out;
  if (table_) {
    auto t = alphabet_.find(target.index);
    if (!t || t->weight != target.weight) return out;
    Word tw({*t});
    for (const auto& [key, value] : entries_) {
      Scalar c = value.coeff(tw);
      if (!c.is_zero())
        out.emplace_back(*alphabet_.find(key.first), *alphabet_.find(key.second), c);
    }
    return out;
  }
  auto letters = universe_(target.weight - 1);
  Word tw({target});
  for (const auto& a : letters)
    for (const auto& b : letters) {
      if (a.weight + b.weight != target.weight) continue;
      Scalar c = apply(a, b).coeff(tw);
      if (!c.is_zero()) out.emplace_back(a, b, c);
    }
  return out;
}

void PhiLaw::adopt(const LawReport& report) {
  props_.associative = report.associative ? Flag::yes : Flag::no;
  props_.commutative = report.commutative ? Flag::yes : Flag::no;
  props_.dualizable = report.dualizable;
  props_.moderate = report.moderate;
  props_.moderation_index = report.moderation_index;
}

namespace {

[[noreturn]] void missing(const char* op, const char* what) {
  throw std::domain_error(std::string(op) + " requires " + what + " law");
}

}  // namespace

void PhiLaw::require_associative(const char* op) const {
  if (props_.associative != Flag::yes) missing(op, "associative");
}
void PhiLaw::require_commutative(const char* op) const {
  if (props_.commutative != Flag::yes) missing(op, "commutative");
}
void PhiLaw::require_dualizable(const char* op) const {
  if (props_.dualizable != Flag::yes) missing(op, "dualizable");
}
void PhiLaw::require_moderate(const char* op) const {
  if (props_.moderate != Flag::yes) missing(op, "moderate");
}

NCPoly gamma_word(const PhiLaw& law, const Word& w) {
  if (w.empty()) throw std::invalid_argument("gamma_word of the empty word");
  NCPoly acc = NCPoly::monomial(Word({w.back()}));
  for (size_t i = w.length() - 1; i-- > 0;) {
    NCPoly next;
    for (const auto& [z, c] : acc.terms()) next += law.apply(w.at(i), z.at(0)).scaled(c);
    acc = std::move(next);
  }
  return acc;
}

namespace {

// Bilinear extension of phi to letter-supported polynomials.
NCPoly phi_ext(const PhiLaw& law, const NCPoly& a, const NCPoly& b) {
  NCPoly r;
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) r += law.apply(wa.at(0), wb.at(0)).scaled(ca * cb);
  return r;
}

}  // namespace

LawReport analyze_law(const PhiLaw& law, int weight_bound) {
  if (weight_bound < 2) throw std::invalid_argument("analyze_law needs weight bound >= 2");
  LawReport rep;
  rep.law_name = law.name();
  rep.verified_up_to_weight = weight_bound;
  auto letters = law.letters_up_to(weight_bound);

  rep.commutative = true;
  for (const auto& a : letters)
    for (const auto& b : letters) {
      if (a.weight + b.weight > weight_bound) continue;
      if (!(law.apply(a, b) == law.apply(b, a))) {
        rep.commutative = false;
        rep.notes.push_back("phi(" + to_string(a) + "," + to_string(b) + ") != phi(" +
                            to_string(b) + "," + to_string(a) + ")");
        goto comm_done;
      }
    }
comm_done:

  rep.associative = true;
  for (const auto& a : letters)
    for (const auto& b : letters)
      for (const auto& c : letters) {
        if (a.weight + b.weight + c.weight > weight_bound) continue;
        NCPoly lhs = phi_ext(law, law.apply(a, b), NCPoly::monomial(Word({c})));
        NCPoly rhs = phi_ext(law, NCPoly::monomial(Word({a})), law.apply(b, c));
        if (!(lhs == rhs)) {
          rep.associative = false;
          rep.notes.push_back("associativity fails on (" + to_string(a) + "," + to_string(b) +
                              "," + to_string(c) + ")");
          goto assoc_done;
        }
      }
assoc_done:

  if (law.is_weight_additive()) {
    rep.dualizable = Flag::yes;
    rep.moderate = Flag::yes;
    rep.notes.push_back(
        "weight-additive: finitely many letters per weight, and gamma_w^y = 0 "
        "once weight(w) exceeds weight(y)");
  } else {
    const Alphabet& alph = *law.table_alphabet();
    rep.dualizable = Flag::yes;  // a finite table has finitely many pairs
    for (const auto& z : alph.letters()) {
      size_t in_pairs = law.pairs_into(z).size();
      if (in_pairs >= alph.size() && in_pairs >= 2)
        rep.notes.push_back("target " + to_string(z) + " receives " +
                            std::to_string(in_pairs) +
                            " letter pairs, as many as the alphabet provides; on an "
                            "unbounded index family this pattern defeats dualizability");
    }
    // Boolean support matrix: M[y][t] = 1 iff gamma_{x,t}^y != 0 for some x.
    const auto& ls = alph.letters();
    size_t m = ls.size();
    std::vector<std::vector<bool>> M(m, std::vector<bool>(m, false));
    for (size_t yi = 0; yi < m; ++yi)
      for (size_t ti = 0; ti < m; ++ti)
        for (const auto& x : ls)
          if (!law.apply(x, ls[ti]).coeff(Word({ls[yi]})).is_zero()) {
            M[yi][ti] = true;
            break;
          }
    auto is_zero = [&](const std::vector<std::vector<bool>>& A) {
      for (const auto& row : A)
        for (bool v : row)
          if (v) return false;
      return true;
    };
    auto mul = [&](const std::vector<std::vector<bool>>& A,
                   const std::vector<std::vector<bool>>& B) {
      std::vector<std::vector<bool>> C(m, std::vector<bool>(m, false));
      for (size_t i = 0; i < m; ++i)
        for (size_t k = 0; k < m; ++k)
          if (A[i][k])
            for (size_t j = 0; j < m; ++j)
              if (B[k][j]) C[i][j] = true;
      return C;
    };
    auto P = M;
    int index = 1;
    while (!is_zero(P) && index <= static_cast<int>(m)) {
      P = mul(P, M);
      ++index;
    }
    if (is_zero(P)) {
      rep.moderate = Flag::yes;
      rep.moderation_index = index;
      rep.notes.push_back("boolean support matrix nilpotent (index " + std::to_string(index) +
                          ")");
    } else {
      rep.moderate = Flag::unknown;
      rep.notes.push_back(
          "boolean support matrix is not nilpotent; moderation undecided by the "
          "conservative criterion (possible cancellations are not modeled)");
    }
  }
  return rep;
}

}  // namespace phishuffle
