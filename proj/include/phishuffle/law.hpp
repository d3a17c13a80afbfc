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

#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace phishuffle {

enum class Flag { yes, no, unknown };

const char* flag_str(Flag f);

// Verified structural properties of a law. Built-in laws come pre-stamped;
// user tables acquire stamps from analyze_law. Operations with structural
// preconditions consult these stamps rather than re-verifying per call.
struct LawProperties {
  Flag associative = Flag::unknown;
  Flag commutative = Flag::unknown;
  Flag dualizable = Flag::unknown;
  Flag moderate = Flag::unknown;
  // For finite tables found moderate: smallest e with support-matrix^e = 0.
  int moderation_index = 0;
};

struct LawReport {
  std::string law_name;
  bool associative = false;
  bool commutative = false;
  Flag dualizable = Flag::unknown;
  Flag moderate = Flag::unknown;
  int verified_up_to_weight = 0;
  int moderation_index = 0;
  std::vector<std::string> notes;
};

// Deformation law phi, given by its structure constants gamma_{a,b}^z:
// phi(a, b) = sum_z gamma_{a,b}^z z. Two variants:
//  - WeightAdditive: a rule callback producing letter/coefficient pairs whose
//    letters each weigh weight(a) + weight(b) (checked on every call), plus a
//    universe callback listing all letters up to a weight bound;
//  - FiniteTable: an explicit alphabet and an entry map whose values are
//    letter-supported polynomials over that alphabet.
class PhiLaw {
 public:
  using Rule = std::function<std::vector<std::pair<Letter, Scalar>>(const Letter&, const Letter&)>;
  using Universe = std::function<std::vector<Letter>(int)>;
  using TableEntries = std::map<std::pair<int, int>, NCPoly>;

  static PhiLaw weight_additive(std::string name, Rule rule);
  static PhiLaw weight_additive(std::string name, Rule rule, Universe universe);
  static PhiLaw finite_table(std::string name, Alphabet alphabet, TableEntries entries);

  const std::string& name() const { return name_; }
  bool is_weight_additive() const { return !table_; }
  // Null for weight-additive laws.
  const Alphabet* table_alphabet() const { return table_ ? &alphabet_ : nullptr; }
  const TableEntries& table_entries() const { return entries_; }

  // phi(a, b) as a letter-supported polynomial.
  NCPoly apply(const Letter& a, const Letter& b) const;
  // Every letter of weight <= bound the law can see.
  std::vector<Letter> letters_up_to(int weight_bound) const;
  // All (a, b, gamma_{a,b}^target) with nonzero gamma. Finite for both
  // variants; this is the dual lookup behind the coproduct on letters.
  std::vector<std::tuple<Letter, Letter, Scalar>> pairs_into(const Letter& target) const;

  const LawProperties& properties() const { return props_; }
  void set_properties(const LawProperties& p) { props_ = p; }
  void adopt(const LawReport& report);

  void require_associative(const char* op) const;
  void require_commutative(const char* op) const;
  void require_dualizable(const char* op) const;
  void require_moderate(const char* op) const;

 private:
  std::string name_;
  bool table_ = false;
  Rule rule_;
  Universe universe_;
  Alphabet alphabet_;
  TableEntries entries_;
  LawProperties props_;
};

// phi extended to nonempty words through associativity:
// phi(x w) = phi(x, phi(w)); the result is the letter-supported polynomial
// whose coefficient on y is the extended structure constant gamma_w^y.
NCPoly gamma_word(const PhiLaw& law, const Word& w);

// Exhaustive bounded verification of associativity/commutativity plus the
// variant-specific dualizability and moderation criteria. Moderation of a
// finite table uses a sound-but-incomplete boolean nilpotency test; a
// non-nilpotent support matrix reports `unknown` (cancellations between
// nonzero constants are not modeled).
LawReport analyze_law(const PhiLaw& law, int weight_bound);

}  // namespace phishuffle
