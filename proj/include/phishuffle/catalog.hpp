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

#include "phishuffle/law.hpp"

#include <nlohmann/json_fwd.hpp>

namespace phishuffle {

// Built-in deformations over the default grading weight(y_k) = k. The
// index-additive laws are weight-additive and come pre-stamped with their
// known structural properties.
PhiLaw make_shuffle();                                  // phi = 0
PhiLaw make_quasi_shuffle();                            // phi(y_i, y_j) = y_{i+j}
PhiLaw make_min_stuffle();                              // phi(y_i, y_j) = -y_{i+j}
PhiLaw make_q_stuffle(const Scalar& q = Scalar::q());   // phi(y_i, y_j) = q y_{i+j}
PhiLaw make_q_shuffle(const Scalar& q = Scalar::q());   // phi(y_i, y_j) = q^{i j} y_{i+j}

// Finite-table laws.
// phi(y_i, y_j) = y_{op(i,j)} when op(i,j) names an alphabet letter, else 0.
PhiLaw make_semigroup_shuffle(std::string name, const Alphabet& alphabet,
                              const std::function<int(int, int)>& op);
// phi(a, b) = q delta_{a,b} a.
PhiLaw make_q_infiltration(const Alphabet& alphabet, const Scalar& q = Scalar::q());

// Lookup by catalog name (accepts e.g. "qstuffle" or "q-stuffle"); the
// alphabet is used by the finite-table builtins only. Throws
// std::invalid_argument("unknown law ...") otherwise.
PhiLaw builtin_law(const std::string& name, const Scalar& q = Scalar::q(),
                   const Alphabet& table_alphabet = Alphabet::default_up_to_weight(1));

// Law-definition document:
//   {"name": ..., "variant": "weight_additive", "builtin": <catalog name>,
//    "q": "q" | "<rational>"}
//   {"name": ..., "variant": "finite_table",
//    "alphabet": [{"letter": "y1", "weight": 1}, ...],
//    "entries": [{"a": "y1", "b": "y1", "value": "q*y2"}, ...]}
PhiLaw law_from_json(const nlohmann::json& doc);

}  // namespace phishuffle
