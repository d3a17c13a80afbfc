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

#include <vector>

namespace phishuffle {

struct LegsLess {
  bool operator()(const std::vector<Word>& a, const std::vector<Word>& b) const;
};

// Element of the n-fold tensor power of the word algebra: a finite map from
// leg tuples to scalars. Arity is fixed per value.
class TensorPoly {
 public:
  using TermMap = std::map<std::vector<Word>, Scalar, LegsLess>;

  explicit TensorPoly(int arity);
  static TensorPoly unit(int arity);  // 1 (x) ... (x) 1
  static TensorPoly monomial(std::vector<Word> legs, const Scalar& c = Scalar(1));

  int arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  Scalar coeff(const std::vector<Word>& legs) const;

  void add_term(const std::vector<Word>& legs, const Scalar& c);

  TensorPoly operator-() const;
  TensorPoly& operator+=(const TensorPoly& o);
  TensorPoly& operator-=(const TensorPoly& o);
  friend TensorPoly operator+(TensorPoly a, const TensorPoly& b) { return a += b; }
  friend TensorPoly operator-(TensorPoly a, const TensorPoly& b) { return a -= b; }
  TensorPoly scaled(const Scalar& c) const;

  // Drops terms with any leg heavier than the bound.
  TensorPoly truncated_legs(int weight_bound) const;

  bool operator==(const TensorPoly&) const = default;

 private:
  int arity_;
  TermMap terms_;
};

// Componentwise concatenation product (every leg multiplies by conc).
TensorPoly tensor_conc_mul(const TensorPoly& a, const TensorPoly& b);

// Outer product of single-leg contents: P (x) Q as a 2-leg tensor.
TensorPoly tensor_of(const NCPoly& left, const NCPoly& right);

}  // namespace phishuffle
