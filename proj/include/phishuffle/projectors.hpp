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

#include "phishuffle/products.hpp"

#include <utility>

namespace phishuffle {

// Coefficients a_1, a_2, ... of a univariate series S = sum_{k>=1} a_k X^k
// (no constant term).
class CoeffSeq {
 public:
  explicit CoeffSeq(std::function<Scalar(int)> a) : a_(std::move(a)) {}
  Scalar at(int k) const { return a_(k); }

  static CoeffSeq identity_x();   // X
  static CoeffSeq log1p();        // a_k = (-1)^(k-1)/k
  static CoeffSeq alternating();  // a_k = (-1)^k, i.e. -X/(1+X)

 private:
  std::function<Scalar(int)> a_;
};

enum class Side { standard, adjoint };

// Workspace bundling the shuffle memo with per-word projector caches. All
// operations are pure in the law; the caches only avoid recomputation.
class ProjectorEngine {
 public:
  explicit ProjectorEngine(PhiLaw law);
  const PhiLaw& law() const { return cache_.law(); }
  ShuffleCache& shuffles() { return cache_; }

  // Phi(S)[w] = sum_k a_k sum_{u_1...u_k = w, u_i nonempty} u_1 (*) ... (*) u_k,
  // extended linearly; the empty word maps to 0.
  NCPoly phi_of_series(const CoeffSeq& coeffs, const NCPoly& p);

  // Eulerian projector. The adjoint side is Phi(log(1+X)); the standard side
  // expands over candidate words (same weight for graded laws, bounded length
  // for moderate finite tables) and needs the moderate stamp.
  NCPoly pi1(const NCPoly& p, Side side = Side::standard);
  // Higher Eulerian projectors; pi_0 projects on the constant term.
  NCPoly pi_n(const NCPoly& p, int n, Side side = Side::standard);
  // Antipode of the (phi-shuffle, deconcatenation) Hopf algebra.
  NCPoly antipode(const NCPoly& p);
  // Both word reconstructions (products of pi1 images / phi-shuffles of
  // adjoint images); each equals the monomial w.
  std::pair<NCPoly, NCPoly> word_expansion_identity(const Word& w);
  // Haus_Y = sum_w w (x) pi1(w), both legs truncated at the bound.
  TensorPoly hausdorff(int weight_bound);
  // sigma_Y(t) = exp(t Haus_Y) in the double algebra; sigma_Y(1) is the
  // diagonal series.
  TensorPoly sigma(int weight_bound, const Scalar& t = Scalar(1));

 private:
  ShuffleCache cache_;
  std::map<Word, NCPoly> adj_memo_, std_memo_;
  // (n, weight) -> list of (M, P) = (shuffle of adjoint images, conc of
  // standard images) over all n-tuples of nonempty words of that total weight.
  std::map<std::pair<int, int>, std::vector<std::pair<NCPoly, NCPoly>>> tuple_memo_;
  std::mutex mu_;

  NCPoly pi1_adj_word(const Word& w);
  NCPoly pi1_std_word(const Word& w);
  std::vector<Word> candidate_words(const Word& w) const;
  const std::vector<std::pair<NCPoly, NCPoly>>& graded_tuples(int n, int weight);
  void check_moderate(const char* op) const;
};

// One-shot wrappers.
NCPoly phi_of_series(const PhiLaw& law, const CoeffSeq& coeffs, const NCPoly& p);
NCPoly pi1(const PhiLaw& law, const NCPoly& p, Side side = Side::standard);
NCPoly pi_n(const PhiLaw& law, const NCPoly& p, int n, Side side = Side::standard);
NCPoly antipode(const PhiLaw& law, const NCPoly& p);
std::pair<NCPoly, NCPoly> word_expansion_identity(const PhiLaw& law, const Word& w);
TensorPoly hausdorff(const PhiLaw& law, int weight_bound);
TensorPoly hausdorff_sigma(const PhiLaw& law, int weight_bound, const Scalar& t = Scalar(1));

}  // namespace phishuffle
