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

#include "phishuffle/ncpoly.hpp"
#include "phishuffle/tensor.hpp"
#include "phishuffle/text.hpp"

#include "oracles.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

using namespace phishuffle;

namespace {

Word W(const std::string& s) { return parse_word(s); }
NCPoly P(const std::string& s) { return parse_poly(s); }

}  // namespace

TEST_SUITE_BEGIN("ncpoly");

TEST_CASE("concatenation product") {
  CHECK(P("y1") * P("y2") == P("y1.y2"));
  CHECK(P("y1 + y2") * P("y1") == P("y1.y1 + y2.y1"));
  CHECK(P("2*y1") * P("q*1") == P("(2*q)*y1"));
  CHECK(P("2*y1") * P("q") == parse_poly("2*q*y1"));
  // unit and associativity on random-ish values
  NCPoly a = P("y1 + (q/2)*y2.y1"), b = P("1 - y1"), c = P("y3 + 2");
  CHECK(a * NCPoly::one() == a);
  CHECK(NCPoly::one() * a == a);
  CHECK((a * b) * c == a * (b * c));
}

TEST_CASE("weight and length additive on monomials") {
  Word u = W("y2.y1"), v = W("y1.y1.y3");
  CHECK(u.concat(v).weight() == u.weight() + v.weight());
  CHECK(u.concat(v).length() == u.length() + v.length());
}

TEST_CASE("pairing") {
  CHECK(pairing(P("y1.y2"), P("y1.y2")) == Scalar(1));
  CHECK(pairing(P("y1.y2"), P("y2.y1")) == Scalar(0));
  // The weight-2 orthogonality instance from the dual bases.
  CHECK(pairing(P("y1.y1 + (q/2)*y2"), P("y2 - (q/2)*y1.y1")) == Scalar(0));
  // Gram matrix of the monomial basis is the identity per weight component.
  auto words = words_up_to_weight(Alphabet::default_up_to_weight(4).letters(), 4);
  for (const auto& u : words)
    for (const auto& v : words)
      CHECK(pairing(NCPoly::monomial(u), NCPoly::monomial(v)) == Scalar(u == v ? 1 : 0));
}

TEST_CASE("series log/exp") {
  TruncSeries one(NCPoly::one(), 4);
  CHECK(series_exp(TruncSeries(NCPoly(), 4)) == one);
  // log(1 + y1) at bound 3
  TruncSeries s(P("1 + y1"), 3);
  CHECK(series_log(s).poly() ==
        P("y1 - (1/2)*y1.y1 + (1/3)*y1.y1.y1"));
  // round trip both ways
  TruncSeries t(P("1 + y1 + y2"), 4);
  CHECK(series_exp(series_log(t)) == t);
  CHECK_THROWS_WITH(series_log(TruncSeries(P("y1"), 3)),
                    doctest::Contains("constant term 1"));
  CHECK_THROWS_WITH(series_exp(TruncSeries(P("1 + y1"), 3)),
                    doctest::Contains("constant term 0"));
}

TEST_CASE("series log/exp round-trips on random series") {
  oracle::Rng rng(7);
  auto letters = Alphabet::default_up_to_weight(3).letters();
  auto words = words_up_to_weight(letters, 5);
  for (int trial = 0; trial < 50; ++trial) {
    NCPoly h;
    for (const auto& w : words)
      if (rng.geti(0, 3) == 0) h.add_term(w, Scalar(rng.rat()));
    TruncSeries hs(h, 5);
    CHECK(series_log(series_exp(hs)) == hs);
    TruncSeries s = TruncSeries(NCPoly::one(), 5) + hs;
    CHECK(series_exp(series_log(s)) == s);
  }
}

TEST_CASE("mismatched bounds take the minimum") {
  TruncSeries a(P("1 + y1"), 5), b(P("1 + y2"), 2);
  CHECK((a * b).weight_bound() == 2);
  CHECK((a * b).poly() == P("1 + y1 + y2 + y1.y2").truncated(2));
}

TEST_CASE("printing follows the canonical term order") {
  CHECK(to_string(P("2*y1.y1 + q*y2")) == "q*y2 + 2*y1.y1");
  CHECK(to_string(P("y2 - (q/2)*y1.y1")) == "y2 - (q/2)*y1.y1");
  CHECK(to_string(NCPoly()) == "0");
  CHECK(to_string(P("1 + 2*y1 + 2*y1.y1")) == "1 + 2*y1 + 2*y1.y1");
  CHECK(to_string(P("-y1 + (1/2)*y2")) == "-y1 + (1/2)*y2");
  CHECK(to_string(P("((q^2+1)/2)*y1")) == "((q^2+1)/2)*y1");
}

TEST_CASE("parser round-trips every printed polynomial") {
  oracle::Rng rng(11);
  auto words = words_up_to_weight(Alphabet::default_up_to_weight(3).letters(), 4);
  Scalar q = Scalar::q();
  for (int trial = 0; trial < 40; ++trial) {
    NCPoly p;
    for (const auto& w : words)
      if (rng.geti(0, 2) == 0)
        p.add_term(w, Scalar(rng.rat()) + q.pow(rng.geti(0, 2)) * Scalar(rng.rat()));
    CHECK(parse_poly(to_string(p)) == p);
  }
}

TEST_CASE("machine form carries the same content") {
  NCPoly p = P("q*y2 + 2*y1.y1 - (1/2)*y3.y1");
  auto j = poly_to_json(p);
  REQUIRE(j["terms"].size() == p.term_count());
  // reconstruct from the document
  NCPoly back;
  for (const auto& t : j["terms"]) {
    std::vector<Letter> ls;
    for (const auto& name : t["word"]) ls.push_back(parse_word(name.get<std::string>()).at(0));
    back.add_term(Word(ls), Scalar::fraction(parse_scalar(t["num"].get<std::string>()).num(),
                                             parse_scalar(t["den"].get<std::string>()).num()));
  }
  CHECK(back == p);
}

TEST_CASE("tensor structure") {
  TensorPoly d = tensor_of(P("y1 + y2"), P("y1"));
  CHECK(d.coeff({W("y1"), W("y1")}) == Scalar(1));
  CHECK(d.coeff({W("y2"), W("y1")}) == Scalar(1));
  CHECK(d.term_count() == 2);
  TensorPoly u = TensorPoly::unit(2);
  CHECK(tensor_conc_mul(u, d) == d);
  CHECK(tensor_conc_mul(d, u) == d);
  TensorPoly t3 = TensorPoly::unit(3);
  CHECK(t3.coeff({W("1"), W("1"), W("1")}) == Scalar(1));
  CHECK(to_string(d) == "y1(x)y1 + y2(x)y1");
}

TEST_SUITE_END();
