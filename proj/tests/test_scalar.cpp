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

#include "phishuffle/scalar.hpp"
#include "phishuffle/text.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace phishuffle;

TEST_SUITE_BEGIN("scalar");

TEST_CASE("qpoly arithmetic and gcd") {
  QPoly q = QPoly::variable();
  QPoly p = q * q - 1;  // q^2 - 1
  QPoly d = q - 1;
  QPoly quot, rem;
  QPoly::divmod(p, d, quot, rem);
  CHECK(rem.is_zero());
  CHECK(quot == q + 1);
  CHECK(QPoly::gcd(p, d) == d);  // monic already
  CHECK(QPoly::gcd(QPoly(0), QPoly(0)).is_zero());
  CHECK(QPoly::gcd(p.scaled(3), d.scaled(Rational(1, 2))) == d);
  CHECK(p.eval(2) == 3);
  CHECK(QPoly(1).str() == "1");
  CHECK((q * q + 1).str() == "q^2+1");
  CHECK((q.scaled(2)).str() == "2*q");
  CHECK((q.scaled(Rational(1, 2))).str() == "q/2");
  CHECK((q * q - q).str() == "q^2-q");
  CHECK((q.scaled(Rational(3, 2)) * q).str() == "3*q^2/2");
}

TEST_CASE("scalar canonical form") {
  Scalar q = Scalar::q();
  // (q/2) + (q/2) = q
  CHECK(Scalar::fraction(QPoly::variable(), QPoly(2)) +
            Scalar::fraction(QPoly::variable(), QPoly(2)) ==
        q);
  // (q^2-1)/(q-1) normalizes to q+1
  Scalar s = Scalar::fraction(QPoly::variable() * QPoly::variable() - 1,
                              QPoly::variable() - 1);
  CHECK(s == q + Scalar(1));
  CHECK(s.is_polynomial());
  // specialize((q+1)/2, 1) = 1
  Scalar t = Scalar::fraction(QPoly::variable() + 1, QPoly(2));
  CHECK(t.specialize(1) == 1);
  // denominator made monic
  Scalar u = Scalar::fraction(QPoly(1), QPoly::variable().scaled(2));  // 1/(2q)
  CHECK(u.den() == QPoly::variable());
  CHECK(u.num() == QPoly(Rational(1, 2)));
  CHECK_THROWS_WITH(Scalar(1) / Scalar(0), doctest::Contains("division by zero scalar"));
  CHECK_THROWS_WITH(Scalar::fraction(QPoly(1), QPoly::variable() - 1).specialize(1),
                    doctest::Contains("pole at q0"));
}

TEST_CASE("scalar field axioms on random triples") {
  oracle::Rng rng(2026);
  auto rand_scalar = [&]() {
    QPoly n = QPoly::monomial(rng.rat(), rng.geti(0, 2)) + QPoly(rng.rat());
    QPoly d = QPoly::monomial(rng.nonzero_rat(), rng.geti(0, 1)) + QPoly(rng.geti(0, 1));
    if (d.is_zero()) d = QPoly(1);
    return Scalar::fraction(n, d);
  };
  for (int i = 0; i < 60; ++i) {
    Scalar a = rand_scalar(), b = rand_scalar(), c = rand_scalar();
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + Scalar(0) == a);
    CHECK(a * Scalar(1) == a);
    CHECK(a - a == Scalar(0));
    if (!a.is_zero()) CHECK(a / a == Scalar(1));
    // canonical form idempotent
    CHECK(Scalar::fraction(a.num(), a.den()) == a);
  }
}

TEST_CASE("scalar printing and parsing") {
  Scalar q = Scalar::q();
  CHECK((q / Scalar(2)).str() == "q/2");
  CHECK((q * q + Scalar(1)).str() == "q^2+1");
  CHECK(((q * q + Scalar(1)) / Scalar(2)).str() == "(q^2+1)/2");
  CHECK(((q + Scalar(1)) / (q - Scalar(1))).str() == "(q+1)/(q-1)");
  CHECK(Scalar(Rational(-1, 2)).str() == "-1/2");
  for (const char* s :
       {"q/2", "q^2+1", "(q^2+1)/2", "(q+1)/(q-1)", "-1/2", "0", "3*q^2/2", "q^3"}) {
    Scalar v = parse_scalar(s);
    CHECK(parse_scalar(v.str()) == v);
  }
  CHECK(parse_scalar("(q^2-1)/(q-1)") == q + Scalar(1));
  CHECK(parse_rational("-3/4") == Rational(-3, 4));
  CHECK_THROWS(parse_rational("3/0"));
  CHECK_THROWS(parse_scalar("q+"));
}

TEST_SUITE_END();
