#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "leibdef/leibniz_algebra.hpp"

using namespace leibdef;
using testutil::Rng;

TEST_CASE("bracket identity on the fixed algebras") {
  CHECK_FALSE(verify_leibniz(testutil::abelian(1)).has_value());
  CHECK_FALSE(verify_leibniz(testutil::abelian(3)).has_value());
  CHECK_FALSE(verify_leibniz(testutil::nilp2()).has_value());
  CHECK_FALSE(verify_leibniz(testutil::r2()).has_value());
  CHECK_FALSE(verify_leibniz(testutil::heis3()).has_value());
  CHECK_FALSE(verify_leibniz(testutil::sl2()).has_value());
}

TEST_CASE("one-dimensional idempotent bracket fails with witness") {
  auto v = verify_leibniz(testutil::nonleibniz1());
  REQUIRE(v.has_value());
  CHECK(v->x == 0);
  CHECK(v->y == 0);
  CHECK(v->z == 0);
  CHECK(v->lhs == Vec{Rational(1)});  // [e,[e,e]] = e
  CHECK(v->rhs == Vec{Rational(0)});  // [[e,e],e] - [[e,e],e] = 0
}

TEST_CASE("bracket identity survives any change of basis") {
  Rng rng(201);
  for (int t = 0; t < 25; ++t) {
    LeibnizAlgebra a = testutil::random_leibniz(rng);
    CHECK_FALSE(verify_leibniz(a).has_value());
  }
  // and a broken algebra stays broken
  Matrix p = testutil::rand_invertible(rng, 1);
  CHECK(verify_leibniz(testutil::base_change(testutil::nonleibniz1(), p)).has_value());
}

TEST_CASE("adjoint representation satisfies the mixed identities") {
  Rng rng(202);
  for (const LeibnizAlgebra& a :
       {testutil::nilp2(), testutil::r2(), testutil::heis3(), testutil::sl2()})
    CHECK_FALSE(verify_representation(a, adjoint(a)).has_value());
  for (int t = 0; t < 10; ++t) {
    LeibnizAlgebra a = testutil::random_leibniz(rng);
    CHECK_FALSE(verify_representation(a, adjoint(a)).has_value());
  }
}

TEST_CASE("zero representation is always valid") {
  for (const LeibnizAlgebra& a : {testutil::nilp2(), testutil::sl2()})
    for (int m = 1; m <= 3; ++m)
      CHECK_FALSE(verify_representation(a, zero_representation(a, m)).has_value());
}

TEST_CASE("corrupted representation is rejected with a witness") {
  LeibnizAlgebra a = testutil::nilp2();
  Representation rep = adjoint(a);
  rep.set_left(0, 0, {Rational(1), Rational(0)});  // pretend [e1, e1] acts as e1
  auto v = verify_representation(a, rep);
  REQUIRE(v.has_value());
  CHECK(v->identity >= 1);
  CHECK(v->identity <= 3);
  CHECK(v->lhs != v->rhs);
}

TEST_CASE("dimension validation") {
  CHECK_THROWS_AS(LeibnizAlgebra(0), std::invalid_argument);
  LeibnizAlgebra a(2);
  CHECK_THROWS_AS(a.set_bracket(0, 2, Vec(2)), std::invalid_argument);
  CHECK_THROWS_AS(a.set_bracket(0, 0, Vec(3)), std::invalid_argument);
  CHECK_THROWS_AS(a.bracket(Vec(3), Vec(2)), std::invalid_argument);
  Representation r(2, 2);
  CHECK_THROWS_AS(r.set_left(0, 0, Vec(1)), std::invalid_argument);
  CHECK_THROWS_AS(r.set_right(2, 0, Vec(2)), std::invalid_argument);
  LeibnizAlgebra b(3);
  CHECK_THROWS_AS(verify_representation(b, r), std::invalid_argument);
}
