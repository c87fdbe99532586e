#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "leibdef/deformation.hpp"

using namespace leibdef;

namespace {

TruncatedLocalAlgebra line(int order) { return TruncatedLocalAlgebra(1, order, {}); }

MonKey tkey(const TruncatedLocalAlgebra& base, int degree) {
  std::vector<int> e(base.num_vars(), 0);
  e[0] = degree;
  return MonKey{degree, base.monomial_index(degree, e)};
}

/* the one-dimensional abelian algebra deformed by [e,e] = t e */
Deformation abelian_line_deformation(const TruncatedLocalAlgebra& base) {
  LeibnizAlgebra L = testutil::abelian(1);
  Cochain psi(2, 1, 1);
  psi.at({0, 0}, 0) = Rational(1);
  std::map<MonKey, Cochain> coeffs;
  coeffs.emplace(tkey(base, 1), psi);
  return Deformation(L, base, std::move(coeffs));
}

}  // namespace

TEST_CASE("the bracket packaged as a cochain") {
  Cochain b = bracket_cochain(testutil::nilp2());
  CHECK(b.at({1, 1}, 0) == Rational(1));
  CHECK(b.at({1, 1}, 1) == Rational(0));
  CHECK(b.at({0, 1}, 0) == Rational(0));
  CHECK(bracket_cochain(testutil::abelian(2)).is_zero());
}

TEST_CASE("deformation construction validates coefficient placement") {
  LeibnizAlgebra L = testutil::nilp2();
  auto base = line(1);
  Cochain ok(2, 2, 2);
  ok.at({0, 0}, 1) = Rational(1);

  CHECK_THROWS_AS(Deformation(L, base, {{MonKey{0, 0}, ok}}), std::invalid_argument);
  CHECK_THROWS_AS(Deformation(L, base, {{MonKey{2, 0}, ok}}), std::invalid_argument);
  CHECK_THROWS_AS(Deformation(L, base, {{MonKey{1, 0}, Cochain(2, 3, 3)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Deformation(L, base, {{MonKey{1, 0}, Cochain(1, 2, 2)}}),
                  std::invalid_argument);

  // a relation monomial cannot carry a coefficient
  TruncatedLocalAlgebra quo(1, 2, {HomogPoly{2, {Rational(1)}}});
  CHECK_THROWS_AS(Deformation(L, quo, {{MonKey{2, 0}, ok}}), std::invalid_argument);

  // zero cochains are dropped, leaving the trivial deformation
  Deformation trivial(L, base, {{MonKey{1, 0}, Cochain(2, 2, 2)}});
  CHECK(trivial.psi().empty());
  CHECK(trivial == Deformation(L, base, {}));
  CHECK(trivial.coefficient(MonKey{1, 0}).is_zero());
}

TEST_CASE("trivial deformations of Leibniz algebras have no defect") {
  for (auto L : {testutil::nilp2(), testutil::r2(), testutil::sl2(), testutil::heis3()}) {
    Deformation d(L, line(2), {});
    CHECK(check_deformation(d).empty());
    CHECK(is_deformation(d));
  }
}

TEST_CASE("degree-one defect is exactly the coboundary of the coefficient") {
  testutil::Rng rng(501);
  for (int trial = 0; trial < 12; ++trial) {
    LeibnizAlgebra L = testutil::random_leibniz(rng, 3);
    int n = L.dim();
    Cochain psi = testutil::rand_cochain(rng, 2, n, n);
    auto base = line(1);
    Deformation d(L, base, {{tkey(base, 1), psi}});
    auto defects = check_deformation(d);
    Cochain expected = coboundary(L, adjoint(L), psi);
    if (expected.is_zero()) {
      CHECK(defects.empty());
    } else {
      REQUIRE(defects.size() == 1);
      CHECK(defects.begin()->first == tkey(base, 1));
      CHECK(defects.begin()->second == expected);
    }
  }
}

TEST_CASE("the abelian line family picks up a defect only when t^2 survives") {
  // over K[t]/(t^2) the family [e,e] = t e closes
  CHECK(is_deformation(abelian_line_deformation(line(1))));

  // over K[t]/(t^3) the composition leaves a t^2 defect e
  Deformation d = abelian_line_deformation(line(2));
  auto defects = check_deformation(d);
  REQUIRE(defects.size() == 1);
  MonKey t2 = tkey(line(2), 2);
  REQUIRE(defects.count(t2) == 1);
  CHECK(defects.at(t2).at({0, 0, 0}, 0) == Rational(1));
}

TEST_CASE("universal infinitesimal deformations close and have identity differential") {
  for (auto L : {testutil::nilp2(), testutil::abelian(2), testutil::heis3()}) {
    Deformation eta = universal_infinitesimal(L);
    CohomologyData h2 = cohomology(L, adjoint(L), 2);
    CHECK(eta.base().num_vars() == h2.betti());
    CHECK(eta.base().order() == 1);
    CHECK(is_deformation(eta));
    CHECK(differential(eta) == Matrix::identity(h2.betti()));
  }
}

TEST_CASE("rigid algebras have a trivial universal infinitesimal deformation") {
  for (auto L : {testutil::sl2(), testutil::r2()}) {
    Deformation eta = universal_infinitesimal(L);
    CHECK(eta.base().num_vars() == 0);
    CHECK(eta.base().dim() == 1);
    CHECK(eta.psi().empty());
    CHECK(is_deformation(eta));
  }
}

TEST_CASE("the universal coefficient for nilp2 is the canonical representative") {
  Deformation eta = universal_infinitesimal(testutil::nilp2());
  REQUIRE(eta.psi().size() == 1);
  const Cochain& mu = eta.psi().begin()->second;
  // frozen: mu sends (e1, e2) to e1 and kills every other basis pair
  Cochain expected(2, 2, 2);
  expected.at({0, 1}, 0) = Rational(1);
  CHECK(mu == expected);
}

TEST_CASE("push_out along the identity and along projections") {
  Deformation eta = universal_infinitesimal(testutil::nilp2());
  AlgebraMap id(eta.base(), eta.base(), {eta.base().variable_element(0)});
  CHECK(push_out(eta, id) == eta);

  // an order-two family truncates to its order-one part
  Deformation d = abelian_line_deformation(line(2));
  auto proj = natural_projection(line(2), line(1));
  Deformation cut = push_out(d, proj);
  CHECK(cut.base().order() == 1);
  REQUIRE(cut.psi().size() == 1);
  CHECK(cut.coefficient(tkey(line(1), 1)) == d.coefficient(tkey(line(2), 1)));
}

TEST_CASE("push_out regroups coefficients linearly") {
  LeibnizAlgebra L = testutil::nilp2();
  TruncatedLocalAlgebra plane(2, 1, {});
  testutil::Rng rng(502);
  Cochain p1 = testutil::rand_cochain(rng, 2, 2, 2);
  Cochain p2 = testutil::rand_cochain(rng, 2, 2, 2);
  std::map<MonKey, Cochain> psi;
  psi.emplace(MonKey{1, plane.monomial_index(1, {1, 0})}, p1);
  psi.emplace(MonKey{1, plane.monomial_index(1, {0, 1})}, p2);
  Deformation d(L, plane, std::move(psi));

  auto t = line(1);
  LocalElement im1 = t.variable_element(0);
  im1.scale(Rational(2));
  LocalElement im2 = t.variable_element(0);
  im2.scale(Rational(3));
  AlgebraMap phi(plane, t, {im1, im2});
  Deformation pushed = push_out(d, phi);

  Cochain expected = p1;
  expected.scale(Rational(2));
  Cochain second = p2;
  second.scale(Rational(3));
  expected += second;
  CHECK(pushed.coefficient(tkey(t, 1)) == expected);

  // a map sending both variables to zero kills everything
  AlgebraMap zero(plane, t, {t.zero_element(), t.zero_element()});
  CHECK(push_out(d, zero).psi().empty());
}

TEST_CASE("equivalence sees through coboundary shifts") {
  LeibnizAlgebra L = testutil::nilp2();
  Deformation eta = universal_infinitesimal(L);
  testutil::Rng rng(503);
  for (int trial = 0; trial < 8; ++trial) {
    Cochain h = testutil::rand_cochain(rng, 1, 2, 2);
    Cochain shifted = eta.psi().begin()->second + coboundary(L, adjoint(L), h);
    Deformation other(L, eta.base(), {{tkey(eta.base(), 1), shifted}});
    CHECK(equivalent_infinitesimal(eta, other));
    if (!coboundary(L, adjoint(L), h).is_zero()) CHECK(!(eta == other));
  }
  Cochain doubled = eta.psi().begin()->second;
  doubled.scale(Rational(2));
  Deformation scaled(L, eta.base(), {{tkey(eta.base(), 1), doubled}});
  CHECK(!equivalent_infinitesimal(eta, scaled));

  CHECK_THROWS_AS(equivalent_infinitesimal(eta, universal_infinitesimal(testutil::r2())),
                  std::invalid_argument);
}

TEST_CASE("every infinitesimal deformation factors through the universal one") {
  testutil::Rng rng(504);
  int done = 0;
  while (done < 10) {
    LeibnizAlgebra L = testutil::random_leibniz(rng, 3);
    CohomologyData h2 = cohomology(L, adjoint(L), 2);
    int vars = std::uniform_int_distribution<int>(1, 2)(rng);
    TruncatedLocalAlgebra base(vars, 1, {});
    std::map<MonKey, Cochain> psi;
    for (int v = 0; v < vars; ++v) {
      Cochain c(2, L.dim(), L.dim());
      for (const auto& rep : h2.representatives()) {
        Cochain r = rep;
        c += r.scale(testutil::rand_rational(rng, 2, 1));
      }
      Cochain noise = coboundary(L, adjoint(L), testutil::rand_cochain(rng, 1, L.dim(), L.dim()));
      c += noise;
      std::vector<int> e(vars, 0);
      e[v] = 1;
      if (!c.is_zero()) psi.emplace(MonKey{1, base.monomial_index(1, e)}, c);
    }
    Deformation lam(L, base, std::move(psi));
    REQUIRE(is_deformation(lam));

    AlgebraMap down = universal_map(lam);
    Deformation through = push_out(universal_infinitesimal(L), down);
    CHECK(equivalent_infinitesimal(through, lam));
    ++done;
  }
}

TEST_CASE("the abelian line family is obstructed at order two") {
  Deformation d = abelian_line_deformation(line(1));
  auto ext = one_dim_extensions(line(1));
  auto obs = obstruction(d, ext.datum);
  REQUIRE(obs.size() == 1);
  CHECK(obs[0].direction == 0);
  CHECK_FALSE(obs[0].vanishes);
  CHECK_FALSE(obs[0].correction.has_value());
  // the defect is the full associator of psi: (e,e,e) -> e
  CHECK(obs[0].defect.at({0, 0, 0}, 0) == Rational(1));
  CHECK(obs[0].class_coords == Vec{Rational(1)});
}

TEST_CASE("the universal deformation of nilp2 lifts with zero defect") {
  Deformation eta = universal_infinitesimal(testutil::nilp2());
  auto ext = one_dim_extensions(eta.base());
  auto obs = obstruction(eta, ext.datum);
  REQUIRE(obs.size() == 1);
  CHECK(obs[0].vanishes);
  CHECK(obs[0].defect.is_zero());
  REQUIRE(obs[0].correction.has_value());
  CHECK(obs[0].correction->is_zero());
}

TEST_CASE("representative choice moves the defect by a coboundary only") {
  LeibnizAlgebra L = testutil::nilp2();
  Deformation eta = universal_infinitesimal(L);
  auto ext = one_dim_extensions(eta.base());

  testutil::Rng rng(505);
  for (int trial = 0; trial < 6; ++trial) {
    Cochain h = testutil::rand_cochain(rng, 1, 2, 2);
    Cochain shifted = eta.psi().begin()->second + coboundary(L, adjoint(L), h);
    Deformation other(L, eta.base(), {{tkey(eta.base(), 1), shifted}});
    auto obs = obstruction(other, ext.datum);
    REQUIRE(obs.size() == 1);
    // class still vanishes, and the correction cancels the defect exactly
    CHECK(obs[0].vanishes);
    REQUIRE(obs[0].correction.has_value());
    Cochain check = coboundary(L, adjoint(L), *obs[0].correction) + obs[0].defect;
    CHECK(check.is_zero());
  }
}

TEST_CASE("obstruction classes ignore the choice of lifting") {
  LeibnizAlgebra L = testutil::abelian(1);
  Deformation d = abelian_line_deformation(line(1));
  auto ext = one_dim_extensions(line(1));
  auto obs = obstruction(d, ext.datum);
  CohomologyData h3 = cohomology(L, adjoint(L), 3);

  testutil::Rng rng(506);
  for (int trial = 0; trial < 10; ++trial) {
    // a different lifting shifts the defect by an arbitrary coboundary
    Cochain sigma = testutil::rand_cochain(rng, 2, 1, 1);
    Cochain moved = obs[0].defect + coboundary(L, adjoint(L), sigma);
    CHECK(h3.class_of(moved) == obs[0].class_coords);
  }
}

TEST_CASE("obstruction rejects mismatched or broken input") {
  Deformation d = abelian_line_deformation(line(1));
  auto wrong = one_dim_extensions(line(2));
  CHECK_THROWS_AS(obstruction(d, wrong.datum), std::invalid_argument);

  Deformation open = abelian_line_deformation(line(2));  // has a defect
  auto ext2 = one_dim_extensions(line(2));
  CHECK_THROWS_AS(obstruction(open, ext2.datum), std::invalid_argument);
}

TEST_CASE("pulled-back extensions of the line") {
  // phi: plane -> line, g1 -> 2t, g2 -> 3t; the section defect pulls back
  TruncatedLocalAlgebra plane(2, 1, {});
  auto lineext = one_dim_extensions(line(1));
  auto t = line(1);
  LocalElement im1 = t.variable_element(0);
  im1.scale(Rational(2));
  LocalElement im2 = t.variable_element(0);
  im2.scale(Rational(3));
  AlgebraMap phi(plane, t, {im1, im2});
  ExtensionDatum pulled = pull_back(lineext.datum, phi);
  CHECK(pulled.fiber_dim == 1);
  // basis 1, g1, g2: f'(gi,gj) = (image coefficients product) f(t,t)
  CHECK(pulled.f[0][1][1] == Rational(4));
  CHECK(pulled.f[0][1][2] == Rational(6));
  CHECK(pulled.f[0][2][1] == Rational(6));
  CHECK(pulled.f[0][2][2] == Rational(9));
  CHECK(pulled.f[0][0][1] == Rational(0));
}

TEST_CASE("obstructions are natural under base change") {
  testutil::Rng rng(507);
  int done = 0;
  while (done < 8) {
    LeibnizAlgebra L = testutil::random_leibniz(rng, 2);
    CohomologyData h2 = cohomology(L, adjoint(L), 2);
    // lambda over the plane with cocycle coefficients
    TruncatedLocalAlgebra plane(2, 1, {});
    std::map<MonKey, Cochain> psi;
    for (int v = 0; v < 2; ++v) {
      Cochain c(2, L.dim(), L.dim());
      for (const auto& rep : h2.representatives()) {
        Cochain r = rep;
        c += r.scale(testutil::rand_rational(rng, 2, 1));
      }
      std::vector<int> e{0, 0};
      e[v] = 1;
      if (!c.is_zero()) psi.emplace(MonKey{1, plane.monomial_index(1, e)}, c);
    }
    Deformation lam(L, plane, std::move(psi));
    if (!is_deformation(lam)) continue;

    auto t = line(1);
    LocalElement im1 = t.variable_element(0);
    im1.scale(testutil::rand_rational(rng, 2, 1));
    LocalElement im2 = t.variable_element(0);
    im2.scale(testutil::rand_rational(rng, 2, 1));
    AlgebraMap phi(plane, t, {im1, im2});

    auto ext = one_dim_extensions(t);
    Deformation pushed = push_out(lam, phi);
    auto left = obstruction(pushed, ext.datum);
    auto right = obstruction(lam, pull_back(ext.datum, phi));
    REQUIRE(left.size() == right.size());
    for (size_t i = 0; i < left.size(); ++i) {
      CHECK(left[i].defect == right[i].defect);
      CHECK(left[i].class_coords == right[i].class_coords);
    }
    ++done;
  }
}
