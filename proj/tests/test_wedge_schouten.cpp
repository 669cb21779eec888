#include <doctest.h>

#include <random>

#include "cybe/catalog.hpp"
#include "cybe/schouten.hpp"

using namespace cybe;
using namespace cybe::basis;

namespace {

std::mt19937_64 rng(424242);

Element random_element(const LieAlgebra& g, bool with_params = false) {
  std::uniform_int_distribution<int> nterms(1, 3), idx(0, 14), num(-3, 3);
  Element x(&g);
  int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    MultiPoly c(Scalar(num(rng)));
    if (with_params) c += MultiPoly::var(Param::a) * MultiPoly(Scalar(num(rng)));
    x += Element(&g, idx(rng), c);
  }
  return x;
}

BiVector random_bivector(const LieAlgebra& g) {
  std::uniform_int_distribution<int> nterms(1, 4);
  BiVector r(&g);
  int n = nterms(rng);
  for (int t = 0; t < n; ++t) r += wedge(random_element(g), random_element(g));
  return r;
}

}  // namespace

#include "schouten_oracle.hpp"

namespace {
const cybe::testing::SchoutenOracle& oracle() { return cybe::testing::schouten_oracle(); }
}  // namespace

TEST_CASE("wedge basics") {
  const LieAlgebra& g = LieAlgebra::sl4();
  Element e1 = g.basis_element(E1), h2 = g.basis_element(H2), e6 = g.basis_element(E6);
  CHECK(wedge(e1, e1).is_zero());
  BiVector w = wedge(h2, e6);
  REQUIRE(w.coeffs().size() == 1);
  CHECK(w.coeff(H2, E6) == MultiPoly(1));
  CHECK(w.coeff(E6, H2) == MultiPoly(-1));

  for (int t = 0; t < 20; ++t) {
    Element x = random_element(g), y = random_element(g), z = random_element(g);
    CHECK(wedge(x + y, z) == wedge(x, z) + wedge(y, z));
    CHECK((wedge(x, y) + wedge(y, x)).is_zero());
  }
}

TEST_CASE("schouten square against the independent oracle") {
  const LieAlgebra& g = LieAlgebra::sl4();

  BiVector jordan = wedge(g.basis_element(H1), g.basis_element(E1));
  CHECK(schouten_self(jordan).is_zero());
  CHECK(oracle().schouten(jordan).is_zero());

  BiVector casimir = wedge(g.basis_element(E1), g.basis_element(EM1));
  TriVector expect(&g);
  expect.add_term(H1, E1, EM1, MultiPoly(1));
  CHECK(schouten_self(casimir) == expect);
  CHECK(oracle().schouten(casimir) == expect);

  for (int t = 0; t < 12; ++t) {
    BiVector r = random_bivector(g);
    CHECK(schouten_self(r) == oracle().schouten(r));
  }
}

TEST_CASE("schouten is quadratically homogeneous and polarization is symmetric") {
  const LieAlgebra& g = LieAlgebra::sl4();
  MultiPoly c = MultiPoly::var(Param::lambda) + MultiPoly(2);
  for (int t = 0; t < 8; ++t) {
    BiVector r = random_bivector(g), s = random_bivector(g);
    CHECK(schouten_self(r * c) == schouten_self(r) * (c * c));
    CHECK(schouten_mixed(r, s) == schouten_mixed(s, r));
    CHECK(schouten_mixed(r, BiVector(&g)).is_zero());
    CHECK(schouten_mixed(r, r) == schouten_self(r));
  }
}

TEST_CASE("cybe residual and per-degree split") {
  const LieAlgebra& g = LieAlgebra::sl4();
  BiVector casimir = wedge(g.basis_element(E1), g.basis_element(EM1));
  CHECK(!cybe_residual(casimir).is_solution);

  // a-dependent solution: the d=8 entry stays a solution for all a.
  auto entries = load_catalog(CYBE_TEST_CATALOG);
  const CatalogEntry& r8 = catalog_find(entries, "r8_1");
  CybeResult res = cybe_residual(r8.rmatrix);
  CHECK(res.is_solution);
  REQUIRE(res.per_degree.count(Param::a));
  for (const auto& [deg, zero] : res.per_degree.at(Param::a)) CHECK(zero);
}

TEST_CASE("adjoint action on wedge powers") {
  const LieAlgebra& g = LieAlgebra::sl4();
  Element h1 = g.basis_element(H1);
  TriVector t(&g);
  t.add_term(E1, E2, E3, MultiPoly(1));
  // weights of e1,e2,e3 under h1 are 2,-1,0; their sum is 1
  CHECK(adjoint_action_triv(h1, t) == t);
  CHECK(adjoint_action_triv(h1, TriVector(&g)).is_zero());

  for (int t2 = 0; t2 < 10; ++t2) {
    Element x = random_element(g), y = random_element(g);
    TriVector tv = wedge(random_element(g), random_bivector(g));
    TriVector lhs = adjoint_action_triv(x + y, tv);
    TriVector rhs = adjoint_action_triv(x, tv) + adjoint_action_triv(y, tv);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("canonical trivector is ad-invariant with weight zero") {
  const LieAlgebra& g = LieAlgebra::sl4();
  TriVector omega = canonical_trivector(g);
  CHECK(!omega.is_zero());
  for (int i = 0; i < 15; ++i)
    CHECK(adjoint_action_triv(g.basis_element(i), omega).is_zero());

  Element d = (g.basis_element(H1) + g.basis_element(H2) + g.basis_element(H2) +
               g.basis_element(H3)) *
              MultiPoly(Scalar(Rational(1, 2)));
  auto w = basis_weights(g, d);
  for (const auto& [key, c] : omega.coeffs()) {
    Scalar total = w[std::get<0>(key)] + w[std::get<1>(key)] + w[std::get<2>(key)];
    CHECK(total.is_zero());
  }
}

TEST_CASE("leibniz rule ties the two adjoint extensions together") {
  const LieAlgebra& g = LieAlgebra::sl4();
  for (int t = 0; t < 10; ++t) {
    Element x = random_element(g), u = random_element(g);
    BiVector b = random_bivector(g);
    TriVector lhs = adjoint_action_triv(x, wedge(u, b));
    TriVector rhs = wedge(g.bracket(x, u), b) + wedge(u, adjoint_action_biv(x, b));
    CHECK(lhs == rhs);
  }
}
