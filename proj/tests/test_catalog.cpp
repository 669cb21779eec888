#include <doctest.h>

#include "cybe/catalog.hpp"
#include "cybe/schouten.hpp"

using namespace cybe;
using namespace cybe::basis;

namespace {
const LieAlgebra& g = LieAlgebra::sl4();
}

TEST_CASE("expression parsing") {
  BiVector r81 = parse_bivector("e4^e3 - e5^e1 + a*h2^e6 + h6^e6", g);
  CHECK(r81.carrier().size() == 8);
  CHECK(r81.coeff(E4, E3) == MultiPoly(1));
  CHECK(r81.coeff(E5, E1) == MultiPoly(-1));
  CHECK(r81.coeff(H2, E6) == MultiPoly::var(Param::a) + MultiPoly(1));  // h6 adds 1 on h2
  CHECK(r81.coeff(H1, E6) == MultiPoly(1));

  BiVector one_term = parse_bivector("1/4*(3*h1+2*h2+h3)^e1", g);
  CHECK(one_term.coeff(H1, E1) == MultiPoly(Scalar(Rational(3, 4))));
  CHECK(one_term.coeff(H2, E1) == MultiPoly(Scalar(Rational(1, 2))));

  CHECK(parse_bivector("e1^e1", g).is_zero());
  CHECK(parse_element("i*e4 + 1/2*h1", g).coeff(E4) == MultiPoly(Scalar::i()));

  Functional f = parse_functional("e5* + e4* + e1*", g);
  CHECK(f.coeffs.size() == 3);
  CHECK(f.coeffs.count(E5) == 1);
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_bivector("e4^e3 +", g), ParseError);
  CHECK_THROWS_AS(parse_bivector("e9^e1", g), ParseError);
  CHECK_THROWS_AS(parse_bivector("q*h2^e6", g), ParseError);
  CHECK_THROWS_AS(parse_bivector("(e1^e2", g), ParseError);
  CHECK_THROWS_AS(parse_bivector("e1^e2)", g), ParseError);
  try {
    parse_bivector("e4^e3 + $", g);
    FAIL("expected throw");
  } catch (const ParseError& e) {
    CHECK(e.line == 1);
    CHECK(e.column == 9);
  }
}

TEST_CASE("catalog loads with the declared families") {
  auto entries = load_catalog(CYBE_TEST_CATALOG);
  int rmatrices = 0, functionals = 0;
  for (const auto& e : entries) (e.is_functional ? functionals : rmatrices)++;
  CHECK(rmatrices == 13);
  CHECK(functionals == 10);

  CHECK(catalog_find(entries, "r12").rmatrix.carrier().size() == 12);
  CHECK(catalog_find(entries, "r10_3e").rmatrix.carrier().size() == 10);
  CHECK(catalog_find(entries, "r8_2").rmatrix.carrier().size() == 8);
  CHECK_THROWS(catalog_find(entries, "r99"));
}

TEST_CASE("round-trip stability on every entry") {
  auto entries = load_catalog(CYBE_TEST_CATALOG);
  for (const auto& e : entries) {
    if (e.is_functional) {
      Functional f = parse_functional(e.functional.str(), g);
      CHECK(f.coeffs == e.functional.coeffs);
    } else {
      std::string emitted = e.rmatrix.str();
      BiVector again = parse_bivector(emitted, g);
      CHECK(again == e.rmatrix);
      CHECK(again.str() == emitted);
    }
  }
}

TEST_CASE("d=8 carrier sits inside the Weyl subalgebra span") {
  auto entries = load_catalog(CYBE_TEST_CATALOG);
  // Weyl-subalgebra span over the Cartan-Weyl basis: all Cartans, the
  // Lorentz roots e1,e3,em1,em3 and the translation roots e2,e4,e5,e6.
  std::set<int> weyl = {H1, H2, H3, E1, E3, EM1, EM3, E2, E4, E5, E6};
  for (const char* name : {"r8_1", "r8_2"}) {
    for (int b : catalog_find(entries, name).rmatrix.carrier()) CHECK(weyl.count(b) == 1);
  }
}

TEST_CASE("comparison up to a scalar") {
  auto entries = load_catalog(CYBE_TEST_CATALOG);
  const BiVector& r = catalog_find(entries, "r10_1a").rmatrix;

  CompareResult self = compare_up_to_scalar(r, r);
  CHECK(self.match);
  CHECK(self.scalar == "1");
  CHECK(self.param_map.empty());

  CompareResult twice = compare_up_to_scalar(r * MultiPoly(2), r);
  CHECK(twice.match);
  CHECK(twice.scalar == "2");

  // Symmetric and transitive on a scaled triple.
  BiVector r2 = r * MultiPoly(Scalar(Rational(-1, 3)));
  BiVector r3 = r * MultiPoly(Scalar(Rational(5, 7)));
  CHECK(compare_up_to_scalar(r, r2).match);
  CHECK(compare_up_to_scalar(r2, r3).match);
  CHECK(compare_up_to_scalar(r, r3).match);

  CHECK(!compare_up_to_scalar(r, catalog_find(entries, "r10_1b").rmatrix).match);

  // Parameter maps: r8_1(a -> -a) needs the substitution search.
  const BiVector& r81 = catalog_find(entries, "r8_1").rmatrix;
  BiVector negated = r81.substituted(Param::a, -MultiPoly::var(Param::a));
  CompareResult sub = compare_up_to_scalar(negated, r81);
  CHECK(sub.match);
  CHECK(sub.param_map == "a -> -a");

  CHECK(compare_up_to_scalar(BiVector(&g), BiVector(&g)).match);
  CHECK(!compare_up_to_scalar(r, BiVector(&g)).match);
}

TEST_CASE("minimal repair search") {
  auto entries = load_catalog(CYBE_TEST_CATALOG);
  const BiVector& good = catalog_find(entries, "r10_1a").rmatrix;
  REQUIRE(schouten_self(good).is_zero());

  // Break one sign and let the search find its way back.
  BiVector broken(&g);
  for (const auto& [k, c] : good.coeffs()) {
    bool flip = (k.first == E2 && k.second == E3);
    broken.add_term(k.first, k.second, flip ? -c : c);
  }
  REQUIRE(!schouten_self(broken).is_zero());
  auto repairs = minimal_repairs(broken);
  REQUIRE(!repairs.empty());
  bool restores = false;
  for (const auto& rep : repairs)
    if (rep.repaired == good) restores = true;
  CHECK(restores);
}
