#include <doctest.h>

#include <random>

#include "cybe/multipoly.hpp"

using namespace cybe;

namespace {

std::mt19937_64 rng(20240901);

Scalar random_scalar() {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 5);
  return Scalar{Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
}

MultiPoly random_poly(int max_terms = 4) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> pick(0, 3), expo(0, 2);
  const Param vars[4] = {Param::lambda, Param::a, Param::a1, Param::eps2};
  MultiPoly p;
  int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    MultiPoly term(random_scalar());
    term *= MultiPoly::var(vars[pick(rng)], expo(rng));
    if (pick(rng) == 0) term *= MultiPoly::var(vars[pick(rng)], expo(rng));
    p += term;
  }
  return p;
}

std::array<Scalar, kParamCount> random_point() {
  std::array<Scalar, kParamCount> pt;
  std::uniform_int_distribution<int> num(1, 9), den(1, 4), sign(0, 1);
  for (int k = 0; k < kParamCount; ++k) {
    // Nonzero everywhere so Laurent exponents stay evaluable.
    pt[k] = Scalar{Rational((sign(rng) ? 1 : -1) * num(rng), den(rng)), Rational(0)};
  }
  return pt;
}

}  // namespace

TEST_CASE("gaussian rational field operations") {
  Scalar one_plus_i{Rational(1), Rational(1)};
  Scalar one_minus_i{Rational(1), Rational(-1)};
  CHECK(one_plus_i * one_minus_i == Scalar(2));

  Scalar half_i{Rational(0), Rational(1, 2)};
  CHECK(half_i.conj() == Scalar{Rational(0), Rational(-1, 2)});

  CHECK(Scalar(1) / Scalar::i() == -Scalar::i());
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), std::domain_error);
}

TEST_CASE("conjugation is an involution") {
  for (int t = 0; t < 50; ++t) {
    Scalar x = random_scalar();
    CHECK(x.conj().conj() == x);
  }
}

TEST_CASE("scalar text round trip") {
  const char* samples[] = {"0", "2", "-1/2", "i", "-i", "3*i", "1/2+1/2*i", "-2/3-i", "7/5-3/4*i"};
  for (const char* s : samples) {
    Scalar v = scalar_from_string(s);
    CHECK(scalar_from_string(v.str()) == v);
  }
  CHECK(scalar_from_string("1/2 + 1/2*i") == scalar_from_string("1/2+1/2i"));
  CHECK_THROWS(scalar_from_string("1//2"));
  CHECK_THROWS(scalar_from_string("1/0"));
}

TEST_CASE("difference of squares") {
  MultiPoly lam = MultiPoly::var(Param::lambda);
  CHECK((lam + MultiPoly(1)) * (lam - MultiPoly(1)) == lam * lam - MultiPoly(1));
}

TEST_CASE("substitution annihilates and renormalizes") {
  MultiPoly p = MultiPoly::var(Param::a) * MultiPoly::var(Param::lambda);
  CHECK(p.substitute(Param::a, MultiPoly()).is_zero());
  MultiPoly q = p.substitute(Param::a, MultiPoly(2));
  CHECK(q == MultiPoly::var(Param::lambda) * MultiPoly(2));
}

TEST_CASE("additive cancellation on random polynomials") {
  for (int t = 0; t < 40; ++t) {
    MultiPoly p = random_poly(), q = random_poly();
    CHECK((p + q) - q == p);
  }
}

TEST_CASE("ring axioms on random triples") {
  for (int t = 0; t < 25; ++t) {
    MultiPoly p = random_poly(), q = random_poly(), r = random_poly();
    CHECK(p * q == q * p);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK((p + q) + r == p + (q + r));
  }
}

TEST_CASE("zero test matches evaluation at 20 random points") {
  for (int t = 0; t < 20; ++t) {
    MultiPoly p = random_poly(), q = random_poly();
    MultiPoly z = (p + q) - q - p;  // structurally zero
    REQUIRE(z.is_zero());
    bool all_zero = true, p_all_zero = true;
    for (int k = 0; k < 20; ++k) {
      auto pt = random_point();
      if (!z.eval(pt).is_zero()) all_zero = false;
      if (!p.eval(pt).is_zero()) p_all_zero = false;
    }
    CHECK(all_zero);
    CHECK(p.is_zero() == p_all_zero);
  }
}

TEST_CASE("laurent exponents are confined to the reflection block") {
  MultiPoly inv = MultiPoly::var(Param::a1, -1);
  CHECK(inv * MultiPoly::var(Param::a1) == MultiPoly(1));
  CHECK_THROWS(MultiPoly::var(Param::lambda, -1));

  // Substituting a monomial into a negative power works; a sum does not.
  MultiPoly ok = inv.substitute(Param::a1, MultiPoly::var(Param::a2) * MultiPoly(3));
  CHECK(ok == MultiPoly::var(Param::a2, -1) * MultiPoly(Scalar(Rational(1, 3))));
  CHECK_THROWS(inv.substitute(Param::a1, MultiPoly::var(Param::a2) + MultiPoly(1)));
}

TEST_CASE("exact division") {
  MultiPoly lam = MultiPoly::var(Param::lambda), a = MultiPoly::var(Param::a);
  MultiPoly prod = (lam + a) * (lam - a);
  auto q = MultiPoly::try_divide(prod, lam + a);
  REQUIRE(q.has_value());
  CHECK(*q == lam - a);
  CHECK(!MultiPoly::try_divide(prod + MultiPoly(1), lam + a).has_value());
}

TEST_CASE("conjugation with parameter rules") {
  MultiPoly p = MultiPoly::var(Param::a1) * MultiPoly(Scalar::i());
  auto rule = MultiPoly::conj_identity();
  rule[static_cast<int>(Param::a1)] = {Param::a3, 1, Scalar(1)};
  CHECK(p.conjugated(rule) == MultiPoly::var(Param::a3) * MultiPoly(-Scalar::i()));

  // Inverse-power rule, as in the unit-circle reality constraints.
  rule[static_cast<int>(Param::a1)] = {Param::a1, -1, Scalar(-1)};
  MultiPoly q = MultiPoly::var(Param::a1, 2);
  CHECK(q.conjugated(rule) == MultiPoly::var(Param::a1, -2));
}

TEST_CASE("canonical ordering is deterministic") {
  MultiPoly p = MultiPoly::var(Param::eps1) + MultiPoly::var(Param::a) * MultiPoly(2);
  MultiPoly q = MultiPoly::var(Param::a) * MultiPoly(2) + MultiPoly::var(Param::eps1);
  CHECK(p == q);
  CHECK(p.str() == q.str());
}
