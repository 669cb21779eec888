#include <doctest.h>

#include <random>

#include "cybe/catalog.hpp"
#include "cybe/schouten.hpp"

using namespace cybe;
using namespace cybe::basis;

namespace {
const LieAlgebra& g = LieAlgebra::sl4();
std::mt19937_64 rng(515151);

Functional from_indices(std::initializer_list<int> idx) {
  Functional f;
  f.algebra = &g;
  for (int i : idx) f.coeffs[i] = MultiPoly(1);
  return f;
}
}  // namespace

TEST_CASE("borel and parabolic closures") {
  CHECK(borel_plus(g).dim() == 9);
  CHECK(!borel_plus(g).even_dimensional());

  Subalgebra p1 = parabolic(g, {EM1});
  CHECK(p1.dim() == 10);
  CHECK(p1.closed);

  // (B+, em2, em3) closes on em5 = [em2, em3] up to sign.
  Subalgebra p23 = parabolic(g, {EM2, EM3});
  CHECK(p23.dim() == 12);
  CHECK(std::find(p23.members.begin(), p23.members.end(), EM5) != p23.members.end());
}

TEST_CASE("form from a functional") {
  Subalgebra p1 = parabolic(g, {EM1});
  Functional g1a = from_indices({E5, E4, E1});
  SkewForm form = form_from_functional(g1a, p1);

  auto pos = [&](int b) {
    return std::distance(p1.members.begin(),
                         std::find(p1.members.begin(), p1.members.end(), b));
  };
  // B(e1, h1) = <g*, [e1,h1]> = <g*, -2 e1> = -2.
  CHECK(form.matrix[pos(E1)][pos(H1)] == MultiPoly(-2));
  for (int i = 0; i < p1.dim(); ++i) CHECK(form.matrix[i][i].is_zero());
  for (int i = 0; i < p1.dim(); ++i)
    for (int j = 0; j < p1.dim(); ++j)
      CHECK(form.matrix[i][j] == -form.matrix[j][i]);
}

TEST_CASE("pfaffian basics") {
  std::vector<std::vector<MultiPoly>> two = {{MultiPoly(), MultiPoly(1)},
                                             {MultiPoly(-1), MultiPoly()}};
  CHECK(pfaffian(two) == MultiPoly(1));

  std::vector<std::vector<MultiPoly>> odd(3, std::vector<MultiPoly>(3));
  CHECK_THROWS_AS(pfaffian(odd), std::invalid_argument);

  Functional g1a = from_indices({E5, E4, E1});
  CHECK(!pfaffian(form_from_functional(g1a, parabolic(g, {EM1}))).is_zero());
}

namespace {
// Exact determinant by fraction-free-ish Gaussian elimination over Q(i).
Scalar determinant(std::vector<std::vector<Scalar>> m) {
  int n = static_cast<int>(m.size());
  Scalar det(1);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int row = col; row < n; ++row)
      if (!m[row][col].is_zero()) {
        pivot = row;
        break;
      }
    if (pivot < 0) return Scalar(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    Scalar inv = Scalar(1) / m[col][col];
    for (int row = col + 1; row < n; ++row) {
      if (m[row][col].is_zero()) continue;
      Scalar f = m[row][col] * inv;
      for (int j = col; j < n; ++j) m[row][j] -= f * m[col][j];
    }
  }
  return det;
}
}  // namespace

TEST_CASE("pfaffian squared equals the determinant at random points") {
  Subalgebra p1 = parabolic(g, {EM1});
  Functional generic;
  generic.algebra = &g;
  std::uniform_int_distribution<int> num(-4, 4);
  for (int trial = 0; trial < 5; ++trial) {
    for (int t = 0; t < p1.dim(); ++t)
      generic.coeffs[p1.members[t]] = MultiPoly(Scalar(num(rng)));
    SkewForm form = form_from_functional(generic, p1);
    std::vector<std::vector<Scalar>> m(p1.dim(), std::vector<Scalar>(p1.dim()));
    for (int i = 0; i < p1.dim(); ++i)
      for (int j = 0; j < p1.dim(); ++j) m[i][j] = form.matrix[i][j].constant_term();
    Scalar pf = pfaffian(form).constant_term();
    CHECK(pf * pf == determinant(m));
  }
}

TEST_CASE("pfaffian under congruence row/column operations") {
  // Swapping two rows and columns flips the sign; scaling row+column by c
  // scales the Pfaffian by c.
  Subalgebra p1 = parabolic(g, {EM1});
  SkewForm form = form_from_functional(from_indices({E5, E4, E1}), p1);
  MultiPoly pf = pfaffian(form);

  auto swapped = form.matrix;
  std::swap(swapped[2], swapped[5]);
  for (auto& row : swapped) std::swap(row[2], row[5]);
  CHECK(pfaffian(swapped) == -pf);

  auto scaled = form.matrix;
  MultiPoly c(7);
  for (int j = 0; j < p1.dim(); ++j) scaled[3][j] *= c;
  for (int i = 0; i < p1.dim(); ++i) scaled[i][3] *= c;
  CHECK(pfaffian(scaled) == pf * c);
}

TEST_CASE("r-matrix reconstruction matches the catalog") {
  auto entries = load_catalog(CYBE_TEST_CATALOG);
  Subalgebra p1 = parabolic(g, {EM1});

  BiVector rec = rmatrix_from_functional(catalog_find(entries, "g1a").functional, p1, "g1a");
  CHECK(schouten_self(rec).is_zero());  // also asserted in-function

  CompareResult cmp = compare_up_to_scalar(rec, catalog_find(entries, "r10_1a").rmatrix);
  CHECK(cmp.match);

  Subalgebra p3 = parabolic(g, {EM3});
  BiVector rec3 = rmatrix_from_functional(catalog_find(entries, "g3d").functional, p3, "g3d");
  CHECK(compare_up_to_scalar(rec3, catalog_find(entries, "r10_3d").rmatrix).match);
}

TEST_CASE("singular functionals are rejected by name") {
  Subalgebra p2 = parabolic(g, {EM2});
  Functional f = from_indices({E1});
  CHECK_THROWS_WITH_AS(rmatrix_from_functional(f, p2, "probe"),
                       doctest::Contains("probe"), std::domain_error);
}

TEST_CASE("generic pfaffian certificates") {
  auto p2 = generic_nonexistence(parabolic(g, {EM2}));
  CHECK(!p2.exists);
  CHECK(p2.certificate.is_zero());

  auto p1 = generic_nonexistence(parabolic(g, {EM1}));
  CHECK(p1.exists);
  CHECK(!p1.certificate.is_zero());

  auto p3 = generic_nonexistence(parabolic(g, {EM3}));
  CHECK(p3.exists);

  CHECK_THROWS_AS(generic_nonexistence(borel_plus(g)), std::invalid_argument);
}

TEST_CASE("functional search") {
  Subalgebra p1 = parabolic(g, {EM1});
  // Pool: duals of the root vectors of P(1).
  std::vector<int> pool = {E1, E2, E3, E4, E5, E6, EM1};
  auto found = functional_search(p1, pool);
  CHECK(!found.empty());

  auto contains = [&](std::initializer_list<int> idx) {
    Functional want = from_indices(idx);
    for (const auto& f : found)
      if (f.coeffs == want.coeffs) return true;
    return false;
  };
  CHECK(contains({E5, E4, E1}));        // g1a
  CHECK(contains({E5, E4, E3}));        // g1b
  CHECK(contains({E6, E2, E3}));        // g1c
  CHECK(contains({E6, E2, EM1}));       // g1d
  CHECK(contains({E6, E2, E1, E3}));    // g1e

  CHECK(functional_search(p1, {}).empty());

  // P(2): the certificate says no 0/1 functional can be nonsingular.
  Subalgebra p2 = parabolic(g, {EM2});
  CHECK(functional_search(p2, {E1, E2, E3, E4, E5, E6, EM2}).empty());
}
