#pragma once

#include <string>
#include <vector>

#include "cybe/wedge.hpp"

namespace cybe {

// Bracket-closed span of basis vectors, kept as an ordered index list.
struct Subalgebra {
  const LieAlgebra* algebra = nullptr;
  std::vector<int> members;  // ascending basis indices
  bool closed = false;
  bool even_dimensional() const { return members.size() % 2 == 0; }
  int dim() const { return static_cast<int>(members.size()); }
  std::string str() const;
};

// B+ = (h1,h2,h3, e1..e6).
Subalgebra borel_plus(const LieAlgebra& g);

// Bracket closure of B+ together with the given extra basis vectors.
Subalgebra parabolic(const LieAlgebra& g, const std::vector<int>& extra);

// Dual vector with coefficients over the basis (support must lie inside
// the subalgebra it is paired against).
struct Functional {
  const LieAlgebra* algebra = nullptr;
  std::map<int, MultiPoly> coeffs;  // basis index -> coefficient of its dual

  MultiPoly pair(const Element& x) const;  // <g*, x>
  std::string str() const;
};

// Skew bilinear form on a subalgebra, B[i][j] = <g*, [x_i, x_j]>.
struct SkewForm {
  Subalgebra domain;
  std::vector<std::vector<MultiPoly>> matrix;
};

// Builds B from the functional and verifies skewness plus the cocycle
// identity B([x,y],z) + B([y,z],x) + B([z,x],y) = 0 on all member
// triples (automatic for coboundaries; checked as a sanity assertion).
SkewForm form_from_functional(const Functional& f, const Subalgebra& p);

// Exact Pfaffian by the perfect-matching expansion (division-free).
// Throws on odd dimension.
MultiPoly pfaffian(const SkewForm& b);
MultiPoly pfaffian(const std::vector<std::vector<MultiPoly>>& m);

// Inverts the form over the fraction field and assembles
// r = sum_{i<j} (B^{-1})_{ij} x_i ^ x_j. The result is verified in-
// function: B * B^{-1} = 1 exactly and <<r,r>> = 0 (a failure of either
// is a bug, not an input error). Throws if B is singular, naming the
// functional.
BiVector rmatrix_from_functional(const Functional& f, const Subalgebra& p,
                                 const std::string& name = "");

// Fully generic functional with fresh c-parameters on every member; the
// Pfaffian of its form is the existence certificate: identically zero
// iff no functional on p is nonsingular.
struct NonexistenceResult {
  bool exists = false;
  MultiPoly certificate;  // the generic Pfaffian polynomial
};
NonexistenceResult generic_nonexistence(const Subalgebra& p);

// Enumerates 0/1 functionals over the pool of dual indices (pool size
// <= 12) and keeps those with nonvanishing Pfaffian.
std::vector<Functional> functional_search(const Subalgebra& p, const std::vector<int>& pool);

}  // namespace cybe
