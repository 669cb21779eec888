#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "cybe/lie_algebra.hpp"

namespace cybe {

// The fifteen physical generators (M+, M-, M3, L+, L-, L3, P0..P3,
// K0..K3, D) expressed over the Cartan-Weyl basis, in a fixed order.
struct ConformalBasis {
  std::vector<std::pair<std::string, Element>> gens;

  const Element& get(std::string_view name) const;
  bool has(std::string_view name) const;
  void set(std::string_view name, Element e);
};

// Verbatim transcription of the published assignment.
ConformalBasis conformal_basis(const LieAlgebra& g);

// Rank of the 15x15 coefficient matrix, by exact Gaussian elimination.
int conformal_rank(const ConformalBasis& basis);

// One entry per violated commutation relation of the o(4,2) structure
// [M_PQ, M_RS] = eta_PS M_QR - eta_PR M_QS + eta_QR M_PS - eta_QS M_PR
// with eta = diag(-1,1,1,1,1,-1). Empty scan means exact match.
struct RelationResidual {
  std::array<int, 4> indices;  // P,Q,R,S with P<Q, R<S
  Element residual;
};
std::vector<RelationResidual> conformal_relation_scan(const ConformalBasis& basis);

// Minimal-repair search over the generators implicated by a nonempty
// scan. Candidate repairs multiply a generator by a unit from {1,-1,i,-i}
// and/or flip the sign of its trailing basis term; subsets are explored
// smallest-first so the returned repair is minimal. The verbatim basis is
// never altered; callers decide what to do with the result.
struct ConformalAdjudication {
  ConformalBasis basis;             // repaired copy (== input when scan empty)
  bool scan_empty = false;          // scan of `basis` is empty
  std::vector<std::string> repairs; // human-readable description per change
};
ConformalAdjudication adjudicate_conformal_basis(const ConformalBasis& verbatim);

// Same span with M+-, L+- replaced by their real combinations M1, M2,
// L1, L2; this is the basis on which reality eigenchecks are stated.
ConformalBasis realified(const ConformalBasis& basis);

// The compact Cartan triple quoted for the second real form:
// M12, M34 = (P3-K3)/2, M50 = (P0+K0)/2.
std::vector<std::pair<std::string, Element>> compact_cartan_trio(const ConformalBasis& basis);

}  // namespace cybe
