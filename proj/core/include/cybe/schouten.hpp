#pragma once

#include <map>

#include "cybe/wedge.hpp"

namespace cybe {

// Schouten square <<r,r>> computed by expanding r twice into the tensor
// cube and summing the three commutator contractions
//   [r12,r13] + [r12,r23] + [r13,r23].
// The raw tensor sum is verified to be totally antisymmetric before it
// is projected onto canonical trivector form; a failure there would be
// an internal error and throws.
TriVector schouten_self(const BiVector& r);

// Polarization: <<r,s>> = ( <<r+s,r+s>> - <<r,r>> - <<s,s>> ) / 2.
// Symmetric and bilinear in both slots.
TriVector schouten_mixed(const BiVector& r, const BiVector& s);

struct CybeResult {
  bool is_solution = false;
  TriVector residual;
  // For each parameter occurring in r, the residual split by total
  // degree (degree -> is that part zero). All-true iff is_solution.
  std::map<Param, std::map<int, bool>> per_degree;
};

CybeResult cybe_residual(const BiVector& r);

// Ad-invariant canonical trivector: structure constants with all three
// indices raised by the inverse Killing form. Throws if the Killing
// form is degenerate.
TriVector canonical_trivector(const LieAlgebra& g);

}  // namespace cybe
