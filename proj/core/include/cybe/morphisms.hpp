#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cybe/wedge.hpp"

namespace cybe {

// Linear or antilinear map of the algebra, stored as the 15x15 matrix of
// basis images (column j = image of basis vector j). The declared kind
// is verified on every basis pair at construction time.
class AlgebraMap {
 public:
  enum class Kind { Automorphism, AntiAutomorphism };

  // An empty map; usable only as an assignment target.
  AlgebraMap() = default;

  static AlgebraMap identity(const LieAlgebra& g);

  // Builds from images of the Chevalley generators h1..h3, e1..e3,
  // em1..em3; images of the composite root vectors follow from the
  // bracket chains e4=[e1,e2], e5=[e2,e3], e6=[e1,e5] (mirrored below)
  // and the declared kind. Throws if the extension is inconsistent.
  static AlgebraMap from_chevalley_images(const LieAlgebra& g, const std::string& name,
                                          Kind kind, bool antilinear,
                                          const std::array<Element, 3>& h_images,
                                          const std::array<Element, 3>& e_images,
                                          const std::array<Element, 3>& em_images);

  const LieAlgebra& algebra() const { return *algebra_; }
  const std::string& name() const { return name_; }
  Kind kind() const { return kind_; }
  bool antilinear() const { return antilinear_; }
  const MultiPoly& entry(int row, int col) const { return matrix_[row][col]; }

  // For antilinear maps the rule says how formal parameters conjugate;
  // numeric coefficients always pick up complex conjugation.
  Element apply(const Element& x,
                const MultiPoly::ConjMap& rule = MultiPoly::conj_identity()) const;
  Element image_of_basis(int j) const;

  bool is_involutive() const;

  // Composition f.compose_after(g) = f o g; both maps must be linear.
  AlgebraMap compose_after(const AlgebraMap& g, const std::string& name) const;

 private:
  void verify_kind() const;
  void verify_invertible() const;

  const LieAlgebra* algebra_ = nullptr;
  std::string name_;
  Kind kind_ = Kind::Automorphism;
  bool antilinear_ = false;
  std::array<std::array<MultiPoly, 15>, 15> matrix_{};
  friend AlgebraMap theta(const AlgebraMap&);
};

// The antilinear anti-automorphism with h_j* = -h_{4-j}, e_{+-j}* = e_{+-(4-j)}.
AlgebraMap build_star_case_i(const LieAlgebra& g);

// The antilinear anti-automorphisms with h_j* = h_j, e_{+-j}* = eps_j e_{-+j};
// eps must be one of (1,-1,1), (-1,1,-1), (-1,-1,-1).
AlgebraMap build_star_case_ii(const LieAlgebra& g, const std::array<int, 3>& eps);

// Weyl reflection for the i-th simple root (i = 1,2,3) with scale
// parameters; defaults to the symbolic a1,a2,a3 with a4=a1*a2,
// a5=a2*a3, a6=a1*a2*a3. Free signs on the composite-root images are
// fixed by an exhaustive completion search validated by the
// automorphism check.
AlgebraMap build_weyl_reflection(const LieAlgebra& g, int i);
AlgebraMap build_weyl_reflection(const LieAlgebra& g, int i,
                                 const std::array<MultiPoly, 3>& simple_params);

// Dynkin-diagram flip e1 <-> e3. The published sign table admits no
// automorphism completion verbatim; the builder picks the valid sign
// assignment closest to it and records the deviation.
struct BetaResult {
  AlgebraMap map;
  std::vector<std::string> sign_notes;  // images that differ from the published table
};
BetaResult build_beta(const LieAlgebra& g);

// theta = -star: an antilinear involutive automorphism whose fixed set
// is the real form selected by the star.
AlgebraMap theta(const AlgebraMap& star);

// Does phi commute with the star on every basis vector, possibly under
// a parameter-conjugation constraint? The search space covers rules
// a_i -> s_i * a_{pi(i)}^k with pi in {id, 1<->3}, k in {+1,-1} and
// s_i in {+1,-1}; the first passing rule in deterministic order wins.
struct CommuteResult {
  bool commutes = false;
  std::string constraint;               // e.g. "a1* = a3, a2* = a2, a3* = a1"
  std::vector<std::string> witnesses;   // failing basis vectors under the identity rule
};
CommuteResult commute_check(const AlgebraMap& phi, const AlgebraMap& star);

// Applies phi to both legs of r (coefficients conjugated via `rule`
// when phi is antilinear).
BiVector tensor_square_apply(const AlgebraMap& phi, const BiVector& r,
                             const MultiPoly::ConjMap& rule = MultiPoly::conj_identity());

enum class RealityVerdict { Real, AntiReal, Neither };

struct RealityResult {
  RealityVerdict verdict = RealityVerdict::Neither;
  std::string constraint;  // parameter reality constraint used, "" if none
};

// Tests (theta x theta) r = +- r as an exact identity, searching sign
// assignments p* = +-p for the free parameters of r.
RealityResult reality_check(const BiVector& r, const AlgebraMap& star);

std::string reality_verdict_name(RealityVerdict v);

// Star-relation table for a set of named generators: for each X reports
// X* as an eigen-relation when X* = c X, plus the theta eigenvalue when
// X is a +-1 eigenvector of theta.
struct EigenEntry {
  std::string name;
  std::string star_image;          // X* expanded over the given generators
  std::optional<Scalar> star_eigen;
  std::optional<int> theta_eigen;  // +1 / -1 when applicable
};
struct EigenReport {
  std::vector<EigenEntry> entries;
  bool all_theta_eigen = false;
  bool uniform = false;
  int uniform_value = 0;
};
EigenReport real_form_eigencheck(const std::vector<std::pair<std::string, Element>>& gens,
                                 const AlgebraMap& star);

}  // namespace cybe
