#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "cybe/multipoly.hpp"

namespace cybe {

// Basis indices of sl(4,C) in the fixed order h1,h2,h3, e1..e6, em1..em6.
// This order is load-bearing: it fixes the canonical form of wedge powers.
namespace basis {
inline constexpr int H1 = 0, H2 = 1, H3 = 2;
inline constexpr int E1 = 3, E2 = 4, E3 = 5, E4 = 6, E5 = 7, E6 = 8;
inline constexpr int EM1 = 9, EM2 = 10, EM3 = 11, EM4 = 12, EM5 = 13, EM6 = 14;
}  // namespace basis

class LieAlgebra;

// Sparse vector over the algebra basis with MultiPoly coefficients.
class Element {
 public:
  Element() = default;
  explicit Element(const LieAlgebra* alg) : algebra_(alg) {}
  Element(const LieAlgebra* alg, int basis_index, MultiPoly coeff = MultiPoly(1));

  const LieAlgebra* algebra() const { return algebra_; }
  const std::map<int, MultiPoly>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  MultiPoly coeff(int basis_index) const;
  void set_coeff(int basis_index, MultiPoly c);

  friend Element operator+(const Element& x, const Element& y);
  friend Element operator-(const Element& x, const Element& y);
  friend Element operator-(const Element& x);
  Element operator*(const MultiPoly& c) const;
  Element& operator+=(const Element& y);
  Element& operator-=(const Element& y);

  friend bool operator==(const Element& x, const Element& y) {
    return x.coeffs_ == y.coeffs_;
  }

  std::string str() const;

 private:
  const LieAlgebra* algebra_ = nullptr;
  std::map<int, MultiPoly> coeffs_;
  friend class LieAlgebra;
};

// Structure-constant model of a finite-dimensional Lie algebra over Q(i).
// Construction verifies antisymmetry and the Jacobi identity on every
// basis triple; a violation is a programming error and throws.
class LieAlgebra {
 public:
  int dim() const { return dim_; }
  const std::string& label(int i) const { return labels_[i]; }
  int index_of(const std::string& label) const;  // -1 if absent

  Element basis_element(int i) const { return Element(this, i); }

  // Bracket of basis elements, as stored (constant coefficients).
  const std::vector<std::pair<int, Scalar>>& basis_bracket(int i, int j) const {
    return table_[i][j];
  }

  Element bracket(const Element& x, const Element& y) const;

  // ad(x_i) in the basis: entry (r, c) is the x_r-coefficient of [x_i, x_c].
  std::array<std::array<Scalar, 15>, 15> ad_matrix(int i) const;

  MultiPoly killing_form(const Element& x, const Element& y) const;
  const std::array<std::array<Scalar, 15>, 15>& killing_matrix() const { return killing_; }

  // Cartan combinations h4 = h1+h2, h5 = h2+h3, h6 = h1+h2+h3.
  Element composite_cartan(int k) const;

  // Number of basis triples i<j<k (dimension of the third wedge power).
  long triple_count() const { return static_cast<long>(dim_) * (dim_ - 1) * (dim_ - 2) / 6; }

  static const LieAlgebra& sl4();

 private:
  LieAlgebra() = default;
  void verify_antisymmetry_and_jacobi() const;
  void compute_killing();

  int dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<std::vector<std::vector<std::pair<int, Scalar>>>> table_;
  std::array<std::array<Scalar, 15>, 15> killing_{};
  friend LieAlgebra build_sl4_for_test();
};

// Exact ad-eigenspace decomposition of x with respect to a grader that
// acts diagonally on the basis. Returns (weight, component) pairs sorted
// by weight; throws if the grader action is not diagonal.
std::vector<std::pair<Scalar, Element>> d_weight_decomposition(const Element& x,
                                                               const Element& grader);

// Diagonal weights of the grader on every basis vector, in basis order.
std::array<Scalar, 15> basis_weights(const LieAlgebra& g, const Element& grader);

}  // namespace cybe
