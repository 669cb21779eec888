#pragma once

#include <map>
#include <set>
#include <string>
#include <tuple>

#include "cybe/lie_algebra.hpp"

namespace cybe {

// Canonically ordered sparse element of the second wedge power. Keys are
// pairs i<j; antisymmetry is absorbed into the sign of the coefficient.
class BiVector {
 public:
  BiVector() = default;
  explicit BiVector(const LieAlgebra* alg) : algebra_(alg) {}

  const LieAlgebra* algebra() const { return algebra_; }
  const std::map<std::pair<int, int>, MultiPoly>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  void add_term(int i, int j, const MultiPoly& c);
  MultiPoly coeff(int i, int j) const;

  friend BiVector operator+(const BiVector& x, const BiVector& y);
  friend BiVector operator-(const BiVector& x, const BiVector& y);
  friend BiVector operator-(const BiVector& x);
  BiVector operator*(const MultiPoly& c) const;
  BiVector& operator+=(const BiVector& y);

  friend bool operator==(const BiVector& x, const BiVector& y) {
    return x.coeffs_ == y.coeffs_;
  }

  // Basis elements incident to a nonzero coefficient. Its size is the
  // "dimension" labelling the d=8 / d=10 / d=12 families.
  std::set<int> carrier() const;

  MultiPoly substitute(Param p, const MultiPoly& value) const;
  std::set<Param> support() const;
  BiVector substituted(Param p, const MultiPoly& value) const;

  std::string str() const;

 private:
  const LieAlgebra* algebra_ = nullptr;
  std::map<std::pair<int, int>, MultiPoly> coeffs_;
};

// Same layout one degree up: keys i<j<k.
class TriVector {
 public:
  TriVector() = default;
  explicit TriVector(const LieAlgebra* alg) : algebra_(alg) {}

  const LieAlgebra* algebra() const { return algebra_; }
  const std::map<std::tuple<int, int, int>, MultiPoly>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  void add_term(int i, int j, int k, const MultiPoly& c);
  MultiPoly coeff(int i, int j, int k) const;

  friend TriVector operator+(const TriVector& x, const TriVector& y);
  friend TriVector operator-(const TriVector& x, const TriVector& y);
  TriVector operator*(const MultiPoly& c) const;
  TriVector& operator+=(const TriVector& y);

  friend bool operator==(const TriVector& x, const TriVector& y) {
    return x.coeffs_ == y.coeffs_;
  }

  std::set<int> carrier() const;
  TriVector part_of_degree(Param p, int degree) const;
  int degree_in(Param p) const;

  std::string str() const;

 private:
  const LieAlgebra* algebra_ = nullptr;
  std::map<std::tuple<int, int, int>, MultiPoly> coeffs_;
};

BiVector wedge(const Element& x, const Element& y);
TriVector wedge(const Element& x, const BiVector& b);

// Leibniz extension of ad_x to the third wedge power.
TriVector adjoint_action_triv(const Element& x, const TriVector& t);

// ad_x on the second wedge power (used by the tensor-square transport).
BiVector adjoint_action_biv(const Element& x, const BiVector& b);

}  // namespace cybe
