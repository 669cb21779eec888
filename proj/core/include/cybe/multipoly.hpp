#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cybe/params.hpp"
#include "cybe/scalar.hpp"

namespace cybe {

// Sparse multivariate polynomial over Q(i) in the registry parameters,
// Laurent in the a1..a6 block. Canonical form: no zero coefficients are
// stored, terms ordered by Monomial (lex in registry order).
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Scalar>;

  MultiPoly() = default;
  MultiPoly(Scalar c);  // NOLINT: constant polynomial, implicit by design
  MultiPoly(long n) : MultiPoly(Scalar(n)) {}
  static MultiPoly var(Param p, int exponent = 1);
  static MultiPoly from_term(const Monomial& m, Scalar c);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // The constant term; equals the whole value iff is_constant().
  Scalar constant_term() const;
  // Throws unless the polynomial is a single term. Returns (monomial, coeff).
  std::pair<Monomial, Scalar> single_term() const;
  bool is_single_term() const { return terms_.size() == 1; }

  const TermMap& terms() const { return terms_; }

  friend MultiPoly operator+(const MultiPoly& p, const MultiPoly& q);
  friend MultiPoly operator-(const MultiPoly& p, const MultiPoly& q);
  friend MultiPoly operator-(const MultiPoly& p);
  friend MultiPoly operator*(const MultiPoly& p, const MultiPoly& q);
  MultiPoly& operator+=(const MultiPoly& q);
  MultiPoly& operator-=(const MultiPoly& q);
  MultiPoly& operator*=(const MultiPoly& q);
  MultiPoly operator*(const Scalar& c) const;

  friend bool operator==(const MultiPoly& p, const MultiPoly& q) = default;
  friend bool operator<(const MultiPoly& p, const MultiPoly& q) {
    return p.terms_ < q.terms_;
  }

  // Replaces `p` by `value` and renormalizes. A negative exponent of `p`
  // requires `value` to be an invertible single term.
  MultiPoly substitute(Param p, const MultiPoly& value) const;

  // Exact evaluation; `point` must assign a Scalar to every parameter
  // that occurs (nonzero for Laurent exponents).
  Scalar eval(const std::array<Scalar, kParamCount>& point) const;

  // Complex conjugation of coefficients combined with a formal action on
  // parameters: each parameter p maps to unit * target^exponent_sign.
  struct ConjRule {
    Param target;
    int exponent_sign = 1;  // +1 or -1
    Scalar unit{1};
  };
  using ConjMap = std::array<ConjRule, kParamCount>;
  static ConjMap conj_identity();
  MultiPoly conjugated(const ConjMap& map) const;

  int degree_in(Param p) const;  // max exponent, 0 for absent; min() if zero poly
  MultiPoly part_of_degree(Param p, int degree) const;
  std::set<Param> support() const;

  // Exact division; nullopt if q does not divide p in the Laurent ring.
  static std::optional<MultiPoly> try_divide(const MultiPoly& p, const MultiPoly& q);

  std::string str() const;

 private:
  void insert_term(const Monomial& m, const Scalar& c);
  static void check_monomial(const Monomial& m);
  TermMap terms_;
};

inline MultiPoly operator*(const Scalar& c, const MultiPoly& p) { return p * c; }

}  // namespace cybe
