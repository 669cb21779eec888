#include "cybe/wedge.hpp"

#include <stdexcept>

namespace cybe {

namespace {
// Sorts (i,j) and returns the permutation sign; 0 for a repeated index.
int order2(int& i, int& j) {
  if (i == j) return 0;
  if (i > j) {
    std::swap(i, j);
    return -1;
  }
  return 1;
}

int order3(int& i, int& j, int& k) {
  int sign = 1;
  if (i == j || j == k || i == k) return 0;
  if (i > j) { std::swap(i, j); sign = -sign; }
  if (j > k) { std::swap(j, k); sign = -sign; }
  if (i > j) { std::swap(i, j); sign = -sign; }
  return sign;
}
}  // namespace

void BiVector::add_term(int i, int j, const MultiPoly& c) {
  if (c.is_zero()) return;
  int sign = order2(i, j);
  if (sign == 0) return;
  auto key = std::make_pair(i, j);
  MultiPoly add = sign > 0 ? c : -c;
  auto [it, fresh] = coeffs_.emplace(key, add);
  if (!fresh) {
    it->second += add;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

MultiPoly BiVector::coeff(int i, int j) const {
  int sign = order2(i, j);
  if (sign == 0) return MultiPoly();
  auto it = coeffs_.find({i, j});
  if (it == coeffs_.end()) return MultiPoly();
  return sign > 0 ? it->second : -it->second;
}

BiVector operator+(const BiVector& x, const BiVector& y) {
  BiVector out = x;
  out += y;
  return out;
}

BiVector& BiVector::operator+=(const BiVector& y) {
  if (!algebra_) algebra_ = y.algebra_;
  for (const auto& [k, c] : y.coeffs_) add_term(k.first, k.second, c);
  return *this;
}

BiVector operator-(const BiVector& x) {
  BiVector out(x.algebra());
  for (const auto& [k, c] : x.coeffs_) out.coeffs_.emplace(k, -c);
  return out;
}

BiVector operator-(const BiVector& x, const BiVector& y) { return x + (-y); }

BiVector BiVector::operator*(const MultiPoly& c) const {
  BiVector out(algebra_);
  if (c.is_zero()) return out;
  for (const auto& [k, v] : coeffs_) {
    MultiPoly prod = v * c;
    if (!prod.is_zero()) out.coeffs_.emplace(k, std::move(prod));
  }
  return out;
}

std::set<int> BiVector::carrier() const {
  std::set<int> s;
  for (const auto& [k, c] : coeffs_) {
    s.insert(k.first);
    s.insert(k.second);
  }
  return s;
}

std::set<Param> BiVector::support() const {
  std::set<Param> s;
  for (const auto& [k, c] : coeffs_)
    for (Param p : c.support()) s.insert(p);
  return s;
}

BiVector BiVector::substituted(Param p, const MultiPoly& value) const {
  BiVector out(algebra_);
  for (const auto& [k, c] : coeffs_) out.add_term(k.first, k.second, c.substitute(p, value));
  return out;
}

std::string BiVector::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : coeffs_) {
    std::string pair_name = (algebra_ ? algebra_->label(k.first) : std::to_string(k.first)) + "^" +
                            (algebra_ ? algebra_->label(k.second) : std::to_string(k.second));
    std::string term;
    if (c == MultiPoly(1)) {
      term = pair_name;
    } else if (c == MultiPoly(Scalar(-1))) {
      term = "-" + pair_name;
    } else {
      std::string cs = c.str();
      bool parens = cs.find_first_of("+-", 1) != std::string::npos || cs.find(' ') != std::string::npos;
      term = (parens ? "(" + cs + ")" : cs) + "*" + pair_name;
    }
    if (out.empty())
      out = term;
    else if (term[0] == '-')
      out += " - " + term.substr(1);
    else
      out += " + " + term;
  }
  return out;
}

void TriVector::add_term(int i, int j, int k, const MultiPoly& c) {
  if (c.is_zero()) return;
  int sign = order3(i, j, k);
  if (sign == 0) return;
  MultiPoly add = sign > 0 ? c : -c;
  auto [it, fresh] = coeffs_.emplace(std::make_tuple(i, j, k), add);
  if (!fresh) {
    it->second += add;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

MultiPoly TriVector::coeff(int i, int j, int k) const {
  int sign = order3(i, j, k);
  if (sign == 0) return MultiPoly();
  auto it = coeffs_.find({i, j, k});
  if (it == coeffs_.end()) return MultiPoly();
  return sign > 0 ? it->second : -it->second;
}

TriVector operator+(const TriVector& x, const TriVector& y) {
  TriVector out = x;
  out += y;
  return out;
}

TriVector& TriVector::operator+=(const TriVector& y) {
  if (!algebra_) algebra_ = y.algebra_;
  for (const auto& [k, c] : y.coeffs_)
    add_term(std::get<0>(k), std::get<1>(k), std::get<2>(k), c);
  return *this;
}

TriVector operator-(const TriVector& x, const TriVector& y) {
  TriVector out = x;
  for (const auto& [k, c] : y.coeffs_)
    out.add_term(std::get<0>(k), std::get<1>(k), std::get<2>(k), -c);
  return out;
}

TriVector TriVector::operator*(const MultiPoly& c) const {
  TriVector out(algebra_);
  if (c.is_zero()) return out;
  for (const auto& [k, v] : coeffs_) {
    MultiPoly prod = v * c;
    if (!prod.is_zero()) out.coeffs_.emplace(k, std::move(prod));
  }
  return out;
}

std::set<int> TriVector::carrier() const {
  std::set<int> s;
  for (const auto& [k, c] : coeffs_) {
    s.insert(std::get<0>(k));
    s.insert(std::get<1>(k));
    s.insert(std::get<2>(k));
  }
  return s;
}

int TriVector::degree_in(Param p) const {
  int deg = 0;
  for (const auto& [k, c] : coeffs_) deg = std::max(deg, c.degree_in(p));
  return deg;
}

TriVector TriVector::part_of_degree(Param p, int degree) const {
  TriVector out(algebra_);
  for (const auto& [k, c] : coeffs_) {
    MultiPoly part = c.part_of_degree(p, degree);
    if (!part.is_zero()) out.coeffs_.emplace(k, std::move(part));
  }
  return out;
}

std::string TriVector::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : coeffs_) {
    auto name = [&](int i) { return algebra_ ? algebra_->label(i) : std::to_string(i); };
    std::string triple =
        name(std::get<0>(k)) + "^" + name(std::get<1>(k)) + "^" + name(std::get<2>(k));
    std::string term;
    if (c == MultiPoly(1)) {
      term = triple;
    } else if (c == MultiPoly(Scalar(-1))) {
      term = "-" + triple;
    } else {
      std::string cs = c.str();
      bool parens = cs.find_first_of("+-", 1) != std::string::npos || cs.find(' ') != std::string::npos;
      term = (parens ? "(" + cs + ")" : cs) + "*" + triple;
    }
    if (out.empty())
      out = term;
    else if (term[0] == '-')
      out += " - " + term.substr(1);
    else
      out += " + " + term;
  }
  return out;
}

BiVector wedge(const Element& x, const Element& y) {
  const LieAlgebra* alg = x.algebra() ? x.algebra() : y.algebra();
  if (x.algebra() && y.algebra() && x.algebra() != y.algebra())
    throw std::invalid_argument("wedge: operands belong to different algebras");
  BiVector out(alg);
  for (const auto& [i, ci] : x.coeffs())
    for (const auto& [j, cj] : y.coeffs()) out.add_term(i, j, ci * cj);
  return out;
}

TriVector wedge(const Element& x, const BiVector& b) {
  const LieAlgebra* alg = x.algebra() ? x.algebra() : b.algebra();
  TriVector out(alg);
  for (const auto& [i, ci] : x.coeffs())
    for (const auto& [k, c] : b.coeffs())
      out.add_term(i, k.first, k.second, ci * c);
  return out;
}

BiVector adjoint_action_biv(const Element& x, const BiVector& b) {
  const LieAlgebra& g = *b.algebra();
  BiVector out(&g);
  for (const auto& [k, c] : b.coeffs()) {
    Element u = g.basis_element(k.first), v = g.basis_element(k.second);
    out += wedge(g.bracket(x, u), v) * c;
    out += wedge(u, g.bracket(x, v)) * c;
  }
  return out;
}

TriVector adjoint_action_triv(const Element& x, const TriVector& t) {
  const LieAlgebra& g = *t.algebra();
  TriVector out(&g);
  for (const auto& [k, c] : t.coeffs()) {
    int a = std::get<0>(k), b = std::get<1>(k), d = std::get<2>(k);
    Element xa = g.basis_element(a), xb = g.basis_element(b), xd = g.basis_element(d);
    Element ba = g.bracket(x, xa), bb = g.bracket(x, xb), bd = g.bracket(x, xd);
    for (const auto& [i, ci] : ba.coeffs()) out.add_term(i, b, d, ci * c);
    for (const auto& [i, ci] : bb.coeffs()) out.add_term(a, i, d, ci * c);
    for (const auto& [i, ci] : bd.coeffs()) out.add_term(a, b, i, ci * c);
  }
  return out;
}

}  // namespace cybe
