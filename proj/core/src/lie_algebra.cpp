#include "cybe/lie_algebra.hpp"

#include <stdexcept>

namespace cybe {

Element::Element(const LieAlgebra* alg, int basis_index, MultiPoly coeff) : algebra_(alg) {
  set_coeff(basis_index, std::move(coeff));
}

MultiPoly Element::coeff(int basis_index) const {
  auto it = coeffs_.find(basis_index);
  return it == coeffs_.end() ? MultiPoly() : it->second;
}

void Element::set_coeff(int basis_index, MultiPoly c) {
  if (c.is_zero())
    coeffs_.erase(basis_index);
  else
    coeffs_[basis_index] = std::move(c);
}

namespace {
const LieAlgebra* common_algebra(const Element& x, const Element& y) {
  const LieAlgebra* a = x.algebra() ? x.algebra() : y.algebra();
  if (x.algebra() && y.algebra() && x.algebra() != y.algebra())
    throw std::invalid_argument("Element: operands belong to different algebras");
  return a;
}
}  // namespace

Element operator+(const Element& x, const Element& y) {
  Element out(common_algebra(x, y));
  out.coeffs_ = x.coeffs_;
  for (const auto& [i, c] : y.coeffs_) {
    auto it = out.coeffs_.find(i);
    if (it == out.coeffs_.end()) {
      out.coeffs_.emplace(i, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) out.coeffs_.erase(it);
    }
  }
  return out;
}

Element operator-(const Element& x) {
  Element out(x.algebra());
  for (const auto& [i, c] : x.coeffs_) out.coeffs_.emplace(i, -c);
  return out;
}

Element operator-(const Element& x, const Element& y) { return x + (-y); }

Element Element::operator*(const MultiPoly& c) const {
  Element out(algebra_);
  if (c.is_zero()) return out;
  for (const auto& [i, v] : coeffs_) {
    MultiPoly prod = v * c;
    if (!prod.is_zero()) out.coeffs_.emplace(i, std::move(prod));
  }
  return out;
}

Element& Element::operator+=(const Element& y) { return *this = *this + y; }
Element& Element::operator-=(const Element& y) { return *this = *this - y; }

std::string Element::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [i, c] : coeffs_) {
    std::string name = algebra_ ? algebra_->label(i) : "x" + std::to_string(i);
    std::string term;
    if (c == MultiPoly(1)) {
      term = name;
    } else if (c == MultiPoly(Scalar(-1))) {
      term = "-" + name;
    } else {
      std::string cs = c.str();
      bool needs_parens = cs.find_first_of("+-", 1) != std::string::npos || cs.find(' ') != std::string::npos;
      term = (needs_parens ? "(" + cs + ")" : cs) + "*" + name;
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

int LieAlgebra::index_of(const std::string& label) const {
  for (int i = 0; i < dim_; ++i)
    if (labels_[i] == label) return i;
  return -1;
}

Element LieAlgebra::bracket(const Element& x, const Element& y) const {
  if ((x.algebra() && x.algebra() != this) || (y.algebra() && y.algebra() != this))
    throw std::invalid_argument("LieAlgebra: bracket of foreign elements");
  Element out(this);
  for (const auto& [i, ci] : x.coeffs())
    for (const auto& [j, cj] : y.coeffs()) {
      if (i == j) continue;
      MultiPoly prod = ci * cj;
      if (prod.is_zero()) continue;
      for (const auto& [k, f] : table_[i][j]) {
        auto it = out.coeffs_.find(k);
        MultiPoly add = prod * f;
        if (it == out.coeffs_.end()) {
          if (!add.is_zero()) out.coeffs_.emplace(k, std::move(add));
        } else {
          it->second += add;
          if (it->second.is_zero()) out.coeffs_.erase(it);
        }
      }
    }
  return out;
}

std::array<std::array<Scalar, 15>, 15> LieAlgebra::ad_matrix(int i) const {
  std::array<std::array<Scalar, 15>, 15> m{};
  for (int c = 0; c < dim_; ++c)
    for (const auto& [r, f] : table_[i][c]) m[r][c] = f;
  return m;
}

MultiPoly LieAlgebra::killing_form(const Element& x, const Element& y) const {
  MultiPoly out;
  for (const auto& [i, ci] : x.coeffs())
    for (const auto& [j, cj] : y.coeffs()) {
      if (killing_[i][j].is_zero()) continue;
      out += ci * cj * MultiPoly(killing_[i][j]);
    }
  return out;
}

Element LieAlgebra::composite_cartan(int k) const {
  using namespace basis;
  Element out(this);
  switch (k) {
    case 4: return basis_element(H1) + basis_element(H2);
    case 5: return basis_element(H2) + basis_element(H3);
    case 6: return basis_element(H1) + basis_element(H2) + basis_element(H3);
    default: throw std::invalid_argument("composite_cartan: k must be 4, 5 or 6");
  }
}

namespace {

// 4x4 matrix over Q with unit entries; enough to realize the basis.
using Mat4 = std::array<std::array<Rational, 4>, 4>;

Mat4 unit(int a, int b) {
  Mat4 m{};
  m[a][b] = 1;
  return m;
}

Mat4 sub(const Mat4& x, const Mat4& y) {
  Mat4 m{};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m[r][c] = x[r][c] - y[r][c];
  return m;
}

Mat4 commutator(const Mat4& x, const Mat4& y) {
  Mat4 m{};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      Rational v = 0;
      for (int k = 0; k < 4; ++k) v += x[r][k] * y[k][c] - y[r][k] * x[k][c];
      m[r][c] = v;
    }
  return m;
}

}  // namespace

const LieAlgebra& LieAlgebra::sl4() {
  static const LieAlgebra instance = [] {
    LieAlgebra g;
    g.dim_ = 15;
    g.labels_ = {"h1", "h2", "h3", "e1", "e2", "e3", "e4", "e5", "e6",
                 "em1", "em2", "em3", "em4", "em5", "em6"};

    // Matrix-unit realization. Root vectors sit at the position of the
    // non-vanishing entry; e4 = e13, e5 = e24, e6 = e14 and mirrored
    // below the diagonal for the negative roots.
    std::vector<Mat4> rep(15);
    rep[basis::H1] = sub(unit(0, 0), unit(1, 1));
    rep[basis::H2] = sub(unit(1, 1), unit(2, 2));
    rep[basis::H3] = sub(unit(2, 2), unit(3, 3));
    constexpr std::pair<int, int> roots[6] = {{0, 1}, {1, 2}, {2, 3}, {0, 2}, {1, 3}, {0, 3}};
    for (int k = 0; k < 6; ++k) {
      rep[basis::E1 + k] = unit(roots[k].first, roots[k].second);
      rep[basis::EM1 + k] = unit(roots[k].second, roots[k].first);
    }

    // Decompose a traceless matrix over the basis. Off-diagonal entries
    // read off directly; the diagonal resolves against h1,h2,h3 via the
    // partial sums c_j = d_1 + ... + d_j.
    auto decompose = [&](const Mat4& m) {
      std::vector<std::pair<int, Scalar>> out;
      Rational c1 = m[0][0];
      Rational c2 = c1 + m[1][1];
      Rational c3 = c2 + m[2][2];
      if (c1 != 0) out.emplace_back(basis::H1, Scalar(c1));
      if (c2 != 0) out.emplace_back(basis::H2, Scalar(c2));
      if (c3 != 0) out.emplace_back(basis::H3, Scalar(c3));
      for (int k = 0; k < 6; ++k) {
        auto [a, b] = roots[k];
        if (m[a][b] != 0) out.emplace_back(basis::E1 + k, Scalar(m[a][b]));
        if (m[b][a] != 0) out.emplace_back(basis::EM1 + k, Scalar(m[b][a]));
      }
      return out;
    };

    g.table_.assign(15, std::vector<std::vector<std::pair<int, Scalar>>>(15));
    for (int i = 0; i < 15; ++i)
      for (int j = 0; j < 15; ++j)
        if (i != j) g.table_[i][j] = decompose(commutator(rep[i], rep[j]));

    g.verify_antisymmetry_and_jacobi();
    g.compute_killing();
    return g;
  }();
  return instance;
}

void LieAlgebra::verify_antisymmetry_and_jacobi() const {
  auto to_element = [&](const std::vector<std::pair<int, Scalar>>& v) {
    Element e(this);
    for (const auto& [k, c] : v) e.set_coeff(k, MultiPoly(c));
    return e;
  };
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      if (!(to_element(table_[i][j]) + to_element(table_[j][i])).is_zero())
        throw std::logic_error("LieAlgebra: antisymmetry violated at (" + labels_[i] + "," + labels_[j] + ")");
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      for (int k = j + 1; k < dim_; ++k) {
        Element xi = basis_element(i), xj = basis_element(j), xk = basis_element(k);
        Element jac = bracket(bracket(xi, xj), xk) + bracket(bracket(xj, xk), xi) +
                      bracket(bracket(xk, xi), xj);
        if (!jac.is_zero())
          throw std::logic_error("LieAlgebra: Jacobi identity violated at (" + labels_[i] + "," +
                                 labels_[j] + "," + labels_[k] + ")");
      }
}

void LieAlgebra::compute_killing() {
  std::vector<std::array<std::array<Scalar, 15>, 15>> ads(dim_);
  for (int i = 0; i < dim_; ++i) ads[i] = ad_matrix(i);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      Scalar tr(0);
      for (int r = 0; r < dim_; ++r)
        for (int k = 0; k < dim_; ++k) tr += ads[i][r][k] * ads[j][k][r];
      killing_[i][j] = tr;
    }
}

std::array<Scalar, 15> basis_weights(const LieAlgebra& g, const Element& grader) {
  std::array<Scalar, 15> w{};
  for (int i = 0; i < g.dim(); ++i) {
    Element br = g.bracket(grader, g.basis_element(i));
    for (const auto& [k, c] : br.coeffs())
      if (k != i)
        throw std::domain_error("d_weight: grader does not act diagonally on basis vector " +
                                g.label(i));
    if (!br.is_zero()) {
      MultiPoly c = br.coeff(i);
      if (!c.is_constant())
        throw std::domain_error("d_weight: non-constant weight on " + g.label(i));
      w[i] = c.constant_term();
    }
  }
  return w;
}

std::vector<std::pair<Scalar, Element>> d_weight_decomposition(const Element& x,
                                                               const Element& grader) {
  const LieAlgebra& g = *x.algebra();
  auto w = basis_weights(g, grader);
  std::map<Scalar, Element> parts;
  for (const auto& [i, c] : x.coeffs()) {
    auto [it, fresh] = parts.try_emplace(w[i], Element(&g));
    it->second.set_coeff(i, c);
  }
  return {parts.begin(), parts.end()};
}

}  // namespace cybe
