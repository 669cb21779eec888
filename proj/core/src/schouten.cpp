#include "cybe/schouten.hpp"

#include <array>
#include <stdexcept>
#include <vector>

namespace cybe {

namespace {

struct TensorTerm {
  int left;
  int right;
  MultiPoly coeff;
};

// r as a plain tensor: every ordered pair (i<j) contributes (i,j,+c) and
// (j,i,-c).
std::vector<TensorTerm> expand(const BiVector& r) {
  std::vector<TensorTerm> out;
  out.reserve(2 * r.coeffs().size());
  for (const auto& [k, c] : r.coeffs()) {
    out.push_back({k.first, k.second, c});
    out.push_back({k.second, k.first, -c});
  }
  return out;
}

using CubeKey = std::tuple<int, int, int>;

void accumulate(std::map<CubeKey, MultiPoly>& cube, int i, int j, int k, MultiPoly v) {
  if (v.is_zero()) return;
  auto it = cube.find(CubeKey{i, j, k});
  if (it == cube.end()) {
    cube.emplace(CubeKey{i, j, k}, std::move(v));
  } else {
    it->second += v;
    if (it->second.is_zero()) cube.erase(it);
  }
}

}  // namespace

TriVector schouten_self(const BiVector& r) {
  const LieAlgebra* alg = r.algebra();
  TriVector out(alg);
  if (r.is_zero()) return out;
  const LieAlgebra& g = *alg;

  std::vector<TensorTerm> terms = expand(r);
  std::map<CubeKey, MultiPoly> cube;

  for (const auto& t1 : terms)
    for (const auto& t2 : terms) {
      MultiPoly c = t1.coeff * t2.coeff;
      if (c.is_zero()) continue;
      // [r12, r13]: legs (a.b.) x (d..e) -> [a,d] (.) b e
      for (const auto& [k, f] : g.basis_bracket(t1.left, t2.left))
        accumulate(cube, k, t1.right, t2.right, c * f);
      // [r12, r23]: (a b .) x (. d e) -> a [b,d] e
      for (const auto& [k, f] : g.basis_bracket(t1.right, t2.left))
        accumulate(cube, t1.left, k, t2.right, c * f);
      // [r13, r23]: (a . b) x (. d e) -> a d [b,e]
      for (const auto& [k, f] : g.basis_bracket(t1.right, t2.right))
        accumulate(cube, t1.left, t2.left, k, c * f);
    }

  // The sum must be totally antisymmetric; check before projecting.
  for (const auto& [key, v] : cube) {
    auto [i, j, k] = key;
    if (i == j || j == k || i == k)
      throw std::logic_error("schouten_self: repeated index survived in the tensor cube");
    auto lookup = [&](int a, int b, int c) {
      auto it = cube.find(CubeKey{a, b, c});
      return it == cube.end() ? MultiPoly() : it->second;
    };
    if (lookup(j, i, k) != -v || lookup(i, k, j) != -v || lookup(j, k, i) != v ||
        lookup(k, i, j) != v || lookup(k, j, i) != -v)
      throw std::logic_error("schouten_self: tensor cube is not totally antisymmetric");
  }

  // Canonical projection: the stored coefficient of i<j<k is the cube
  // entry at the ordered triple.
  for (const auto& [key, v] : cube) {
    auto [i, j, k] = key;
    if (i < j && j < k) out.add_term(i, j, k, v);
  }
  return out;
}

TriVector schouten_mixed(const BiVector& r, const BiVector& s) {
  TriVector sum = schouten_self(r + s) - schouten_self(r) - schouten_self(s);
  return sum * MultiPoly(Scalar(Rational(1, 2)));
}

CybeResult cybe_residual(const BiVector& r) {
  CybeResult res;
  res.residual = schouten_self(r);
  res.is_solution = res.residual.is_zero();
  for (Param p : r.support()) {
    int max_deg = 0;
    for (const auto& [k, c] : r.coeffs()) max_deg = std::max(max_deg, c.degree_in(p));
    int res_deg = std::max(res.residual.degree_in(p), 2 * max_deg);
    std::map<int, bool> parts;
    for (int d = 0; d <= res_deg; ++d)
      parts[d] = res.residual.part_of_degree(p, d).is_zero();
    res.per_degree.emplace(p, std::move(parts));
  }
  return res;
}

TriVector canonical_trivector(const LieAlgebra& g) {
  const int n = g.dim();
  // Invert the Killing form by Gauss-Jordan over Q(i).
  std::vector<std::vector<Scalar>> m(n, std::vector<Scalar>(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = g.killing_matrix()[i][j];
    m[i][n + i] = Scalar(1);
  }
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int row = col; row < n; ++row)
      if (!m[row][col].is_zero()) {
        pivot = row;
        break;
      }
    if (pivot < 0) throw std::domain_error("canonical_trivector: Killing form is degenerate");
    std::swap(m[col], m[pivot]);
    Scalar inv = Scalar(1) / m[col][col];
    for (int j = 0; j < 2 * n; ++j) m[col][j] *= inv;
    for (int row = 0; row < n; ++row) {
      if (row == col || m[row][col].is_zero()) continue;
      Scalar f = m[row][col];
      for (int j = 0; j < 2 * n; ++j) m[row][j] -= f * m[col][j];
    }
  }
  std::vector<std::vector<Scalar>> kinv(n, std::vector<Scalar>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) kinv[i][j] = m[i][n + j];

  // f_{abc} = K([x_a, x_b], x_c), then raise all three indices.
  std::vector<std::vector<std::vector<Scalar>>> f(
      n, std::vector<std::vector<Scalar>>(n, std::vector<Scalar>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (const auto& [k, c] : g.basis_bracket(a, b))
        for (int cc = 0; cc < n; ++cc)
          if (!g.killing_matrix()[k][cc].is_zero())
            f[a][b][cc] += c * g.killing_matrix()[k][cc];

  auto contract = [&](const std::vector<std::vector<std::vector<Scalar>>>& t, int axis) {
    std::vector<std::vector<std::vector<Scalar>>> out(
        n, std::vector<std::vector<Scalar>>(n, std::vector<Scalar>(n)));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          const Scalar& v = t[a][b][c];
          if (v.is_zero()) continue;
          int idx = axis == 0 ? a : axis == 1 ? b : c;
          for (int s = 0; s < n; ++s) {
            if (kinv[s][idx].is_zero()) continue;
            int aa = axis == 0 ? s : a, bb = axis == 1 ? s : b, cc = axis == 2 ? s : c;
            out[aa][bb][cc] += kinv[s][idx] * v;
          }
        }
    return out;
  };
  auto raised = contract(contract(contract(f, 0), 1), 2);

  TriVector omega(&g);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        if (!raised[a][b][c].is_zero()) omega.add_term(a, b, c, MultiPoly(raised[a][b][c]));
  return omega;
}

}  // namespace cybe
