#include "cybe/frobenius.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "cybe/schouten.hpp"

namespace cybe {

std::string Subalgebra::str() const {
  std::string out = "(";
  for (size_t k = 0; k < members.size(); ++k)
    out += (k ? "," : "") + algebra->label(members[k]);
  return out + ")";
}

Subalgebra borel_plus(const LieAlgebra& g) {
  Subalgebra s;
  s.algebra = &g;
  for (int i = 0; i <= basis::E6; ++i) s.members.push_back(i);
  s.closed = true;
  return s;
}

Subalgebra parabolic(const LieAlgebra& g, const std::vector<int>& extra) {
  std::set<int> members;
  for (int i = 0; i <= basis::E6; ++i) members.insert(i);
  for (int i : extra) {
    if (i < 0 || i >= g.dim()) throw std::invalid_argument("parabolic: bad basis index");
    members.insert(i);
  }
  // Close under bracket.
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> current(members.begin(), members.end());
    for (size_t a = 0; a < current.size(); ++a)
      for (size_t b = a + 1; b < current.size(); ++b)
        for (const auto& [k, c] : g.basis_bracket(current[a], current[b]))
          if (!members.count(k)) {
            members.insert(k);
            grew = true;
          }
  }
  Subalgebra s;
  s.algebra = &g;
  s.members.assign(members.begin(), members.end());
  s.closed = true;
  return s;
}

MultiPoly Functional::pair(const Element& x) const {
  MultiPoly out;
  for (const auto& [i, c] : x.coeffs()) {
    auto it = coeffs.find(i);
    if (it != coeffs.end()) out += it->second * c;
  }
  return out;
}

std::string Functional::str() const {
  if (coeffs.empty()) return "0";
  std::string out;
  for (const auto& [i, c] : coeffs) {
    std::string base = (algebra ? algebra->label(i) : std::to_string(i)) + "*";
    std::string term;
    if (c == MultiPoly(1))
      term = base;
    else if (c == MultiPoly(Scalar(-1)))
      term = "-" + base;
    else
      term = "(" + c.str() + ")*" + base;
    if (out.empty())
      out = term;
    else if (term[0] == '-')
      out += " - " + term.substr(1);
    else
      out += " + " + term;
  }
  return out;
}

SkewForm form_from_functional(const Functional& f, const Subalgebra& p) {
  if (!p.closed) throw std::invalid_argument("form_from_functional: subalgebra not closed");
  const LieAlgebra& g = *p.algebra;
  int m = p.dim();
  SkewForm form;
  form.domain = p;
  form.matrix.assign(m, std::vector<MultiPoly>(m));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      MultiPoly v = f.pair(g.bracket(g.basis_element(p.members[i]), g.basis_element(p.members[j])));
      form.matrix[i][j] = v;
      form.matrix[j][i] = -v;
    }
  // Coboundaries satisfy the 2-cocycle identity; verify anyway.
  auto b = [&](int i, int j) { return form.matrix[i][j]; };
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int k = j + 1; k < m; ++k) {
        Element xi = g.basis_element(p.members[i]);
        Element xj = g.basis_element(p.members[j]);
        Element xk = g.basis_element(p.members[k]);
        MultiPoly res = f.pair(g.bracket(g.bracket(xi, xj), xk)) +
                        f.pair(g.bracket(g.bracket(xj, xk), xi)) +
                        f.pair(g.bracket(g.bracket(xk, xi), xj));
        if (!res.is_zero())
          throw std::logic_error("form_from_functional: cocycle identity failed");
        (void)b;
      }
  return form;
}

MultiPoly pfaffian(const std::vector<std::vector<MultiPoly>>& m) {
  size_t n = m.size();
  if (n % 2 != 0) throw std::invalid_argument("pfaffian: odd dimension");
  if (n == 0) return MultiPoly(1);
  // Recursive matching expansion over the active index list.
  std::vector<int> active(n);
  for (size_t i = 0; i < n; ++i) active[i] = static_cast<int>(i);
  std::function<MultiPoly(std::vector<int>&)> rec = [&](std::vector<int>& idx) -> MultiPoly {
    if (idx.empty()) return MultiPoly(1);
    MultiPoly sum;
    int i = idx[0];
    for (size_t t = 1; t < idx.size(); ++t) {
      int j = idx[t];
      if (m[i][j].is_zero()) continue;
      std::vector<int> rest;
      rest.reserve(idx.size() - 2);
      for (size_t s = 1; s < idx.size(); ++s)
        if (s != t) rest.push_back(idx[s]);
      MultiPoly sub = rec(rest);
      if (sub.is_zero()) continue;
      MultiPoly term = m[i][j] * sub;
      if (t % 2 == 1)
        sum += term;
      else
        sum -= term;
    }
    return sum;
  };
  return rec(active);
}

MultiPoly pfaffian(const SkewForm& b) { return pfaffian(b.matrix); }

namespace {

// Pfaffian of the matrix with rows and columns {i,j} deleted.
MultiPoly pfaffian_minor(const std::vector<std::vector<MultiPoly>>& m, int i, int j) {
  size_t n = m.size();
  std::vector<int> keep;
  for (size_t t = 0; t < n; ++t)
    if (static_cast<int>(t) != i && static_cast<int>(t) != j) keep.push_back(static_cast<int>(t));
  std::vector<std::vector<MultiPoly>> sub(keep.size(), std::vector<MultiPoly>(keep.size()));
  for (size_t a = 0; a < keep.size(); ++a)
    for (size_t b = 0; b < keep.size(); ++b) sub[a][b] = m[keep[a]][keep[b]];
  return pfaffian(sub);
}

}  // namespace

BiVector rmatrix_from_functional(const Functional& f, const Subalgebra& p,
                                 const std::string& name) {
  const LieAlgebra& g = *p.algebra;
  if (!p.even_dimensional())
    throw std::invalid_argument("rmatrix_from_functional: odd-dimensional subalgebra");
  SkewForm form = form_from_functional(f, p);
  MultiPoly pf = pfaffian(form);
  if (pf.is_zero())
    throw std::domain_error("rmatrix_from_functional: singular form for functional " +
                            (name.empty() ? f.str() : name));
  int m = p.dim();

  // Inverse through Pfaffian minors: (B^-1)_{ij} = (-1)^{i+j} Pf(B minor ij) / Pf(B)
  // for i<j; the exact division is checked, and so is B * B^-1 = 1.
  std::vector<std::vector<MultiPoly>> inv(m, std::vector<MultiPoly>(m));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      MultiPoly num = pfaffian_minor(form.matrix, i, j);
      if (num.is_zero()) continue;
      if ((i + j) % 2 == 1) num = -num;  // (-1)^{i+j}, same parity 0- or 1-based
      auto q = MultiPoly::try_divide(num, pf);
      if (!q)
        throw std::domain_error("rmatrix_from_functional: inverse entries are not polynomial");
      inv[i][j] = *q;
      inv[j][i] = -*q;
    }
  // Verify the inversion contract exactly.
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < m; ++k) {
      MultiPoly acc;
      for (int j = 0; j < m; ++j) {
        if (inv[i][j].is_zero() || form.matrix[j][k].is_zero()) continue;
        acc += inv[i][j] * form.matrix[j][k];
      }
      MultiPoly expect = (i == k) ? MultiPoly(1) : MultiPoly();
      if (!(acc == expect))
        throw std::logic_error("rmatrix_from_functional: B * B^-1 != 1 (internal error)");
    }

  BiVector r(&g);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (!inv[i][j].is_zero()) r.add_term(p.members[i], p.members[j], inv[i][j]);

  // Theory guarantees CYBE for the inverse of a nondegenerate coboundary.
  if (!schouten_self(r).is_zero())
    throw std::logic_error("rmatrix_from_functional: inverse form fails the CYBE (internal error)");
  return r;
}

NonexistenceResult generic_nonexistence(const Subalgebra& p) {
  if (!p.even_dimensional())
    throw std::invalid_argument("generic_nonexistence: odd-dimensional subalgebra");
  if (p.dim() > 12)
    throw std::invalid_argument("generic_nonexistence: more members than c-parameters");
  Functional f;
  f.algebra = p.algebra;
  for (int t = 0; t < p.dim(); ++t)
    f.coeffs[p.members[t]] = MultiPoly::var(static_cast<Param>(static_cast<int>(Param::c1) + t));
  SkewForm form = form_from_functional(f, p);
  NonexistenceResult res;
  res.certificate = pfaffian(form);
  res.exists = !res.certificate.is_zero();
  return res;
}

std::vector<Functional> functional_search(const Subalgebra& p, const std::vector<int>& pool) {
  if (!p.closed || !p.even_dimensional())
    throw std::invalid_argument("functional_search: need a closed even-dimensional subalgebra");
  if (pool.size() > 12) throw std::invalid_argument("functional_search: pool too large");
  std::vector<Functional> found;
  for (unsigned mask = 1; mask < (1u << pool.size()); ++mask) {
    Functional f;
    f.algebra = p.algebra;
    for (size_t t = 0; t < pool.size(); ++t)
      if (mask & (1u << t)) f.coeffs[pool[t]] = MultiPoly(1);
    if (!pfaffian(form_from_functional(f, p)).is_zero()) found.push_back(std::move(f));
  }
  return found;
}

}  // namespace cybe
