#include "cybe/conformal.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace cybe {

using namespace basis;

const Element& ConformalBasis::get(std::string_view name) const {
  for (const auto& [n, e] : gens)
    if (n == name) return e;
  throw std::invalid_argument("ConformalBasis: no generator named " + std::string(name));
}

bool ConformalBasis::has(std::string_view name) const {
  return std::any_of(gens.begin(), gens.end(), [&](const auto& p) { return p.first == name; });
}

void ConformalBasis::set(std::string_view name, Element e) {
  for (auto& [n, g] : gens)
    if (n == name) {
      g = std::move(e);
      return;
    }
  throw std::invalid_argument("ConformalBasis: no generator named " + std::string(name));
}

ConformalBasis conformal_basis(const LieAlgebra& g) {
  auto b = [&](int i) { return g.basis_element(i); };
  const MultiPoly I = MultiPoly(Scalar::i());
  const MultiPoly half = MultiPoly(Scalar(Rational(1, 2)));

  ConformalBasis out;
  out.gens = {
      {"M+", b(E1) + b(EM3)},
      {"M-", -(b(E3) + b(EM1))},
      {"M3", (b(H1) - b(H3)) * (I * half)},
      {"L+", (b(EM3) - b(E1)) * I},
      {"L-", -((b(E3) - b(EM1)) * I)},
      {"L3", (b(H1) + b(H3)) * half},
      {"P0", -((b(E2) + b(E6)) * I)},
      {"P1", -(b(E4) + b(E5))},
      {"P2", (b(E4) - b(E5)) * I},
      {"P3", (b(E2) - b(E6)) * I},
      {"K0", (b(EM2) + b(EM6)) * I},
      {"K1", b(EM4) - b(EM5)},
      {"K2", (b(EM4) + b(EM5)) * I},
      {"K3", (b(EM2) - b(EM6)) * I},
      {"D", (b(H1) + b(H2) + b(H2) + b(H3)) * half},
  };
  return out;
}

int conformal_rank(const ConformalBasis& basis) {
  // Generators have constant coefficients; eliminate over Q(i).
  int n = 15;
  std::vector<std::vector<Scalar>> m(basis.gens.size(), std::vector<Scalar>(n));
  for (size_t r = 0; r < basis.gens.size(); ++r)
    for (const auto& [i, c] : basis.gens[r].second.coeffs()) m[r][i] = c.constant_term();
  int rank = 0;
  for (int col = 0; col < n && rank < static_cast<int>(m.size()); ++col) {
    int pivot = -1;
    for (int row = rank; row < static_cast<int>(m.size()); ++row)
      if (!m[row][col].is_zero()) {
        pivot = row;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    Scalar inv = Scalar(1) / m[rank][col];
    for (int j = 0; j < n; ++j) m[rank][j] *= inv;
    for (int row = 0; row < static_cast<int>(m.size()); ++row) {
      if (row == rank || m[row][col].is_zero()) continue;
      Scalar f = m[row][col];
      for (int j = 0; j < n; ++j) m[row][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

namespace {

const int kEta[6] = {-1, 1, 1, 1, 1, -1};

// Assembles the antisymmetric 6x6 array M_PQ from the physical
// generators by inverting P = M4mu + M5mu, K = M5mu - M4mu, D = M45 and
// M_i = eps_ijk M_jk / 2, L_i = M_i0.
std::array<std::array<Element, 6>, 6> assemble_mpq(const ConformalBasis& cb) {
  const LieAlgebra* g = cb.gens.front().second.algebra();
  const MultiPoly half = MultiPoly(Scalar(Rational(1, 2)));
  const MultiPoly mhalf_i = MultiPoly(Scalar(Rational(0), Rational(-1, 2)));

  Element m1 = (cb.get("M+") + cb.get("M-")) * half;
  Element m2 = (cb.get("M+") - cb.get("M-")) * mhalf_i;
  Element m3 = cb.get("M3");
  Element l1 = (cb.get("L+") + cb.get("L-")) * half;
  Element l2 = (cb.get("L+") - cb.get("L-")) * mhalf_i;
  Element l3 = cb.get("L3");

  std::array<std::array<Element, 6>, 6> M;
  for (auto& row : M)
    for (auto& e : row) e = Element(g);

  auto put = [&](int p, int q, const Element& e) {
    M[p][q] = e;
    M[q][p] = -e;
  };
  put(2, 3, m1);
  put(3, 1, m2);
  put(1, 2, m3);
  put(1, 0, l1);
  put(2, 0, l2);
  put(3, 0, l3);
  const char* pk[4][2] = {{"P0", "K0"}, {"P1", "K1"}, {"P2", "K2"}, {"P3", "K3"}};
  for (int mu = 0; mu < 4; ++mu) {
    Element p = cb.get(pk[mu][0]), k = cb.get(pk[mu][1]);
    put(4, mu, (p - k) * half);
    put(5, mu, (p + k) * half);
  }
  put(4, 5, cb.get("D"));
  return M;
}

std::vector<RelationResidual> scan(const std::array<std::array<Element, 6>, 6>& M,
                                   const LieAlgebra& g, bool stop_early = false) {
  std::vector<RelationResidual> out;
  auto eta_term = [&](int s, int p, int q) {
    return s == 0 ? Element(&g) : (s > 0 ? M[p][q] : -M[p][q]);
  };
  for (int P = 0; P < 6; ++P)
    for (int Q = P + 1; Q < 6; ++Q)
      for (int R = P; R < 6; ++R)
        for (int S = R + 1; S < 6; ++S) {
          if (R == P && S < Q) continue;
          Element lhs = g.bracket(M[P][Q], M[R][S]);
          Element rhs = eta_term((P == S) ? kEta[P] : 0, Q, R) -
                        eta_term((P == R) ? kEta[P] : 0, Q, S) +
                        eta_term((Q == R) ? kEta[Q] : 0, P, S) -
                        eta_term((Q == S) ? kEta[Q] : 0, P, R);
          Element res = lhs - rhs;
          if (!res.is_zero()) {
            out.push_back({{P, Q, R, S}, res});
            if (stop_early) return out;
          }
        }
  return out;
}

// The generator names feeding M_PQ for flagging purposes.
std::vector<std::string> names_for_slot(int p, int q) {
  if (p > q) std::swap(p, q);
  if (p == 4 && q == 5) return {"D"};
  if (q >= 4) {
    std::string mu = std::to_string(p);
    return {"P" + mu, "K" + mu};
  }
  if (p == 0) return q == 3 ? std::vector<std::string>{"L3"} : std::vector<std::string>{"L+", "L-"};
  if (p == 1 && q == 2) return {"M3"};
  return {"M+", "M-"};
}

std::vector<Element> generator_variants(const Element& x) {
  const LieAlgebra* g = x.algebra();
  std::vector<Element> shapes = {x};
  if (x.coeffs().size() >= 2) {
    Element flipped = x;
    auto last = std::prev(x.coeffs().end());
    flipped.set_coeff(last->first, -last->second);
    shapes.push_back(flipped);
  }
  const Scalar units[4] = {Scalar(1), Scalar(-1), Scalar::i(), -Scalar::i()};
  std::vector<Element> out;
  for (const Element& s : shapes)
    for (const Scalar& u : units) out.push_back(s * MultiPoly(u));
  (void)g;
  return out;
}

}  // namespace

std::vector<RelationResidual> conformal_relation_scan(const ConformalBasis& basis) {
  const LieAlgebra& g = *basis.gens.front().second.algebra();
  return scan(assemble_mpq(basis), g);
}

ConformalAdjudication adjudicate_conformal_basis(const ConformalBasis& verbatim) {
  const LieAlgebra& g = *verbatim.gens.front().second.algebra();
  ConformalAdjudication adj;
  auto residuals = conformal_relation_scan(verbatim);
  if (residuals.empty()) {
    adj.basis = verbatim;
    adj.scan_empty = true;
    return adj;
  }

  // Flag every generator entering the left side of a violated relation.
  std::vector<std::string> flagged;
  for (const auto& r : residuals) {
    for (const std::string& n : names_for_slot(r.indices[0], r.indices[1]))
      if (std::find(flagged.begin(), flagged.end(), n) == flagged.end()) flagged.push_back(n);
    for (const std::string& n : names_for_slot(r.indices[2], r.indices[3]))
      if (std::find(flagged.begin(), flagged.end(), n) == flagged.end()) flagged.push_back(n);
  }
  std::sort(flagged.begin(), flagged.end());

  // Iterative deepening over how many generators get repaired.
  for (size_t depth = 1; depth <= std::min<size_t>(flagged.size(), 3); ++depth) {
    std::vector<size_t> pick(depth);
    std::function<bool(size_t, size_t)> choose = [&](size_t from, size_t slot) -> bool {
      if (slot == depth) {
        std::vector<std::vector<Element>> variants(depth);
        for (size_t t = 0; t < depth; ++t) {
          variants[t] = generator_variants(verbatim.get(flagged[pick[t]]));
          variants[t].erase(variants[t].begin());  // identity variant = shallower depth
        }
        std::vector<size_t> idx(depth, 0);
        while (true) {
          ConformalBasis candidate = verbatim;
          for (size_t t = 0; t < depth; ++t)
            candidate.set(flagged[pick[t]], variants[t][idx[t]]);
          if (scan(assemble_mpq(candidate), g, /*stop_early=*/true).empty()) {
            adj.basis = candidate;
            adj.scan_empty = true;
            for (size_t t = 0; t < depth; ++t)
              adj.repairs.push_back(flagged[pick[t]] + " -> " + variants[t][idx[t]].str());
            return true;
          }
          size_t t = 0;
          while (t < depth && ++idx[t] == variants[t].size()) idx[t++] = 0;
          if (t == depth) break;
        }
        return false;
      }
      for (size_t i = from; i < flagged.size(); ++i) {
        pick[slot] = i;
        if (choose(i + 1, slot + 1)) return true;
      }
      return false;
    };
    if (choose(0, 0)) return adj;
  }

  // No repair found within the search space; return the verbatim basis.
  adj.basis = verbatim;
  adj.scan_empty = false;
  return adj;
}

ConformalBasis realified(const ConformalBasis& cb) {
  const MultiPoly half = MultiPoly(Scalar(Rational(1, 2)));
  const MultiPoly mhalf_i = MultiPoly(Scalar(Rational(0), Rational(-1, 2)));
  ConformalBasis out;
  for (const auto& [name, e] : cb.gens) {
    if (name == "M+") {
      out.gens.emplace_back("M1", (cb.get("M+") + cb.get("M-")) * half);
      out.gens.emplace_back("M2", (cb.get("M+") - cb.get("M-")) * mhalf_i);
    } else if (name == "L+") {
      out.gens.emplace_back("L1", (cb.get("L+") + cb.get("L-")) * half);
      out.gens.emplace_back("L2", (cb.get("L+") - cb.get("L-")) * mhalf_i);
    } else if (name == "M-" || name == "L-") {
      continue;
    } else {
      out.gens.emplace_back(name, e);
    }
  }
  return out;
}

std::vector<std::pair<std::string, Element>> compact_cartan_trio(const ConformalBasis& cb) {
  const MultiPoly half = MultiPoly(Scalar(Rational(1, 2)));
  return {
      {"M12", cb.get("M3")},
      {"M34", (cb.get("P3") - cb.get("K3")) * half},
      {"M50", (cb.get("P0") + cb.get("K0")) * half},
  };
}

}  // namespace cybe
