#include "cybe/morphisms.hpp"

#include <algorithm>
#include <stdexcept>

namespace cybe {

using namespace basis;

AlgebraMap AlgebraMap::identity(const LieAlgebra& g) {
  AlgebraMap m;
  m.algebra_ = &g;
  m.name_ = "id";
  m.kind_ = Kind::Automorphism;
  for (int i = 0; i < 15; ++i) m.matrix_[i][i] = MultiPoly(1);
  return m;
}

Element AlgebraMap::image_of_basis(int j) const {
  Element out(algebra_);
  for (int i = 0; i < 15; ++i)
    if (!matrix_[i][j].is_zero()) out.set_coeff(i, matrix_[i][j]);
  return out;
}

Element AlgebraMap::apply(const Element& x, const MultiPoly::ConjMap& rule) const {
  Element out(algebra_);
  for (const auto& [j, c] : x.coeffs()) {
    MultiPoly cc = antilinear_ ? c.conjugated(rule) : c;
    out += image_of_basis(j) * cc;
  }
  return out;
}

bool AlgebraMap::is_involutive() const {
  for (int j = 0; j < 15; ++j) {
    Element once = image_of_basis(j);
    if (!(apply(once) == algebra_->basis_element(j))) return false;
  }
  return true;
}

AlgebraMap AlgebraMap::compose_after(const AlgebraMap& g, const std::string& name) const {
  if (antilinear_ || g.antilinear_)
    throw std::logic_error("AlgebraMap: composition implemented for linear maps only");
  AlgebraMap out;
  out.algebra_ = algebra_;
  out.name_ = name;
  out.antilinear_ = false;
  out.kind_ = (kind_ == g.kind_) ? Kind::Automorphism : Kind::AntiAutomorphism;
  for (int i = 0; i < 15; ++i)
    for (int j = 0; j < 15; ++j) {
      MultiPoly sum;
      for (int k = 0; k < 15; ++k) {
        if (matrix_[i][k].is_zero() || g.matrix_[k][j].is_zero()) continue;
        sum += matrix_[i][k] * g.matrix_[k][j];
      }
      out.matrix_[i][j] = std::move(sum);
    }
  out.verify_kind();
  out.verify_invertible();
  return out;
}

void AlgebraMap::verify_kind() const {
  const LieAlgebra& g = *algebra_;
  for (int i = 0; i < 15; ++i)
    for (int j = i + 1; j < 15; ++j) {
      Element lhs = apply(g.bracket(g.basis_element(i), g.basis_element(j)));
      Element xi = image_of_basis(i), xj = image_of_basis(j);
      Element rhs = (kind_ == Kind::Automorphism) ? g.bracket(xi, xj) : g.bracket(xj, xi);
      if (!(lhs == rhs))
        throw std::logic_error("AlgebraMap '" + name_ + "': declared kind fails at (" +
                               g.label(i) + "," + g.label(j) + "): phi[x,y] = " + lhs.str() +
                               " vs " + rhs.str());
    }
}

void AlgebraMap::verify_invertible() const {
  // Rank at a generic rational evaluation point of the parameters; the
  // matrices here are unit-monomial so this is conclusive in practice.
  std::array<Scalar, kParamCount> point;
  long primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43,
                   47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101};
  for (int k = 0; k < kParamCount; ++k) point[k] = Scalar(primes[k]);
  // Keep the multiplicative constraints a4=a1a2, a5=a2a3, a6=a1a2a3.
  point[static_cast<int>(Param::a4)] = point[static_cast<int>(Param::a1)] * point[static_cast<int>(Param::a2)];
  point[static_cast<int>(Param::a5)] = point[static_cast<int>(Param::a2)] * point[static_cast<int>(Param::a3)];
  point[static_cast<int>(Param::a6)] = point[static_cast<int>(Param::a4)] * point[static_cast<int>(Param::a3)];

  std::array<std::array<Scalar, 15>, 15> m;
  for (int i = 0; i < 15; ++i)
    for (int j = 0; j < 15; ++j) m[i][j] = matrix_[i][j].eval(point);
  int rank = 0;
  for (int col = 0; col < 15; ++col) {
    int pivot = -1;
    for (int row = rank; row < 15; ++row)
      if (!m[row][col].is_zero()) {
        pivot = row;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    Scalar inv = Scalar(1) / m[rank][col];
    for (int j = 0; j < 15; ++j) m[rank][j] *= inv;
    for (int row = 0; row < 15; ++row) {
      if (row == rank || m[row][col].is_zero()) continue;
      Scalar f = m[row][col];
      for (int j = 0; j < 15; ++j) m[row][j] -= f * m[rank][j];
    }
    ++rank;
  }
  if (rank != 15)
    throw std::logic_error("AlgebraMap '" + name_ + "': matrix is singular");
}

AlgebraMap AlgebraMap::from_chevalley_images(const LieAlgebra& g, const std::string& name,
                                             Kind kind, bool antilinear,
                                             const std::array<Element, 3>& h_images,
                                             const std::array<Element, 3>& e_images,
                                             const std::array<Element, 3>& em_images) {
  AlgebraMap m;
  m.algebra_ = &g;
  m.name_ = name;
  m.kind_ = kind;
  m.antilinear_ = antilinear;

  std::array<Element, 15> img;
  img[H1] = h_images[0];
  img[H2] = h_images[1];
  img[H3] = h_images[2];
  img[E1] = e_images[0];
  img[E2] = e_images[1];
  img[E3] = e_images[2];
  img[EM1] = em_images[0];
  img[EM2] = em_images[1];
  img[EM3] = em_images[2];

  // phi[x,y] = [phi x, phi y] or [phi y, phi x] depending on the kind.
  auto ext = [&](const Element& x, const Element& y) {
    return kind == Kind::Automorphism ? g.bracket(x, y) : g.bracket(y, x);
  };
  img[E4] = ext(img[E1], img[E2]);
  img[E5] = ext(img[E2], img[E3]);
  img[E6] = ext(img[E1], img[E5]);
  img[EM4] = ext(img[EM2], img[EM1]);
  img[EM5] = ext(img[EM3], img[EM2]);
  img[EM6] = ext(img[EM5], img[EM1]);

  for (int j = 0; j < 15; ++j)
    for (const auto& [i, c] : img[j].coeffs()) m.matrix_[i][j] = c;

  m.verify_kind();
  m.verify_invertible();
  return m;
}

AlgebraMap build_star_case_i(const LieAlgebra& g) {
  auto b = [&](int i) { return g.basis_element(i); };
  return AlgebraMap::from_chevalley_images(
      g, "star3", AlgebraMap::Kind::AntiAutomorphism, /*antilinear=*/true,
      {-b(H3), -b(H2), -b(H1)}, {b(E3), b(E2), b(E1)}, {b(EM3), b(EM2), b(EM1)});
}

AlgebraMap build_star_case_ii(const LieAlgebra& g, const std::array<int, 3>& eps) {
  const std::array<int, 3> valid[] = {{1, -1, 1}, {-1, 1, -1}, {-1, -1, -1}};
  if (std::find(std::begin(valid), std::end(valid), eps) == std::end(valid))
    throw std::invalid_argument("build_star_case_ii: eps must be (1,-1,1), (-1,1,-1) or (-1,-1,-1)");
  auto b = [&](int i) { return g.basis_element(i); };
  auto s = [&](int k, int i) { return b(i) * MultiPoly(Scalar(eps[k])); };
  std::string name = "star4(";
  for (int k = 0; k < 3; ++k) name += (eps[k] > 0 ? "+" : "-");
  name += ")";
  return AlgebraMap::from_chevalley_images(
      g, name, AlgebraMap::Kind::AntiAutomorphism, /*antilinear=*/true,
      {b(H1), b(H2), b(H3)}, {s(0, EM1), s(1, EM2), s(2, EM3)},
      {s(0, E1), s(1, E2), s(2, E3)});
}

namespace {

struct RootVec {
  int c[3];
  friend bool operator==(const RootVec& x, const RootVec& y) {
    return x.c[0] == y.c[0] && x.c[1] == y.c[1] && x.c[2] == y.c[2];
  }
  RootVec negated() const { return {-c[0], -c[1], -c[2]}; }
};

// alpha1..alpha6 in simple-root coordinates.
constexpr RootVec kRoots[6] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1},
                               {1, 1, 0}, {0, 1, 1}, {1, 1, 1}};

int root_index(const RootVec& v, bool& negative) {
  for (int k = 0; k < 6; ++k) {
    if (v == kRoots[k]) {
      negative = false;
      return k;
    }
    if (v == kRoots[k].negated()) {
      negative = true;
      return k;
    }
  }
  throw std::logic_error("root_index: not a root");
}

}  // namespace

AlgebraMap build_weyl_reflection(const LieAlgebra& g, int i) {
  return build_weyl_reflection(
      g, i, {MultiPoly::var(Param::a1), MultiPoly::var(Param::a2), MultiPoly::var(Param::a3)});
}

AlgebraMap build_weyl_reflection(const LieAlgebra& g, int i,
                                 const std::array<MultiPoly, 3>& simple_params) {
  if (i < 1 || i > 3) throw std::invalid_argument("build_weyl_reflection: i must be 1, 2 or 3");
  for (const auto& p : simple_params)
    if (!p.is_single_term())
      throw std::invalid_argument("build_weyl_reflection: parameters must be invertible monomials");

  // a1..a6 with the constraints a4 = a1 a2, a5 = a2 a3, a6 = a1 a2 a3.
  std::array<MultiPoly, 6> a;
  a[0] = simple_params[0];
  a[1] = simple_params[1];
  a[2] = simple_params[2];
  a[3] = a[0] * a[1];
  a[4] = a[1] * a[2];
  a[5] = a[0] * a[1] * a[2];
  auto a_inv = [&](int k) {
    auto [m, c] = a[k].single_term();
    Monomial inv{};
    for (int t = 0; t < kParamCount; ++t) inv[t] = static_cast<std::int16_t>(-m[t]);
    return MultiPoly::from_term(inv, Scalar(1) / c);
  };

  // Simple-reflection action on roots, through the A3 Cartan matrix.
  constexpr int cartan[3][3] = {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
  auto reflect = [&](const RootVec& v) {
    int pairing = 0;
    for (int t = 0; t < 3; ++t) pairing += cartan[i - 1][t] * v.c[t];
    RootVec out = v;
    out.c[i - 1] -= pairing;
    return out;
  };

  // Image pattern: positive image root B gives e_{+-A} -> a_B^{+-1} e_{+-B},
  // negative image root -B gives e_{+-A} -> a_B^{-+1} e_{-+B}.
  struct RootImage {
    int target_pos;  // basis index image of e_A
    int target_neg;  // basis index image of e_{-A}
    MultiPoly factor_pos;
    MultiPoly factor_neg;
  };
  std::array<RootImage, 6> images;
  for (int A = 0; A < 6; ++A) {
    bool neg = false;
    int B = root_index(reflect(kRoots[A]), neg);
    if (!neg) {
      images[A] = {E1 + B, EM1 + B, a[B], a_inv(B)};
    } else {
      images[A] = {EM1 + B, E1 + B, a_inv(B), a[B]};
    }
  }

  // Free signs on the simple root-vector images, fixed by the
  // automorphism check; composite images inherit theirs through the
  // extension. The all-positive assignment is tried first.
  for (int mask = 0; mask < 8; ++mask) {
    auto sign = [&](int A) { return (mask >> A) & 1 ? Scalar(-1) : Scalar(1); };
    std::array<Element, 3> e_img, em_img, h_img;
    for (int j = 0; j < 3; ++j) {
      e_img[j] = Element(&g, images[j].target_pos, images[j].factor_pos * sign(j));
      em_img[j] = Element(&g, images[j].target_neg, images[j].factor_neg * sign(j));
      // sigma(h_j) = [sigma(e_j), sigma(em_j)] by the automorphism property.
      h_img[j] = g.bracket(e_img[j], em_img[j]);
    }
    try {
      return AlgebraMap::from_chevalley_images(g, "sigma" + std::to_string(i),
                                               AlgebraMap::Kind::Automorphism,
                                               /*antilinear=*/false, h_img, e_img, em_img);
    } catch (const std::logic_error&) {
      continue;  // try the next sign assignment
    }
  }
  throw std::logic_error("build_weyl_reflection: no sign completion yields an automorphism");
}

BetaResult build_beta(const LieAlgebra& g) {
  auto b = [&](int i) { return g.basis_element(i); };
  // Candidates: e1 -> s1 e3 (and mirror), e2 -> s2 e2. Ordered by
  // agreement with the published images e4 -> e5, e6 -> e6, e2 -> e2,
  // e1 -> e3; the extension fixes the rest.
  struct Candidate {
    int s1, s2;
  };
  std::vector<std::pair<int, Candidate>> scored;
  for (int s1 : {1, -1})
    for (int s2 : {1, -1}) {
      int score = 0;
      if (s1 == 1) score += 1;               // e1 -> +e3
      if (s2 == 1) score += 1;               // e2 -> +e2
      if (-s1 * s2 == 1) score += 1;         // e4 = [e1,e2] -> -s1 s2 e5
      if (s2 == 1) score += 1;               // e6 -> s1^2 s2 e6 = s2 e6
      scored.emplace_back(score, Candidate{s1, s2});
    }
  std::stable_sort(scored.begin(), scored.end(),
                   [](const auto& x, const auto& y) { return x.first > y.first; });

  for (const auto& [score, cand] : scored) {
    MultiPoly s1 = MultiPoly(Scalar(cand.s1)), s2 = MultiPoly(Scalar(cand.s2));
    try {
      AlgebraMap m = AlgebraMap::from_chevalley_images(
          g, "beta", AlgebraMap::Kind::Automorphism, /*antilinear=*/false,
          {b(H3), b(H2), b(H1)}, {b(E3) * s1, b(E2) * s2, b(E1) * s1},
          {b(EM3) * s1, b(EM2) * s2, b(EM1) * s1});
      if (!m.is_involutive()) continue;
      BetaResult res{std::move(m), {}};
      auto note = [&](int idx, const char* pub) {
        Element im = res.map.image_of_basis(idx);
        if (im.str() != pub)
          res.sign_notes.push_back(g.label(idx) + " -> " + im.str() + " (published: " +
                                   pub + ")");
      };
      note(E1, "e3");
      note(E2, "e2");
      note(E4, "e5");
      note(E6, "e6");
      return res;
    } catch (const std::logic_error&) {
      continue;
    }
  }
  throw std::logic_error("build_beta: no sign completion yields an involutive automorphism");
}

AlgebraMap theta(const AlgebraMap& star) {
  if (!star.antilinear() || star.kind() != AlgebraMap::Kind::AntiAutomorphism)
    throw std::invalid_argument("theta: argument must be an antilinear anti-automorphism");
  AlgebraMap m;
  m.algebra_ = star.algebra_;
  m.name_ = "theta(" + star.name() + ")";
  m.kind_ = AlgebraMap::Kind::Automorphism;
  m.antilinear_ = true;
  for (int i = 0; i < 15; ++i)
    for (int j = 0; j < 15; ++j) m.matrix_[i][j] = -star.matrix_[i][j];
  m.verify_kind();
  return m;
}

namespace {

struct RuleCandidate {
  MultiPoly::ConjMap map;
  std::string desc;
};

std::string rule_term_desc(Param p, const MultiPoly::ConjRule& r) {
  std::string rhs;
  if (!(r.unit == Scalar(1))) rhs += (r.unit == Scalar(-1)) ? "-" : ("(" + r.unit.str() + ")*");
  rhs += std::string(param_name(r.target));
  if (r.exponent_sign < 0) rhs = (rhs[0] == '-' ? "-1/" + rhs.substr(1) : "1/" + rhs);
  return std::string(param_name(p)) + "* = " + rhs;
}

// Candidate conjugation rules on a1,a2,a3 (the reflection parameters).
std::vector<RuleCandidate> conj_rule_candidates() {
  std::vector<RuleCandidate> out;
  const Param as[3] = {Param::a1, Param::a2, Param::a3};
  for (int perm = 0; perm < 2; ++perm)
    for (int exp : {1, -1})
      for (int smask = 0; smask < 8; ++smask) {
        RuleCandidate cand;
        cand.map = MultiPoly::conj_identity();
        bool nontrivial = false;
        for (int t = 0; t < 3; ++t) {
          Param target = perm ? as[2 - t] : as[t];
          Scalar unit((smask >> t) & 1 ? -1 : 1);
          cand.map[static_cast<int>(as[t])] = {target, exp, unit};
          if (target != as[t] || exp != 1 || !(unit == Scalar(1))) nontrivial = true;
        }
        if (nontrivial) {
          for (int t = 0; t < 3; ++t)
            cand.desc += (t ? ", " : "") +
                         rule_term_desc(as[t], cand.map[static_cast<int>(as[t])]);
        }
        out.push_back(std::move(cand));
      }
  return out;
}

}  // namespace

CommuteResult commute_check(const AlgebraMap& phi, const AlgebraMap& star) {
  const LieAlgebra& g = phi.algebra();
  CommuteResult res;
  for (const RuleCandidate& cand : conj_rule_candidates()) {
    bool ok = true;
    std::vector<std::string> failing;
    for (int j = 0; j < 15 && (ok || res.witnesses.empty()); ++j) {
      Element lhs = phi.apply(star.apply(g.basis_element(j)));
      Element rhs = star.apply(phi.apply(g.basis_element(j)), cand.map);
      if (!(lhs == rhs)) {
        ok = false;
        failing.push_back(g.label(j));
      }
    }
    if (ok) {
      res.commutes = true;
      res.constraint = cand.desc;
      return res;
    }
    if (res.witnesses.empty()) res.witnesses = failing;  // identity rule runs first
  }
  return res;
}

BiVector tensor_square_apply(const AlgebraMap& phi, const BiVector& r,
                             const MultiPoly::ConjMap& rule) {
  const LieAlgebra& g = phi.algebra();
  BiVector out(&g);
  for (const auto& [k, c] : r.coeffs()) {
    MultiPoly cc = phi.antilinear() ? c.conjugated(rule) : c;
    Element u = phi.image_of_basis(k.first), v = phi.image_of_basis(k.second);
    out += wedge(u, v) * cc;
  }
  return out;
}

RealityResult reality_check(const BiVector& r, const AlgebraMap& star) {
  AlgebraMap th = theta(star);
  RealityResult res;
  if (r.is_zero()) {
    res.verdict = RealityVerdict::Real;
    return res;
  }
  std::vector<Param> params(r.support().begin(), r.support().end());
  int n = static_cast<int>(params.size());
  for (int mask = 0; mask < (1 << n); ++mask) {
    MultiPoly::ConjMap rule = MultiPoly::conj_identity();
    std::string desc;
    for (int t = 0; t < n; ++t) {
      Scalar unit((mask >> t) & 1 ? -1 : 1);
      rule[static_cast<int>(params[t])] = {params[t], 1, unit};
      if ((mask >> t) & 1)
        desc += (desc.empty() ? "" : ", ") + std::string(param_name(params[t])) + "* = -" +
                std::string(param_name(params[t]));
      else
        desc += (desc.empty() ? "" : ", ") + std::string(param_name(params[t])) + "* = " +
                std::string(param_name(params[t]));
    }
    BiVector image = tensor_square_apply(th, r, rule);
    if (image == r) {
      res.verdict = RealityVerdict::Real;
      res.constraint = desc;
      return res;
    }
    if (image == -r) {
      res.verdict = RealityVerdict::AntiReal;
      res.constraint = desc;
      return res;
    }
  }
  res.verdict = RealityVerdict::Neither;
  return res;
}

std::string reality_verdict_name(RealityVerdict v) {
  switch (v) {
    case RealityVerdict::Real: return "real";
    case RealityVerdict::AntiReal: return "anti-real";
    default: return "neither";
  }
}

EigenReport real_form_eigencheck(const std::vector<std::pair<std::string, Element>>& gens,
                                 const AlgebraMap& star) {
  AlgebraMap th = theta(star);
  EigenReport report;
  report.all_theta_eigen = true;
  report.uniform = true;

  // Express y over the generator set (full rank assumed) for readability.
  const LieAlgebra& g = star.algebra();
  int n = static_cast<int>(gens.size());
  auto expand = [&](const Element& y) -> std::string {
    std::vector<std::vector<Scalar>> m(15, std::vector<Scalar>(n + 1));
    for (int c = 0; c < n; ++c)
      for (const auto& [i, v] : gens[c].second.coeffs()) m[i][c] = v.constant_term();
    for (const auto& [i, v] : y.coeffs()) m[i][n] = v.constant_term();
    int rank = 0;
    std::vector<int> pivot_col(15, -1);
    for (int col = 0; col < n && rank < 15; ++col) {
      int pivot = -1;
      for (int row = rank; row < 15; ++row)
        if (!m[row][col].is_zero()) {
          pivot = row;
          break;
        }
      if (pivot < 0) continue;
      std::swap(m[rank], m[pivot]);
      Scalar inv = Scalar(1) / m[rank][col];
      for (int j = 0; j <= n; ++j) m[rank][j] *= inv;
      for (int row = 0; row < 15; ++row) {
        if (row == rank || m[row][col].is_zero()) continue;
        Scalar f = m[row][col];
        for (int j = 0; j <= n; ++j) m[row][j] -= f * m[rank][j];
      }
      pivot_col[rank] = col;
      ++rank;
    }
    std::string out;
    for (int row = 0; row < rank; ++row) {
      const Scalar& c = m[row][n];
      if (c.is_zero()) continue;
      std::string coeff = c.str();
      std::string term;
      if (coeff == "1")
        term = gens[pivot_col[row]].first;
      else if (coeff == "-1")
        term = "-" + gens[pivot_col[row]].first;
      else
        term = "(" + coeff + ")*" + gens[pivot_col[row]].first;
      if (out.empty())
        out = term;
      else if (term[0] == '-')
        out += " - " + term.substr(1);
      else
        out += " + " + term;
    }
    return out.empty() ? "0" : out;
  };

  for (const auto& [name, x] : gens) {
    EigenEntry entry;
    entry.name = name;
    Element sx = star.apply(x);
    entry.star_image = expand(sx);
    // Eigen-relation under the star.
    for (const Scalar& c : {Scalar(1), Scalar(-1), Scalar::i(), -Scalar::i()}) {
      if (sx == x * MultiPoly(c)) {
        entry.star_eigen = c;
        break;
      }
    }
    Element tx = th.apply(x);
    if (tx == x)
      entry.theta_eigen = 1;
    else if (tx == -x)
      entry.theta_eigen = -1;
    if (!entry.theta_eigen) {
      report.all_theta_eigen = false;
      report.uniform = false;
    } else if (report.uniform) {
      if (report.uniform_value == 0)
        report.uniform_value = *entry.theta_eigen;
      else if (report.uniform_value != *entry.theta_eigen)
        report.uniform = false;
    }
    report.entries.push_back(std::move(entry));
  }
  if (!report.uniform) report.uniform_value = 0;
  return report;
}

}  // namespace cybe
