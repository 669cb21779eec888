#include "cybe/multipoly.hpp"

#include <stdexcept>

namespace cybe {

MultiPoly::MultiPoly(Scalar c) {
  if (!c.is_zero()) terms_.emplace(monomial_one(), std::move(c));
}

MultiPoly MultiPoly::from_term(const Monomial& m, Scalar c) {
  check_monomial(m);
  MultiPoly out;
  if (!c.is_zero()) out.terms_.emplace(m, std::move(c));
  return out;
}

MultiPoly MultiPoly::var(Param p, int exponent) {
  if (exponent < 0 && !param_is_laurent(p))
    throw std::invalid_argument("MultiPoly: negative exponent on non-Laurent parameter " +
                                std::string(param_name(p)));
  MultiPoly out;
  if (exponent == 0) return MultiPoly(Scalar(1));
  Monomial m = monomial_one();
  m[static_cast<int>(p)] = static_cast<std::int16_t>(exponent);
  out.terms_.emplace(m, Scalar(1));
  return out;
}

void MultiPoly::check_monomial(const Monomial& m) {
  for (int k = 0; k < kParamCount; ++k)
    if (m[k] < 0 && !param_is_laurent(static_cast<Param>(k)))
      throw std::domain_error("MultiPoly: negative exponent on non-Laurent parameter " +
                              std::string(param_name(static_cast<Param>(k))));
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == monomial_one());
}

Scalar MultiPoly::constant_term() const {
  auto it = terms_.find(monomial_one());
  return it == terms_.end() ? Scalar(0) : it->second;
}

std::pair<Monomial, Scalar> MultiPoly::single_term() const {
  if (terms_.size() != 1) throw std::domain_error("MultiPoly: not a single term");
  return *terms_.begin();
}

void MultiPoly::insert_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly operator+(const MultiPoly& p, const MultiPoly& q) {
  MultiPoly out = p;
  out += q;
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& q) {
  for (const auto& [m, c] : q.terms_) insert_term(m, c);
  return *this;
}

MultiPoly operator-(const MultiPoly& p) {
  MultiPoly out;
  for (const auto& [m, c] : p.terms_) out.terms_.emplace(m, -c);
  return out;
}

MultiPoly operator-(const MultiPoly& p, const MultiPoly& q) { return p + (-q); }

MultiPoly& MultiPoly::operator-=(const MultiPoly& q) { return *this += -q; }

MultiPoly operator*(const MultiPoly& p, const MultiPoly& q) {
  MultiPoly out;
  for (const auto& [mp, cp] : p.terms_)
    for (const auto& [mq, cq] : q.terms_) {
      Monomial m;
      for (int k = 0; k < kParamCount; ++k)
        m[k] = static_cast<std::int16_t>(mp[k] + mq[k]);
      MultiPoly::check_monomial(m);
      out.insert_term(m, cp * cq);
    }
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& q) { return *this = *this * q; }

MultiPoly MultiPoly::operator*(const Scalar& c) const {
  MultiPoly out;
  if (c.is_zero()) return out;
  for (const auto& [m, coeff] : terms_) out.terms_.emplace(m, coeff * c);
  return out;
}

MultiPoly MultiPoly::substitute(Param p, const MultiPoly& value) const {
  int idx = static_cast<int>(p);
  MultiPoly out;
  for (const auto& [m, c] : terms_) {
    int e = m[idx];
    Monomial rest = m;
    rest[idx] = 0;
    MultiPoly term;
    term.insert_term(rest, c);
    if (e != 0) {
      MultiPoly powed;
      if (e > 0) {
        powed = MultiPoly(Scalar(1));
        for (int k = 0; k < e; ++k) powed *= value;
      } else {
        // Inverting a polynomial only works for unit single terms.
        if (!value.is_single_term())
          throw std::domain_error("MultiPoly: cannot substitute non-monomial into negative power of " +
                                  std::string(param_name(p)));
        auto [vm, vc] = value.single_term();
        Monomial inv;
        for (int k = 0; k < kParamCount; ++k) inv[k] = static_cast<std::int16_t>(-vm[k] * (-e));
        check_monomial(inv);
        powed.insert_term(inv, (Scalar(1) / vc).pow(-e));
      }
      term *= powed;
    }
    out += term;
  }
  return out;
}

Scalar MultiPoly::eval(const std::array<Scalar, kParamCount>& point) const {
  Scalar total(0);
  for (const auto& [m, c] : terms_) {
    Scalar v = c;
    for (int k = 0; k < kParamCount; ++k)
      if (m[k] != 0) v *= point[k].pow(m[k]);
    total += v;
  }
  return total;
}

MultiPoly::ConjMap MultiPoly::conj_identity() {
  ConjMap map{};
  for (int k = 0; k < kParamCount; ++k)
    map[k] = ConjRule{static_cast<Param>(k), 1, Scalar(1)};
  return map;
}

MultiPoly MultiPoly::conjugated(const ConjMap& map) const {
  MultiPoly out;
  for (const auto& [m, c] : terms_) {
    Monomial image{};
    Scalar factor = c.conj();
    for (int k = 0; k < kParamCount; ++k) {
      if (m[k] == 0) continue;
      const ConjRule& rule = map[k];
      image[static_cast<int>(rule.target)] =
          static_cast<std::int16_t>(image[static_cast<int>(rule.target)] + rule.exponent_sign * m[k]);
      factor *= rule.unit.pow(m[k]);
    }
    check_monomial(image);
    out.insert_term(image, factor);
  }
  return out;
}

int MultiPoly::degree_in(Param p) const {
  int idx = static_cast<int>(p);
  int deg = std::numeric_limits<int>::min();
  for (const auto& [m, c] : terms_) deg = std::max(deg, static_cast<int>(m[idx]));
  return terms_.empty() ? std::numeric_limits<int>::min() : deg;
}

MultiPoly MultiPoly::part_of_degree(Param p, int degree) const {
  int idx = static_cast<int>(p);
  MultiPoly out;
  for (const auto& [m, c] : terms_)
    if (m[idx] == degree) out.terms_.emplace(m, c);
  return out;
}

std::set<Param> MultiPoly::support() const {
  std::set<Param> s;
  for (const auto& [m, c] : terms_)
    for (int k = 0; k < kParamCount; ++k)
      if (m[k] != 0) s.insert(static_cast<Param>(k));
  return s;
}

std::optional<MultiPoly> MultiPoly::try_divide(const MultiPoly& p, const MultiPoly& q) {
  if (q.is_zero()) return std::nullopt;
  if (p.is_zero()) return MultiPoly();
  // Single-term divisor: monomial division works termwise in the Laurent ring.
  if (q.is_single_term()) {
    auto [qm, qc] = q.single_term();
    MultiPoly out;
    for (const auto& [m, c] : p.terms_) {
      Monomial d;
      for (int k = 0; k < kParamCount; ++k) {
        d[k] = static_cast<std::int16_t>(m[k] - qm[k]);
        if (d[k] < 0 && !param_is_laurent(static_cast<Param>(k))) return std::nullopt;
      }
      out.terms_.emplace(d, c / qc);
    }
    return out;
  }
  // General long division by the leading term, lex order.
  MultiPoly rem = p, quot;
  const auto& [qm, qc] = *q.terms_.rbegin();
  int guard = 0;
  while (!rem.is_zero()) {
    if (++guard > 100000) return std::nullopt;
    const auto& [rm, rc] = *rem.terms_.rbegin();
    Monomial d;
    for (int k = 0; k < kParamCount; ++k) {
      d[k] = static_cast<std::int16_t>(rm[k] - qm[k]);
      if (d[k] < 0 && !param_is_laurent(static_cast<Param>(k))) return std::nullopt;
    }
    MultiPoly t;
    t.terms_.emplace(d, rc / qc);
    quot += t;
    rem -= t * q;
    if (!rem.is_zero() && rem.terms_.rbegin()->first >= rm) return std::nullopt;
  }
  return quot;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    std::string cs = c.str();
    std::string ms = monomial_to_string(m);
    std::string term;
    if (ms == "1") {
      term = (cs.find_first_of("+-", 1) != std::string::npos) ? "(" + cs + ")" : cs;
    } else if (c == Scalar(1)) {
      term = ms;
    } else if (c == Scalar(-1)) {
      term = "-" + ms;
    } else if (cs.find_first_of("+-", 1) != std::string::npos) {
      term = "(" + cs + ")*" + ms;
    } else {
      term = cs + "*" + ms;
    }
    if (out.empty()) {
      out = term;
    } else if (!term.empty() && term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

}  // namespace cybe
