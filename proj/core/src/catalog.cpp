#include "cybe/catalog.hpp"

#include <cctype>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cybe/schouten.hpp"

namespace cybe {

namespace {

struct Token {
  enum class Type { Number, Imag, Ident, Dual, Plus, Minus, Star, Wedge, LParen, RParen, End };
  Type type = Type::End;
  Rational number;      // Number
  std::string ident;    // Ident / Dual
  int line = 1, col = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& src) : src_(src) { advance(); }
  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) bump();
    tok_ = Token{};
    tok_.line = line_;
    tok_.col = col_;
    if (pos_ >= src_.size()) {
      tok_.type = Token::Type::End;
      return;
    }
    char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
        num += src_[pos_], bump();
      tok_.type = Token::Type::Number;
      tok_.number = Rational(boost::multiprecision::cpp_int(num));
      // "p/q" forms one rational token when the slash is followed by digits.
      if (pos_ < src_.size() && src_[pos_] == '/' && pos_ + 1 < src_.size() &&
          std::isdigit(static_cast<unsigned char>(src_[pos_ + 1]))) {
        bump();
        std::string den;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
          den += src_[pos_], bump();
        boost::multiprecision::cpp_int d(den);
        if (d == 0) throw ParseError("zero denominator", tok_.line, tok_.col);
        tok_.number /= Rational(d);
      }
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string ident;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        ident += src_[pos_], bump();
      if (ident == "i") {
        tok_.type = Token::Type::Imag;
        return;
      }
      tok_.ident = ident;
      // A '*' glued to a generator name marks a dual vector; products of
      // generators do not exist in the grammar, so this is unambiguous.
      if (pos_ < src_.size() && src_[pos_] == '*' && is_generator(ident)) {
        bump();
        tok_.type = Token::Type::Dual;
      } else {
        tok_.type = Token::Type::Ident;
      }
      return;
    }
    bump();
    switch (c) {
      case '+': tok_.type = Token::Type::Plus; return;
      case '-': tok_.type = Token::Type::Minus; return;
      case '*': tok_.type = Token::Type::Star; return;
      case '^': tok_.type = Token::Type::Wedge; return;
      case '(': tok_.type = Token::Type::LParen; return;
      case ')': tok_.type = Token::Type::RParen; return;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", tok_.line, tok_.col);
    }
  }

  static bool is_generator(const std::string& s) {
    if (s.size() < 2) return false;
    if (s[0] == 'h' || s[0] == 'e') {
      std::string digits = (s.substr(0, 2) == "em") ? s.substr(2) : s.substr(1);
      return digits.size() == 1 && digits[0] >= '1' && digits[0] <= '6';
    }
    return false;
  }

  void bump() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  const std::string& src_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token tok_;
};

using Kind = ParsedValue::Kind;

ParsedValue make_scalar(MultiPoly p) {
  ParsedValue v;
  v.kind = Kind::Scalar;
  v.scalar = std::move(p);
  return v;
}

class Parser {
 public:
  Parser(const std::string& src, const LieAlgebra& g) : lex_(src), g_(g) {}

  ParsedValue parse() {
    ParsedValue v = expr();
    const Token& t = lex_.peek();
    if (t.type != Token::Type::End)
      throw ParseError("trailing input after expression", t.line, t.col);
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg, const Token& t) {
    throw ParseError(msg, t.line, t.col);
  }

  ParsedValue add(ParsedValue a, ParsedValue b, const Token& at) {
    // Adding zero of any grade is fine; otherwise grades must agree.
    if (is_zero(a)) return b;
    if (is_zero(b)) return a;
    if (a.kind != b.kind) fail("cannot add values of different grade", at);
    switch (a.kind) {
      case Kind::Scalar: a.scalar += b.scalar; break;
      case Kind::Vector: a.element += b.element; break;
      case Kind::BiVector: a.bivector += b.bivector; break;
      case Kind::Dual:
        for (const auto& [i, c] : b.dual.coeffs) {
          auto [it, fresh] = a.dual.coeffs.emplace(i, c);
          if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) a.dual.coeffs.erase(it);
          }
        }
        break;
    }
    return a;
  }

  static bool is_zero(const ParsedValue& v) {
    switch (v.kind) {
      case Kind::Scalar: return v.scalar.is_zero();
      case Kind::Vector: return v.element.is_zero();
      case Kind::BiVector: return v.bivector.is_zero();
      case Kind::Dual: return v.dual.coeffs.empty();
    }
    return true;
  }

  ParsedValue negate(ParsedValue v) {
    switch (v.kind) {
      case Kind::Scalar: v.scalar = -v.scalar; break;
      case Kind::Vector: v.element = -v.element; break;
      case Kind::BiVector: v.bivector = -v.bivector; break;
      case Kind::Dual:
        for (auto& [i, c] : v.dual.coeffs) c = -c;
        break;
    }
    return v;
  }

  ParsedValue scale(ParsedValue v, const MultiPoly& c) {
    switch (v.kind) {
      case Kind::Scalar: v.scalar *= c; break;
      case Kind::Vector: v.element = v.element * c; break;
      case Kind::BiVector: v.bivector = v.bivector * c; break;
      case Kind::Dual:
        for (auto& [i, coeff] : v.dual.coeffs) coeff *= c;
        break;
    }
    return v;
  }

  ParsedValue mul(ParsedValue a, ParsedValue b, const Token& at) {
    if (a.kind == Kind::Scalar) return scale(std::move(b), a.scalar);
    if (b.kind == Kind::Scalar) return scale(std::move(a), b.scalar);
    fail("cannot multiply two non-scalar values (use '^' for wedges)", at);
  }

  ParsedValue expr() {
    bool neg = false;
    while (lex_.peek().type == Token::Type::Plus || lex_.peek().type == Token::Type::Minus) {
      if (lex_.take().type == Token::Type::Minus) neg = !neg;
    }
    ParsedValue v = term();
    if (neg) v = negate(std::move(v));
    while (lex_.peek().type == Token::Type::Plus || lex_.peek().type == Token::Type::Minus) {
      Token op = lex_.take();
      ParsedValue rhs = term();
      if (op.type == Token::Type::Minus) rhs = negate(std::move(rhs));
      v = add(std::move(v), std::move(rhs), op);
    }
    return v;
  }

  ParsedValue term() {
    ParsedValue v = factor();
    while (lex_.peek().type == Token::Type::Star) {
      Token op = lex_.take();
      ParsedValue rhs = factor();
      v = mul(std::move(v), std::move(rhs), op);
    }
    return v;
  }

  ParsedValue factor() {
    ParsedValue v = atom();
    if (lex_.peek().type == Token::Type::Wedge) {
      Token op = lex_.take();
      ParsedValue rhs = atom();
      if (v.kind != Kind::Vector || rhs.kind != Kind::Vector)
        fail("'^' expects algebra elements on both sides", op);
      ParsedValue out;
      out.kind = Kind::BiVector;
      out.bivector = wedge(v.element, rhs.element);
      return out;
    }
    return v;
  }

  Element generator(const std::string& name, const Token& at) {
    int idx = g_.index_of(name);
    if (idx >= 0) return g_.basis_element(idx);
    if (name == "h4" || name == "h5" || name == "h6")
      return g_.composite_cartan(name[1] - '0');
    fail("unknown generator '" + name + "'", at);
  }

  ParsedValue atom() {
    Token t = lex_.take();
    switch (t.type) {
      case Token::Type::Number:
        return make_scalar(MultiPoly(Scalar(t.number)));
      case Token::Type::Imag:
        return make_scalar(MultiPoly(Scalar::i()));
      case Token::Type::Ident: {
        if (auto p = param_from_name(t.ident)) return make_scalar(MultiPoly::var(*p));
        ParsedValue v;
        v.kind = Kind::Vector;
        v.element = generator(t.ident, t);
        return v;
      }
      case Token::Type::Dual: {
        int idx = g_.index_of(t.ident);
        if (idx < 0) fail("dual of unknown generator '" + t.ident + "'", t);
        ParsedValue v;
        v.kind = Kind::Dual;
        v.dual.algebra = &g_;
        v.dual.coeffs[idx] = MultiPoly(1);
        return v;
      }
      case Token::Type::Minus:
        return negate(atom());
      case Token::Type::LParen: {
        ParsedValue v = expr();
        Token close = lex_.take();
        if (close.type != Token::Type::RParen) fail("expected ')'", close);
        return v;
      }
      default:
        fail("unexpected token", t);
    }
  }

  Lexer lex_;
  const LieAlgebra& g_;
};

}  // namespace

ParsedValue parse_expression(const std::string& src, const LieAlgebra& g) {
  Parser p(src, g);
  ParsedValue v = p.parse();
  if (v.kind == ParsedValue::Kind::Vector && !v.element.algebra())
    v.element = Element(&g);
  return v;
}

BiVector parse_bivector(const std::string& src, const LieAlgebra& g) {
  ParsedValue v = parse_expression(src, g);
  if (v.kind == ParsedValue::Kind::BiVector) {
    if (!v.bivector.algebra()) return BiVector(&g);
    return v.bivector;
  }
  if (v.kind == ParsedValue::Kind::Scalar && v.scalar.is_zero()) return BiVector(&g);
  throw std::invalid_argument("expression is not a bivector: " + src);
}

Element parse_element(const std::string& src, const LieAlgebra& g) {
  ParsedValue v = parse_expression(src, g);
  if (v.kind == ParsedValue::Kind::Vector) return v.element;
  if (v.kind == ParsedValue::Kind::Scalar && v.scalar.is_zero()) return Element(&g);
  throw std::invalid_argument("expression is not an algebra element: " + src);
}

Functional parse_functional(const std::string& src, const LieAlgebra& g) {
  ParsedValue v = parse_expression(src, g);
  if (v.kind == ParsedValue::Kind::Dual) return v.dual;
  if (v.kind == ParsedValue::Kind::Scalar && v.scalar.is_zero()) {
    Functional f;
    f.algebra = &g;
    return f;
  }
  throw std::invalid_argument("expression is not a functional: " + src);
}

std::string default_catalog_path() {
  if (const char* env = std::getenv("CYBE_CATALOG")) return env;
#ifdef CYBE_DEFAULT_CATALOG
  return CYBE_DEFAULT_CATALOG;
#else
  return "catalog.txt";
#endif
}

std::vector<CatalogEntry> load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open catalog file: " + path);
  const LieAlgebra& g = LieAlgebra::sl4();
  std::vector<CatalogEntry> entries;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": missing '='");
    CatalogEntry e;
    e.name = line.substr(0, eq);
    e.name.erase(0, e.name.find_first_not_of(" \t"));
    e.name.erase(e.name.find_last_not_of(" \t") + 1);
    e.source = line.substr(eq + 1);
    e.source.erase(0, e.source.find_first_not_of(" \t"));
    e.source.erase(e.source.find_last_not_of(" \t\r") + 1);
    e.is_functional = !e.name.empty() && e.name[0] == 'g';
    if (e.is_functional) {
      e.functional = parse_functional(e.source, g);
    } else {
      e.rmatrix = parse_bivector(e.source, g);
      if (e.name.rfind("r12", 0) == 0) e.expected_carrier = 12;
      else if (e.name.rfind("r10", 0) == 0) e.expected_carrier = 10;
      else if (e.name.rfind("r8", 0) == 0) e.expected_carrier = 8;
      int carrier = static_cast<int>(e.rmatrix.carrier().size());
      if (e.expected_carrier != 0 && carrier != e.expected_carrier)
        throw std::runtime_error(path + ":" + std::to_string(lineno) + ": entry " + e.name +
                                 " has carrier " + std::to_string(carrier) + ", family says " +
                                 std::to_string(e.expected_carrier));
    }
    entries.push_back(std::move(e));
  }
  return entries;
}

const CatalogEntry& catalog_find(const std::vector<CatalogEntry>& entries,
                                 const std::string& name) {
  for (const auto& e : entries)
    if (e.name == name) return e;
  throw std::invalid_argument("catalog has no entry named '" + name + "'");
}

std::string catalog_hash(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open catalog file: " + path);
  std::uint64_t h = 1469598103934665603ull;
  char c;
  while (in.get(c)) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

// Proportionality r == c * s via cross-ratios (no division needed).
bool proportional(const BiVector& r, const BiVector& s, std::string* scalar_out) {
  if (r.is_zero() || s.is_zero()) {
    if (r.is_zero() && s.is_zero()) {
      if (scalar_out) *scalar_out = "1";
      return true;
    }
    return false;
  }
  auto rk = r.coeffs();
  auto sk = s.coeffs();
  if (rk.size() != sk.size()) return false;
  auto it_r = rk.begin(), it_s = sk.begin();
  for (; it_r != rk.end(); ++it_r, ++it_s)
    if (it_r->first != it_s->first) return false;
  const MultiPoly& r0 = rk.begin()->second;
  const MultiPoly& s0 = sk.begin()->second;
  for (auto ir = rk.begin(), is = sk.begin(); ir != rk.end(); ++ir, ++is)
    if (!(ir->second * s0 == r0 * is->second)) return false;
  if (scalar_out) {
    auto q = MultiPoly::try_divide(r0, s0);
    *scalar_out = q ? q->str() : "(" + r0.str() + ")/(" + s0.str() + ")";
  }
  return true;
}

}  // namespace

CompareResult compare_up_to_scalar(const BiVector& r, const BiVector& s) {
  CompareResult out;
  if (proportional(r, s, &out.scalar)) {
    out.match = true;
    return out;
  }
  // Substitution search: each parameter of s may map to a unit monomial
  // u * q^{+-1} over the parameters in play.
  std::vector<Param> s_params(s.support().begin(), s.support().end());
  if (s_params.empty()) return out;
  std::set<Param> pool_set = s.support();
  for (Param p : r.support()) pool_set.insert(p);
  std::vector<Param> pool(pool_set.begin(), pool_set.end());
  const Scalar units[4] = {Scalar(1), Scalar(-1), Scalar::i(), -Scalar::i()};
  // Option index per parameter: unit * target^exp.
  struct Option {
    Scalar unit;
    Param target;
    int exp;
  };
  std::vector<Option> options;
  for (const Scalar& u : units)
    for (Param q : pool)
      for (int e : {1, -1}) {
        if (e < 0 && !param_is_laurent(q)) continue;
        options.push_back({u, q, e});
      }

  size_t n = s_params.size();
  std::vector<size_t> idx(n, 0);
  while (true) {
    BiVector subst = s;
    std::string desc;
    bool identity = true;
    for (size_t t = 0; t < n; ++t) {
      const Option& o = options[idx[t]];
      if (!(o.unit == Scalar(1)) || o.target != s_params[t] || o.exp != 1) identity = false;
      MultiPoly value = MultiPoly::var(o.target, o.exp) * MultiPoly(o.unit);
      subst = subst.substituted(s_params[t], value);
      desc += (desc.empty() ? "" : ", ") + std::string(param_name(s_params[t])) + " -> " +
              value.str();
    }
    if (!identity && proportional(r, subst, &out.scalar)) {
      out.match = true;
      out.param_map = desc;
      return out;
    }
    size_t t = 0;
    while (t < n && ++idx[t] == options.size()) idx[t++] = 0;
    if (t == n) break;
  }
  return out;
}

std::vector<Repair> minimal_repairs(const BiVector& r) {
  std::vector<Repair> found;
  const LieAlgebra* g = r.algebra();
  std::vector<std::pair<std::pair<int, int>, MultiPoly>> terms(r.coeffs().begin(),
                                                               r.coeffs().end());
  auto rebuilt = [&](size_t skip, const MultiPoly& replacement) {
    BiVector out(g);
    for (size_t t = 0; t < terms.size(); ++t)
      out.add_term(terms[t].first.first, terms[t].first.second,
                   t == skip ? replacement : terms[t].second);
    return out;
  };
  auto label = [&](size_t t) {
    return g->label(terms[t].first.first) + "^" + g->label(terms[t].first.second);
  };
  const MultiPoly three = MultiPoly(3);
  const MultiPoly third = MultiPoly(Scalar(Rational(1, 3)));
  for (size_t t = 0; t < terms.size(); ++t) {
    struct Move {
      MultiPoly value;
      const char* what;
    } moves[] = {{-terms[t].second, "flip sign"},
                 {terms[t].second * three, "scale by 3"},
                 {terms[t].second * third, "scale by 1/3"}};
    for (const auto& mv : moves) {
      BiVector candidate = rebuilt(t, mv.value);
      if (schouten_self(candidate).is_zero())
        found.push_back({std::string(mv.what) + " on " + label(t), candidate});
    }
  }
  if (!found.empty()) return found;
  // Depth two: pairs of sign flips only.
  for (size_t t1 = 0; t1 < terms.size(); ++t1)
    for (size_t t2 = t1 + 1; t2 < terms.size(); ++t2) {
      BiVector candidate(g);
      for (size_t t = 0; t < terms.size(); ++t) {
        MultiPoly c = (t == t1 || t == t2) ? -terms[t].second : terms[t].second;
        candidate.add_term(terms[t].first.first, terms[t].first.second, c);
      }
      if (schouten_self(candidate).is_zero())
        found.push_back({"flip signs on " + label(t1) + " and " + label(t2), candidate});
    }
  return found;
}

}  // namespace cybe
