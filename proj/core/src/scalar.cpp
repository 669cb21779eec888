#include "cybe/scalar.hpp"

#include <cctype>

namespace cybe {

Scalar Scalar::pow(long e) const {
  if (e == 0) return Scalar(1);
  Scalar base = *this;
  if (e < 0) {
    base = Scalar(1) / base;
    e = -e;
  }
  Scalar acc(1);
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

std::string rational_to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

std::string Scalar::str() const {
  if (is_zero()) return "0";
  std::string out;
  if (re != 0) out = rational_to_string(re);
  if (im != 0) {
    std::string im_part;
    if (im == 1)
      im_part = "i";
    else if (im == -1)
      im_part = "-i";
    else
      im_part = rational_to_string(im) + "*i";
    if (out.empty())
      out = im_part;
    else if (im_part[0] == '-')
      out += im_part;
    else
      out += "+" + im_part;
  }
  return out;
}

namespace {

// Reads [sign] digits [/ digits] [*]? [i]? starting at pos; returns the
// parsed value as (rational, is_imaginary).
struct NumTok {
  Rational value;
  bool imaginary = false;
};

size_t parse_number(std::string_view s, size_t pos, NumTok& out) {
  size_t start = pos;
  bool neg = false;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    neg = (s[pos] == '-');
    ++pos;
  }
  if (pos < s.size() && s[pos] == 'i') {
    out.value = neg ? -1 : 1;
    out.imaginary = true;
    return pos + 1;
  }
  size_t d0 = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == d0) throw std::invalid_argument("Scalar: expected digits in '" + std::string(s) + "'");
  Rational v(boost::multiprecision::cpp_int(std::string(s.substr(d0, pos - d0))));
  if (pos < s.size() && s[pos] == '/') {
    ++pos;
    size_t d1 = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == d1) throw std::invalid_argument("Scalar: bad denominator in '" + std::string(s) + "'");
    boost::multiprecision::cpp_int den(std::string(s.substr(d1, pos - d1)));
    if (den == 0) throw std::invalid_argument("Scalar: zero denominator");
    v /= Rational(den);
  }
  if (pos < s.size() && s[pos] == '*' && pos + 1 < s.size() && s[pos + 1] == 'i') {
    out.imaginary = true;
    pos += 2;
  } else if (pos < s.size() && s[pos] == 'i') {
    out.imaginary = true;
    ++pos;
  }
  out.value = neg ? Rational(-v) : v;
  (void)start;
  return pos;
}

}  // namespace

Scalar scalar_from_string(std::string_view text) {
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  if (compact.empty()) throw std::invalid_argument("Scalar: empty string");
  Scalar result;
  size_t pos = 0;
  while (pos < compact.size()) {
    NumTok tok;
    pos = parse_number(compact, pos, tok);
    if (tok.imaginary)
      result.im += tok.value;
    else
      result.re += tok.value;
    if (pos < compact.size() && compact[pos] != '+' && compact[pos] != '-')
      throw std::invalid_argument("Scalar: trailing junk in '" + compact + "'");
  }
  return result;
}

}  // namespace cybe
