#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace cybe {

// Fixed registry of formal parameters. All symbolic computation in the
// engine happens over Q(i)[params], with Laurent exponents permitted in
// the a1..a6 block only (Weyl-reflection scale factors enter inverted).
enum class Param : std::uint8_t {
  lambda = 0,
  a,
  a1, a2, a3, a4, a5, a6,
  b1, b2, b3,
  eps1, eps2, eps3,
  c1, c2, c3, c4, c5, c6, c7, c8, c9, c10, c11, c12,
};

inline constexpr int kParamCount = 26;

std::string_view param_name(Param p);
std::optional<Param> param_from_name(std::string_view name);

// True for parameters allowed to carry negative exponents.
bool param_is_laurent(Param p);

// Exponent vector over the full registry, compared lexicographically in
// registry order. This ordering is the canonical term order everywhere.
using Monomial = std::array<std::int16_t, kParamCount>;

inline Monomial monomial_one() { return Monomial{}; }

std::string monomial_to_string(const Monomial& m);

}  // namespace cybe
