#include "cybe/params.hpp"

#include <string>

namespace cybe {

namespace {
constexpr std::string_view kNames[kParamCount] = {
    "lambda", "a",
    "a1", "a2", "a3", "a4", "a5", "a6",
    "b1", "b2", "b3",
    "eps1", "eps2", "eps3",
    "c1", "c2", "c3", "c4", "c5", "c6", "c7", "c8", "c9", "c10", "c11", "c12",
};
}  // namespace

std::string_view param_name(Param p) { return kNames[static_cast<int>(p)]; }

std::optional<Param> param_from_name(std::string_view name) {
  for (int k = 0; k < kParamCount; ++k)
    if (kNames[k] == name) return static_cast<Param>(k);
  return std::nullopt;
}

bool param_is_laurent(Param p) {
  int k = static_cast<int>(p);
  return k >= static_cast<int>(Param::a1) && k <= static_cast<int>(Param::a6);
}

std::string monomial_to_string(const Monomial& m) {
  std::string out;
  for (int k = 0; k < kParamCount; ++k) {
    if (m[k] == 0) continue;
    if (!out.empty()) out += "*";
    out += kNames[k];
    if (m[k] != 1) out += "^" + std::to_string(m[k]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace cybe
