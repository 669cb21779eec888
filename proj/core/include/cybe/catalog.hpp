#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cybe/frobenius.hpp"
#include "cybe/wedge.hpp"

namespace cybe {

struct ParseError : std::runtime_error {
  int line;
  int column;
  ParseError(const std::string& what, int l, int c)
      : std::runtime_error(what + " (line " + std::to_string(l) + ", column " +
                           std::to_string(c) + ")"),
        line(l), column(c) {}
};

// Result of parsing one expression in the catalog grammar:
//   expr   := term (('+'|'-') term)*
//   term   := coeff ('*' factor)* | factor
//   factor := atom ('^' atom)?
//   atom   := generator | '(' expr ')'
//   coeff  := rational | rational 'i' | parameter
// Generator names h1..h6, e1..e6, em1..em6; a trailing '*' on a
// generator makes it a dual vector. h4,h5,h6 expand to the composite
// Cartan combinations.
struct ParsedValue {
  enum class Kind { Scalar, Vector, BiVector, Dual };
  Kind kind = Kind::Scalar;
  MultiPoly scalar;
  Element element;
  BiVector bivector;
  Functional dual;
};

ParsedValue parse_expression(const std::string& src, const LieAlgebra& g);

// Typed convenience wrappers; a scalar zero coerces to the zero value
// of the requested type.
BiVector parse_bivector(const std::string& src, const LieAlgebra& g);
Element parse_element(const std::string& src, const LieAlgebra& g);
Functional parse_functional(const std::string& src, const LieAlgebra& g);

struct CatalogEntry {
  std::string name;
  std::string source;           // expression text as shipped
  bool is_functional = false;
  BiVector rmatrix;             // for r-entries
  Functional functional;        // for g-entries
  int expected_carrier = 0;     // 8 / 10 / 12 for r-entries
};

// Loads "name = expr" lines ('#' starts a comment). Any parse failure
// or carrier mismatch against the family named by the entry is an
// error: the shipped catalog must load cleanly.
std::vector<CatalogEntry> load_catalog(const std::string& path);

// Resolution order: explicit argument, CYBE_CATALOG env var, built-in
// default location.
std::string default_catalog_path();

const CatalogEntry& catalog_find(const std::vector<CatalogEntry>& entries,
                                 const std::string& name);

// FNV-1a of the file bytes, as fixed-width hex.
std::string catalog_hash(const std::string& path);

// r = c * s after an invertible parameter substitution? The search is
// restricted to monomial maps p -> unit * q^{+-1}; the first match in
// deterministic order is reported.
struct CompareResult {
  bool match = false;
  std::string scalar;     // the proportionality factor, textual
  std::string param_map;  // "" when the identity assignment matched
};
CompareResult compare_up_to_scalar(const BiVector& r, const BiVector& s);

// Minimal catalog-repair search for entries that fail the CYBE: every
// single-coefficient move c -> -c, 3c, c/3 is tried, then pairs of sign
// flips. The catalog itself is never altered.
struct Repair {
  std::string description;
  BiVector repaired;
};
std::vector<Repair> minimal_repairs(const BiVector& r);

}  // namespace cybe
