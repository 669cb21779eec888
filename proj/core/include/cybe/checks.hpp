#pragma once

#include <map>
#include <string>
#include <vector>

#include "cybe/catalog.hpp"
#include "cybe/conformal.hpp"
#include "cybe/morphisms.hpp"

namespace cybe {

enum class Verdict { Pass, Fail, Info };

struct CheckResult {
  std::string id;       // stable key, defines report order
  std::string subject;
  Verdict verdict = Verdict::Info;
  bool required = false;        // required failures gate the exit status
  bool paper_mismatch = false;  // info finding that contradicts a published claim
  std::string witness;
};

struct Report {
  std::string engine_version;
  std::string catalog_path;
  std::string catalog_hash;
  bool strict = false;
  std::vector<CheckResult> checks;

  int required_failures() const;
  bool ok() const { return required_failures() == 0; }
  std::string to_text() const;
  std::string to_json() const;  // stable key order, schema in data/report.schema.json
};

struct RunOptions {
  std::string catalog_path;  // empty = default_catalog_path()
  int jobs = 1;
  bool strict = false;
};

// Executes the full verification battery. Checks are pure and may be
// evaluated concurrently (jobs > 1); the report is byte-identical for
// any job count.
Report run_all(const RunOptions& opts = {});

// Shared precomputed state for the battery; exposed so the CLI can
// drive single-entry checks against the same objects.
struct VerifyContext {
  const LieAlgebra* g = nullptr;
  std::vector<CatalogEntry> entries;
  std::string catalog_path;

  AlgebraMap star3;
  std::vector<AlgebraMap> star4;  // the three eps variants
  AlgebraMap sigma1, sigma2, sigma3, sigma13;
  AlgebraMap beta;
  std::vector<std::string> beta_notes;

  ConformalBasis verbatim_basis;
  ConformalAdjudication adjudication;

  // Catalog entries after CYBE adjudication: verbatim when they pass,
  // minimally repaired otherwise.
  struct AdjudicatedEntry {
    BiVector rmatrix;
    bool verbatim_passes = false;
    std::string repair_note;  // empty when verbatim passes
  };
  std::map<std::string, AdjudicatedEntry> adjudicated;

  static VerifyContext build(const std::string& catalog_path);
};

std::string verdict_name(Verdict v);

}  // namespace cybe
