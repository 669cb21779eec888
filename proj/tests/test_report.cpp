#include <doctest.h>

#include <fstream>
#include <json.hpp>

#include "cybe/checks.hpp"

using namespace cybe;

namespace {
Report run(int jobs, bool strict = false) {
  RunOptions opts;
  opts.catalog_path = CYBE_TEST_CATALOG;
  opts.jobs = jobs;
  opts.strict = strict;
  return run_all(opts);
}
}  // namespace

TEST_CASE("report is deterministic across job counts") {
  Report a = run(1);
  Report b = run(4);
  CHECK(a.to_text() == b.to_text());
  CHECK(a.to_json() == b.to_json());
}

TEST_CASE("required checks all pass on the shipped catalog") {
  Report r = run(2);
  for (const auto& c : r.checks) {
    INFO(c.id, ": ", c.witness);
    if (c.required) CHECK(c.verdict != Verdict::Fail);
  }
  CHECK(r.ok());
}

TEST_CASE("strict mode surfaces the documented deviations") {
  Report r = run(2, /*strict=*/true);
  CHECK(r.required_failures() > 0);  // the adjudicated typos count as failures
  bool has_mismatch = false;
  for (const auto& c : r.checks) has_mismatch |= c.paper_mismatch;
  CHECK(has_mismatch);
}

TEST_CASE("json output conforms to the shipped schema") {
  Report r = run(2);
  auto doc = nlohmann::json::parse(r.to_json());

  std::ifstream schema_in(CYBE_TEST_SCHEMA);
  REQUIRE(schema_in.good());
  auto schema = nlohmann::json::parse(schema_in);

  // Structural validation against the schema: required keys and types.
  for (const auto& key : schema["required"]) CHECK(doc.contains(key.get<std::string>()));
  CHECK(doc["engine_version"].is_string());
  CHECK(doc["catalog"].is_object());
  CHECK(doc["catalog"]["path"].is_string());
  CHECK(doc["catalog"]["hash"].is_string());
  CHECK(doc["summary"]["total"].is_number_unsigned());
  CHECK(doc["checks"].is_array());
  CHECK(doc["checks"].size() == doc["summary"]["total"].get<size_t>());
  const auto verdicts = {"pass", "fail", "info"};
  for (const auto& c : doc["checks"]) {
    for (const auto& key : schema["properties"]["checks"]["items"]["required"])
      CHECK(c.contains(key.get<std::string>()));
    CHECK(std::find(verdicts.begin(), verdicts.end(), c["verdict"].get<std::string>()) !=
          verdicts.end());
  }
}

TEST_CASE("catalog hash is stable and input-sensitive") {
  std::string h1 = catalog_hash(CYBE_TEST_CATALOG);
  std::string h2 = catalog_hash(CYBE_TEST_CATALOG);
  CHECK(h1 == h2);
  CHECK(h1.size() == 16);
}
