// Batch verifier for the classical r-matrices of the d=4 conformal
// algebra: exact CYBE checks, reality conditions, Weyl transport and the
// quasi-Frobenius reconstruction, with a deterministic report.

#include <CLI11.hpp>
#include <algorithm>
#include <iostream>

#include "cybe/checks.hpp"
#include "cybe/schouten.hpp"

namespace {

using namespace cybe;

std::map<Param, Scalar> parse_param_values(const std::vector<std::string>& kvs) {
  std::map<Param, Scalar> out;
  for (const std::string& kv : kvs) {
    auto eq = kv.find('=');
    if (eq == std::string::npos)
      throw CLI::ValidationError("--params", "expected name=value, got '" + kv + "'");
    auto p = param_from_name(kv.substr(0, eq));
    if (!p)
      throw CLI::ValidationError("--params", "unknown parameter '" + kv.substr(0, eq) + "'");
    out[*p] = scalar_from_string(kv.substr(eq + 1));
  }
  return out;
}

BiVector substituted(BiVector r, const std::map<Param, Scalar>& values) {
  for (const auto& [p, v] : values) r = r.substituted(p, MultiPoly(v));
  return r;
}

int run_verify(const std::string& catalog, int jobs, bool strict, const std::string& format) {
  RunOptions opts;
  opts.catalog_path = catalog;
  opts.jobs = jobs;
  opts.strict = strict;
  Report report = run_all(opts);
  std::cout << (format == "json" ? report.to_json() : report.to_text());
  return report.ok() ? 0 : 1;
}

int run_check(const std::string& catalog, const std::string& entry,
              const std::map<Param, Scalar>& values) {
  VerifyContext ctx = VerifyContext::build(catalog);
  const CatalogEntry& e = catalog_find(ctx.entries, entry);
  if (e.is_functional) {
    std::cout << entry << " is a functional: " << e.functional.str() << "\n";
    return 0;
  }
  BiVector r = substituted(e.rmatrix, values);
  CybeResult res = cybe_residual(r);
  std::cout << entry << ": carrier " << r.carrier().size() << ", CYBE "
            << (res.is_solution ? "pass" : "FAIL") << "\n";
  for (const auto& [p, parts] : res.per_degree) {
    std::cout << "  " << param_name(p) << " degree parts:";
    for (const auto& [d, zero] : parts)
      std::cout << " " << d << (zero ? ":0" : ":nonzero");
    std::cout << "\n";
  }
  if (!res.is_solution) {
    std::cout << "  residual: " << res.residual.str() << "\n";
    auto repairs = minimal_repairs(r);
    for (const auto& rep : repairs) std::cout << "  minimal repair: " << rep.description << "\n";
    return 1;
  }
  RealityResult real3 = reality_check(r, ctx.star3);
  std::cout << "  reality under the case (i) star: " << reality_verdict_name(real3.verdict)
            << (real3.constraint.empty() ? "" : " under " + real3.constraint) << "\n";
  return 0;
}

int run_derive(const std::string& catalog, const std::string& functional,
               const std::string& parabolic_name, const std::map<Param, Scalar>& values) {
  VerifyContext ctx = VerifyContext::build(catalog);
  const LieAlgebra& g = *ctx.g;

  Functional f;
  bool named_entry =
      std::any_of(ctx.entries.begin(), ctx.entries.end(),
                  [&](const CatalogEntry& e) { return e.name == functional && e.is_functional; });
  if (named_entry)
    f = catalog_find(ctx.entries, functional).functional;
  else
    f = parse_functional(functional, g);
  for (const auto& [p, v] : values)
    for (auto& [idx, c] : f.coeffs) c = c.substitute(p, MultiPoly(v));

  Subalgebra p;
  if (parabolic_name == "p1")
    p = parabolic(g, {basis::EM1});
  else if (parabolic_name == "p2")
    p = parabolic(g, {basis::EM2});
  else if (parabolic_name == "p3")
    p = parabolic(g, {basis::EM3});
  else if (parabolic_name == "p23")
    p = parabolic(g, {basis::EM2, basis::EM3});
  else if (parabolic_name == "borel")
    p = borel_plus(g);
  else
    throw CLI::ValidationError("parabolic", "expected p1, p2, p3, p23 or borel");

  std::cout << "subalgebra " << p.str() << " (dim " << p.dim() << ")\n";
  MultiPoly pf = pfaffian(form_from_functional(f, p));
  std::cout << "Pf(B) = " << pf.str() << "\n";
  if (pf.is_zero()) {
    std::cout << "form is singular; no r-matrix\n";
    return 1;
  }
  BiVector r = rmatrix_from_functional(f, p, functional);
  std::cout << "r = " << r.str() << "\n";
  for (const CatalogEntry& e : ctx.entries) {
    if (e.is_functional) continue;
    CompareResult cmp = compare_up_to_scalar(r, e.rmatrix);
    if (cmp.match) {
      std::cout << "matches catalog entry " << e.name << " with scalar " << cmp.scalar
                << (cmp.param_map.empty() ? "" : " and map " + cmp.param_map) << "\n";
      break;
    }
  }
  return 0;
}

int run_schouten(const std::string& lhs, const std::string& rhs,
                 const std::map<Param, Scalar>& values) {
  const LieAlgebra& g = LieAlgebra::sl4();
  BiVector a = substituted(parse_bivector(lhs, g), values);
  BiVector b = substituted(parse_bivector(rhs, g), values);
  TriVector mixed = schouten_mixed(a, b);
  std::cout << "<<r,s>> = " << mixed.str() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verifier for classical r-matrices of the conformal algebra"};
  app.require_subcommand(1);

  std::string catalog;
  int jobs = 1;
  bool strict = false;
  std::vector<std::string> params;
  app.add_option("--catalog", catalog, "catalog file (default: CYBE_CATALOG or built-in path)");
  app.add_option("--jobs", jobs, "number of worker threads for check evaluation")
      ->check(CLI::PositiveNumber);
  app.add_flag("--strict", strict, "treat documented deviations from published claims as failures");
  app.add_option("--params", params, "substitute numeric parameter values, e.g. a=1/2 or lambda=0");

  std::string format = "text";
  auto* verify = app.add_subcommand("verify", "run the complete verification battery");
  verify->add_option("--format", format, "report format")->check(CLI::IsMember({"text", "json"}));

  auto* report_cmd = app.add_subcommand("report", "same battery, report only");
  std::string report_format = "json";
  report_cmd->add_option("--format", report_format, "report format")
      ->check(CLI::IsMember({"text", "json"}));

  std::string entry;
  auto* check = app.add_subcommand("check", "check a single catalog entry");
  check->add_option("entry", entry, "catalog entry name, e.g. r8_1")->required();

  std::string functional, parab;
  auto* derive = app.add_subcommand("derive", "derive the r-matrix of a functional on a parabolic");
  derive->add_option("functional", functional, "catalog name (g1a) or expression (e5*+e4*+e1*)")
      ->required();
  derive->add_option("parabolic", parab, "p1, p2, p3, p23 or borel")->required();

  std::string lhs, rhs;
  auto* schouten_cmd = app.add_subcommand("schouten", "mixed Schouten bracket of two bivectors");
  schouten_cmd->add_option("lhs", lhs, "bivector expression")->required();
  schouten_cmd->add_option("rhs", rhs, "bivector expression")->required();

  try {
    app.parse(argc, argv);
    auto values = parse_param_values(params);
    if (*verify) return run_verify(catalog, jobs, strict, format);
    if (*report_cmd) return run_verify(catalog, jobs, strict, report_format);
    if (*check) return run_check(catalog, entry, values);
    if (*derive) return run_derive(catalog, functional, parab, values);
    if (*schouten_cmd) return run_schouten(lhs, rhs, values);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? 2 : 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
