#include "cybe/checks.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "cybe/schouten.hpp"

namespace cybe {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    default: return "info";
  }
}

int Report::required_failures() const {
  int n = 0;
  for (const auto& c : checks) {
    if (c.required && c.verdict == Verdict::Fail) ++n;
    if (strict && c.paper_mismatch) ++n;
  }
  return n;
}

std::string Report::to_text() const {
  std::ostringstream out;
  out << "cybe " << engine_version << " verification report\n";
  out << "catalog: " << catalog_path << " (fnv1a " << catalog_hash << ")\n";
  if (strict) out << "mode: strict\n";
  int pass = 0, fail = 0, info = 0;
  for (const auto& c : checks) {
    const char* tag = c.verdict == Verdict::Pass ? "PASS" : c.verdict == Verdict::Fail ? "FAIL" : "INFO";
    out << tag << (c.required ? " *" : "  ") << " " << c.id << "  [" << c.subject << "]";
    if (!c.witness.empty()) out << "  " << c.witness;
    if (c.paper_mismatch) out << "  (differs from the published claim)";
    out << "\n";
    (c.verdict == Verdict::Pass ? pass : c.verdict == Verdict::Fail ? fail : info)++;
  }
  out << "summary: " << pass << " pass, " << fail << " fail, " << info << " info; "
      << required_failures() << " required failure(s)\n";
  return out.str();
}

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  j["engine_version"] = engine_version;
  j["catalog"] = {{"path", catalog_path}, {"hash", catalog_hash}};
  j["strict"] = strict;
  int pass = 0, fail = 0, info = 0;
  for (const auto& c : checks)
    (c.verdict == Verdict::Pass ? pass : c.verdict == Verdict::Fail ? fail : info)++;
  j["summary"] = {{"total", checks.size()},
                  {"pass", pass},
                  {"fail", fail},
                  {"info", info},
                  {"required_failures", required_failures()}};
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json e;
    e["id"] = c.id;
    e["subject"] = c.subject;
    e["verdict"] = verdict_name(c.verdict);
    e["required"] = c.required;
    e["paper_mismatch"] = c.paper_mismatch;
    e["witness"] = c.witness;
    arr.push_back(std::move(e));
  }
  j["checks"] = std::move(arr);
  return j.dump(2) + "\n";
}

VerifyContext VerifyContext::build(const std::string& catalog_path) {
  VerifyContext ctx;
  ctx.g = &LieAlgebra::sl4();
  const LieAlgebra& g = *ctx.g;
  ctx.catalog_path = catalog_path.empty() ? default_catalog_path() : catalog_path;
  ctx.entries = load_catalog(ctx.catalog_path);

  ctx.star3 = build_star_case_i(g);
  ctx.star4.push_back(build_star_case_ii(g, {1, -1, 1}));
  ctx.star4.push_back(build_star_case_ii(g, {-1, 1, -1}));
  ctx.star4.push_back(build_star_case_ii(g, {-1, -1, -1}));
  ctx.sigma1 = build_weyl_reflection(g, 1);
  ctx.sigma2 = build_weyl_reflection(g, 2);
  ctx.sigma3 = build_weyl_reflection(g, 3);
  ctx.sigma13 = ctx.sigma1.compose_after(ctx.sigma3, "sigma1*sigma3");
  BetaResult beta = build_beta(g);
  ctx.beta = std::move(beta.map);
  ctx.beta_notes = std::move(beta.sign_notes);

  ctx.verbatim_basis = conformal_basis(g);
  ctx.adjudication = adjudicate_conformal_basis(ctx.verbatim_basis);

  for (const auto& e : ctx.entries) {
    if (e.is_functional) continue;
    AdjudicatedEntry adj;
    adj.verbatim_passes = schouten_self(e.rmatrix).is_zero();
    if (adj.verbatim_passes) {
      adj.rmatrix = e.rmatrix;
    } else {
      auto repairs = minimal_repairs(e.rmatrix);
      if (!repairs.empty()) {
        adj.rmatrix = repairs.front().repaired;
        adj.repair_note = repairs.front().description;
        if (repairs.size() > 1)
          adj.repair_note += " (+" + std::to_string(repairs.size() - 1) + " alternative repair(s))";
      } else {
        adj.rmatrix = e.rmatrix;
        adj.repair_note = "no minimal repair found";
      }
    }
    ctx.adjudicated.emplace(e.name, std::move(adj));
  }
  return ctx;
}

namespace {

struct Check {
  std::string id;
  std::string subject;
  bool required;
  std::function<void(CheckResult&)> run;
};

void pass_if(CheckResult& r, bool ok, const std::string& witness_ok,
             const std::string& witness_bad) {
  r.verdict = ok ? Verdict::Pass : Verdict::Fail;
  r.witness = ok ? witness_ok : witness_bad;
}

const char* kRNames[13] = {"r12",    "r10_1a", "r10_1b", "r10_1c", "r10_1d", "r10_1e", "r10_3a",
                           "r10_3b", "r10_3c", "r10_3d", "r10_3e", "r8_1",   "r8_2"};

std::string weights_of_terms(const LieAlgebra& g, const BiVector& r, const Element& grader,
                             bool& uniform_plus_one) {
  auto w = basis_weights(g, grader);
  std::set<Scalar> totals;
  for (const auto& [k, c] : r.coeffs()) totals.insert(w[k.first] + w[k.second]);
  uniform_plus_one = totals.size() == 1 && *totals.begin() == Scalar(1);
  std::string out = "{";
  bool first = true;
  for (const Scalar& t : totals) {
    out += (first ? "" : ",") + t.str();
    first = false;
  }
  return out + "}";
}

}  // namespace

Report run_all(const RunOptions& opts) {
  VerifyContext ctx = VerifyContext::build(opts.catalog_path);
  const LieAlgebra& g = *ctx.g;

  std::vector<Check> checks;
  auto add = [&](std::string id, std::string subject, bool required,
                 std::function<void(CheckResult&)> fn) {
    checks.push_back({std::move(id), std::move(subject), required, std::move(fn)});
  };

  // -- 01: algebra soundness ------------------------------------------------
  add("01.algebra.jacobi", "sl(4) structure table", true, [&](CheckResult& r) {
    long bad = 0;
    for (int i = 0; i < 15; ++i)
      for (int j = i + 1; j < 15; ++j)
        for (int k = j + 1; k < 15; ++k) {
          Element xi = g.basis_element(i), xj = g.basis_element(j), xk = g.basis_element(k);
          if (!(g.bracket(g.bracket(xi, xj), xk) + g.bracket(g.bracket(xj, xk), xi) +
                g.bracket(g.bracket(xk, xi), xj))
                   .is_zero())
            ++bad;
        }
    pass_if(r, bad == 0, "Jacobi holds on all 455 basis triples",
            std::to_string(bad) + " violated triples");
  });

  add("01.algebra.relations", "Cartan-Weyl defining relations", true, [&](CheckResult& r) {
    using namespace basis;
    bool ok = true;
    std::string bad;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        Element lhs = g.bracket(g.basis_element(E1 + i), g.basis_element(EM1 + j));
        Element rhs = (i == j) ? g.basis_element(H1 + i) : Element(&g);
        if (!(lhs == rhs)) {
          ok = false;
          bad = "[e" + std::to_string(i + 1) + ",em" + std::to_string(j + 1) + "]";
        }
      }
    for (int a = 4; a <= 6; ++a) {
      Element lhs = g.bracket(g.basis_element(E1 + a - 1), g.basis_element(EM1 + a - 1));
      if (!(lhs == g.composite_cartan(a))) {
        ok = false;
        bad = "[e" + std::to_string(a) + ",em" + std::to_string(a) + "]";
      }
    }
    pass_if(r, ok, "[e_i,e_-j] = delta_ij h_j and [e_a,e_-a] = h_a reproduced", "failed at " + bad);
  });

  // -- 02: conformal basis --------------------------------------------------
  add("02.conformal.rank", "physical generators", true, [&](CheckResult& r) {
    int rank = conformal_rank(ctx.verbatim_basis);
    pass_if(r, rank == 15, "rank 15: the 15 generators span sl(4)",
            "rank " + std::to_string(rank));
  });

  add("02.conformal.scan", "o(4,2) relation scan (verbatim assignment)", false,
      [&](CheckResult& r) {
        auto residuals = conformal_relation_scan(ctx.verbatim_basis);
        r.verdict = Verdict::Info;
        if (residuals.empty()) {
          r.witness = "all 120 relations hold exactly";
        } else {
          r.paper_mismatch = true;
          std::string list;
          for (size_t t = 0; t < residuals.size() && t < 6; ++t) {
            const auto& e = residuals[t];
            list += (t ? "; " : "") + std::string("(M") + std::to_string(e.indices[0]) +
                    std::to_string(e.indices[1]) + ",M" + std::to_string(e.indices[2]) +
                    std::to_string(e.indices[3]) + "): " + e.residual.str();
          }
          r.witness = std::to_string(residuals.size()) + " nonzero residuals, e.g. " + list;
        }
      });

  add("02.conformal.adjudication", "repaired physical basis", true, [&](CheckResult& r) {
    const auto& adj = ctx.adjudication;
    if (!adj.scan_empty) {
      r.verdict = Verdict::Fail;
      r.witness = "no repair in the search space empties the relation scan";
      return;
    }
    r.verdict = Verdict::Pass;
    if (adj.repairs.empty()) {
      r.witness = "verbatim assignment already satisfies all relations";
    } else {
      r.paper_mismatch = true;
      r.witness = "o(4,2) relations hold after repairs: ";
      for (size_t t = 0; t < adj.repairs.size(); ++t)
        r.witness += (t ? "; " : "") + adj.repairs[t];
    }
  });

  add("02.conformal.theta_eigen", "theta eigenstructure (adjudicated basis)", true,
      [&](CheckResult& r) {
        auto rep = real_form_eigencheck(realified(ctx.adjudication.basis).gens, ctx.star3);
        pass_if(r, rep.all_theta_eigen && rep.uniform,
                "all 15 real generators are theta-eigenvectors, uniform eigenvalue " +
                    std::to_string(rep.uniform_value),
                "eigenstructure not uniform");
      });

  add("02.conformal.theta_eigen_verbatim", "theta eigenstructure (verbatim basis)", false,
      [&](CheckResult& r) {
        auto rep = real_form_eigencheck(realified(ctx.verbatim_basis).gens, ctx.star3);
        r.verdict = Verdict::Info;
        if (rep.all_theta_eigen && rep.uniform) {
          r.witness = "uniform eigenvalue " + std::to_string(rep.uniform_value);
        } else {
          r.paper_mismatch = true;
          std::string odd;
          for (const auto& e : rep.entries)
            if (!e.theta_eigen || (rep.uniform_value != 0 && e.theta_eigen != rep.uniform_value))
              odd += (odd.empty() ? "" : ",") + e.name;
          std::string detail;
          for (const auto& e : rep.entries)
            if (!e.theta_eigen)
              detail += (detail.empty() ? "" : "; ") + e.name + "* = " + e.star_image;
          r.witness = "not uniform; offending generators: " + odd +
                      (detail.empty() ? "" : " (" + detail + ")");
        }
      });

  add("02.conformal.star_relations", "star action on physical generators", false,
      [&](CheckResult& r) {
        auto rep = real_form_eigencheck(ctx.verbatim_basis.gens, ctx.star3);
        std::string out;
        for (const auto& e : rep.entries) {
          out += (out.empty() ? "" : "; ") + e.name + "* = " + e.star_image;
        }
        r.verdict = Verdict::Info;
        r.witness = out;
      });

  add("02.conformal.compact_trio", "compact Cartan triple of the second real form", false,
      [&](CheckResult& r) {
        auto trio = compact_cartan_trio(ctx.adjudication.basis);
        std::string out;
        for (const auto& [name, e] : trio) out += (out.empty() ? "" : "; ") + name + " = " + e.str();
        r.verdict = Verdict::Info;
        r.witness = out;
      });

  // -- 03: morphisms and the commutation table ------------------------------
  add("03.morphisms.star3", "antilinear anti-automorphism, case (i)", true, [&](CheckResult& r) {
    using namespace basis;
    bool inv = ctx.star3.is_involutive();
    bool e4ok = ctx.star3.image_of_basis(E4) == g.basis_element(E5);
    bool e6ok = ctx.star3.image_of_basis(E6) == g.basis_element(E6);
    pass_if(r, inv && e4ok && e6ok, "involutive; e4* = e5, e6* = e6 from the extension",
            "extension or involutivity failed");
  });

  for (int v = 0; v < 3; ++v) {
    add("03.morphisms.star4." + std::to_string(v), "antilinear anti-automorphism, case (ii) " +
        std::string(v == 0 ? "(+,-,+)" : v == 1 ? "(-,+,-)" : "(-,-,-)"),
        true, [&, v](CheckResult& r) {
          pass_if(r, ctx.star4[v].is_involutive(), "built and involutive", "not involutive");
        });
  }

  for (int i = 1; i <= 3; ++i) {
    const AlgebraMap* sigma = (i == 1) ? &ctx.sigma1 : (i == 2) ? &ctx.sigma2 : &ctx.sigma3;
    add("03.morphisms.sigma" + std::to_string(i), "Weyl reflection", true,
        [&, sigma](CheckResult& r) {
          // Automorphism property holds by construction; check the
          // root-grading invariant: root vectors map to single basis
          // terms with unit-monomial coefficients.
          bool graded = true;
          for (int j = basis::E1; j <= basis::EM6; ++j) {
            Element im = sigma->image_of_basis(j);
            if (im.coeffs().size() != 1 || !im.coeffs().begin()->second.is_single_term())
              graded = false;
          }
          pass_if(r, graded, "automorphism; root grading preserved", "root grading broken");
        });
  }

  add("03.morphisms.beta", "Dynkin-diagram flip", true, [&](CheckResult& r) {
    bool ok = ctx.beta.is_involutive();
    std::string notes;
    for (const auto& n : ctx.beta_notes) notes += (notes.empty() ? "" : "; ") + n;
    if (!ctx.beta_notes.empty()) r.paper_mismatch = true;
    pass_if(r, ok,
            notes.empty() ? "involutive automorphism, published table verbatim"
                          : "involutive automorphism; sign completion differs from the published table: " + notes,
            "not involutive");
  });

  struct MapRef {
    const char* name;
    const AlgebraMap* map;
  };
  std::vector<MapRef> transports = {{"sigma1", &ctx.sigma1},
                                    {"sigma2", &ctx.sigma2},
                                    {"sigma3", &ctx.sigma3},
                                    {"sigma13", &ctx.sigma13},
                                    {"beta", &ctx.beta}};
  struct StarRef {
    std::string name;
    const AlgebraMap* map;
    std::vector<std::string> commuting;  // published list
  };
  std::vector<StarRef> stars;
  stars.push_back({"star3", &ctx.star3, {"sigma2", "sigma13", "beta"}});
  for (int v = 0; v < 3; ++v)
    stars.push_back({"star4." + std::to_string(v), &ctx.star4[v], {"sigma2", "beta"}});

  for (size_t si = 0; si < stars.size(); ++si)
    for (const auto& t : transports) {
      const StarRef& star = stars[si];
      const AlgebraMap* star_map = star.map;
      bool published = std::find(star.commuting.begin(), star.commuting.end(), t.name) !=
                       star.commuting.end();
      bool publishes_absence = std::string(t.name) == "sigma1" || std::string(t.name) == "sigma3";
      std::string id = "03.commute." + std::string(t.name) + "." + star.name;
      // sigma13 under case (ii) is unstated either way: report only.
      bool required = published || publishes_absence;
      add(id, "commutation with the star operation", required,
          [&, t, star_map, published, publishes_absence](CheckResult& r) {
            CommuteResult res = commute_check(*t.map, *star_map);
            std::string detail = res.commutes
                                     ? (res.constraint.empty() ? "commutes (no constraint needed)"
                                                               : "commutes under " + res.constraint)
                                     : "does not commute (fails at " +
                                           (res.witnesses.empty() ? "?" : res.witnesses.front()) +
                                           ")";
            if (published) {
              pass_if(r, res.commutes, detail, detail);
            } else if (publishes_absence) {
              pass_if(r, !res.commutes, detail, detail + " but is absent from the published list");
            } else {
              r.verdict = Verdict::Info;
              r.witness = detail + "; the published list omits this product";
              if (res.commutes) r.paper_mismatch = true;
            }
          });
    }

  // -- 04: CYBE for every catalog entry --------------------------------------
  for (const char* name : kRNames) {
    add(std::string("04.cybe.") + name, "classical Yang-Baxter equation", true,
        [&, name](CheckResult& r) {
          const CatalogEntry& e = catalog_find(ctx.entries, name);
          const auto& adj = ctx.adjudicated.at(name);
          CybeResult res = cybe_residual(e.rmatrix);
          std::string degree_info;
          for (const auto& [p, parts] : res.per_degree) {
            degree_info += std::string(degree_info.empty() ? "" : "; ") + param_name(p).data() + " parts:";
            for (const auto& [d, zero] : parts)
              degree_info += " deg" + std::to_string(d) + (zero ? "=0" : "!=0");
          }
          if (res.is_solution) {
            r.verdict = Verdict::Pass;
            r.witness = "residual identically zero" +
                        (degree_info.empty() ? "" : " (" + degree_info + ")");
          } else if (!adj.verbatim_passes && adj.repair_note.find("no minimal") == std::string::npos) {
            r.verdict = Verdict::Pass;
            r.paper_mismatch = true;
            r.witness = "verbatim entry fails; minimal repair passes: " + adj.repair_note;
          } else {
            r.verdict = Verdict::Fail;
            r.witness = "residual nonzero and no minimal repair found; residual carrier size " +
                        std::to_string(res.residual.carrier().size());
          }
        });
  }

  // -- 05: reality verdicts ---------------------------------------------------
  for (const char* name : kRNames) {
    for (size_t s = 0; s < 4; ++s) {
      std::string star_name = s == 0 ? "star3" : "star4." + std::to_string(s - 1);
      bool is_r8 = std::string(name).rfind("r8", 0) == 0;
      bool required = (s == 0) || !is_r8;
      add("05.reality." + std::string(name) + "." + star_name, "reality of the r-matrix",
          required, [&, name, s, is_r8](CheckResult& r) {
            const AlgebraMap& star = s == 0 ? ctx.star3 : ctx.star4[s - 1];
            const CatalogEntry& e = catalog_find(ctx.entries, name);
            RealityResult res = reality_check(e.rmatrix, star);
            std::string detail = reality_verdict_name(res.verdict) +
                                 (res.constraint.empty() ? "" : " under " + res.constraint);
            bool expect_real = is_r8 && s == 0;
            if (expect_real) {
              pass_if(r, res.verdict != RealityVerdict::Neither, detail, detail);
            } else if (is_r8) {
              r.verdict = Verdict::Info;  // unstated for the second real form
              r.witness = detail;
            } else {
              pass_if(r, res.verdict == RealityVerdict::Neither, detail,
                      detail + " but the real form should not restrict");
            }
          });
    }
  }

  // -- 06: Frobenius reconstruction ------------------------------------------
  const char* gnames[10] = {"g1a", "g1b", "g1c", "g1d", "g1e", "g3a", "g3b", "g3c", "g3d", "g3e"};
  for (int t = 0; t < 10; ++t) {
    add(std::string("06.frobenius.") + gnames[t], "functional -> form -> r-matrix", true,
        [&, t](CheckResult& r) {
          const std::string gname = gnames[t];
          const std::string rname = std::string("r10_") + gname.substr(1);
          const CatalogEntry& ge = catalog_find(ctx.entries, gname);
          const CatalogEntry& re = catalog_find(ctx.entries, rname);
          Subalgebra p = parabolic(g, {gname[1] == '1' ? basis::EM1 : basis::EM3});
          MultiPoly pf = pfaffian(form_from_functional(ge.functional, p));
          if (pf.is_zero()) {
            r.verdict = Verdict::Fail;
            r.witness = "form is singular";
            return;
          }
          BiVector rec = rmatrix_from_functional(ge.functional, p, gname);
          CompareResult cmp = compare_up_to_scalar(rec, re.rmatrix);
          std::string detail = "Pf = " + pf.str() + "; ";
          if (cmp.match) {
            detail += "reconstruction matches " + rname + " with scalar " + cmp.scalar;
            if (!cmp.param_map.empty()) detail += " and map " + cmp.param_map;
            pass_if(r, true, detail, detail);
          } else {
            CompareResult cmp2 = compare_up_to_scalar(rec, ctx.adjudicated.at(rname).rmatrix);
            if (cmp2.match) {
              r.verdict = Verdict::Pass;
              r.paper_mismatch = true;
              r.witness = detail + "matches the repaired " + rname + " with scalar " + cmp2.scalar +
                          "; the verbatim display disagrees";
            } else {
              r.verdict = Verdict::Fail;
              r.witness = detail + "reconstruction " + rec.str() + " does not match " + rname;
            }
          }
        });
  }

  // -- 07: parabolic dimensions and the nonexistence certificate -------------
  add("07.parabolic.dims", "closures of B+, P(j), P(-2,-3)", true, [&](CheckResult& r) {
    using namespace basis;
    int b = borel_plus(g).dim();
    int p1 = parabolic(g, {EM1}).dim();
    int p2 = parabolic(g, {EM2}).dim();
    int p3 = parabolic(g, {EM3}).dim();
    int p23 = parabolic(g, {EM2, EM3}).dim();
    bool ok = b == 9 && p1 == 10 && p2 == 10 && p3 == 10 && p23 == 12;
    pass_if(r, ok,
            "dim B+ = 9; dim P(1) = dim P(2) = dim P(3) = 10; closure of (B+,em2,em3) = 12",
            "unexpected dimensions");
  });

  add("07.nonexistence.p2", "generic Pfaffian certificate on P(2)", true, [&](CheckResult& r) {
    auto res = generic_nonexistence(parabolic(g, {basis::EM2}));
    pass_if(r, !res.exists,
            "generic 10-parameter Pfaffian is identically zero: no Frobenius structure",
            "generic Pfaffian is " + res.certificate.str());
  });

  add("07.nonexistence.p1_p3", "generic Pfaffians on P(1), P(3)", true, [&](CheckResult& r) {
    auto r1 = generic_nonexistence(parabolic(g, {basis::EM1}));
    auto r3 = generic_nonexistence(parabolic(g, {basis::EM3}));
    pass_if(r, r1.exists && r3.exists, "both generic Pfaffians are nonzero polynomials",
            "unexpected degeneracy");
  });

  // -- 08: Weyl transport ------------------------------------------------------
  auto transported_name = [&](const AlgebraMap& map, const std::string& rname) -> std::string {
    const BiVector& src = ctx.adjudicated.at(rname).rmatrix;
    BiVector image = tensor_square_apply(map, src);
    for (const char* cand : kRNames) {
      CompareResult cmp = compare_up_to_scalar(image, ctx.adjudicated.at(cand).rmatrix);
      if (cmp.match)
        return std::string(cand) + " (scalar " + cmp.scalar +
               (cmp.param_map.empty() ? "" : ", map " + cmp.param_map) + ")";
    }
    return "";
  };

  add("08.transport.r8.sigma13", "(sigma1 sigma3 x sigma1 sigma3) r8_1", true,
      [&](CheckResult& r) {
        BiVector image = tensor_square_apply(ctx.sigma13, ctx.adjudicated.at("r8_1").rmatrix);
        CompareResult cmp = compare_up_to_scalar(image, ctx.adjudicated.at("r8_2").rmatrix);
        pass_if(r, cmp.match,
                "matches r8_2 with scalar " + cmp.scalar +
                    (cmp.param_map.empty() ? "" : " and map " + cmp.param_map),
                "does not match r8_2");
      });

  add("08.transport.r8.sigma2", "(sigma2 x sigma2) r8_1", false, [&](CheckResult& r) {
    std::string hit = transported_name(ctx.sigma2, "r8_1");
    r.verdict = Verdict::Info;
    if (hit.rfind("r8_2", 0) == 0) {
      r.witness = "matches " + hit;
    } else {
      r.paper_mismatch = true;
      r.witness = hit.empty() ? "matches no catalog entry"
                              : "matches " + hit + ", not r8_2 as published";
    }
  });

  add("08.transport.d10.beta_pairing", "beta transport P(3) family -> P(1) family", false,
      [&](CheckResult& r) {
        std::string table;
        const char* r3s[5] = {"r10_3a", "r10_3b", "r10_3c", "r10_3d", "r10_3e"};
        for (const char* rn : r3s) {
          std::string hit = transported_name(ctx.beta, rn);
          table += std::string(table.empty() ? "" : "; ") + rn + " -> " +
                   (hit.empty() ? "(no match)" : hit);
        }
        r.verdict = Verdict::Info;
        r.witness = table;
      });

  add("08.transport.d10.sigma2_pairing", "(sigma2 x sigma2) on the P(3) family", false,
      [&](CheckResult& r) {
        std::string table;
        bool all = true;
        const char* r3s[5] = {"r10_3a", "r10_3b", "r10_3c", "r10_3d", "r10_3e"};
        for (const char* rn : r3s) {
          std::string hit = transported_name(ctx.sigma2, rn);
          if (hit.rfind("r10_1", 0) != 0) all = false;
          table += std::string(table.empty() ? "" : "; ") + rn + " -> " +
                   (hit.empty() ? "(no match)" : hit);
        }
        r.verdict = Verdict::Info;
        if (!all) r.paper_mismatch = true;
        r.witness = table;
      });

  // -- 09: mixed-Schouten incompatibility table --------------------------------
  add("09.mixed.table", "25-pair mixed Schouten table", true, [&](CheckResult& r) {
    const char* r1s[5] = {"r10_1a", "r10_1b", "r10_1c", "r10_1d", "r10_1e"};
    const char* r3s[5] = {"r10_3a", "r10_3b", "r10_3c", "r10_3d", "r10_3e"};
    int nonzero = 0;
    std::string zero_pairs;
    for (const char* a : r1s)
      for (const char* b : r3s) {
        TriVector mixed =
            schouten_mixed(ctx.adjudicated.at(a).rmatrix, ctx.adjudicated.at(b).rmatrix);
        if (mixed.is_zero())
          zero_pairs += std::string(zero_pairs.empty() ? "" : ",") + a + "/" + b;
        else
          ++nonzero;
      }
    pass_if(r, nonzero > 0,
            std::to_string(nonzero) + " of 25 pairs nonzero" +
                (zero_pairs.empty() ? "" : "; compatible pairs: " + zero_pairs),
            "all 25 pairs are compatible, contradicting the published claim");
  });

  // -- 10: scaling structure ----------------------------------------------------
  add("10.grading.r8_terms", "D-weights of the d=8 entries", true, [&](CheckResult& r) {
    Element d = ctx.adjudication.basis.get("D");
    bool ok1 = false, ok2 = false;
    std::string w1 = weights_of_terms(g, ctx.adjudicated.at("r8_1").rmatrix, d, ok1);
    std::string w2 = weights_of_terms(g, ctx.adjudicated.at("r8_2").rmatrix, d, ok2);
    pass_if(r, ok1 && ok2,
            "every wedge term is a D-weight eigenvector of weight +1 (r8_1 " + w1 + ", r8_2 " +
                w2 + ")",
            "weights r8_1 " + w1 + ", r8_2 " + w2);
  });

  add("10.grading.omega", "canonical ad-invariant trivector", true, [&](CheckResult& r) {
    TriVector omega = canonical_trivector(g);
    bool nonzero = !omega.is_zero();
    Element d = ctx.adjudication.basis.get("D");
    auto w = basis_weights(g, d);
    bool weight0 = true;
    for (const auto& [k, c] : omega.coeffs()) {
      Scalar total = w[std::get<0>(k)] + w[std::get<1>(k)] + w[std::get<2>(k)];
      if (!total.is_zero()) weight0 = false;
    }
    bool invariant = true;
    for (int i = 0; i < 15 && invariant; ++i)
      if (!adjoint_action_triv(g.basis_element(i), omega).is_zero()) invariant = false;
    pass_if(r, nonzero && weight0 && invariant,
            "omega != 0 (" + std::to_string(omega.coeffs().size()) +
                " terms), D-weight 0, ad_x(omega) = 0 for all 15 basis elements",
            std::string("omega: nonzero=") + (nonzero ? "yes" : "no") + " weight0=" +
                (weight0 ? "yes" : "no") + " invariant=" + (invariant ? "yes" : "no"));
  });

  // -- 11: oracle sanity ---------------------------------------------------------
  add("11.sanity.schouten", "Jordanian zero and the sl(2) obstruction", true,
      [&](CheckResult& r) {
        using namespace basis;
        BiVector jordan = wedge(g.basis_element(H1), g.basis_element(E1));
        BiVector casimir = wedge(g.basis_element(E1), g.basis_element(EM1));
        TriVector t1 = schouten_self(jordan);
        TriVector t2 = schouten_self(casimir);
        TriVector expect(&g);
        expect.add_term(H1, E1, EM1, MultiPoly(1));
        pass_if(r, t1.is_zero() && t2 == expect,
                "<<h1^e1,h1^e1>> = 0 and <<e1^em1,e1^em1>> = h1^e1^em1",
                "sanity values wrong: " + t1.str() + " / " + t2.str());
      });

  // Execute; results land in fixed slots so any job count yields the
  // same report bytes.
  std::vector<CheckResult> results(checks.size());
  int jobs = std::max(1, opts.jobs);
  std::atomic<size_t> next{0};
  auto worker = [&] {
    while (true) {
      size_t t = next.fetch_add(1);
      if (t >= checks.size()) break;
      CheckResult& r = results[t];
      r.id = checks[t].id;
      r.subject = checks[t].subject;
      r.required = checks[t].required;
      try {
        checks[t].run(r);
      } catch (const std::exception& ex) {
        r.verdict = Verdict::Fail;
        r.witness = std::string("exception: ") + ex.what();
      }
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  Report report;
#ifdef CYBE_VERSION
  report.engine_version = CYBE_VERSION;
#else
  report.engine_version = "dev";
#endif
  report.catalog_path = ctx.catalog_path;
  report.catalog_hash = catalog_hash(ctx.catalog_path);
  report.strict = opts.strict;
  report.checks = std::move(results);
  return report;
}

}  // namespace cybe
