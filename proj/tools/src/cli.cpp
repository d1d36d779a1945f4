#include "lcheck_tools/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "lcheck/casebook.hpp"
#include "lcheck/dseries.hpp"
#include "lcheck/errors.hpp"
#include "lcheck/expr.hpp"
#include "lcheck/ingest.hpp"
#include "lcheck/poles.hpp"
#include "lcheck/repalg.hpp"
#include "lcheck/satake.hpp"

namespace lcheck::cli {

unsigned worker_count() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("LCALC_THREADS")) {
    try {
      long cap = std::stol(env);
      if (cap >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
    } catch (const std::exception&) {
      // ignored: a malformed cap leaves the default
    }
  }
  return n;
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ParseError(fmt::format("cannot open '{}'", path));
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

Hypotheses load_hypotheses(const std::string& file, const std::vector<std::string>& assume) {
  Hypotheses h = file.empty() ? Hypotheses() : Hypotheses::parse(read_file(file));
  for (const auto& line : assume) h.apply_line(line);
  return h;
}

void append(std::vector<Verdict>& to, const std::vector<Verdict>& from) {
  to.insert(to.end(), from.begin(), from.end());
}

void add_case(Output& o, const CaseReport& cr, const CaseSpec& spec) {
  append(o.report.verdicts, cr.verdicts);
  for (const auto& e : cr.errata) {
    const Claim* claim = nullptr;
    for (const auto& cl : spec.claims) {
      if (cl.name == e.claim) claim = &cl;
    }
    o.data.emplace_back(fmt::format("erratum {}/{}", cr.id, e.claim), format_delta(e.delta));
    if (claim != nullptr) {
      o.data.emplace_back(fmt::format("correction {}/{}", cr.id, e.claim),
                          corrected_rhs(spec, *claim, e.delta));
    }
  }
}

void cmd_sos(Output& o) {
  auto r = verify_sos();
  auto& rep = o.report;
  rep.add("sos/identity", r.identity,
          r.identity ? fmt::format("coeff_poly(D, 1) = |2x + xb + b|^2 exactly, {} monomials", r.terms)
                     : "residual " + r.residual.to_string());
  rep.add("sos/adjoint-real", r.x_real, "conj(a_Ad(pi)) = a_Ad(pi)");
  rep.add("sos/cg-pi", r.cg_pi, "a_Ad(pi)^2 = 1 + a_Ad(pi) + a_Sym^4(pi) w^-2");
  rep.add("sos/cg-pi'", r.cg_pi_prime, "a_Ad(pi')^2 = 1 + a_Ad(pi') + a_Sym^4(pi') w'^-2");
  SatakePoint ones{1.0, 1.0, 1.0, 1.0, {{"chi", 1.0}}};
  auto deg = a_D(ones, 1);
  rep.add("sos/degree", build_D().degree() == 324 && std::abs(deg - 324.0) < 1e-9,
          fmt::format("degree {}, value at the identity point {}", build_D().degree(), deg.real()));
}

void cmd_bridge(Output& o) {
  auto b = verify_plethysm_bridge();
  append(o.report.verdicts, b.verdicts);
}

void cmd_all(Output& o) {
  auto all = run_all(worker_count());
  const auto& specs = builtin_cases();
  o.report.add("all/cases", all.cases.size() == 11,
               fmt::format("{} case reports", all.cases.size()));
  for (std::size_t i = 0; i < all.cases.size(); ++i) add_case(o, all.cases[i], specs[i]);
  append(o.report.verdicts, all.bridge.verdicts);
  append(o.report.verdicts, all.taxonomy);
}

void cmd_scan(Output& o, const std::string& f1, const std::string& f2, const std::string& ch,
              std::int64_t xmax, int lmax) {
  auto& rep = o.report;
  NewformData a, b;
  CharacterData c;
  try {
    a = newform_from_spec(f1, xmax);
    b = newform_from_spec(f2, xmax);
    c = character_from_spec(ch);
    ScanOptions opts;
    opts.xmax = xmax;
    opts.lmax = lmax;
    opts.threads = worker_count();
    auto r = scan_positivity(a, b, c, opts);
    std::string skipped;
    for (auto p : r.skipped) skipped += (skipped.empty() ? "" : ",") + std::to_string(p);
    o.data.emplace_back("points", std::to_string(r.points));
    o.data.emplace_back("skipped", skipped.empty() ? "none" : skipped);
    rep.add("scan/positivity", r.min_re >= -1e-9,
            fmt::format("min Re a_D = {:.6e} at p = {}, ell = {}", r.min_re, r.min_at.p,
                        r.min_at.ell));
    rep.add("scan/real", r.max_im <= 1e-9, fmt::format("max |Im a_D| = {:.3e}", r.max_im));
    rep.add("scan/sos-match", r.max_mismatch <= 1e-9,
            fmt::format("max |direct - SOS| = {:.3e}", r.max_mismatch));
    for (const auto& f : r.failures) {
      rep.add("scan/point", false,
              fmt::format("p = {}, ell = {}: direct {:.12g}{:+.3g}i, polynomial {:.12g}, SOS {:.12g}",
                          f.p, f.ell, f.direct.real(), f.direct.imag(), f.poly.real(), f.sos));
    }
  } catch (const DataError& e) {
    rep.add("scan/data", false, e.what());
  }
}

void cmd_expand(Output& o, const std::string& expr, const Hypotheses& h, int ell) {
  auto raw = parse_expression(expr);
  auto n = normalize(raw, h);
  auto again = normalize(parse_expression(to_string(n)), h);
  o.data.emplace_back("normal_form", to_string(n));
  o.data.emplace_back("factors", std::to_string(n.size()));
  o.data.emplace_back("degree", std::to_string(n.degree()));
  try {
    o.data.emplace_back(fmt::format("coeff_poly(ell={})", ell), coeff_poly(n, ell).to_string());
  } catch (const Error& e) {
    o.data.emplace_back(fmt::format("coeff_poly(ell={})", ell), e.what());
  }
  o.report.add("expand/normal-form", again == n && normalize(n, h) == n,
               "normal form is idempotent and round-trips through the printer");
}

void cmd_poles(Output& o, const std::string& expr, const Hypotheses& h) {
  try {
    auto x = parse_expression(expr);
    auto ent = entirety_check(x, h);
    for (const auto& f : ent.factors) {
      o.data.emplace_back(fmt::format("factor {}{}", f.multiplicity == 1 ? "" : fmt::format("{}*", f.multiplicity),
                                      to_string(f.entry)),
                          fmt::format("{} {}", to_string(f.status), f.pole.to_string()));
    }
    o.report.add("poles/interval", true, ent.total.to_string());
  } catch (const UndeclaredCuspidality& e) {
    o.report.add("poles/interval", false, e.what());
  } catch (const NoDualityData& e) {
    o.report.add("poles/interval", false, e.what());
  }
}

std::string joined(const std::vector<std::string>& args) {
  std::string s;
  for (const auto& a : args) s += a + '\x1f';
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"lcheck: Rankin-Selberg identity and positivity checker"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Emit the report as JSON");

  auto* verify = app.add_subcommand("verify", "Run a verifier");
  verify->require_subcommand(1);
  auto* v_sos = verify->add_subcommand("sos", "Sum-of-squares identity for the degree-324 product");
  auto* v_case = verify->add_subcommand("case", "Verify one case");
  std::string case_id, case_file;
  v_case->add_option("id", case_id, "Case id (4.1 ... 5.3.3)");
  v_case->add_option("--file", case_file, "Case description file");
  auto* v_all = verify->add_subcommand("all", "All cases, the plethysm bridge and the taxonomy");
  auto* v_bridge = verify->add_subcommand("bridge", "Sym^2(Sym^3) bridge identity");

  auto* show = app.add_subcommand("show-case", "Print a built-in case description");
  std::string show_id;
  show->add_option("id", show_id)->required();

  std::string hyp_file;
  std::vector<std::string> assume;
  auto* expand = app.add_subcommand("expand", "Normal form and coefficient polynomial");
  std::string expr;
  int ell = 1;
  expand->add_option("expr", expr)->required();
  expand->add_option("--hyp", hyp_file, "Hypothesis file");
  expand->add_option("--assume", assume, "Extra hypothesis statement");
  expand->add_option("--ell", ell)->check(CLI::PositiveNumber);

  auto* poles = app.add_subcommand("poles", "Pole order at s = 1");
  poles->add_option("expr", expr)->required();
  poles->add_option("--hyp", hyp_file, "Hypothesis file");
  poles->add_option("--assume", assume, "Extra hypothesis statement");

  auto* scan = app.add_subcommand("scan", "Numeric positivity of a_D on newform data");
  std::string form1, form2, chr;
  std::int64_t xmax = 0;
  int lmax = 0;
  scan->add_option("--form1", form1)->required();
  scan->add_option("--form2", form2)->required();
  scan->add_option("--char", chr)->required();
  scan->add_option("--xmax", xmax)->required()->check(CLI::Range(std::int64_t{2}, std::int64_t{1000000}));
  scan->add_option("--lmax", lmax)->required()->check(CLI::Range(1, 16));

  for (auto* sub : {verify, v_sos, v_case, v_all, v_bridge, show, expand, poles, scan}) {
    sub->fallthrough();
  }

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return 2;
  }

  Output o;
  auto t0 = std::chrono::steady_clock::now();
  try {
    if (*show) {
      out << serialize_case(builtin_case(show_id));
      return 0;
    }
    if (*verify) {
      if (*v_sos) {
        o.report.command = "verify sos";
        cmd_sos(o);
      } else if (*v_case) {
        if (case_id.empty() == case_file.empty()) {
          err << "usage error: verify case needs exactly one of <id> or --file\n";
          return 2;
        }
        CaseSpec spec = case_file.empty() ? builtin_case(case_id) : parse_case(read_file(case_file));
        o.report.command = "verify case " + spec.id;
        if (spec.ell) o.data.emplace_back("ell", std::to_string(*spec.ell));
        if (spec.k) o.data.emplace_back("k", std::to_string(*spec.k));
        auto cr = verify_case(spec);
        if (cr.pole) o.data.emplace_back("pole", cr.pole->to_string());
        add_case(o, cr, spec);
      } else if (*v_all) {
        o.report.command = "verify all";
        cmd_all(o);
      } else if (*v_bridge) {
        o.report.command = "verify bridge";
        cmd_bridge(o);
      }
    } else if (*expand) {
      o.report.command = "expand";
      cmd_expand(o, expr, load_hypotheses(hyp_file, assume), ell);
    } else if (*poles) {
      o.report.command = "poles";
      cmd_poles(o, expr, load_hypotheses(hyp_file, assume));
    } else if (*scan) {
      o.report.command = "scan";
      cmd_scan(o, form1, form2, chr, xmax, lmax);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    o.report.add("error", false, e.what());
  }
  o.report.inputs_digest = fnv1a_hex(joined(args));
  o.report.timing_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  out << (json ? render_json(o) : render_text(o));
  return o.report.aggregate() == Status::Pass ? 0 : 1;
}

}  // namespace lcheck::cli
