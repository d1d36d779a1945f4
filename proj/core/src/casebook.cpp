#include "lcheck/casebook.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include <fmt/format.h>

#include "lcheck/dseries.hpp"
#include "lcheck/errors.hpp"
#include "lcheck/repalg.hpp"
#include "lcheck/satake.hpp"

namespace lcheck {

namespace {

constexpr const char* kL = "Ad(pi) (x) Ad(pi') tw chi";

// The eleven cases. Remainders are the products left after removing
// L^ell and its conjugate from the auxiliary product.
constexpr const char* kCaseTexts[] = {
    R"(case 4.1
title Sym^3(pi) and Sym^3(pi') not cuspidal
hyp type pi tetrahedral
hyp type pi' tetrahedral
hyp relation pi !~ pi'
ell 6
k 10
def D1 = 6*1 (+) mu*mu' (+) mu^-1*mu'^-1 (+) mu*mu'^-1 (+) mu^-1*mu'
def D2 = 12*Ad(pi) (+) 4*Ad(pi') (+) 4*Ad(pi) tw mu' (+) 4*Ad(pi) tw mu'^-1 (+) 5*mu (+) 5*mu^-1 \
  (+) 2*Ad(pi') tw mu (+) 2*Ad(pi') tw mu^-1 (+) 2*Ad(pi') tw chi (+) 2*Ad(pi') tw chi^-1 \
  (+) 2*mu' (+) 2*mu'^-1 (+) 2*Ad(pi') tw chi*mu (+) 2*Ad(pi') tw chi^-1*mu \
  (+) 2*Ad(pi') tw chi*mu^-1 (+) 2*Ad(pi') tw chi^-1*mu^-1 (+) 8*Ad(pi) (x) Ad(pi')
claim remainder
lhs (s-1)^10 (+) @D
rhs 6*@L (+) 6*~@L (+) (s-1)^10 (+) @D1 (+) @D2
ledger @D1 (+) @D2
)",
    R"(case 4.2
title Sym^3(pi) not cuspidal, Sym^3(pi') cuspidal, Sym^4(pi') not cuspidal
hyp type pi tetrahedral
hyp type pi' octahedral
hyp relation pi !~ pi'
ell 6
k 6
def D3 = 12*Ad(pi) (+) 2*Ad(pi') (+) 2*nu(pi') (+) 4*Ad(pi) (x) nu(pi') (+) 2*Ad(pi') tw eta' \
  (+) 4*Ad(pi) (x) Ad(pi') tw eta' (+) 5*mu (+) 5*mu^-1 (+) nu(pi') tw mu (+) nu(pi') tw mu^-1 \
  (+) Ad(pi') tw mu (+) Ad(pi') tw mu^-1 (+) Ad(pi') tw mu*eta' (+) Ad(pi') tw mu^-1*eta' \
  (+) 4*Ad(pi) (x) Ad(pi') (+) 2*Ad(pi') tw chi (+) 2*Ad(pi') tw chi^-1 (+) 2*Ad(pi') tw chi*mu \
  (+) 2*Ad(pi') tw chi^-1*mu (+) 2*Ad(pi') tw chi*mu^-1 (+) 2*Ad(pi') tw chi^-1*mu^-1
claim remainder
lhs (s-1)^6 (+) @D
rhs 6*@L (+) 6*~@L (+) (s-1)^6 (+) 6*1 (+) @D3
ledger 6*1 (+) @D3
)",
    R"(case 4.3
title Sym^3 of both cuspidal, Sym^4 of both not cuspidal
hyp type pi octahedral
hyp type pi' octahedral
hyp relation pi !~ pi'
ell 4
k 7
def D4 = 7*Ad(pi) (+) 2*Ad(pi') (+) nu(pi) (x) Ad(pi') (+) 5*Ad(pi) tw eta (+) 3*Ad(pi) (x) nu(pi') \
  (+) 2*nu(pi') (+) 5*nu(pi) (+) Ad(pi) (x) nu(pi') tw eta (+) 2*Ad(pi') tw eta' \
  (+) Ad(pi') (x) nu(pi) tw eta' (+) Ad(pi) (x) Ad(pi') tw eta (+) 2*Ad(pi') tw chi \
  (+) 2*Ad(pi') tw chi^-1 (+) 2*Ad(pi') (x) nu(pi) tw chi (+) 3*Ad(pi) (x) Ad(pi') tw eta' \
  (+) 2*Ad(pi') (x) nu(pi) tw chi^-1 (+) Ad(pi) (x) Ad(pi') tw eta*eta' (+) 3*Ad(pi) (x) Ad(pi') \
  (+) 2*Ad(pi) (x) Ad(pi') tw chi*eta (+) 2*Ad(pi) (x) Ad(pi') tw chi^-1*eta
claim remainder
lhs (s-1)^7 (+) @D
rhs 4*@L (+) 4*~@L (+) (s-1)^7 (+) 6*1 (+) nu(pi) (x) nu(pi') (+) @D4
ledger 6*1 (+) nu(pi) (x) nu(pi') (+) @D4
)",
    R"(case 4.4.1
title Sym^4(pi) cuspidal, Sym^3(pi') not cuspidal
hyp type pi general
hyp type pi' tetrahedral
hyp relation pi !~ pi'
ell 4
k 6
def D5 = 7*Ad(pi) (+) 4*Ad(pi') (+) 2*mu' (+) 2*mu'^-1 (+) 3*Ad(pi) tw mu' (+) 3*Ad(pi) tw mu'^-1 \
  (+) 5*Sym^4(pi) tw omega^-2 (+) Sym^4(pi) tw omega^-2*mu' (+) Sym^4(pi) tw omega^-2*mu'^-1 \
  (+) 2*Ad(pi') tw chi (+) 2*Sym^4(pi) (x) Ad(pi') tw chi*omega^-2 \
  (+) 2*Sym^4(pi) (x) Ad(pi') tw chi^-1*omega^-2 (+) 2*Ad(pi') tw chi^-1 \
  (+) 2*Sym^4(pi) (x) Ad(pi') tw omega^-2 (+) 6*Ad(pi) (x) Ad(pi')
claim remainder
lhs (s-1)^6 (+) @D
rhs 4*@L (+) 4*~@L (+) (s-1)^6 (+) 6*1 (+) @D5
ledger 6*1 (+) @D5
)",
    R"(case 4.4.2
title Sym^4(pi) cuspidal, Sym^3(pi') cuspidal, Sym^4(pi') not cuspidal
hyp type pi general
hyp type pi' octahedral
hyp relation pi !~ pi'
ell 4
k 6
def D6 = 5*Sym^4(pi) tw omega^-2 (+) 2*Ad(pi') tw eta' (+) 3*Ad(pi) (x) nu(pi') (+) 2*Ad(pi') \
  (+) 2*nu(pi') (+) 7*Ad(pi) (+) 3*Ad(pi) (x) Ad(pi') tw eta' \
  (+) Sym^4(pi) (x) Ad(pi') tw omega^-2*eta' (+) Sym^4(pi) (x) nu(pi') tw omega^-2 \
  (+) Sym^4(pi) (x) Ad(pi') tw omega^-2 (+) 3*Ad(pi) (x) Ad(pi') (+) 2*Ad(pi') tw chi \
  (+) 2*Sym^4(pi) (x) Ad(pi') tw chi*omega^-2 (+) 2*Ad(pi') tw chi^-1 \
  (+) 2*Sym^4(pi) (x) Ad(pi') tw chi^-1*omega^-2
claim remainder
lhs (s-1)^6 (+) @D
rhs 4*@L (+) 4*~@L (+) (s-1)^6 (+) 6*1 (+) @D6
ledger 6*1 (+) @D6
)",
    R"(case 4.4.3
title Sym^4 of both cuspidal
hyp type pi general
hyp type pi' general
hyp relation pi !~ pi'
ell 4
k 7
def D7 = 2*Ad(pi') tw chi (+) 2*Ad(pi') tw chi^-1 (+) 5*Sym^4(pi) tw omega^-2 (+) 7*Ad(pi) \
  (+) 2*Ad(pi') (+) 3*Ad(pi) (x) Ad(pi') (+) 3*Ad(pi) (x) Sym^4(pi') tw omega'^-2 \
  (+) 2*Sym^4(pi') tw omega'^-2 (+) Ad(pi') (x) Sym^4(pi) tw omega^-2 \
  (+) 4*Ad(pi') (x) Sym^4(pi) tw omega^-2
def S = Sym^4(pi) (x) Sym^4(pi') tw omega^-2*omega'^-2
claim remainder
lhs (s-1)^7 (+) @D
rhs 4*@L (+) 4*~@L (+) (s-1)^7 (+) 6*1 (+) @S (+) @D7
ledger 6*1 (+) @S (+) @D7
)",
    R"(case 5.1
title both bases dihedral
hyp type pi dihedral
hyp type pi' dihedral
maxdeg 2
claim factor
lhs @L
rhs Ind(pi) (x) Ind(pi') tw chi*omega^-1*omega'^-1 (+) Ind(pi) tw chi*omega^-1*omega'^-1*xiF' \
  (+) Ind(pi') tw chi*omega^-1*omega'^-1*xiF (+) chi*omega^-1*omega'^-1*xiF*xiF'
)",
    R"(case 5.2
title pi non-dihedral, pi' dihedral
hyp type pi nondihedral
hyp type pi' dihedral
claim factor
lhs @L
rhs Ind(pi') (x) Ad(pi) tw chi*omega'^-1 (+) Ad(pi) tw chi*omega'^-1*xiF'
)",
    R"(case 5.3.1
title pi ~ pi', Sym^3(pi) not cuspidal
hyp type pi tetrahedral
hyp type pi' tetrahedral
hyp relation pi ~ pi'
claim cg local
lhs Ad(pi) (x) Ad(pi) tw chi
rhs chi (+) Ad(pi) tw chi (+) Sym^4(pi) tw chi*omega^-2
claim factor
lhs @L
rhs chi (+) Ad(pi) tw chi (+) Sym^4(pi) tw chi*omega^-2
claim sym4
lhs Sym^4(pi) tw chi*omega^-2
rhs Ad(pi) tw chi (+) chi*mu^-1 (+) chi*mu
claim selftwist
chyp selftwist pi chi
lhs @L
rhs 1 (+) Ad(pi) (+) Sym^4(pi) tw omega^-2
claim selftwist-sym4
chyp selftwist pi chi
lhs Sym^4(pi) tw omega^-2
rhs Ad(pi) (+) mu (+) mu^-1
)",
    R"(case 5.3.2
title pi ~ pi', Sym^3(pi) cuspidal, Sym^4(pi) not cuspidal
hyp type pi octahedral
hyp type pi' octahedral
hyp relation pi ~ pi'
claim factor
lhs @L
rhs chi (+) Ad(pi) tw chi (+) Sym^4(pi) tw chi*omega^-2
claim sym4
lhs Sym^4(pi) tw chi*omega^-2
rhs nu(pi) tw chi (+) Ad(pi) tw eta*chi
)",
    R"(case 5.3.3
title pi ~ pi', Sym^4(pi) cuspidal
hyp type pi general
hyp type pi' general
hyp relation pi ~ pi'
ell 2
k 3
def Pi1 = 1 (+) Ad(pi) (+) Sym^4(pi) tw chi*omega^-2
def D8 = 1 (+) Ad(pi) (x) Ad(pi) (+) Sym^4(pi) (x) ~Sym^4(pi) (+) 2*Ad(pi) \
  (+) Ad(pi) (x) Sym^4(pi) tw chi*omega^-2 (+) Ad(pi) (x) Sym^4(pi) tw chi^-1*omega^-2 \
  (+) Sym^4(pi) tw chi*omega^-2 (+) Sym^4(pi) tw chi^-1*omega^-2
claim factor
lhs @L
rhs chi (+) Ad(pi) tw chi (+) Sym^4(pi) tw chi*omega^-2
claim D8 local
lhs @Pi1 (x) ~@Pi1
rhs @D8
ledger @D8
)",
};

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

int parse_int(const std::string& s, int line) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::logic_error&) {
    throw ParseError(fmt::format("expected an integer, got '{}'", s), line);
  }
}

Hypotheses claim_hypotheses(const CaseSpec& c, const Claim& cl) {
  Hypotheses h = cl.local ? Hypotheses() : c.hypotheses();
  for (const auto& line : cl.extra_hyp) h.apply_line(line);
  return h;
}

Verdict fail(std::string id, std::string details) {
  return {std::move(id), Status::Fail, std::move(details)};
}

Verdict pass(std::string id, std::string details) {
  return {std::move(id), Status::Pass, std::move(details)};
}

// Exact and numeric checks of a hypothesis-free claim.
void check_polynomial(const std::string& id, const VirtualRep& lhs, const VirtualRep& rhs,
                      std::vector<Verdict>& out) {
  LaurentPoly pl, pr;
  try {
    pl = coeff_poly(lhs, 1);
    pr = coeff_poly(rhs, 1);
  } catch (const NotEvaluable&) {
    return;  // opaque atoms: formal rewriting is the only check
  }
  auto residual = pl - pr;
  if (!residual.is_zero()) {
    auto text = residual.to_string();
    if (text.size() > 240) text = text.substr(0, 240) + fmt::format(" ... ({} terms)", residual.size());
    out.push_back(fail(id + "/poly", "residual " + text));
    return;
  }
  std::mt19937_64 rng(0x5eed);
  double worst = 0;
  for (int i = 0; i < 100; ++i) {
    auto pt = random_point(rng);
    auto a = numeric_coefficient(lhs, pt, 1);
    auto b = numeric_coefficient(rhs, pt, 1);
    auto e = eval(pl, pt);
    worst = std::max({worst, std::abs(a - b), std::abs(a - e)});
  }
  if (worst > 1e-9) {
    out.push_back(fail(id + "/poly", fmt::format("exact check passed but numeric gap {:.3e}", worst)));
    return;
  }
  out.push_back(pass(id + "/poly", fmt::format("zero residual ({} monomials), numeric gap {:.1e} "
                                               "at 100 points",
                                               pl.size(), worst)));
}

bool within_degree(const Entry& e, int maxdeg) {
  if (const auto* a = std::get_if<RepAtom>(&e)) return a->degree() <= maxdeg;
  const auto& p = std::get<RsPair>(e);
  return p.first.degree() <= maxdeg && p.second.degree() <= maxdeg;
}

}  // namespace

Hypotheses CaseSpec::hypotheses() const {
  Hypotheses h;
  for (const auto& line : hyp) h.apply_line(line);
  return h;
}

MacroTable CaseSpec::macros() const {
  MacroTable m;
  m.emplace("D", parse_expression(kAuxSeriesText));
  m.emplace("L", parse_expression(kL));
  for (const auto& [name, text] : defs) {
    auto v = parse_expression(text, m);
    m.insert_or_assign(name, std::move(v));
  }
  return m;
}

CaseSpec parse_case(std::string_view text) {
  CaseSpec c;
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  std::vector<std::string> lines;
  std::vector<int> numbers;
  // Join backslash continuations.
  std::string pending;
  int start = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (pending.empty()) start = lineno;
    if (!raw.empty() && raw.back() == '\\') {
      pending += raw.substr(0, raw.size() - 1) + " ";
      continue;
    }
    pending += raw;
    lines.push_back(pending);
    numbers.push_back(start);
    pending.clear();
  }
  if (!pending.empty()) throw ParseError("dangling line continuation", start);

  Claim* current = nullptr;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const int ln = numbers[i];
    auto line = trim(lines[i]);
    if (line.empty() || line[0] == '#') continue;
    auto sp = line.find_first_of(" \t");
    std::string kw = line.substr(0, sp);
    std::string rest = sp == std::string::npos ? "" : trim(line.substr(sp));
    if (kw == "case") {
      if (!c.id.empty()) throw ParseError("duplicate 'case'", ln);
      c.id = rest;
    } else if (kw == "title") {
      c.title = rest;
    } else if (kw == "hyp") {
      try {
        Hypotheses probe;
        for (const auto& h : c.hyp) probe.apply_line(h);
        probe.apply_line(rest);
      } catch (const ParseError& e) {
        throw ParseError(e.what(), ln);
      }
      c.hyp.push_back(rest);
    } else if (kw == "ell") {
      c.ell = parse_int(rest, ln);
    } else if (kw == "k") {
      c.k = parse_int(rest, ln);
    } else if (kw == "maxdeg") {
      c.maxdeg = parse_int(rest, ln);
    } else if (kw == "def") {
      auto eq = rest.find('=');
      if (eq == std::string::npos) throw ParseError("expected 'def NAME = expr'", ln);
      c.defs.emplace_back(trim(rest.substr(0, eq)), trim(rest.substr(eq + 1)));
    } else if (kw == "claim") {
      std::istringstream w(rest);
      Claim cl;
      std::string flag;
      if (!(w >> cl.name)) throw ParseError("claim needs a name", ln);
      while (w >> flag) {
        if (flag != "local") throw ParseError(fmt::format("unknown claim flag '{}'", flag), ln);
        cl.local = true;
      }
      c.claims.push_back(std::move(cl));
      current = &c.claims.back();
    } else if (kw == "chyp" || kw == "lhs" || kw == "rhs") {
      if (current == nullptr) throw ParseError(fmt::format("'{}' before any claim", kw), ln);
      if (kw == "chyp") current->extra_hyp.push_back(rest);
      else if (kw == "lhs") current->lhs = rest;
      else current->rhs = rest;
    } else if (kw == "ledger") {
      c.ledger = rest;
    } else {
      throw ParseError(fmt::format("unknown statement '{}'", kw), ln);
    }
  }
  if (c.id.empty()) throw ParseError("missing 'case <id>'");
  for (const auto& cl : c.claims) {
    if (cl.lhs.empty() || cl.rhs.empty()) {
      throw ParseError(fmt::format("claim '{}' needs lhs and rhs", cl.name));
    }
  }
  if (c.ledger && !c.k) throw ParseError("'ledger' needs 'k'");
  // Surface hypothesis and expression errors at load time.
  auto macros = c.macros();
  for (const auto& cl : c.claims) {
    claim_hypotheses(c, cl);
    parse_expression(cl.lhs, macros);
    parse_expression(cl.rhs, macros);
  }
  if (c.ledger) parse_expression(*c.ledger, macros);
  return c;
}

std::string serialize_case(const CaseSpec& c) {
  std::string out = fmt::format("case {}\n", c.id);
  if (!c.title.empty()) out += fmt::format("title {}\n", c.title);
  for (const auto& h : c.hyp) out += fmt::format("hyp {}\n", h);
  if (c.ell) out += fmt::format("ell {}\n", *c.ell);
  if (c.k) out += fmt::format("k {}\n", *c.k);
  if (c.maxdeg) out += fmt::format("maxdeg {}\n", *c.maxdeg);
  for (const auto& [n, t] : c.defs) out += fmt::format("def {} = {}\n", n, t);
  for (const auto& cl : c.claims) {
    out += fmt::format("claim {}{}\n", cl.name, cl.local ? " local" : "");
    for (const auto& h : cl.extra_hyp) out += fmt::format("chyp {}\n", h);
    out += fmt::format("lhs {}\nrhs {}\n", cl.lhs, cl.rhs);
  }
  if (c.ledger) out += fmt::format("ledger {}\n", *c.ledger);
  return out;
}

const std::vector<CaseSpec>& builtin_cases() {
  static const std::vector<CaseSpec> cases = [] {
    std::vector<CaseSpec> v;
    for (const char* t : kCaseTexts) v.push_back(parse_case(t));
    return v;
  }();
  return cases;
}

const CaseSpec& builtin_case(std::string_view id) {
  for (const auto& c : builtin_cases()) {
    if (c.id == id) return c;
  }
  throw Error(fmt::format("unknown case id '{}'", id));
}

std::vector<std::string> case_ids() {
  std::vector<std::string> ids;
  for (const auto& c : builtin_cases()) ids.push_back(c.id);
  return ids;
}

std::string format_delta(const RepDelta& d) {
  std::string out;
  for (const auto& [e, n] : d) {
    if (!out.empty()) out += ", ";
    out += fmt::format("{:+} {}", n, to_string(e));
  }
  return out.empty() ? "none" : out;
}

std::string corrected_rhs(const CaseSpec& c, const Claim& claim, const RepDelta& delta) {
  auto h = claim_hypotheses(c, claim);
  auto rhs = normalize(parse_expression(claim.rhs, c.macros()), h);
  for (const auto& [e, n] : delta) rhs.add(e, n);
  return to_string(rhs);
}

bool CaseReport::pass() const {
  return !verdicts.empty() && std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) {
    return v.status == Status::Pass;
  });
}

CaseReport verify_case(const CaseSpec& c) {
  CaseReport r;
  r.id = c.id;
  const auto macros = c.macros();
  const auto h = c.hypotheses();

  for (const auto& cl : c.claims) {
    const std::string id = fmt::format("{}/identity:{}", c.id, cl.name);
    try {
      auto hc = claim_hypotheses(c, cl);
      auto lhs = parse_expression(cl.lhs, macros);
      auto rhs = parse_expression(cl.rhs, macros);
      auto nl = normalize(lhs, hc);
      auto nr = normalize(rhs, hc);
      if (nl == nr) {
        r.verdicts.push_back(pass(id, fmt::format("{} distinct factors, degree {}", nl.size(),
                                                  nl.degree())));
      } else {
        Erratum err{cl.name, difference(nl, nr), false};
        auto fixed = normalize(parse_expression(corrected_rhs(c, cl, err.delta), macros), hc);
        err.rebalances = fixed == nl;
        r.verdicts.push_back(fail(
            id, fmt::format("lhs - rhs = {} (degree {} vs {}); erratum candidate, correction {}",
                            format_delta(err.delta), nl.degree(), nr.degree(),
                            err.rebalances ? "re-balances the identity" : "does not re-balance")));
        r.errata.push_back(std::move(err));
      }
      if (!hc.affects_normal_form()) check_polynomial(id, lhs, rhs, r.verdicts);
      if (c.maxdeg) {
        std::string over;
        for (const auto& [e, n] : nr.entries()) {
          if (!within_degree(e, *c.maxdeg)) over += (over.empty() ? "" : ", ") + to_string(e);
        }
        if (over.empty()) {
          r.verdicts.push_back(pass(fmt::format("{}/gl-size:{}", c.id, cl.name),
                                    fmt::format("every factor is GL(m) x GL(n) with m, n <= {}",
                                                *c.maxdeg)));
        } else {
          r.verdicts.push_back(fail(fmt::format("{}/gl-size:{}", c.id, cl.name),
                                    "factors above the size bound: " + over));
        }
      }
    } catch (const Error& e) {
      r.verdicts.push_back(fail(id, e.what()));
    }
  }

  if (c.ledger) {
    try {
      auto ledger = parse_expression(*c.ledger, macros);
      auto pole = pole_order(ledger, h);
      r.pole = pole;
      bool ok = pole.max <= *c.k;
      r.verdicts.push_back({c.id + "/ledger", ok ? Status::Pass : Status::Fail,
                            fmt::format("pole order {} {} k = {}", pole.to_string(),
                                        ok ? "<=" : ">", *c.k)});
      auto ent = entirety_check(ledger, h);
      auto obligations = ent.obligations();
      std::string list;
      for (const auto& o : obligations) list += (list.empty() ? "" : "; ") + o;
      bool absorbed = ent.total.max <= *c.k;
      r.verdicts.push_back({c.id + "/entirety", absorbed ? Status::Pass : Status::Fail,
                            fmt::format("{} of {} factors entire; poles {} absorbed by (s-1)^{}{}",
                                        ent.factors.size() - obligations.size(),
                                        ent.factors.size(), ent.total.to_string(), *c.k,
                                        list.empty() ? "" : ": " + list)});
    } catch (const Error& e) {
      r.verdicts.push_back(fail(c.id + "/ledger", e.what()));
    }
  }
  if (c.ell && c.k) {
    bool ok = 2 * *c.ell > *c.k;
    r.verdicts.push_back({c.id + "/inequality", ok ? Status::Pass : Status::Fail,
                          fmt::format("ell = {}, k = {}: 2*ell = {} {} {}", *c.ell, *c.k,
                                      2 * *c.ell, ok ? ">" : "<=", *c.k)});
  }
  return r;
}

BridgeReport verify_plethysm_bridge() {
  BridgeReport r;
  const auto chi = FormalCharacter::generator("chi");
  const auto w = central_character(Base::Pi);

  auto pl = plethysm_sym2(3);
  r.plethysm = pl == std::vector<SymTerm>{{6, 0}, {2, 2}};
  r.verdicts.push_back({"bridge/plethysm", r.plethysm ? Status::Pass : Status::Fail,
                        "Sym^2(Sym^3) = Sym^6 (+) Sym^2 (x) omega^2"});

  const auto s4 = RepAtom::sym(Base::Pi, 4, chi * w.pow(-2));
  auto pair = VirtualRep::pair(RepAtom::adjoint(Base::Pi), s4);
  auto lhs = coeff_poly(pair, 1) - coeff_poly(VirtualRep::of(s4), 1);
  VirtualRep h;
  for (const auto& t : pl) h.add(RepAtom::sym(Base::Pi, t.degree, w.pow(t.omega_power) * chi * w.pow(-3)));
  auto rhs = coeff_poly(h, 1);
  auto residual = lhs - rhs;
  r.identity = residual.is_zero();
  r.residual = residual.to_string();
  r.lhs_degree = pair.degree() - 5;
  r.rhs_degree = h.degree();
  r.verdicts.push_back({"bridge/identity", r.identity ? Status::Pass : Status::Fail,
                        r.identity ? fmt::format("zero residual; {} = {}", to_string(pair) +
                                                     " minus " + to_string(Entry{s4}),
                                                 to_string(h))
                                   : "residual " + r.residual});
  bool deg = r.lhs_degree == r.rhs_degree;
  r.verdicts.push_back({"bridge/degree", deg ? Status::Pass : Status::Fail,
                        fmt::format("15 - 5 = {}, Sym^2 of a 4-dim space = {}", r.lhs_degree,
                                    r.rhs_degree)});
  return r;
}

std::optional<std::string> classify(Gl2Type p, Gl2Type q, TwistRelation rel) {
  using T = Gl2Type;
  auto valid = [](T t) {
    return t == T::Dihedral || t == T::Tetrahedral || t == T::Octahedral || t == T::General;
  };
  if (!valid(p) || !valid(q)) throw Error("classify needs concrete base types");
  if (rel == TwistRelation::Equivalent && p != q) return std::nullopt;
  if (rel == TwistRelation::Unknown) throw Error("classify needs a twist relation");
  if (p == T::Dihedral && q == T::Dihedral) return "5.1";
  if (p == T::Dihedral || q == T::Dihedral) return "5.2";
  if (rel == TwistRelation::Equivalent) {
    if (p == T::Tetrahedral) return "5.3.1";
    if (p == T::Octahedral) return "5.3.2";
    return "5.3.3";
  }
  auto has = [&](T a, T b) { return (p == a && q == b) || (p == b && q == a); };
  if (has(T::Tetrahedral, T::Tetrahedral)) return "4.1";
  if (has(T::Tetrahedral, T::Octahedral)) return "4.2";
  if (has(T::Octahedral, T::Octahedral)) return "4.3";
  if (has(T::General, T::Tetrahedral)) return "4.4.1";
  if (has(T::General, T::Octahedral)) return "4.4.2";
  return "4.4.3";
}

bool case_matches(const CaseSpec& c, Gl2Type p, Gl2Type q, TwistRelation rel) {
  auto h = c.hypotheses();
  auto type_ok = [](Gl2Type decl, Gl2Type actual) {
    return decl == actual || decl == Gl2Type::Unspecified ||
           (decl == Gl2Type::NonDihedral && actual != Gl2Type::Dihedral);
  };
  bool rel_ok = h.relation() == TwistRelation::Unknown || h.relation() == rel;
  if (!rel_ok) return false;
  return (type_ok(h.type(Base::Pi), p) && type_ok(h.type(Base::PiPrime), q)) ||
         (type_ok(h.type(Base::Pi), q) && type_ok(h.type(Base::PiPrime), p));
}

std::vector<Verdict> check_taxonomy() {
  const Gl2Type types[] = {Gl2Type::Dihedral, Gl2Type::Tetrahedral, Gl2Type::Octahedral,
                           Gl2Type::General};
  const TwistRelation rels[] = {TwistRelation::Equivalent, TwistRelation::Inequivalent};
  int consistent = 0;
  std::string problems;
  std::map<std::string, int> hits;
  for (auto p : types) {
    for (auto q : types) {
      for (auto rel : rels) {
        auto want = classify(p, q, rel);
        if (!want) continue;
        ++consistent;
        std::vector<std::string> matched;
        for (const auto& c : builtin_cases()) {
          if (case_matches(c, p, q, rel)) matched.push_back(c.id);
        }
        ++hits[*want];
        if (matched.size() != 1 || matched[0] != *want) {
          problems += fmt::format("{}{}/{}/{} matched {} case(s)", problems.empty() ? "" : "; ",
                                  to_string(p), to_string(q),
                                  rel == TwistRelation::Equivalent ? "~" : "!~", matched.size());
        }
      }
    }
  }
  std::vector<Verdict> out;
  out.push_back({"taxonomy/exclusive-exhaustive", problems.empty() ? Status::Pass : Status::Fail,
                 problems.empty()
                     ? fmt::format("{} consistent type assignments, each matched by exactly one case",
                                   consistent)
                     : problems});
  bool all_used = hits.size() == builtin_cases().size();
  out.push_back({"taxonomy/coverage", all_used ? Status::Pass : Status::Fail,
                 fmt::format("{} of {} cases reached", hits.size(), builtin_cases().size())});
  return out;
}

bool AllReport::pass() const {
  auto ok = [](const Verdict& v) { return v.status == Status::Pass; };
  return std::all_of(cases.begin(), cases.end(), [](const CaseReport& c) { return c.pass(); }) &&
         bridge.pass() && std::all_of(taxonomy.begin(), taxonomy.end(), ok);
}

AllReport run_all(unsigned threads) {
  AllReport r;
  const auto& cases = builtin_cases();
  r.cases.resize(cases.size());
  threads = std::max(1u, std::min<unsigned>(threads, cases.size()));
  if (threads == 1) {
    for (std::size_t i = 0; i < cases.size(); ++i) r.cases[i] = verify_case(cases[i]);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (std::size_t i = t; i < cases.size(); i += threads) r.cases[i] = verify_case(cases[i]);
      });
    }
    for (auto& th : pool) th.join();
  }
  r.bridge = verify_plethysm_bridge();
  r.taxonomy = check_taxonomy();
  return r;
}

}  // namespace lcheck
