#include "lcheck/dseries.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <thread>

#include <fmt/format.h>

#include "lcheck/errors.hpp"
#include "lcheck/expr.hpp"
#include "lcheck/repalg.hpp"

namespace lcheck {

const char* const kAuxSeriesText =
    "6*1\n"
    "(+) 4*Ad(pi) (x) Ad(pi') tw chi\n"
    "(+) 4*Ad(pi) (x) Ad(pi') tw chi^-1\n"
    "(+) 7*Ad(pi)\n"
    "(+) 2*Ad(pi')\n"
    "(+) 2*Ad(pi') tw chi\n"
    "(+) 2*Ad(pi') tw chi^-1\n"
    "(+) 5*Sym^4(pi) tw omega^-2\n"
    "(+) 2*Sym^4(pi') tw omega'^-2\n"
    "(+) 3*Ad(pi) (x) Ad(pi')\n"
    "(+) 3*Ad(pi) (x) Sym^4(pi') tw omega'^-2\n"
    "(+) Ad(pi') (x) Sym^4(pi) tw omega^-2\n"
    "(+) 2*Ad(pi') (x) Sym^4(pi) tw chi*omega^-2\n"
    "(+) 2*Ad(pi') (x) Sym^4(pi) tw chi^-1*omega^-2\n"
    "(+) Sym^4(pi) (x) Sym^4(pi') tw omega^-2*omega'^-2\n";

const VirtualRep& build_D() {
  static const VirtualRep d = [] {
    auto v = normalize(parse_expression(kAuxSeriesText));
    if (v.degree() != 324) {
      throw Error(fmt::format("auxiliary product has degree {}, expected 324", v.degree()));
    }
    return v;
  }();
  return d;
}

namespace {

LaurentPoly atom_poly(const RepAtom& a) { return coeff_poly(Entry{a}, 1); }

const FormalCharacter& chi() {
  static const auto c = FormalCharacter::generator("chi");
  return c;
}

}  // namespace

SosReport verify_sos() {
  SosReport r;
  auto space = satake_space();
  const auto P = coeff_poly(build_D(), 1);
  const auto x = atom_poly(RepAtom::adjoint(Base::Pi));
  const auto b = atom_poly(RepAtom::adjoint(Base::PiPrime, chi()));
  const auto two = LaurentPoly::constant(space, Cyclotomic(2));
  const auto one = LaurentPoly::constant(space, Cyclotomic(1));
  const auto s = two * x + x * b + b;
  const auto Q = s * s.conj();
  r.residual = P - Q;
  r.identity = r.residual.is_zero();
  r.terms = P.size();
  r.x_real = x.conj() == x;
  for (Base base : {Base::Pi, Base::PiPrime}) {
    auto ad = atom_poly(RepAtom::adjoint(base));
    auto s4 = atom_poly(RepAtom::sym(base, 4, central_character(base).pow(-2)));
    bool ok = ad * ad == one + ad + s4;
    (base == Base::Pi ? r.cg_pi : r.cg_pi_prime) = ok;
  }
  return r;
}

namespace {

const LaurentPoly& coeff_D(int ell) {
  static std::mutex m;
  static std::map<int, LaurentPoly> cache;
  std::lock_guard lock(m);
  auto it = cache.find(ell);
  if (it == cache.end()) it = cache.emplace(ell, coeff_poly(build_D(), ell)).first;
  return it->second;
}

}  // namespace

std::complex<double> a_D(const SatakePoint& x, int ell) { return eval(coeff_D(ell), x); }

double sos_value(const SatakePoint& x, int ell) {
  auto xv = numeric_coefficient(VirtualRep::of(RepAtom::adjoint(Base::Pi)), x, ell);
  auto bv = numeric_coefficient(VirtualRep::of(RepAtom::adjoint(Base::PiPrime, chi())), x, ell);
  return std::norm(2.0 * xv + xv * bv + bv);
}

SatakePoint local_point(const NewformData& f1, const NewformData& f2, const CharacterData& c,
                        std::int64_t p) {
  SatakePoint pt;
  auto [a, b] = satake_from_ap(f1, p);
  auto [a2, b2] = satake_from_ap(f2, p);
  pt.alpha = a;
  pt.beta = b;
  pt.alpha_prime = a2;
  pt.beta_prime = b2;
  pt.chars["chi"] = c.value(p);
  pt.chars["omega"] = 1.0;
  pt.chars["omega'"] = 1.0;
  pt.validate();
  return pt;
}

namespace {

struct PrimeResult {
  std::vector<ScanPoint> points;
};

}  // namespace

ScanReport scan_positivity(const NewformData& f1, const NewformData& f2, const CharacterData& c,
                           const ScanOptions& opts) {
  deligne_check(f1);
  deligne_check(f2);
  ScanReport report;
  std::vector<std::int64_t> primes;
  for (auto p : primes_up_to(opts.xmax)) {
    if (f1.ramified(p) || f2.ramified(p) || c.ramified(p)) {
      report.skipped.push_back(p);
    } else {
      primes.push_back(p);
    }
  }
  // Fetched once so workers never touch the cache lock.
  std::vector<const LaurentPoly*> polys;
  for (int ell = 1; ell <= opts.lmax; ++ell) polys.push_back(&coeff_D(ell));
  const auto& d = build_D();

  std::vector<PrimeResult> results(primes.size());
  const unsigned threads = std::max(1u, std::min<unsigned>(opts.threads, primes.size()));
  std::vector<std::exception_ptr> errors(threads);
  auto work = [&](unsigned t) {
    try {
      for (std::size_t i = t; i < primes.size(); i += threads) {
        auto pt = local_point(f1, f2, c, primes[i]);
        for (int ell = 1; ell <= opts.lmax; ++ell) {
          results[i].points.push_back({primes[i], ell, numeric_coefficient(d, pt, ell),
                                       eval(*polys[ell - 1], pt), sos_value(pt, ell)});
        }
      }
    } catch (...) {
      errors[t] = std::current_exception();
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  bool first = true;
  for (const auto& r : results) {
    for (const auto& sp : r.points) {
      ++report.points;
      double mismatch = std::max(std::abs(sp.direct - sp.sos), std::abs(sp.direct - sp.poly));
      if (first || sp.direct.real() < report.min_re) {
        report.min_re = sp.direct.real();
        report.min_at = sp;
        first = false;
      }
      report.max_im = std::max(report.max_im, std::abs(sp.direct.imag()));
      report.max_mismatch = std::max(report.max_mismatch, mismatch);
      bool bad = sp.direct.real() < -opts.tol || std::abs(sp.direct.imag()) > opts.tol ||
                 !(mismatch <= opts.tol);
      if (bad && report.failures.size() < 10) report.failures.push_back(sp);
    }
  }
  return report;
}

}  // namespace lcheck
