#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "lcheck/ingest.hpp"
#include "lcheck/laurent.hpp"
#include "lcheck/rep.hpp"
#include "lcheck/satake.hpp"

namespace lcheck {

/// The fifteen factors of the degree-324 auxiliary product, one per line.
extern const char* const kAuxSeriesText;

/// Normalized auxiliary product. Throws Error if the degree is not 324.
const VirtualRep& build_D();

struct SosReport {
  bool identity = false;     // P == |2x + xb + b|^2
  bool x_real = false;       // conj(a_Ad(pi)) == a_Ad(pi)
  bool cg_pi = false;        // a_Ad(pi)^2 = 1 + a_Ad(pi) + a_Sym4(pi)w^-2
  bool cg_pi_prime = false;  // same for pi'
  LaurentPoly residual;      // P - Q
  std::size_t terms = 0;     // monomials in P
  bool pass() const { return identity && x_real && cg_pi && cg_pi_prime; }
};

SosReport verify_sos();

/// a_D(p^ell) from the exact coefficient polynomial.
std::complex<double> a_D(const SatakePoint& x, int ell = 1);
/// |2x + xb + b|^2 with x = a_Ad(pi), b = a_Ad(pi') (x) chi at p^ell.
double sos_value(const SatakePoint& x, int ell = 1);

struct ScanOptions {
  std::int64_t xmax = 10000;
  int lmax = 4;
  unsigned threads = 1;
  double tol = 1e-9;
};

struct ScanPoint {
  std::int64_t p = 0;
  int ell = 0;
  std::complex<double> direct;  // fifteen-factor sum
  std::complex<double> poly;    // exact polynomial evaluated
  double sos = 0;
};

struct ScanReport {
  std::size_t points = 0;
  std::vector<std::int64_t> skipped;  // ramified primes
  double min_re = 0;
  ScanPoint min_at;
  double max_im = 0;
  double max_mismatch = 0;
  std::vector<ScanPoint> failures;  // first few offending points
  bool pass() const { return failures.empty() && points > 0; }
};

/// Checks Re a_D >= -tol, |Im a_D| <= tol and direct sum == SOS form at
/// every unramified p <= xmax and ell <= lmax. Results do not depend on
/// the thread count.
ScanReport scan_positivity(const NewformData& f1, const NewformData& f2,
                           const CharacterData& chi, const ScanOptions& opts);

/// Satake point of (f1, f2, chi) at an unramified p with trivial nebentypus.
SatakePoint local_point(const NewformData& f1, const NewformData& f2,
                        const CharacterData& chi, std::int64_t p);

}  // namespace lcheck
