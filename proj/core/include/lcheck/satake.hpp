#pragma once

#include <complex>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>

#include "lcheck/laurent.hpp"
#include "lcheck/rep.hpp"

namespace lcheck {

/// Variables of the Satake torus: alpha, beta, alpha', beta' and one
/// variable per non-central character generator. Central characters map
/// to alpha*beta and alpha'*beta'.
std::shared_ptr<const VarSpace> satake_space();

LaurentPoly character_monomial(const FormalCharacter& c);

/// Trace of Frob^ell on the representation: the p^(-ell s) coefficient
/// of log L times ell. Throws NotEvaluable on opaque atoms.
LaurentPoly coeff_poly(const Entry& e, int ell = 1);
LaurentPoly coeff_poly(const VirtualRep& v, int ell = 1);

bool poly_equal(const VirtualRep& a, const VirtualRep& b, int ell = 1);

/// Local data at one unramified prime.
struct SatakePoint {
  std::optional<std::complex<double>> alpha, beta;
  std::optional<std::complex<double>> alpha_prime, beta_prime;
  std::map<std::string, std::complex<double>> chars;

  /// Checks |.| = 1 for every supplied value and alpha*beta = omega(p)
  /// when omega is supplied. Throws DataError.
  void validate(double tol = 1e-9) const;
};

std::complex<double> eval(const LaurentPoly& p, const SatakePoint& pt);

/// Direct floating evaluation of the trace, independent of LaurentPoly.
std::complex<double> numeric_coefficient(const VirtualRep& v, const SatakePoint& pt, int ell = 1);

/// Random unitary point; finite-order generators get roots of unity of
/// their order.
SatakePoint random_point(std::mt19937_64& rng);

}  // namespace lcheck
