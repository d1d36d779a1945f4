#include "lcheck/satake.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "lcheck/errors.hpp"

namespace lcheck {

namespace {

constexpr std::size_t kAlpha = 0, kBeta = 1, kAlphaP = 2, kBetaP = 3;

// Position of each standard generator in the variable space; central
// characters have none.
std::optional<std::size_t> var_of_generator(std::size_t g) {
  const auto& name = CharacterGroup::standard()->name(g);
  if (name == "omega" || name == "omega'") return std::nullopt;
  return satake_space()->index(name);
}

}  // namespace

std::shared_ptr<const VarSpace> satake_space() {
  static const auto space = [] {
    std::vector<VarSpace::Var> vars = {
        {"alpha", {}}, {"beta", {}}, {"alpha'", {}}, {"beta'", {}}};
    auto g = CharacterGroup::standard();
    for (std::size_t i = 0; i < g->rank(); ++i) {
      const auto& n = g->name(i);
      if (n == "omega" || n == "omega'") continue;
      auto order = g->generator_order(i);
      vars.push_back({n, order ? std::optional<int>(static_cast<int>(*order)) : std::nullopt});
    }
    return std::make_shared<const VarSpace>(std::move(vars));
  }();
  return space;
}

LaurentPoly character_monomial(const FormalCharacter& c) {
  static const auto standard_rows = CharacterGroup::standard()->hermite_rows();
  if (c.group()->hermite_rows() != standard_rows) {
    throw Error("character lives in a hypothesis quotient; no torus evaluation");
  }
  auto space = satake_space();
  Monomial m(space->size(), 0);
  const auto& e = c.exponents();
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    const auto& name = c.group()->name(i);
    if (name == "omega") {
      m[kAlpha] += e[i];
      m[kBeta] += e[i];
    } else if (name == "omega'") {
      m[kAlphaP] += e[i];
      m[kBetaP] += e[i];
    } else {
      m[*var_of_generator(i)] += e[i];
    }
  }
  return LaurentPoly::monomial(space, std::move(m));
}

namespace {

LaurentPoly atom_poly(const RepAtom& a, int ell) {
  auto space = satake_space();
  switch (a.kind) {
    case RepAtom::Kind::Char:
      return character_monomial(a.twist).adams(ell);
    case RepAtom::Kind::Opaque:
      throw NotEvaluable(to_string(a));
    case RepAtom::Kind::SymPow:
      break;
  }
  const std::size_t ia = a.base == Base::Pi ? kAlpha : kAlphaP;
  const std::size_t ib = a.base == Base::Pi ? kBeta : kBetaP;
  LaurentPoly s(space);
  for (int j = 0; j <= a.m; ++j) {
    Monomial m(space->size(), 0);
    m[ia] = j * ell;
    m[ib] = (a.m - j) * ell;
    s += LaurentPoly::monomial(space, std::move(m));
  }
  return s * character_monomial(a.twist).adams(ell);
}

}  // namespace

LaurentPoly coeff_poly(const Entry& e, int ell) {
  if (const auto* a = std::get_if<RepAtom>(&e)) return atom_poly(*a, ell);
  const auto& p = std::get<RsPair>(e);
  return atom_poly(p.first, ell) * atom_poly(p.second, ell);
}

LaurentPoly coeff_poly(const VirtualRep& v, int ell) {
  LaurentPoly total(satake_space());
  for (const auto& [e, n] : v.entries()) total += coeff_poly(e, ell).scaled(Cyclotomic(n));
  return total;
}

bool poly_equal(const VirtualRep& a, const VirtualRep& b, int ell) {
  return coeff_poly(a, ell) == coeff_poly(b, ell);
}

void SatakePoint::validate(double tol) const {
  auto unit = [&](const std::optional<std::complex<double>>& z, const char* what) {
    if (z && std::abs(std::abs(*z) - 1.0) > tol) {
      throw DataError(fmt::format("{} = {}{:+}i is not unitary", what, z->real(), z->imag()));
    }
  };
  unit(alpha, "alpha");
  unit(beta, "beta");
  unit(alpha_prime, "alpha'");
  unit(beta_prime, "beta'");
  for (const auto& [name, z] : chars) {
    if (std::abs(std::abs(z) - 1.0) > tol) {
      throw DataError(fmt::format("character {} has |value| = {}", name, std::abs(z)));
    }
  }
  auto central = [&](const char* name, const auto& a, const auto& b) {
    auto it = chars.find(name);
    if (it == chars.end() || !a || !b) return;
    if (std::abs(*a * *b - it->second) > tol) {
      throw DataError(fmt::format("Satake product does not match {}(p)", name));
    }
  };
  central("omega", alpha, beta);
  central("omega'", alpha_prime, beta_prime);
}

std::complex<double> eval(const LaurentPoly& p, const SatakePoint& pt) {
  auto space = satake_space();
  std::vector<std::optional<std::complex<double>>> v(space->size());
  v[kAlpha] = pt.alpha;
  v[kBeta] = pt.beta;
  v[kAlphaP] = pt.alpha_prime;
  v[kBetaP] = pt.beta_prime;
  for (std::size_t i = 4; i < space->size(); ++i) {
    auto it = pt.chars.find(space->var(i).name);
    if (it != pt.chars.end()) v[i] = it->second;
  }
  return p.eval(v);
}

namespace {

std::complex<double> need(const std::optional<std::complex<double>>& z, const char* name) {
  if (!z) throw MissingVariable(name);
  return *z;
}

std::complex<double> char_value(const FormalCharacter& c, const SatakePoint& pt) {
  std::complex<double> v(1.0, 0.0);
  const auto& e = c.exponents();
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    const auto& name = c.group()->name(i);
    std::complex<double> base;
    if (name == "omega") {
      base = need(pt.alpha, "alpha") * need(pt.beta, "beta");
    } else if (name == "omega'") {
      base = need(pt.alpha_prime, "alpha'") * need(pt.beta_prime, "beta'");
    } else {
      auto it = pt.chars.find(name);
      if (it == pt.chars.end()) throw MissingVariable(name);
      base = it->second;
    }
    v *= std::pow(base, static_cast<int>(e[i]));
  }
  return v;
}

std::complex<double> atom_trace(const RepAtom& a, const SatakePoint& pt, int ell) {
  if (a.kind == RepAtom::Kind::Opaque) throw NotEvaluable(to_string(a));
  std::complex<double> tw = std::pow(char_value(a.twist, pt), ell);
  if (a.kind == RepAtom::Kind::Char) return tw;
  auto x = a.base == Base::Pi ? need(pt.alpha, "alpha") : need(pt.alpha_prime, "alpha'");
  auto y = a.base == Base::Pi ? need(pt.beta, "beta") : need(pt.beta_prime, "beta'");
  x = std::pow(x, ell);
  y = std::pow(y, ell);
  std::complex<double> s(0.0, 0.0);
  for (int j = 0; j <= a.m; ++j) s += std::pow(x, j) * std::pow(y, a.m - j);
  return s * tw;
}

}  // namespace

std::complex<double> numeric_coefficient(const VirtualRep& v, const SatakePoint& pt, int ell) {
  std::complex<double> total(0.0, 0.0);
  for (const auto& [e, n] : v.entries()) {
    std::complex<double> t;
    if (const auto* a = std::get_if<RepAtom>(&e)) {
      t = atom_trace(*a, pt, ell);
    } else {
      const auto& p = std::get<RsPair>(e);
      t = atom_trace(p.first, pt, ell) * atom_trace(p.second, pt, ell);
    }
    total += static_cast<double>(n) * t;
  }
  return total;
}

SatakePoint random_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  auto unit = [&] { return std::polar(1.0, angle(rng)); };
  SatakePoint pt;
  pt.alpha = unit();
  pt.beta = unit();
  pt.alpha_prime = unit();
  pt.beta_prime = unit();
  auto space = satake_space();
  for (std::size_t i = 4; i < space->size(); ++i) {
    const auto& var = space->var(i);
    if (var.order) {
      std::uniform_int_distribution<int> k(0, *var.order - 1);
      pt.chars[var.name] = std::polar(1.0, 2.0 * std::numbers::pi * k(rng) / *var.order);
    } else {
      pt.chars[var.name] = unit();
    }
  }
  return pt;
}

}  // namespace lcheck
