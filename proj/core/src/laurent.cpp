#include "lcheck/laurent.hpp"

#include <stdexcept>

#include <fmt/format.h>

#include "lcheck/errors.hpp"

namespace lcheck {

std::optional<std::size_t> VarSpace::index(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i].name == name) return i;
  }
  return std::nullopt;
}

void LaurentPoly::normalize_monomial(Monomial& m) const {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (auto n = space_->var(i).order) m[i] = ((m[i] % *n) + *n) % *n;
  }
}

void LaurentPoly::add_term(Monomial m, const Cyclotomic& c) {
  if (c.is_zero()) return;
  normalize_monomial(m);
  auto [it, fresh] = terms_.try_emplace(std::move(m), c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

LaurentPoly LaurentPoly::constant(std::shared_ptr<const VarSpace> space, const Cyclotomic& c) {
  Monomial m(space->size(), 0);
  return monomial(std::move(space), std::move(m), c);
}

LaurentPoly LaurentPoly::monomial(std::shared_ptr<const VarSpace> space, Monomial m,
                                  const Cyclotomic& c) {
  if (m.size() != space->size()) throw std::invalid_argument("monomial width mismatch");
  LaurentPoly p(std::move(space));
  p.add_term(std::move(m), c);
  return p;
}

LaurentPoly LaurentPoly::variable(std::shared_ptr<const VarSpace> space, std::string_view name,
                                  std::int32_t power) {
  auto i = space->index(name);
  if (!i) throw std::invalid_argument(fmt::format("unknown variable '{}'", name));
  Monomial m(space->size(), 0);
  m[*i] = power;
  return monomial(std::move(space), std::move(m));
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (!space_) space_ = o.space_;
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  if (!space_) space_ = o.space_;
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  return r += o;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  return r -= o;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(space_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r(space_ ? space_ : o.space_);
  Monomial m;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      m = ma;
      for (std::size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

LaurentPoly LaurentPoly::scaled(const Cyclotomic& c) const {
  LaurentPoly r(space_);
  for (const auto& [m, x] : terms_) r.add_term(m, x * c);
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly r = constant(space_, Cyclotomic(1));
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

LaurentPoly LaurentPoly::conj() const {
  LaurentPoly r(space_);
  for (const auto& [m, c] : terms_) {
    Monomial n = m;
    for (auto& e : n) e = -e;
    r.add_term(std::move(n), c.conj());
  }
  return r;
}

LaurentPoly LaurentPoly::adams(std::int32_t l) const {
  LaurentPoly r(space_);
  for (const auto& [m, c] : terms_) {
    Monomial n = m;
    for (auto& e : n) e *= l;
    r.add_term(std::move(n), c.galois(l));
  }
  return r;
}

LaurentPoly LaurentPoly::specialize(std::string_view var, std::int64_t k) const {
  auto i = space_->index(var);
  if (!i) throw std::invalid_argument(fmt::format("unknown variable '{}'", var));
  LaurentPoly r(space_);
  for (const auto& [m, c] : terms_) {
    Monomial n = m;
    std::int64_t e = n[*i];
    n[*i] = 0;
    r.add_term(std::move(n), c * Cyclotomic::root(e * k, c.order()));
  }
  return r;
}

std::complex<double> LaurentPoly::eval(
    const std::vector<std::optional<std::complex<double>>>& values) const {
  if (values.size() != space_->size()) throw std::invalid_argument("value vector width mismatch");
  std::complex<double> total(0.0, 0.0);
  for (const auto& [m, c] : terms_) {
    std::complex<double> t = c.value();
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!values[i]) throw MissingVariable(space_->var(i).name);
      t *= std::pow(*values[i], m[i]);
    }
    total += t;
  }
  return total;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += space_->var(i).name;
      if (m[i] != 1) mono += fmt::format("^{}", m[i]);
    }
    std::string coeff = c.to_string();
    if (!out.empty()) out += " + ";
    if (mono.empty()) {
      out += coeff;
    } else if (coeff == "1") {
      out += mono;
    } else {
      out += coeff + "*" + mono;
    }
  }
  return out;
}

}  // namespace lcheck
