#include "lcheck/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include <fmt/format.h>

namespace lcheck {

int euler_phi(int n) {
  int r = 0;
  for (int k = 1; k <= n; ++k) {
    if (std::gcd(k, n) == 1) ++r;
  }
  return r;
}

namespace {

using Poly = std::vector<std::int64_t>;

Poly exact_div(Poly num, const Poly& den) {
  // den is monic.
  Poly q(num.size() - den.size() + 1, 0);
  for (std::size_t i = q.size(); i-- > 0;) {
    std::int64_t c = num[i + den.size() - 1];
    q[i] = c;
    for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
  }
  for (auto x : num) {
    if (x != 0) throw std::logic_error("inexact cyclotomic division");
  }
  return q;
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(int n) {
  static std::mutex mu;
  static std::map<int, Poly> cache;
  if (n < 1) throw std::invalid_argument("cyclotomic order must be positive");
  std::lock_guard lock(mu);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  // x^d - 1 = prod_{e | d} Phi_e, filled in increasing d so every
  // proper divisor is already cached.
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0 || cache.count(d)) continue;
    Poly p(d + 1, 0);
    p[0] = -1;
    p[d] = 1;
    for (int e = 1; e < d; ++e) {
      if (d % e == 0) p = exact_div(p, cache.at(e));
    }
    cache.emplace(d, std::move(p));
  }
  return cache.at(n);
}

Cyclotomic::Cyclotomic(std::int64_t v, int order) : n_(order), c_(euler_phi(order), 0) {
  c_[0] = v;
}

Cyclotomic Cyclotomic::from_power_sum(int n, const std::vector<std::int64_t>& powers) {
  // powers[k] is the coefficient of zeta^k, any length.
  const Poly& phi = cyclotomic_polynomial(n);
  const std::size_t deg = phi.size() - 1;
  Poly r = powers;
  for (std::size_t i = r.size(); i-- > deg;) {
    std::int64_t c = r[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= deg; ++j) r[i - deg + j] -= c * phi[j];
  }
  r.resize(deg, 0);
  return Cyclotomic(n, std::move(r));
}

Cyclotomic Cyclotomic::root(std::int64_t k, int order) {
  std::int64_t e = ((k % order) + order) % order;
  Poly p(e + 1, 0);
  p[e] = 1;
  return from_power_sum(order, p);
}

bool Cyclotomic::is_zero() const {
  for (auto x : c_) {
    if (x != 0) return false;
  }
  return true;
}

bool Cyclotomic::is_integer() const {
  for (std::size_t i = 1; i < c_.size(); ++i) {
    if (c_[i] != 0) return false;
  }
  return true;
}

std::int64_t Cyclotomic::integer_value() const {
  if (!is_integer()) throw std::domain_error("cyclotomic value is not an integer");
  return c_[0];
}

void Cyclotomic::check_order(const Cyclotomic& o) const {
  if (o.n_ != n_) throw std::invalid_argument("mixed cyclotomic orders");
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  check_order(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  check_order(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  Cyclotomic r = *this;
  return r += o;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
  Cyclotomic r = *this;
  return r -= o;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  check_order(o);
  if (o.is_integer()) {
    Cyclotomic r = *this;
    for (auto& x : r.c_) x *= o.c_[0];
    return r;
  }
  if (is_integer()) return o * *this;
  Poly p(2 * c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) p[i + j] += c_[i] * o.c_[j];
  }
  return from_power_sum(n_, p);
}

Cyclotomic Cyclotomic::galois(std::int64_t k) const {
  if (is_integer()) return *this;
  if (std::gcd(((k % n_) + n_) % n_, static_cast<std::int64_t>(n_)) != 1) {
    throw std::domain_error(fmt::format("zeta -> zeta^{} is not an automorphism of Q(zeta_{})", k, n_));
  }
  Poly p(n_, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    std::int64_t e = ((static_cast<std::int64_t>(i) * k) % n_ + n_) % n_;
    p[e] += c_[i];
  }
  return from_power_sum(n_, p);
}

Cyclotomic Cyclotomic::conj() const { return galois(-1); }

std::complex<double> Cyclotomic::value() const {
  std::complex<double> z(0.0, 0.0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    double t = 2.0 * std::numbers::pi * static_cast<double>(i) / n_;
    z += static_cast<double>(c_[i]) * std::complex<double>(std::cos(t), std::sin(t));
  }
  return z;
}

std::string Cyclotomic::to_string() const {
  if (is_integer()) return std::to_string(c_[0]);
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    std::int64_t x = c_[i];
    if (x == 0) continue;
    if (!out.empty()) out += x < 0 ? " - " : " + ";
    else if (x < 0) out += "-";
    std::int64_t a = x < 0 ? -x : x;
    if (i == 0) {
      out += std::to_string(a);
      continue;
    }
    if (a != 1) out += fmt::format("{}*", a);
    out += i == 1 ? "z" : fmt::format("z^{}", i);
  }
  return "(" + out + ")";
}

}  // namespace lcheck
