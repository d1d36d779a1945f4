#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace lcheck {

/// Element of Z[zeta_n] in the power basis 1, zeta, ..., zeta^(phi(n)-1),
/// reduced modulo the n-th cyclotomic polynomial.
class Cyclotomic {
 public:
  static constexpr int kDefaultOrder = 12;

  Cyclotomic() : Cyclotomic(0) {}
  explicit Cyclotomic(std::int64_t v, int order = kDefaultOrder);
  static Cyclotomic root(std::int64_t k, int order = kDefaultOrder);

  int order() const { return n_; }
  const std::vector<std::int64_t>& coefficients() const { return c_; }
  bool is_zero() const;
  bool is_integer() const;
  std::int64_t integer_value() const;

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);

  /// Complex conjugation, zeta -> zeta^-1.
  Cyclotomic conj() const;
  /// Galois action zeta -> zeta^k; requires gcd(k, n) = 1 unless integral.
  Cyclotomic galois(std::int64_t k) const;

  std::complex<double> value() const;
  std::string to_string() const;

  friend bool operator==(const Cyclotomic&, const Cyclotomic&) = default;

 private:
  Cyclotomic(int n, std::vector<std::int64_t> c) : n_(n), c_(std::move(c)) {}
  static Cyclotomic from_power_sum(int n, const std::vector<std::int64_t>& powers);
  void check_order(const Cyclotomic& o) const;

  int n_;
  std::vector<std::int64_t> c_;
};

/// Coefficients (low degree first) of the n-th cyclotomic polynomial.
const std::vector<std::int64_t>& cyclotomic_polynomial(int n);
int euler_phi(int n);

}  // namespace lcheck
