#pragma once

#include <complex>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lcheck/cyclotomic.hpp"

namespace lcheck {

/// Named variables; a variable with an order n satisfies v^n = 1 and its
/// exponents are kept in [0, n).
class VarSpace {
 public:
  struct Var {
    std::string name;
    std::optional<int> order;
  };

  explicit VarSpace(std::vector<Var> vars) : vars_(std::move(vars)) {}

  std::size_t size() const { return vars_.size(); }
  const Var& var(std::size_t i) const { return vars_[i]; }
  std::optional<std::size_t> index(std::string_view name) const;

 private:
  std::vector<Var> vars_;
};

using Monomial = std::vector<std::int32_t>;

/// Exact Laurent polynomial with coefficients in Z[zeta_n].
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(std::shared_ptr<const VarSpace> space) : space_(std::move(space)) {}

  static LaurentPoly constant(std::shared_ptr<const VarSpace> space, const Cyclotomic& c);
  static LaurentPoly monomial(std::shared_ptr<const VarSpace> space, Monomial m,
                              const Cyclotomic& c = Cyclotomic(1));
  static LaurentPoly variable(std::shared_ptr<const VarSpace> space, std::string_view name,
                              std::int32_t power = 1);

  const std::shared_ptr<const VarSpace>& space() const { return space_; }
  const std::map<Monomial, Cyclotomic>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly scaled(const Cyclotomic& c) const;
  LaurentPoly pow(unsigned k) const;

  /// Complex conjugate on the unitary torus: variables inverted and
  /// coefficients conjugated.
  LaurentPoly conj() const;
  /// Adams operation v -> v^l on every variable.
  LaurentPoly adams(std::int32_t l) const;
  /// Substitutes var -> zeta^k of the coefficient field.
  LaurentPoly specialize(std::string_view var, std::int64_t k) const;

  /// Numerical value; `values[i]` is the value of variable i. Variables
  /// that appear with a nonzero exponent must be supplied.
  std::complex<double> eval(const std::vector<std::optional<std::complex<double>>>& values) const;

  std::string to_string() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_;
  }

 private:
  void add_term(Monomial m, const Cyclotomic& c);
  void normalize_monomial(Monomial& m) const;

  std::shared_ptr<const VarSpace> space_;
  std::map<Monomial, Cyclotomic> terms_;
};

}  // namespace lcheck
