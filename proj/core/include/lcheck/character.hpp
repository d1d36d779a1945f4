#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lcheck {

using Exponents = std::vector<std::int64_t>;

/// Finitely presented abelian group Z^n / L on named generators.
///
/// The relation lattice L is kept in Hermite normal form, which makes
/// reduction of an exponent vector canonical: two vectors are congruent
/// modulo L iff their reductions are identical.
class CharacterGroup {
 public:
  CharacterGroup(std::vector<std::string> generators,
                 std::vector<Exponents> relations);

  /// The generator universe shared by the whole engine:
  /// chi, omega, omega', mu, mu', eta, eta', xi, xiF, xiF' with
  /// mu^3 = mu'^3 = eta^2 = eta'^2 = 1.
  static std::shared_ptr<const CharacterGroup> standard();

  /// Same generators, relation lattice enlarged by `extra`.
  std::shared_ptr<const CharacterGroup> with_relations(
      const std::vector<Exponents>& extra) const;

  std::size_t rank() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index(std::string_view name) const;

  /// Canonical representative of v modulo the relation lattice.
  Exponents reduce(Exponents v) const;

  /// Order of the i-th generator in the quotient, nullopt when infinite.
  std::optional<std::int64_t> generator_order(std::size_t i) const;

  /// True when every relation involves a single generator (g^n = 1).
  bool diagonal() const;

  const std::vector<Exponents>& hermite_rows() const { return rows_; }
  const std::vector<Exponents>& relations() const { return relations_; }

 private:
  std::vector<std::string> names_;
  std::vector<Exponents> relations_;
  std::vector<Exponents> rows_;  // HNF, pivots strictly increasing
  std::vector<std::size_t> pivots_;
};

/// Row-style Hermite normal form of the lattice spanned by `rows`
/// (zero rows dropped, positive pivots, entries above pivots reduced
/// into [0, pivot)).
std::vector<Exponents> hermite_normal_form(std::vector<Exponents> rows,
                                           std::size_t width);

/// An element of a CharacterGroup, always stored reduced.
class FormalCharacter {
 public:
  FormalCharacter() = default;
  explicit FormalCharacter(std::shared_ptr<const CharacterGroup> group);
  FormalCharacter(std::shared_ptr<const CharacterGroup> group, Exponents e);

  static FormalCharacter trivial() {
    return FormalCharacter(CharacterGroup::standard());
  }
  /// The named generator of the standard group; throws on unknown names.
  static FormalCharacter generator(std::string_view name);

  const std::shared_ptr<const CharacterGroup>& group() const { return group_; }
  const Exponents& exponents() const { return exps_; }
  std::int64_t exponent(std::string_view name) const;

  bool is_identity() const;
  FormalCharacter inverse() const;
  FormalCharacter pow(std::int64_t k) const;
  FormalCharacter operator*(const FormalCharacter& o) const;
  FormalCharacter& operator*=(const FormalCharacter& o);

  /// Re-reduce in another group over the same generator list.
  FormalCharacter in(std::shared_ptr<const CharacterGroup> g) const;

  std::string to_string() const;

  friend bool operator==(const FormalCharacter& a, const FormalCharacter& b) {
    return a.exps_ == b.exps_;
  }
  friend std::strong_ordering operator<=>(const FormalCharacter& a,
                                          const FormalCharacter& b) {
    return a.exps_ <=> b.exps_;
  }

 private:
  std::shared_ptr<const CharacterGroup> group_;
  Exponents exps_;
};

/// Parses `1`, `chi`, `chi*mu^-1*omega'^2`, ... over the standard group.
FormalCharacter parse_character(std::string_view text);

}  // namespace lcheck
