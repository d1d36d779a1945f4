#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "lcheck/character.hpp"
#include "lcheck/rep.hpp"

namespace lcheck {

/// Three-valued answer; Unknown means "not decided by the declared facts".
enum class Tri : std::uint8_t { No = 0, Yes = 1, Unknown = 2 };

const char* to_string(Tri t);
Tri tri_not(Tri t);

enum class Gl2Type : std::uint8_t {
  Unspecified,
  General,      // Sym^4 cuspidal
  Octahedral,   // Sym^3 cuspidal, Sym^4 not
  Tetrahedral,  // Sym^2 cuspidal, Sym^3 not
  Dihedral,
  NonDihedral,  // Sym^2 cuspidal, nothing more known
};

const char* to_string(Gl2Type t);
Gl2Type parse_gl2_type(std::string_view s);

enum class TwistRelation : std::uint8_t { Unknown, Equivalent, Inequivalent };

/// Declared facts that drive decomposition and triviality decisions.
///
/// Trivial characters become relations of a quotient group, so every
/// character handled under a Hypotheses must first be mapped with
/// `bring()`.
class Hypotheses {
 public:
  Hypotheses();
  static const Hypotheses& none();
  static Hypotheses parse(std::string_view text);

  void set_type(Base b, Gl2Type t);
  Gl2Type type(Base b) const { return types_[static_cast<int>(b)]; }
  void set_relation(TwistRelation r) { relation_ = r; }
  TwistRelation relation() const { return relation_; }

  void declare_trivial(const FormalCharacter& c);
  void declare_nontrivial(const FormalCharacter& c);
  /// Ad(b) (x) c = Ad(b) with c nontrivial. Needs a tetrahedral base and is
  /// recorded as c = mu_b.
  void declare_self_twist(Base b, const FormalCharacter& c);

  /// Applies one statement line (`type pi tetrahedral`, `trivial xi`, ...).
  void apply_line(std::string_view line);
  /// Statement lines reproducing this object.
  std::vector<std::string> lines() const;

  const std::shared_ptr<const CharacterGroup>& group() const { return group_; }
  FormalCharacter bring(const FormalCharacter& c) const { return c.in(group_); }

  /// Group used to absorb twists of Sym^m(b): a self-twist subgroup is
  /// folded into the relation lattice. Same object as group() when none.
  std::shared_ptr<const CharacterGroup> absorption_group(Base b, int m) const;

  Tri triviality(const FormalCharacter& c) const;
  /// Declared nontrivial characters plus those implied by the types
  /// (mu_b for tetrahedral, eta_b for octahedral), mapped into group().
  std::vector<FormalCharacter> known_nontrivial() const;

  /// True when no declaration changes normal forms.
  bool affects_normal_form() const;
  bool empty() const { return lines().empty(); }

  friend bool operator==(const Hypotheses& a, const Hypotheses& b) {
    return a.lines() == b.lines();
  }

 private:
  void rebuild();

  Gl2Type types_[2] = {Gl2Type::Unspecified, Gl2Type::Unspecified};
  TwistRelation relation_ = TwistRelation::Unknown;
  std::vector<FormalCharacter> trivial_;
  std::vector<FormalCharacter> nontrivial_;
  std::vector<FormalCharacter> selftwist_;  // c * mu_b^-1, one per selftwist line
  std::vector<std::string> selftwist_lines_;
  std::shared_ptr<const CharacterGroup> group_;
  std::shared_ptr<const CharacterGroup> absorb_[2];
};

/// Cuspidality of a normalized atom: Yes, No (decomposes or is a character
/// with no cuspidal meaning) or Unknown (undeclared).
Tri is_cuspidal(const RepAtom& a, const Hypotheses& h);

}  // namespace lcheck
