#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <variant>

#include "lcheck/character.hpp"

namespace lcheck {

/// The two GL(2) symbols every identity is written over.
enum class Base : std::uint8_t { Pi = 0, PiPrime = 1 };

inline const char* base_name(Base b) { return b == Base::Pi ? "pi" : "pi'"; }
/// The central character omega_b as an element of the standard group.
FormalCharacter central_character(Base b);

/// Opaque GL(2) atoms. Nu is the dihedral constituent of Sym^4 for an
/// octahedral base; Ind is the induced representation Ind_K(xi^2) of a
/// dihedral base.
enum class OpaqueLabel : std::uint8_t { Nu = 0, Ind = 1 };

struct RepAtom {
  enum class Kind : std::uint8_t { Char = 0, SymPow = 1, Opaque = 2 };

  Kind kind = Kind::Char;
  Base base = Base::Pi;
  int m = 0;
  OpaqueLabel label = OpaqueLabel::Nu;
  FormalCharacter twist = FormalCharacter::trivial();

  static RepAtom character(FormalCharacter c);
  static RepAtom sym(Base b, int m, FormalCharacter twist = FormalCharacter::trivial());
  /// Ad(b) (x) twist = Sym^2(b) (x) omega_b^-1 twist.
  static RepAtom adjoint(Base b, FormalCharacter twist = FormalCharacter::trivial());
  static RepAtom opaque(OpaqueLabel l, Base b, FormalCharacter twist = FormalCharacter::trivial());

  bool is_char() const { return kind == Kind::Char; }
  int degree() const;
  RepAtom twisted(const FormalCharacter& c) const;
  RepAtom untwisted() const;

  friend auto operator<=>(const RepAtom&, const RepAtom&) = default;
  friend bool operator==(const RepAtom&, const RepAtom&) = default;
};

/// Formal Rankin-Selberg pair L(s, first x second).
struct RsPair {
  RepAtom first;
  RepAtom second;

  int degree() const { return first.degree() * second.degree(); }
  friend auto operator<=>(const RsPair&, const RsPair&) = default;
  friend bool operator==(const RsPair&, const RsPair&) = default;
};

using Entry = std::variant<RepAtom, RsPair>;

int degree(const Entry& e);

/// Signed multiset difference of two VirtualReps.
using RepDelta = std::map<Entry, std::int64_t>;

/// An L-function product: multiset of standard and Rankin-Selberg factors,
/// plus an exponent of (s - 1).
class VirtualRep {
 public:
  VirtualRep() = default;
  static VirtualRep of(const Entry& e, std::int64_t mult = 1);
  static VirtualRep pair(const RepAtom& a, const RepAtom& b, std::int64_t mult = 1);
  static VirtualRep pole_factor(std::int64_t k);

  /// Adds `mult` copies; negative values remove copies and throw if the
  /// multiplicity would drop below zero.
  void add(const Entry& e, std::int64_t mult = 1);
  void add(const VirtualRep& other);

  const std::map<Entry, std::int64_t>& entries() const { return entries_; }
  std::int64_t pole_shift() const { return pole_shift_; }
  void set_pole_shift(std::int64_t k) { pole_shift_ = k; }

  bool empty() const { return entries_.empty(); }
  std::int64_t degree() const;
  std::int64_t multiplicity(const Entry& e) const;
  std::size_t size() const { return entries_.size(); }

  /// Isobaric sum: L-functions multiply.
  VirtualRep operator+(const VirtualRep& o) const;
  VirtualRep scaled(std::int64_t n) const;

  friend bool operator==(const VirtualRep&, const VirtualRep&) = default;

 private:
  std::map<Entry, std::int64_t> entries_;
  std::int64_t pole_shift_ = 0;
};

/// lhs - rhs as a signed multiset (zero entries dropped).
RepDelta difference(const VirtualRep& lhs, const VirtualRep& rhs);

// Printing. Output is valid expression syntax and parses back to the same
// normalized object. Sym^2 prints as Ad with the twist shifted by omega.
std::string to_string(const RepAtom& a);
std::string to_string(const RsPair& p);
std::string to_string(const Entry& e);
std::string to_string(const VirtualRep& v);

}  // namespace lcheck
