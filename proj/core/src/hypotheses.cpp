#include "lcheck/hypotheses.hpp"

#include <sstream>

#include <fmt/format.h>

#include "lcheck/errors.hpp"

namespace lcheck {

const char* to_string(Tri t) {
  switch (t) {
    case Tri::No: return "no";
    case Tri::Yes: return "yes";
    case Tri::Unknown: return "unknown";
  }
  return "?";
}

Tri tri_not(Tri t) {
  if (t == Tri::Yes) return Tri::No;
  if (t == Tri::No) return Tri::Yes;
  return Tri::Unknown;
}

const char* to_string(Gl2Type t) {
  switch (t) {
    case Gl2Type::Unspecified: return "unspecified";
    case Gl2Type::General: return "general";
    case Gl2Type::Octahedral: return "octahedral";
    case Gl2Type::Tetrahedral: return "tetrahedral";
    case Gl2Type::Dihedral: return "dihedral";
    case Gl2Type::NonDihedral: return "nondihedral";
  }
  return "?";
}

Gl2Type parse_gl2_type(std::string_view s) {
  for (auto t : {Gl2Type::Unspecified, Gl2Type::General, Gl2Type::Octahedral,
                 Gl2Type::Tetrahedral, Gl2Type::Dihedral, Gl2Type::NonDihedral}) {
    if (s == to_string(t)) return t;
  }
  throw ParseError(fmt::format("unknown GL(2) type '{}'", s));
}

namespace {

const char* mu_of(Base b) { return b == Base::Pi ? "mu" : "mu'"; }
const char* eta_of(Base b) { return b == Base::Pi ? "eta" : "eta'"; }

Base parse_base(std::string_view s) {
  if (s == "pi") return Base::Pi;
  if (s == "pi'") return Base::PiPrime;
  throw ParseError(fmt::format("expected pi or pi', got '{}'", s));
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::string> split_ws(std::string_view line) {
  std::istringstream in{std::string(line)};
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

FormalCharacter parse_char_arg(const std::string& text) {
  try {
    return parse_character(text);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

Hypotheses::Hypotheses() { rebuild(); }

const Hypotheses& Hypotheses::none() {
  static const Hypotheses h;
  return h;
}

Hypotheses Hypotheses::parse(std::string_view text) {
  Hypotheses h;
  std::istringstream in{std::string(text)};
  int lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      h.apply_line(line);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), lineno);
    }
  }
  return h;
}

void Hypotheses::set_type(Base b, Gl2Type t) {
  types_[static_cast<int>(b)] = t;
  rebuild();
}

void Hypotheses::declare_trivial(const FormalCharacter& c) {
  trivial_.push_back(c.in(CharacterGroup::standard()));
  rebuild();
}

void Hypotheses::declare_nontrivial(const FormalCharacter& c) {
  nontrivial_.push_back(c.in(CharacterGroup::standard()));
}

void Hypotheses::declare_self_twist(Base b, const FormalCharacter& c) {
  if (type(b) != Gl2Type::Tetrahedral) {
    throw ParseError(fmt::format("selftwist {} needs a tetrahedral declaration first",
                                 base_name(b)));
  }
  selftwist_lines_.push_back(fmt::format("selftwist {} {}", base_name(b), c.to_string()));
  // Ad(b) (x) c = Ad(b) with c != 1 forces c to be a generator of <mu_b>;
  // we take c = mu_b without loss.
  selftwist_.push_back((c * FormalCharacter::generator(mu_of(b)).inverse())
                         .in(CharacterGroup::standard()));
  rebuild();
}

void Hypotheses::apply_line(std::string_view line) {
  auto w = split_ws(line);
  if (w.empty()) return;
  const auto& kw = w[0];
  if (kw == "type" && w.size() == 3) {
    set_type(parse_base(w[1]), parse_gl2_type(w[2]));
  } else if (kw == "relation" && w.size() == 4) {
    auto a = parse_base(w[1]);
    auto b = parse_base(w[3]);
    if (a == b) throw ParseError("relation needs pi and pi'");
    if (w[2] == "~") {
      relation_ = TwistRelation::Equivalent;
    } else if (w[2] == "!~") {
      relation_ = TwistRelation::Inequivalent;
    } else {
      throw ParseError(fmt::format("expected ~ or !~, got '{}'", w[2]));
    }
    rebuild();
  } else if (kw == "trivial" && w.size() >= 2) {
    std::string rest;
    for (std::size_t i = 1; i < w.size(); ++i) rest += w[i];
    declare_trivial(parse_char_arg(rest));
  } else if (kw == "nontrivial" && w.size() >= 2) {
    std::string rest;
    for (std::size_t i = 1; i < w.size(); ++i) rest += w[i];
    declare_nontrivial(parse_char_arg(rest));
  } else if (kw == "selftwist" && w.size() == 3) {
    declare_self_twist(parse_base(w[1]), parse_char_arg(w[2]));
  } else {
    throw ParseError(fmt::format("bad hypothesis statement '{}'", line));
  }
}

std::vector<std::string> Hypotheses::lines() const {
  std::vector<std::string> out;
  for (auto b : {Base::Pi, Base::PiPrime}) {
    if (type(b) != Gl2Type::Unspecified) {
      out.push_back(fmt::format("type {} {}", base_name(b), to_string(type(b))));
    }
  }
  if (relation_ == TwistRelation::Equivalent) out.emplace_back("relation pi ~ pi'");
  if (relation_ == TwistRelation::Inequivalent) out.emplace_back("relation pi !~ pi'");
  for (const auto& c : trivial_) out.push_back("trivial " + c.to_string());
  for (const auto& c : nontrivial_) out.push_back("nontrivial " + c.to_string());
  out.insert(out.end(), selftwist_lines_.begin(), selftwist_lines_.end());
  return out;
}

void Hypotheses::rebuild() {
  std::vector<Exponents> rel;
  for (const auto& c : trivial_) rel.push_back(c.exponents());
  for (const auto& c : selftwist_) rel.push_back(c.exponents());
  group_ = rel.empty() ? CharacterGroup::standard()
                       : CharacterGroup::standard()->with_relations(rel);
  for (auto b : {Base::Pi, Base::PiPrime}) {
    auto& slot = absorb_[static_cast<int>(b)];
    if (type(b) == Gl2Type::Tetrahedral) {
      auto mu = FormalCharacter::generator(mu_of(b));
      auto r = rel;
      r.push_back(mu.exponents());
      slot = CharacterGroup::standard()->with_relations(r);
    } else {
      slot = group_;
    }
  }
}

std::shared_ptr<const CharacterGroup> Hypotheses::absorption_group(Base b, int m) const {
  if (m == 2) return absorb_[static_cast<int>(b)];
  return group_;
}

std::vector<FormalCharacter> Hypotheses::known_nontrivial() const {
  std::vector<FormalCharacter> known;
  for (const auto& n : nontrivial_) known.push_back(bring(n));
  for (auto b : {Base::Pi, Base::PiPrime}) {
    if (type(b) == Gl2Type::Tetrahedral) known.push_back(bring(FormalCharacter::generator(mu_of(b))));
    if (type(b) == Gl2Type::Octahedral) known.push_back(bring(FormalCharacter::generator(eta_of(b))));
  }
  return known;
}

Tri Hypotheses::triviality(const FormalCharacter& c) const {
  auto x = bring(c);
  if (x.is_identity()) return Tri::Yes;
  for (const auto& d : known_nontrivial()) {
    if (d == x || d.inverse() == x) return Tri::No;
    // A nontrivial character of prime order n generates a group of order n,
    // so every power d^k with n not dividing k is nontrivial.
    std::int64_t order = 0;
    auto p = d;
    for (std::int64_t k = 1; k <= 64; ++k, p *= d) {
      if (p.is_identity()) {
        order = k;
        break;
      }
    }
    if (!is_prime(order)) continue;
    auto q = d;
    for (std::int64_t k = 1; k < order; ++k, q *= d) {
      if (q == x) return Tri::No;
    }
  }
  return Tri::Unknown;
}

bool Hypotheses::affects_normal_form() const {
  if (!trivial_.empty() || !selftwist_.empty()) return true;
  if (relation_ == TwistRelation::Equivalent) return true;
  for (auto b : {Base::Pi, Base::PiPrime}) {
    switch (type(b)) {
      case Gl2Type::Tetrahedral:
      case Gl2Type::Octahedral:
      case Gl2Type::Dihedral:
        return true;
      default:
        break;
    }
  }
  return false;
}

Tri is_cuspidal(const RepAtom& a, const Hypotheses& h) {
  switch (a.kind) {
    case RepAtom::Kind::Char:
      return Tri::Yes;
    case RepAtom::Kind::Opaque:
      return a.label == OpaqueLabel::Nu ? Tri::Yes : Tri::Unknown;
    case RepAtom::Kind::SymPow:
      break;
  }
  int m = a.m;
  switch (h.type(a.base)) {
    case Gl2Type::General:
      return m <= 4 ? Tri::Yes : Tri::Unknown;
    case Gl2Type::Octahedral:
      if (m <= 3) return Tri::Yes;
      return m == 4 ? Tri::No : Tri::Unknown;
    case Gl2Type::Tetrahedral:
      if (m <= 2) return Tri::Yes;
      return m == 4 ? Tri::No : Tri::Unknown;
    case Gl2Type::Dihedral:
      if (m == 1) return Tri::Yes;
      return m == 2 ? Tri::No : Tri::Unknown;
    case Gl2Type::NonDihedral:
      return m <= 2 ? Tri::Yes : Tri::Unknown;
    case Gl2Type::Unspecified:
      return m == 1 ? Tri::Yes : Tri::Unknown;
  }
  return Tri::Unknown;
}

}  // namespace lcheck
