#include "lcheck/rep.hpp"

#include <stdexcept>

#include <fmt/format.h>

#include "lcheck/errors.hpp"

namespace lcheck {

FormalCharacter central_character(Base b) {
  return FormalCharacter::generator(b == Base::Pi ? "omega" : "omega'");
}

RepAtom RepAtom::character(FormalCharacter c) {
  RepAtom a;
  a.kind = Kind::Char;
  a.twist = std::move(c);
  return a;
}

RepAtom RepAtom::sym(Base b, int m, FormalCharacter twist) {
  if (m < 0) throw std::invalid_argument("negative symmetric power");
  if (m == 0) return character(std::move(twist));
  RepAtom a;
  a.kind = Kind::SymPow;
  a.base = b;
  a.m = m;
  a.twist = std::move(twist);
  return a;
}

RepAtom RepAtom::adjoint(Base b, FormalCharacter twist) {
  return sym(b, 2, central_character(b).inverse().in(twist.group()) * twist);
}

RepAtom RepAtom::opaque(OpaqueLabel l, Base b, FormalCharacter twist) {
  RepAtom a;
  a.kind = Kind::Opaque;
  a.base = b;
  a.label = l;
  a.twist = std::move(twist);
  return a;
}

int RepAtom::degree() const {
  switch (kind) {
    case Kind::Char: return 1;
    case Kind::SymPow: return m + 1;
    case Kind::Opaque: return 2;
  }
  return 0;
}

RepAtom RepAtom::twisted(const FormalCharacter& c) const {
  RepAtom a = *this;
  a.twist = twist * c.in(twist.group());
  return a;
}

RepAtom RepAtom::untwisted() const {
  RepAtom a = *this;
  a.twist = FormalCharacter(twist.group());
  return a;
}

int degree(const Entry& e) {
  return std::visit([](const auto& x) { return x.degree(); }, e);
}

VirtualRep VirtualRep::of(const Entry& e, std::int64_t mult) {
  VirtualRep v;
  v.add(e, mult);
  return v;
}

VirtualRep VirtualRep::pair(const RepAtom& a, const RepAtom& b, std::int64_t mult) {
  return of(RsPair{a, b}, mult);
}

VirtualRep VirtualRep::pole_factor(std::int64_t k) {
  VirtualRep v;
  v.pole_shift_ = k;
  return v;
}

void VirtualRep::add(const Entry& e, std::int64_t mult) {
  if (mult == 0) return;
  auto& slot = entries_[e];
  slot += mult;
  if (slot < 0) throw Error("negative multiplicity in isobaric sum");
  if (slot == 0) entries_.erase(e);
}

void VirtualRep::add(const VirtualRep& other) {
  for (const auto& [e, n] : other.entries_) add(e, n);
  pole_shift_ += other.pole_shift_;
}

std::int64_t VirtualRep::degree() const {
  std::int64_t d = 0;
  for (const auto& [e, n] : entries_) d += n * lcheck::degree(e);
  return d;
}

std::int64_t VirtualRep::multiplicity(const Entry& e) const {
  auto it = entries_.find(e);
  return it == entries_.end() ? 0 : it->second;
}

VirtualRep VirtualRep::operator+(const VirtualRep& o) const {
  VirtualRep r = *this;
  r.add(o);
  return r;
}

VirtualRep VirtualRep::scaled(std::int64_t n) const {
  if (n < 0) throw Error("negative scale factor");
  VirtualRep r;
  if (n == 0) return r;
  for (const auto& [e, k] : entries_) r.entries_[e] = k * n;
  r.pole_shift_ = pole_shift_ * n;
  return r;
}

RepDelta difference(const VirtualRep& lhs, const VirtualRep& rhs) {
  RepDelta d;
  for (const auto& [e, n] : lhs.entries()) d[e] += n;
  for (const auto& [e, n] : rhs.entries()) d[e] -= n;
  std::erase_if(d, [](const auto& kv) { return kv.second == 0; });
  return d;
}

namespace {

// Name of the untwisted atom plus the twist left over once the name is
// read with its own convention (Ad(b) already carries omega_b^-1).
std::pair<std::string, FormalCharacter> split_name(const RepAtom& a) {
  const char* b = base_name(a.base);
  switch (a.kind) {
    case RepAtom::Kind::Char:
      return {"1", a.twist};
    case RepAtom::Kind::Opaque:
      return {fmt::format("{}({})", a.label == OpaqueLabel::Nu ? "nu" : "Ind", b), a.twist};
    case RepAtom::Kind::SymPow:
      break;
  }
  if (a.m == 1) return {b, a.twist};
  if (a.m == 2) {
    return {fmt::format("Ad({})", b), a.twist * central_character(a.base).in(a.twist.group())};
  }
  return {fmt::format("Sym^{}({})", a.m, b), a.twist};
}

}  // namespace

std::string to_string(const RepAtom& a) {
  if (a.is_char()) return a.twist.to_string();
  auto [name, rest] = split_name(a);
  if (rest.is_identity()) return name;
  return name + " tw " + rest.to_string();
}

std::string to_string(const RsPair& p) {
  if (p.first.is_char()) return p.first.twist.to_string() + " (x) " + to_string(p.second);
  auto [name, rest] = split_name(p.first);
  std::string second = to_string(p.second.twisted(rest));
  if (p.second.twisted(rest).is_char()) second = "(" + second + ")";
  return name + " (x) " + second;
}

std::string to_string(const Entry& e) {
  return std::visit([](const auto& x) { return to_string(x); }, e);
}

std::string to_string(const VirtualRep& v) {
  std::string out;
  auto sep = [&] {
    if (!out.empty()) out += " (+) ";
  };
  if (v.pole_shift() != 0) out += fmt::format("(s-1)^{}", v.pole_shift());
  for (const auto& [e, n] : v.entries()) {
    sep();
    if (n != 1) out += fmt::format("{}*", n);
    out += to_string(e);
  }
  return out.empty() ? "empty" : out;
}

}  // namespace lcheck
