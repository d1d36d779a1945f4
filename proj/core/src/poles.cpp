#include "lcheck/poles.hpp"

#include <fmt/format.h>

#include "lcheck/errors.hpp"
#include "lcheck/repalg.hpp"

namespace lcheck {

std::string PoleInterval::to_string() const { return fmt::format("[{}, {}]", min, max); }

const char* to_string(FactorStatus s) {
  switch (s) {
    case FactorStatus::Entire: return "entire";
    case FactorStatus::PoleAtMostOne: return "pole<=1";
    case FactorStatus::Pole: return "pole";
    case FactorStatus::Unknown: return "unknown";
  }
  return "?";
}

namespace {

PoleInterval from_tri(Tri t) {
  switch (t) {
    case Tri::Yes: return {1, 1};
    case Tri::No: return {0, 0};
    case Tri::Unknown: return {0, 1};
  }
  return {0, 1};
}

void require_cuspidal(const RepAtom& a, const Hypotheses& h) {
  if (is_cuspidal(a, h) != Tri::Yes) throw UndeclaredCuspidality(to_string(a));
}

}  // namespace

PoleInterval entry_pole(const Entry& e, const Hypotheses& h) {
  if (const auto* a = std::get_if<RepAtom>(&e)) {
    if (a->is_char()) return from_tri(h.triviality(a->twist));
    require_cuspidal(*a, h);
    return {0, 0};
  }
  const auto& p = std::get<RsPair>(e);
  require_cuspidal(p.first, h);
  require_cuspidal(p.second, h);
  // L(s, A x B) has a pole exactly when B is the contragredient of A.
  return from_tri(atom_equal(p.second, contragredient(p.first), h));
}

PoleInterval pole_order(const VirtualRep& x, const Hypotheses& h) {
  auto n = normalize(x, h, NormalizeOptions{.expand_cg = false});
  PoleInterval total;
  for (const auto& [e, m] : n.entries()) total += entry_pole(e, h).scaled(m);
  total.min -= n.pole_shift();
  total.max -= n.pole_shift();
  return total;
}

EntiretyReport entirety_check(const VirtualRep& x, const Hypotheses& h) {
  auto n = normalize(x, h, NormalizeOptions{.expand_cg = false});
  EntiretyReport r;
  for (const auto& [e, m] : n.entries()) {
    auto pole = entry_pole(e, h);
    FactorStatus s = FactorStatus::Unknown;
    if (pole == PoleInterval{0, 0}) s = FactorStatus::Entire;
    else if (pole == PoleInterval{1, 1}) s = FactorStatus::Pole;
    else if (pole == PoleInterval{0, 1}) s = FactorStatus::PoleAtMostOne;
    r.factors.push_back({e, m, pole, s});
    r.total += pole.scaled(m);
  }
  r.total.min -= n.pole_shift();
  r.total.max -= n.pole_shift();
  return r;
}

std::vector<std::string> EntiretyReport::obligations() const {
  std::vector<std::string> out;
  for (const auto& f : factors) {
    if (f.status == FactorStatus::Entire) continue;
    out.push_back(fmt::format("{}{} {} {}", f.multiplicity == 1 ? "" : fmt::format("{}*", f.multiplicity),
                              to_string(f.entry), to_string(f.status), f.pole.to_string()));
  }
  return out;
}

}  // namespace lcheck
