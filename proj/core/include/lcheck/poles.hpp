#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lcheck/hypotheses.hpp"
#include "lcheck/rep.hpp"

namespace lcheck {

/// Order of the pole at s = 1, known to lie in [min, max].
struct PoleInterval {
  std::int64_t min = 0;
  std::int64_t max = 0;

  PoleInterval operator+(const PoleInterval& o) const { return {min + o.min, max + o.max}; }
  PoleInterval& operator+=(const PoleInterval& o) {
    min += o.min;
    max += o.max;
    return *this;
  }
  PoleInterval scaled(std::int64_t n) const { return {min * n, max * n}; }
  std::string to_string() const;
  friend bool operator==(const PoleInterval&, const PoleInterval&) = default;
};

/// Pole interval of one normalized entry. Throws UndeclaredCuspidality.
PoleInterval entry_pole(const Entry& e, const Hypotheses& h);

/// Normalizes (pairs kept formal) and sums entry intervals; an (s-1)^k
/// exponent lowers both ends by k.
PoleInterval pole_order(const VirtualRep& x, const Hypotheses& h);

enum class FactorStatus : std::uint8_t { Entire, PoleAtMostOne, Pole, Unknown };
const char* to_string(FactorStatus s);

struct FactorEntry {
  Entry entry;
  std::int64_t multiplicity;
  PoleInterval pole;  // for one copy
  FactorStatus status;
};

struct EntiretyReport {
  std::vector<FactorEntry> factors;
  PoleInterval total;
  /// Factors that may have a pole: the obligations the bookkeeping
  /// exponent has to absorb.
  std::vector<std::string> obligations() const;
};

EntiretyReport entirety_check(const VirtualRep& x, const Hypotheses& h);

}  // namespace lcheck
