#pragma once

#include <vector>

#include "lcheck/hypotheses.hpp"
#include "lcheck/rep.hpp"

namespace lcheck {

/// One constituent Sym^degree (x) omega^omega_power.
struct SymTerm {
  int degree;
  int omega_power;
  friend bool operator==(const SymTerm&, const SymTerm&) = default;
};

/// Clebsch-Gordan: Sym^j x Sym^k = sum_{r=0}^{min(j,k)} Sym^{j+k-2r} (x) omega^r.
std::vector<SymTerm> cg_expand(int j, int k);

/// Sym^2(Sym^m) as a sum of Sym^d (x) omega^r, read off the weight multiset.
std::vector<SymTerm> plethysm_sym2(int m);

/// Sym^2(Sym^m(b) (x) c) over the base b.
VirtualRep plethysm_sym2_rep(Base b, int m, const FormalCharacter& c);

struct NormalizeOptions {
  /// Expand same-base Sym x Sym pairs by Clebsch-Gordan. Pole computations
  /// keep pairs formal.
  bool expand_cg = true;
};

/// Canonical form under the declared hypotheses: decompositions applied,
/// twists reduced in the hypothesis group and pairs ordered.
VirtualRep normalize(const VirtualRep& v, const Hypotheses& h = Hypotheses::none(),
                     NormalizeOptions opts = {});

/// Rankin-Selberg product of two sums of atoms, normalized.
VirtualRep rs_product(const VirtualRep& a, const VirtualRep& b,
                      const Hypotheses& h = Hypotheses::none());

/// Throws NoDualityData for atoms whose dual is not determined.
RepAtom contragredient(const RepAtom& a);
/// Entry-wise dual, not normalized.
VirtualRep contragredient_raw(const VirtualRep& v);
VirtualRep contragredient(const VirtualRep& v, const Hypotheses& h = Hypotheses::none());

/// Isomorphism of two atoms as far as the hypotheses decide it.
Tri atom_equal(const RepAtom& a, const RepAtom& b, const Hypotheses& h = Hypotheses::none());

}  // namespace lcheck
