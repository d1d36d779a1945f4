#include "lcheck/repalg.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <utility>

#include "lcheck/errors.hpp"

namespace lcheck {

std::vector<SymTerm> cg_expand(int j, int k) {
  std::vector<SymTerm> out;
  for (int r = 0; r <= std::min(j, k); ++r) out.push_back({j + k - 2 * r, r});
  return out;
}

std::vector<SymTerm> plethysm_sym2(int m) {
  // Weights of Sym^2(Sym^m): alpha^(a+b) beta^(2m-a-b) for 0 <= a <= b <= m.
  // Peel off the top alpha-string each round.
  std::vector<int> count(2 * m + 1, 0);
  for (int a = 0; a <= m; ++a) {
    for (int b = a; b <= m; ++b) ++count[a + b];
  }
  std::vector<SymTerm> out;
  for (int e = 2 * m; e >= m; --e) {
    while (count[e] > 0) {
      for (int x = 2 * m - e; x <= e; ++x) {
        if (--count[x] < 0) throw Error("weight multiset is not a sum of strings");
      }
      out.push_back({2 * e - 2 * m, 2 * m - e});
    }
  }
  return out;
}

VirtualRep plethysm_sym2_rep(Base b, int m, const FormalCharacter& c) {
  VirtualRep v;
  auto w = central_character(b);
  for (const auto& t : plethysm_sym2(m)) {
    v.add(RepAtom::sym(b, t.degree, w.pow(t.omega_power) * c.pow(2)));
  }
  return v;
}

namespace {

const char* mu_of(Base b) { return b == Base::Pi ? "mu" : "mu'"; }
const char* eta_of(Base b) { return b == Base::Pi ? "eta" : "eta'"; }
const char* xif_of(Base b) { return b == Base::Pi ? "xiF" : "xiF'"; }

bool non_dihedral(Gl2Type t) {
  return t == Gl2Type::General || t == Gl2Type::Octahedral || t == Gl2Type::Tetrahedral ||
         t == Gl2Type::NonDihedral;
}

using Parts = std::vector<std::pair<RepAtom, std::int64_t>>;

FormalCharacter gen(const char* name, const Hypotheses& h) {
  return h.bring(FormalCharacter::generator(name));
}

FormalCharacter absorb(const FormalCharacter& c, const Hypotheses& h, Base b, int m) {
  auto g = h.absorption_group(b, m);
  if (g == h.group()) return h.bring(c);
  return h.bring(c.in(g));
}

void canon(const RepAtom& in, const Hypotheses& h, std::int64_t mult, Parts& out) {
  RepAtom a = in;
  a.twist = h.bring(a.twist);
  if (a.kind != RepAtom::Kind::SymPow) {
    out.emplace_back(a, mult);
    return;
  }
  if (a.base == Base::PiPrime && a.m % 2 == 0 && h.relation() == TwistRelation::Equivalent) {
    // pi' = pi (x) psi forces Sym^m(pi') = Sym^m(pi) (x) psi^m, and
    // psi^2 = omega' / omega for even m.
    auto shift = (gen("omega'", h) * gen("omega", h).inverse()).pow(a.m / 2);
    a = RepAtom::sym(Base::Pi, a.m, a.twist * shift);
  }
  const Base b = a.base;
  const auto w = gen(b == Base::Pi ? "omega" : "omega'", h);
  switch (h.type(b)) {
    case Gl2Type::Dihedral:
      if (a.m == 2) {
        canon(RepAtom::opaque(OpaqueLabel::Ind, b, a.twist), h, mult, out);
        canon(RepAtom::character(gen(xif_of(b), h) * a.twist), h, mult, out);
        return;
      }
      break;
    case Gl2Type::Tetrahedral:
      if (a.m == 4) {
        auto mu = gen(mu_of(b), h);
        canon(RepAtom::sym(b, 2, a.twist * w), h, mult, out);
        canon(RepAtom::character(mu * a.twist * w.pow(2)), h, mult, out);
        canon(RepAtom::character(mu.inverse() * a.twist * w.pow(2)), h, mult, out);
        return;
      }
      break;
    case Gl2Type::Octahedral:
      if (a.m == 4) {
        auto eta = gen(eta_of(b), h);
        canon(RepAtom::opaque(OpaqueLabel::Nu, b, a.twist * w.pow(2)), h, mult, out);
        canon(RepAtom::sym(b, 2, eta * a.twist * w), h, mult, out);
        return;
      }
      break;
    default:
      break;
  }
  a.twist = absorb(a.twist, h, b, a.m);
  out.emplace_back(a, mult);
}

Parts canon(const RepAtom& a, const Hypotheses& h) {
  Parts p;
  canon(a, h, 1, p);
  return p;
}

void add_atom(const RepAtom& a, const Hypotheses& h, std::int64_t mult, VirtualRep& out) {
  for (const auto& [x, n] : canon(a, h)) out.add(x, n * mult);
}

void add_pair(const RsPair& p, const Hypotheses& h, NormalizeOptions opts, std::int64_t mult,
              VirtualRep& out) {
  for (const auto& [a, ma] : canon(p.first, h)) {
    for (const auto& [b, mb] : canon(p.second, h)) {
      const std::int64_t n = mult * ma * mb;
      if (a.is_char()) {
        add_atom(b.twisted(a.twist), h, n, out);
        continue;
      }
      if (b.is_char()) {
        add_atom(a.twisted(b.twist), h, n, out);
        continue;
      }
      if (opts.expand_cg && a.kind == RepAtom::Kind::SymPow &&
          b.kind == RepAtom::Kind::SymPow && a.base == b.base) {
        auto w = central_character(a.base);
        for (const auto& t : cg_expand(a.m, b.m)) {
          add_atom(RepAtom::sym(a.base, t.degree, a.twist * b.twist * w.pow(t.omega_power)), h,
                   n, out);
        }
        continue;
      }
      auto t = a.twist * b.twist;
      RepAtom x = a.untwisted();
      RepAtom y = b.untwisted();
      if (y < x) std::swap(x, y);
      // A twist absorbed by either member is absorbed by the pair.
      if (x.kind == RepAtom::Kind::SymPow) t = absorb(t, h, x.base, x.m);
      if (y.kind == RepAtom::Kind::SymPow) t = absorb(t, h, y.base, y.m);
      out.add(RsPair{x, y.twisted(t)}, n);
    }
  }
}

}  // namespace

VirtualRep normalize(const VirtualRep& v, const Hypotheses& h, NormalizeOptions opts) {
  VirtualRep out;
  for (const auto& [e, n] : v.entries()) {
    if (const auto* a = std::get_if<RepAtom>(&e)) {
      add_atom(*a, h, n, out);
    } else {
      add_pair(std::get<RsPair>(e), h, opts, n, out);
    }
  }
  out.set_pole_shift(v.pole_shift());
  return out;
}

VirtualRep rs_product(const VirtualRep& a, const VirtualRep& b, const Hypotheses& h) {
  if (a.pole_shift() != 0 || b.pole_shift() != 0) {
    throw Error("Rankin-Selberg product of a factor carrying (s-1)");
  }
  VirtualRep raw;
  for (const auto& [ea, na] : a.entries()) {
    const auto* x = std::get_if<RepAtom>(&ea);
    for (const auto& [eb, nb] : b.entries()) {
      const auto* y = std::get_if<RepAtom>(&eb);
      if (!x || !y) throw Error("Rankin-Selberg product of a pair: triple products unsupported");
      raw.add(RsPair{*x, *y}, na * nb);
    }
  }
  return normalize(raw, h);
}

RepAtom contragredient(const RepAtom& a) {
  switch (a.kind) {
    case RepAtom::Kind::Char:
      return RepAtom::character(a.twist.inverse());
    case RepAtom::Kind::SymPow: {
      // Sym^m(b)^vee = Sym^m(b) (x) omega_b^-m.
      auto w = central_character(a.base).in(a.twist.group());
      return RepAtom::sym(a.base, a.m, a.twist.inverse() * w.pow(-a.m));
    }
    case RepAtom::Kind::Opaque:
      if (a.label == OpaqueLabel::Nu) {
        return RepAtom::opaque(a.label, a.base, a.twist.inverse());
      }
      throw NoDualityData(to_string(a));
  }
  return a;
}

VirtualRep contragredient_raw(const VirtualRep& v) {
  VirtualRep out;
  for (const auto& [e, n] : v.entries()) {
    if (const auto* a = std::get_if<RepAtom>(&e)) {
      out.add(contragredient(*a), n);
    } else {
      const auto& p = std::get<RsPair>(e);
      out.add(RsPair{contragredient(p.first), contragredient(p.second)}, n);
    }
  }
  out.set_pole_shift(v.pole_shift());
  return out;
}

VirtualRep contragredient(const VirtualRep& v, const Hypotheses& h) {
  return normalize(contragredient_raw(v), h);
}

namespace {

// Triviality of psi modulo the cyclic group generated by g of order n:
// Yes if psi lies in <g>, No if every coset test is No.
Tri in_cyclic(const FormalCharacter& psi, const FormalCharacter& g, int n,
              const Hypotheses& h) {
  bool all_no = true;
  auto gk = FormalCharacter(h.group());
  for (int k = 0; k < n; ++k, gk *= g) {
    auto t = h.triviality(psi * gk.inverse());
    if (t == Tri::Yes) return Tri::Yes;
    if (t != Tri::No) all_no = false;
  }
  return all_no ? Tri::No : Tri::Unknown;
}

Tri same_base_equal(const RepAtom& a, const RepAtom& b, const Hypotheses& h) {
  const auto psi = a.twist * b.twist.inverse();
  const Base base = a.base;
  const Gl2Type type = h.type(base);
  const Tri plain = h.triviality(psi);
  if (plain == Tri::Yes) return Tri::Yes;
  const int m = a.m;
  if (type == Gl2Type::Tetrahedral && m == 2) return in_cyclic(psi, gen(mu_of(base), h), 3, h);
  if (type == Gl2Type::Octahedral && m == 3) return in_cyclic(psi, gen(eta_of(base), h), 2, h);
  if (m == 1 && non_dihedral(type)) return plain;
  if (m == 2 && (type == Gl2Type::General || type == Gl2Type::Octahedral)) return plain;
  if (m == 2 && type == Gl2Type::NonDihedral) {
    // Ad(b) (x) psi = Ad(b) forces psi^3 = 1.
    return h.triviality(psi.pow(3)) == Tri::No ? Tri::No : Tri::Unknown;
  }
  if (m == 3 && type == Gl2Type::General) return plain;
  if (m == 4 && type == Gl2Type::General) {
    return h.triviality(psi.pow(5)) == Tri::No ? Tri::No : Tri::Unknown;
  }
  return Tri::Unknown;
}

// Sym^2(pi) (x) c against Sym^2(pi') (x) d for non-dihedral bases, i.e.
// Ad(pi) = Ad(pi') (x) xi with xi = d omega' / (c omega). Enumerates truth
// assignments of the relevant triviality statements and reports No when
// every assignment consistent with the hypotheses rules equality out.
Tri cross_adjoint_equal(const RepAtom& a, const RepAtom& b, const Hypotheses& h) {
  const RepAtom& p = a.base == Base::Pi ? a : b;
  const RepAtom& q = a.base == Base::Pi ? b : a;
  const auto xi = q.twist * gen("omega'", h) * (p.twist * gen("omega", h)).inverse();
  const auto mu = gen("mu", h);
  const auto mup = gen("mu'", h);
  enum { kOne, kCube, kMu, kMuInv, kMuP, kMuPInv, kProps };
  const std::array<FormalCharacter, kProps> stmt = {
      xi, xi.pow(3), xi * mu.inverse(), xi * mu, xi * mup.inverse(), xi * mup};
  const auto known = h.known_nontrivial();
  const Gl2Type tp = h.type(Base::Pi);
  const Gl2Type tq = h.type(Base::PiPrime);

  for (int mask = 0; mask < (1 << kProps); ++mask) {
    auto holds = [&](int i) { return (mask >> i) & 1; };
    // Fixed truth values must agree with the declared facts.
    bool ok = true;
    std::vector<Exponents> rel;
    for (int i = 0; i < kProps && ok; ++i) {
      Tri t = h.triviality(stmt[i]);
      if (t == Tri::Yes && !holds(i)) ok = false;
      if (t == Tri::No && holds(i)) ok = false;
      if (holds(i)) rel.push_back(stmt[i].exponents());
    }
    if (!ok) continue;
    // The statements made true must not force a false one or a declared
    // nontrivial character to be trivial.
    auto g = h.group()->with_relations(rel);
    for (int i = 0; i < kProps && ok; ++i) {
      if (!holds(i) && stmt[i].in(g).is_identity()) ok = false;
    }
    for (const auto& n : known) {
      if (n.in(g).is_identity()) ok = false;
    }
    if (!ok) continue;

    auto self_twist = [&](Gl2Type t, int plus, int minus) -> Tri {
      if (t == Gl2Type::Tetrahedral) return (holds(plus) || holds(minus)) ? Tri::Yes : Tri::No;
      if (t == Gl2Type::General || t == Gl2Type::Octahedral) {
        return holds(kOne) ? Tri::Yes : Tri::No;
      }
      return Tri::Unknown;
    };
    bool impossible = !holds(kCube);
    if (holds(kOne) && h.relation() == TwistRelation::Inequivalent) impossible = true;
    if (holds(kCube) && !holds(kOne) && self_twist(tp, kMu, kMuInv) == Tri::No &&
        self_twist(tq, kMuP, kMuPInv) == Tri::No) {
      impossible = true;
    }
    if (!impossible) return Tri::Unknown;
  }
  return Tri::No;
}

Tri equal_normalized(const RepAtom& a, const RepAtom& b, const Hypotheses& h) {
  if (a.degree() != b.degree()) return Tri::No;
  if (a == b) return Tri::Yes;
  if (a.is_char() && b.is_char()) return h.triviality(a.twist * b.twist.inverse());
  if (a.kind != b.kind) {
    // An opaque atom is dihedral; a non-dihedral pi is not.
    const RepAtom& o = a.kind == RepAtom::Kind::Opaque ? a : b;
    const RepAtom& s = a.kind == RepAtom::Kind::Opaque ? b : a;
    if (o.kind == RepAtom::Kind::Opaque && s.kind == RepAtom::Kind::SymPow && s.m == 1 &&
        non_dihedral(h.type(s.base))) {
      return Tri::No;
    }
    return Tri::Unknown;
  }
  if (a.kind == RepAtom::Kind::Opaque) {
    if (a.label == b.label && a.base == b.base &&
        h.triviality(a.twist * b.twist.inverse()) == Tri::Yes) {
      return Tri::Yes;
    }
    return Tri::Unknown;
  }
  if (a.m != b.m) return Tri::No;
  if (a.base == b.base) return same_base_equal(a, b, h);
  const Gl2Type ta = h.type(a.base);
  const Gl2Type tb = h.type(b.base);
  if (a.m == 1) {
    if (h.relation() == TwistRelation::Inequivalent) return Tri::No;
    if ((ta == Gl2Type::Dihedral && non_dihedral(tb)) ||
        (tb == Gl2Type::Dihedral && non_dihedral(ta))) {
      return Tri::No;
    }
    return Tri::Unknown;
  }
  if (a.m == 2 && non_dihedral(ta) && non_dihedral(tb)) return cross_adjoint_equal(a, b, h);
  return Tri::Unknown;
}

}  // namespace

Tri atom_equal(const RepAtom& a, const RepAtom& b, const Hypotheses& h) {
  auto pa = canon(a, h);
  auto pb = canon(b, h);
  if (pa.size() != 1 || pb.size() != 1) {
    // Decomposable atoms: compare the normalized sums.
    VirtualRep va, vb;
    for (const auto& [x, n] : pa) va.add(x, n);
    for (const auto& [x, n] : pb) vb.add(x, n);
    return va == vb ? Tri::Yes : Tri::Unknown;
  }
  return equal_normalized(pa[0].first, pb[0].first, h);
}

}  // namespace lcheck
