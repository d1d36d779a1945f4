#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>

#include "lcheck/errors.hpp"
#include "lcheck/expr.hpp"
#include "lcheck/repalg.hpp"
#include "test_support.hpp"

namespace lcheck {
namespace {

// A weight alpha^a beta^b is keyed by (a, b).
using Weights = std::map<std::pair<int, int>, int>;

Weights sym_weights(int m) {
  Weights w;
  for (int j = 0; j <= m; ++j) ++w[{j, m - j}];
  return w;
}

Weights product(const Weights& x, const Weights& y) {
  Weights w;
  for (const auto& [a, n] : x)
    for (const auto& [b, k] : y) w[{a.first + b.first, a.second + b.second}] += n * k;
  return w;
}

// Peel highest weight strings: returns (degree, omega power) per constituent.
std::vector<SymTerm> peel(Weights w) {
  std::vector<SymTerm> out;
  for (;;) {
    std::erase_if(w, [](const auto& kv) { return kv.second == 0; });
    if (w.empty()) return out;
    auto top = std::max_element(w.begin(), w.end(), [](const auto& l, const auto& r) {
      return l.first.first - l.first.second < r.first.first - r.first.second;
    })->first;
    const int r = top.second;
    const int d = top.first - r;
    for (int j = 0; j <= d; ++j) {
      int& c = w[{r + j, r + d - j}];
      EXPECT_GT(c, 0);
      --c;
    }
    out.push_back({d, r});
  }
}

std::vector<SymTerm> sorted(std::vector<SymTerm> v) {
  std::sort(v.begin(), v.end(), [](const SymTerm& a, const SymTerm& b) {
    return a.degree != b.degree ? a.degree > b.degree : a.omega_power < b.omega_power;
  });
  return v;
}

TEST(ClebschGordan, SmallCases) {
  EXPECT_EQ(cg_expand(2, 2), (std::vector<SymTerm>{{4, 0}, {2, 1}, {0, 2}}));
  EXPECT_EQ(cg_expand(0, 5), (std::vector<SymTerm>{{5, 0}}));
}

TEST(ClebschGordan, MatchesBruteForceWeightPartition) {
  for (int j = 0; j <= 6; ++j) {
    for (int k = 0; k <= 6; ++k) {
      auto oracle = sorted(peel(product(sym_weights(j), sym_weights(k))));
      EXPECT_EQ(sorted(cg_expand(j, k)), oracle) << j << "," << k;
    }
  }
  std::vector<int> degs;
  for (const auto& t : cg_expand(4, 4)) degs.push_back(t.degree);
  EXPECT_EQ(degs, (std::vector<int>{8, 6, 4, 2, 0}));
}

TEST(ClebschGordan, DegreeConservation) {
  for (int j = 0; j <= 6; ++j) {
    for (int k = 0; k <= 6; ++k) {
      int total = 0;
      for (const auto& t : cg_expand(j, k)) total += t.degree + 1;
      EXPECT_EQ(total, (j + 1) * (k + 1));
    }
  }
}

Weights sym2_of_sym(int m) {
  Weights w;
  for (int j = 0; j <= m; ++j)
    for (int k = j; k <= m; ++k) ++w[{j + k, 2 * m - j - k}];
  return w;
}

TEST(Plethysm, WeightMultisetMatchesForMUpToFive) {
  for (int m = 1; m <= 5; ++m) {
    Weights got;
    for (const auto& t : plethysm_sym2(m)) {
      for (int j = 0; j <= t.degree; ++j) ++got[{j + t.omega_power, t.degree - j + t.omega_power}];
    }
    EXPECT_EQ(got, sym2_of_sym(m)) << "m=" << m;
  }
  EXPECT_EQ(sorted(plethysm_sym2(3)), (std::vector<SymTerm>{{6, 0}, {2, 2}}));
  EXPECT_EQ(sorted(plethysm_sym2(2)), (std::vector<SymTerm>{{4, 0}, {0, 2}}));
  EXPECT_EQ(sorted(plethysm_sym2(1)), (std::vector<SymTerm>{{2, 0}}));
}

TEST(RsProduct, AdjointTimesTwistedAdjoint) {
  auto a = parse_expression("Ad(pi)");
  auto b = parse_expression("Ad(pi) tw chi");
  EXPECT_EQ(rs_product(a, b),
            normalize(parse_expression("chi (+) Ad(pi) tw chi (+) Sym^4(pi) tw chi*omega^-2")));
}

TEST(RsProduct, CharactersMultiplyAndCrossBasePairsStayFormal) {
  EXPECT_EQ(rs_product(parse_expression("chi"), parse_expression("mu")),
            normalize(parse_expression("chi*mu")));
  auto formal = rs_product(parse_expression("Ad(pi)"), parse_expression("Ad(pi')"));
  ASSERT_EQ(formal.size(), 1u);
  EXPECT_TRUE(std::holds_alternative<RsPair>(formal.entries().begin()->first));
}

TEST(Normalize, Idempotent) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 100; ++i) {
    auto v = testing::random_rep(rng, 50);
    auto n = normalize(v);
    EXPECT_EQ(normalize(n), n);
    EXPECT_EQ(n.degree(), v.degree());
  }
}

TEST(Normalize, Bilinear) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 100; ++i) {
    auto a = testing::random_sum(rng, 3);
    auto b = testing::random_sum(rng, 3);
    auto c = testing::random_sum(rng, 3);
    EXPECT_EQ(normalize(rs_product(a, b + c)), normalize(rs_product(a, b) + rs_product(a, c)));
  }
}

TEST(Duality, ExamplesAndInvolution) {
  EXPECT_EQ(contragredient(parse_expression("Ad(pi)")), normalize(parse_expression("Ad(pi)")));
  EXPECT_EQ(contragredient(parse_expression("chi")), normalize(parse_expression("chi^-1")));
  EXPECT_EQ(contragredient(parse_expression("Sym^4(pi) tw omega^-2")),
            normalize(parse_expression("Sym^4(pi) tw omega^-2")));
  std::mt19937_64 rng(29);
  for (int i = 0; i < 100; ++i) {
    auto n = normalize(testing::random_rep(rng, 20));
    EXPECT_EQ(contragredient(contragredient(n)), n);
  }
}

TEST(Duality, OpaqueAtomsUseDeclaredData) {
  EXPECT_EQ(contragredient(RepAtom::opaque(OpaqueLabel::Nu, Base::Pi)),
            RepAtom::opaque(OpaqueLabel::Nu, Base::Pi));
  EXPECT_EQ(contragredient(RepAtom::opaque(OpaqueLabel::Nu, Base::Pi, parse_character("chi"))),
            RepAtom::opaque(OpaqueLabel::Nu, Base::Pi, parse_character("chi^-1")));
  EXPECT_THROW(contragredient(RepAtom::opaque(OpaqueLabel::Ind, Base::Pi)), NoDualityData);
}

TEST(AtomEqual, ThreeValued) {
  auto ad = RepAtom::adjoint(Base::Pi);
  EXPECT_EQ(atom_equal(ad, ad), Tri::Yes);

  auto h = Hypotheses::parse(
      "type pi general\ntype pi' general\nrelation pi !~ pi'\nnontrivial chi^3\n");
  EXPECT_EQ(atom_equal(ad, RepAtom::adjoint(Base::PiPrime, parse_character("chi")), h), Tri::No);

  auto s4 = RepAtom::sym(Base::Pi, 4, parse_character("omega^-2"));
  auto s4p = RepAtom::sym(Base::PiPrime, 4, parse_character("omega'^-2"));
  EXPECT_EQ(atom_equal(s4, s4p, h), Tri::Unknown);
}

TEST(Hypotheses, TetrahedralSym4Decomposes) {
  auto h = Hypotheses::parse("type pi tetrahedral\n");
  auto n = normalize(parse_expression("Sym^4(pi) tw omega^-2"), h);
  EXPECT_EQ(n, normalize(parse_expression("Ad(pi) (+) mu (+) mu^-1"), h));
  std::string text;
  for (const auto& l : h.lines()) text += l + "\n";
  EXPECT_EQ(Hypotheses::parse(text), h);
}

}  // namespace
}  // namespace lcheck
