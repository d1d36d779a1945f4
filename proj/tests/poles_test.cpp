#include <gtest/gtest.h>

#include <random>

#include "lcheck/errors.hpp"
#include "lcheck/expr.hpp"
#include "lcheck/poles.hpp"
#include "lcheck/repalg.hpp"
#include "test_support.hpp"

namespace lcheck {
namespace {

const char* kGeneralPair = "type pi general\ntype pi' general\nrelation pi !~ pi'\n";

PoleInterval poles(const char* expr, const std::string& hyp = "") {
  return pole_order(parse_expression(expr), Hypotheses::parse(hyp));
}

TEST(PoleOrder, Examples) {
  EXPECT_EQ(poles("6*1"), (PoleInterval{6, 6}));
  EXPECT_EQ(poles("Sym^4(pi) (x) Sym^4(pi') tw omega^-2*omega'^-2", kGeneralPair),
            (PoleInterval{0, 1}));
  EXPECT_EQ(poles("Ad(pi) (x) Ad(pi') tw xi", std::string(kGeneralPair) + "nontrivial xi^3\n"),
            (PoleInterval{0, 0}));
  EXPECT_EQ(poles("nu(pi) (x) nu(pi')",
                  "type pi octahedral\ntype pi' octahedral\nrelation pi !~ pi'\n"),
            (PoleInterval{0, 1}));
}

TEST(PoleOrder, CharactersFollowTriviality) {
  EXPECT_EQ(poles("chi"), (PoleInterval{0, 1}));
  EXPECT_EQ(poles("chi", "nontrivial chi\n"), (PoleInterval{0, 0}));
  EXPECT_EQ(poles("chi", "trivial chi\n"), (PoleInterval{1, 1}));
  EXPECT_EQ(poles("chi^2", "nontrivial chi\ntrivial chi^3\n"), (PoleInterval{0, 0}));
}

TEST(PoleOrder, PoleFactorShiftsBothEnds) {
  EXPECT_EQ(poles("3*1 (+) chi (+) (s-1)^2"), (PoleInterval{1, 2}));
}

TEST(PoleOrder, UndeclaredCuspidalityRejected) {
  EXPECT_THROW(poles("Sym^3(pi)"), UndeclaredCuspidality);
  EXPECT_THROW(poles("Ad(pi) (x) Ad(pi')"), UndeclaredCuspidality);
}

TEST(PoleOrder, DeltaRuleForContragredientPairs) {
  std::mt19937_64 rng(71);
  auto h = Hypotheses::parse(kGeneralPair);
  for (int i = 0; i < 50; ++i) {
    std::uniform_int_distribution<int> m(1, 4);
    auto a = RepAtom::sym(i % 2 ? Base::Pi : Base::PiPrime, m(rng), testing::random_character(rng));
    auto v = VirtualRep::pair(a, contragredient(a));
    EXPECT_EQ(pole_order(v, h), (PoleInterval{1, 1})) << to_string(a);
  }
}

TEST(PoleOrder, AdjointPairsEntireUnderLemmaConditions) {
  std::mt19937_64 rng(73);
  const std::string base = kGeneralPair;
  auto adpair = [](const FormalCharacter& xi) {
    return VirtualRep::pair(RepAtom::adjoint(Base::Pi), RepAtom::adjoint(Base::PiPrime, xi));
  };
  int cube = 0, order3 = 0, trivial = 0;
  for (int i = 0; i < 200; ++i) {
    auto xi = testing::random_character(rng);
    // xi^3 nontrivial.
    auto h1 = Hypotheses::parse(base + "nontrivial " + xi.pow(3).to_string() + "\n");
    if (!h1.bring(xi.pow(3)).is_identity()) {
      EXPECT_EQ(pole_order(adpair(xi), h1), (PoleInterval{0, 0})) << xi.to_string();
      ++cube;
    }
    // xi^3 trivial, xi nontrivial; general bases have no adjoint self-twists.
    auto h2 = Hypotheses::parse(base + "trivial " + xi.pow(3).to_string() + "\n");
    if (!h2.bring(xi).is_identity()) {
      auto h2n = Hypotheses::parse(base + "trivial " + xi.pow(3).to_string() + "\nnontrivial " +
                                   xi.to_string() + "\n");
      EXPECT_EQ(pole_order(adpair(xi), h2n), (PoleInterval{0, 0})) << xi.to_string();
      ++order3;
    }
    // xi trivial, pi !~ pi'.
    auto h3 = Hypotheses::parse(base + "trivial " + xi.to_string() + "\n");
    EXPECT_EQ(pole_order(adpair(xi), h3), (PoleInterval{0, 0})) << xi.to_string();
    ++trivial;
  }
  EXPECT_GT(cube, 50);
  EXPECT_GT(order3, 10);
}

TEST(PoleOrder, TetrahedralSelfTwistCanProduceAPole) {
  auto h = Hypotheses::parse("type pi tetrahedral\ntype pi' tetrahedral\nrelation pi ~ pi'\n");
  auto v = VirtualRep::pair(RepAtom::adjoint(Base::Pi), RepAtom::adjoint(Base::PiPrime));
  EXPECT_EQ(pole_order(v, h).max, 1);
}

TEST(PoleOrder, MonotoneUnderAddingFactors) {
  std::mt19937_64 rng(79);
  auto h = Hypotheses::parse(kGeneralPair);
  VirtualRep acc;
  PoleInterval prev = pole_order(acc, h);
  for (int i = 0; i < 40; ++i) {
    std::uniform_int_distribution<int> m(0, 4);
    auto a = RepAtom::sym(i % 2 ? Base::Pi : Base::PiPrime, m(rng), testing::random_character(rng));
    auto b = RepAtom::sym(i % 3 ? Base::Pi : Base::PiPrime, m(rng), testing::random_character(rng));
    acc.add(RsPair{a, b});
    auto cur = pole_order(acc, h);
    EXPECT_GE(cur.min, prev.min);
    EXPECT_GE(cur.max, prev.max);
    prev = cur;
  }
}

TEST(Entirety, ObligationsListPossiblePoles) {
  auto r = entirety_check(parse_expression("6*1 (+) chi (+) Ad(pi) (x) Ad(pi') tw chi"),
                          Hypotheses::parse(std::string(kGeneralPair) + "nontrivial chi\nnontrivial chi^3\n"));
  EXPECT_EQ(r.total, (PoleInterval{6, 6}));
  ASSERT_EQ(r.obligations().size(), 1u);
  EXPECT_NE(r.obligations()[0].find("6*1"), std::string::npos);
}

}  // namespace
}  // namespace lcheck
