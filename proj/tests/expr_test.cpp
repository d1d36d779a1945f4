#include <gtest/gtest.h>

#include <random>

#include "lcheck/errors.hpp"
#include "lcheck/expr.hpp"
#include "lcheck/repalg.hpp"
#include "test_support.hpp"

namespace lcheck {
namespace {

FormalCharacter ch(const char* s) { return parse_character(s); }

TEST(Expr, Atoms) {
  auto v = parse_expression("Sym^3(pi')");
  EXPECT_EQ(v, VirtualRep::of(RepAtom::sym(Base::PiPrime, 3)));
  EXPECT_EQ(parse_expression("pi"), VirtualRep::of(RepAtom::sym(Base::Pi, 1)));
  EXPECT_EQ(parse_expression("Ad(pi) tw chi"), VirtualRep::of(RepAtom::adjoint(Base::Pi, ch("chi"))));
  EXPECT_EQ(parse_expression("chi*mu"), VirtualRep::of(RepAtom::character(ch("chi*mu"))));
  EXPECT_EQ(parse_expression("nu(pi)"), VirtualRep::of(RepAtom::opaque(OpaqueLabel::Nu, Base::Pi)));
  EXPECT_TRUE(parse_expression("empty").empty());
}

TEST(Expr, AdjointIsSym2TimesInverseCentral) {
  EXPECT_EQ(normalize(parse_expression("Ad(pi)")),
            normalize(parse_expression("Sym^2(pi) tw omega^-1")));
  EXPECT_EQ(RepAtom::adjoint(Base::PiPrime).twist, ch("omega'^-1"));
}

TEST(Expr, MultiplicityAndPoleFactor) {
  auto v = parse_expression("6*1 (+) 2*Ad(pi) (+) (s-1)^3");
  EXPECT_EQ(v.multiplicity(RepAtom::character(FormalCharacter::trivial())), 6);
  EXPECT_EQ(v.multiplicity(RepAtom::adjoint(Base::Pi)), 2);
  EXPECT_EQ(v.pole_shift(), 3);
  EXPECT_EQ(v.degree(), 12);
}

TEST(Expr, RankinSelbergAndTwistBinding) {
  auto v = parse_expression("Ad(pi) (x) Ad(pi') tw chi");
  ASSERT_EQ(v.size(), 1u);
  const auto& [e, m] = *v.entries().begin();
  ASSERT_TRUE(std::holds_alternative<RsPair>(e));
  EXPECT_EQ(std::get<RsPair>(e).second.twist, ch("omega'^-1*chi"));
}

TEST(Expr, Macros) {
  MacroTable t;
  t["L"] = parse_expression("Ad(pi) (x) Ad(pi') tw chi");
  auto v = parse_expression("2*@L (+) ~@L", t);
  EXPECT_EQ(v.degree(), 27);
  EXPECT_THROW(parse_expression("@missing", t), ParseError);
}

TEST(Expr, ErrorsCarryColumn) {
  try {
    parse_expression("Ad(pi) (+) Sym^(pi)");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("col 16"), std::string::npos) << e.what();
  }
  EXPECT_THROW(parse_expression("pi (+) "), ParseError);
  EXPECT_THROW(parse_expression("Ad(rho)"), ParseError);
  EXPECT_THROW(parse_expression("Ad(pi) tw"), ParseError);
  EXPECT_THROW(parse_expression("Sym^2(pi) (x) Sym^2(pi) (x) pi'"), ParseError);
}

TEST(Expr, PrinterRoundTripsNormalForms) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    auto n = normalize(testing::random_rep(rng, 8));
    auto again = normalize(parse_expression(to_string(n)));
    EXPECT_EQ(again, n) << to_string(n);
  }
}

}  // namespace
}  // namespace lcheck
