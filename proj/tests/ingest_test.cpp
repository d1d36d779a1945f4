#include <gtest/gtest.h>

#include <cmath>

#include "lcheck/errors.hpp"
#include "lcheck/ingest.hpp"

namespace lcheck {
namespace {

// Naive oracle: multiply out prod (1 - q^n)^24 one factor at a time.
std::vector<BigInt> naive_tau(int n_max) {
  const int len = n_max + 3;  // deliberately longer truncation
  std::vector<BigInt> c(len, 0);
  c[0] = 1;
  for (int n = 1; n < len; ++n) {
    for (int rep = 0; rep < 24; ++rep) {
      for (int i = len - 1; i >= n; --i) c[i] -= c[i - n];
    }
  }
  std::vector<BigInt> tau(n_max + 1, 0);
  for (int n = 1; n <= n_max; ++n) tau[n] = c[n - 1];
  return tau;
}

TEST(Delta, SmallValues) {
  auto t = delta_series(6);
  EXPECT_EQ(t[1], 1);
  EXPECT_EQ(t[2], -24);
  EXPECT_EQ(t[3], 252);
  EXPECT_EQ(t[5], 4830);
}

TEST(Delta, AgreesWithNaiveExpansion) {
  auto fast = delta_series(60);
  auto slow = naive_tau(60);
  for (int n = 1; n <= 60; ++n) EXPECT_EQ(fast[n], slow[n]) << n;
}

TEST(Delta, HeckeRelationAtPrimeSquares) {
  auto t = delta_series(10000);
  for (auto p : primes_up_to(100)) {
    BigInt p11 = 1;
    for (int i = 0; i < 11; ++i) p11 *= p;
    EXPECT_EQ(t[p * p], t[p] * t[p] - p11) << p;
  }
}

TEST(Delta, Multiplicative) {
  auto t = delta_series(200);
  EXPECT_EQ(t[6], t[2] * t[3]);
  EXPECT_EQ(t[35], t[5] * t[7]);
  EXPECT_NO_THROW(deligne_check(delta_eigenvalues(2000)));
}

// Projective point count by brute force over all (x, y).
std::int64_t brute_ap(std::int64_t p) {
  std::int64_t n = 1;  // point at infinity
  for (std::int64_t x = 0; x < p; ++x) {
    for (std::int64_t y = 0; y < p; ++y) {
      std::int64_t lhs = (y * y + y) % p;
      std::int64_t rhs = (((x * x % p) * x - x * x - 10 * x - 20) % p + 2 * p * p) % p;
      if (lhs == rhs) ++n;
    }
  }
  return p + 1 - n;
}

TEST(X011, PointCounts) {
  EXPECT_EQ(x0_11_ap(2), -2);
  EXPECT_EQ(x0_11_ap(3), -1);
  for (auto p : primes_up_to(200)) {
    if (p == 11) continue;
    EXPECT_EQ(x0_11_ap(p), brute_ap(p)) << p;
  }
  auto d = x0_11_eigenvalues(100);
  EXPECT_EQ(d.ap.count(11), 0u);
  EXPECT_TRUE(d.ramified(11));
}

TEST(X011, HasseBound) {
  auto d = x0_11_eigenvalues(10000);
  for (const auto& [p, a] : d.ap) {
    const double ap = a.convert_to<double>();
    EXPECT_LE(ap * ap, 4.0 * p) << p;
  }
}

TEST(SatakeFromAp, Examples) {
  auto d = delta_eigenvalues(3);
  auto [a, b] = satake_from_ap(d, 2);
  EXPECT_NEAR((a + b).real(), -24.0 / std::pow(2.0, 5.5), 1e-12);
  EXPECT_NEAR(std::abs(a * b - 1.0), 0.0, 1e-12);
  EXPECT_NEAR((a + b).real(), -0.530330, 1e-6);

  NewformData z;
  z.name = "z";
  z.weight = 2;
  z.ap[5] = 0;
  auto [i, j] = satake_from_ap(z, 5);
  EXPECT_NEAR(std::abs(i - std::complex<double>(0, 1)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(j - std::complex<double>(0, -1)), 0.0, 1e-12);

  NewformData edge;
  edge.name = "edge";
  edge.weight = 3;
  edge.ap[2] = 4;  // 2 * 2^(2/2)
  auto [u, v] = satake_from_ap(edge, 2);
  EXPECT_NEAR(std::abs(u - 1.0), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(v - 1.0), 0.0, 1e-12);

  EXPECT_THROW(satake_from_ap(x0_11_eigenvalues(20), 11), DataError);
  EXPECT_THROW(satake_from_ap(x0_11_eigenvalues(20), 23), DataError);
}

TEST(EigenvalueFile, Parses) {
  auto d = parse_eigenvalue_tsv("#weight 12 level 1\n2\t-24\n# comment\n3\t252\n");
  EXPECT_EQ(d.weight, 12);
  EXPECT_EQ(d.level, 1);
  EXPECT_EQ(d.ap.at(2), -24);
  EXPECT_EQ(d.xmax, 3);
  auto f = load_eigenvalue_file(std::string(LCHECK_DATA_DIR) + "/delta_50.tsv");
  auto ref = delta_eigenvalues(50);
  EXPECT_EQ(f.ap, ref.ap);
}

TEST(EigenvalueFile, Errors) {
  EXPECT_THROW(parse_eigenvalue_tsv("2\t-24\n"), ParseError);
  try {
    parse_eigenvalue_tsv("#weight 12 level 1\n2\t-24\n3\tabc\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
  EXPECT_THROW(parse_eigenvalue_tsv("#weight 12 level 1\n3\t252\n2\t-24\n"), ParseError);
  try {
    parse_eigenvalue_tsv("#weight 12 level 1\n2\t5000\n");
    FAIL();
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find("a_2 = 5000"), std::string::npos);
  }
  EXPECT_THROW(load_eigenvalue_file(std::string(LCHECK_DATA_DIR) + "/delta_bad.tsv"), DataError);
  EXPECT_THROW(load_eigenvalue_file("/nonexistent/file.tsv"), DataError);
}

TEST(Characters, Kronecker) {
  // chi_{-4}: 1 on p = 1 mod 4, -1 on p = 3 mod 4.
  for (auto p : primes_up_to(200)) {
    if (p == 2) continue;
    EXPECT_EQ(kronecker_symbol(-4, p), p % 4 == 1 ? 1 : -1) << p;
  }
  EXPECT_EQ(kronecker_symbol(-4, 2), 0);
  EXPECT_EQ(kronecker_symbol(5, 2), -1);
  EXPECT_EQ(kronecker_symbol(-7, 2), 1);
  auto c = kronecker_character(-4);
  EXPECT_TRUE(c.ramified(2));
  EXPECT_FALSE(c.ramified(3));
  EXPECT_THROW(kronecker_character(3), DataError);
}

TEST(Characters, TableAndSpecs) {
  auto t = character_from_spec(std::string("file:") + LCHECK_DATA_DIR + "/chi_minus4.tab");
  auto k = character_from_spec("kronecker:-4");
  for (auto p : primes_up_to(47)) {
    EXPECT_EQ(t.ramified(p), k.ramified(p)) << p;
    if (!k.ramified(p)) EXPECT_NEAR(std::abs(t.value(p) - k.value(p)), 0.0, 1e-12) << p;
  }
  EXPECT_THROW(t.value(53), DataError);
  EXPECT_THROW(parse_character_table("3\t0.5\t0\n"), DataError);
  EXPECT_THROW(parse_character_table("3\tx\n"), ParseError);
  EXPECT_THROW(character_from_spec("kronecker:abc"), ParseError);
  EXPECT_THROW(character_from_spec("dirichlet"), ParseError);
  EXPECT_EQ(character_from_spec("trivial").value(7), std::complex<double>(1.0));
}

}  // namespace
}  // namespace lcheck
