#include <gtest/gtest.h>

#include "mingens/errors.hpp"
#include "mingens/univariate.hpp"
#include "oracles.hpp"

using namespace mingens;

namespace {

UPoly U(std::uint64_t q, std::vector<std::uint64_t> codes) {
  const Field f = Field::galois(q);
  std::vector<Element> c;
  for (auto x : codes) c.push_back(f.from_code(x));
  return UPoly(f, c);
}

std::vector<std::string> texts(const std::vector<UPoly>& v) {
  std::vector<std::string> out;
  for (const auto& f : v) out.push_back(f.to_string());
  return out;
}

using S = std::vector<std::string>;

}  // namespace

TEST(CountIrreducibles, Examples) {
  EXPECT_EQ(count_irreducibles(2, 1), 2u);
  EXPECT_EQ(count_irreducibles(2, 3), 2u);
  EXPECT_EQ(count_irreducibles(3, 2), 3u);
  EXPECT_THROW(count_irreducibles(6, 2), InvalidArgument);
  EXPECT_THROW(count_irreducibles(2, 0), InvalidArgument);
  EXPECT_THROW(count_irreducibles(2, 80), DegreeOverflow);
}

TEST(CountIrreducibles, MatchesBruteForce) {
  for (std::uint64_t q : {2, 3}) {
    for (unsigned k = 1; k <= 6; ++k)
      EXPECT_EQ(count_irreducibles(q, k), oracle::irreducibles_by_products(q, k).size()) << "q=" << q << " k=" << k;
  }
  for (unsigned k = 1; k <= 3; ++k)
    EXPECT_EQ(count_irreducibles(5, k), oracle::irreducibles_by_products(5, k).size());
}

TEST(CountIrreducibles, PrimePowerFieldsViaNecklaceIdentity) {
  // sum_{e | k} e * p_q(e) = q^k
  for (std::uint64_t q : {4, 8, 9}) {
    for (unsigned k = 1; k <= 6; ++k) {
      std::uint64_t sum = 0, qk = 1;
      for (unsigned e = 1; e <= k; ++e)
        if (k % e == 0) sum += e * count_irreducibles(q, e);
      for (unsigned i = 0; i < k; ++i) qk *= q;
      EXPECT_EQ(sum, qk);
    }
  }
}

TEST(CumulativeCount, Examples) {
  EXPECT_EQ(cumulative_count(2, 2), 3u);
  EXPECT_EQ(cumulative_count(2, 4), 8u);
  EXPECT_EQ(cumulative_count(2, 1), 2u);
}

TEST(EnumerateIrreducibles, Examples) {
  EXPECT_EQ(texts(enumerate_irreducibles(2, 5).entries),
            (S{"X", "X + 1", "X^2 + X + 1", "X^3 + X + 1", "X^3 + X^2 + 1"}));
  EXPECT_EQ(texts(enumerate_irreducibles(3, 3).entries), (S{"X", "X + 1", "X + 2"}));
  EXPECT_TRUE(enumerate_irreducibles(2, 0).entries.empty());
}

TEST(EnumerateIrreducibles, AgreesWithProductSieve) {
  for (std::uint64_t q : {2, 3}) {
    std::vector<oracle::Coeffs> expected;
    for (unsigned k = 1; k <= 5; ++k) {
      auto irr = oracle::irreducibles_by_products(q, k);
      // within a degree: compare the X^(k-1) coefficient first
      std::sort(irr.begin(), irr.end(), [](const auto& a, const auto& b) {
        return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
      });
      expected.insert(expected.end(), irr.begin(), irr.end());
    }
    const auto table = enumerate_irreducibles(q, expected.size());
    ASSERT_EQ(table.entries.size(), expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
      oracle::Coeffs got;
      for (const auto& c : table.entries[i].coeffs()) got.push_back(c.code());
      EXPECT_EQ(got, expected[i]) << "q=" << q << " i=" << i;
    }
    for (unsigned k = 1; k <= 5; ++k) EXPECT_EQ(table.counts_by_degree[k], count_irreducibles(q, k));
  }
}

TEST(EnumerateIrreducibles, WorksOverPrimePowerFields) {
  const auto table = enumerate_irreducibles(4, 4 + 6);
  EXPECT_EQ(table.counts_by_degree[1], 4u);
  EXPECT_EQ(table.counts_by_degree[2], 6u);
  for (const auto& h : table.entries) EXPECT_TRUE(h.is_monic());
}

TEST(ExtremalSet, Q2D3) {
  const auto r = extremal_set(2, 3);
  EXPECT_EQ(r.m, 3u);
  EXPECT_EQ(r.max_degree, 3u);
  EXPECT_FALSE(r.degenerate);
  EXPECT_EQ(texts(r.generators), (S{"X^3 + 1", "X^3 + X^2 + X", "X^2 + X"}));
  EXPECT_EQ(r.generators[0], U(2, {1, 1}) * U(2, {1, 1, 1}));
  EXPECT_EQ(r.generators[1], U(2, {0, 1}) * U(2, {1, 1, 1}));
  EXPECT_EQ(r.generators[2], U(2, {0, 1}) * U(2, {1, 1}));
}

TEST(ExtremalSet, Q5D3) {
  const auto r = extremal_set(5, 3);
  EXPECT_EQ(r.m, 4u);
  EXPECT_EQ(texts(r.irreducibles), (S{"X", "X + 1", "X + 2", "X + 3"}));
}

TEST(ExtremalSet, Q2D100) {
  const auto r = extremal_set(2, 100);
  EXPECT_EQ(r.m, 22u);
  EXPECT_EQ(r.max_degree, 99u);
}

TEST(ExtremalSet, DegenerateCase) {
  // d = 1 over F_2: h_2 = X + 1 fits, so m = 2; q = 2 never degenerates for d >= 1.
  EXPECT_EQ(extremal_set(2, 1).m, 2u);
  EXPECT_THROW(extremal_set(2, 0), InvalidArgument);
}

TEST(ExtremalSet, DivisibilityPatternAndMinimality) {
  for (std::uint64_t q : {2, 3, 4}) {
    for (unsigned d = 1; d <= 25; ++d) {
      const auto r = extremal_set(q, d);
      for (std::size_t i = 0; i < r.m; ++i) {
        EXPECT_LE(r.generators[i].degree(), static_cast<long>(d));
        for (std::size_t j = 0; j < r.m; ++j)
          EXPECT_EQ(divrem(r.generators[i], r.irreducibles[j]).second.is_zero(), i != j);
      }
      EXPECT_TRUE(verify_univariate_minimality(r.generators).minimal);
    }
  }
}

TEST(ExtremalSet, MatchesCountOracleAndIsMonotone) {
  for (std::uint64_t q : {2, 3}) {
    std::vector<std::uint64_t> counts{0};
    for (unsigned k = 1; k <= 9; ++k) counts.push_back(oracle::irreducibles_by_products(q, k).size());
    std::size_t prev = 0;
    for (unsigned d = 1; d <= 60; ++d) {
      const auto r = extremal_set(q, d);
      EXPECT_EQ(r.m, oracle::extremal_m_from_counts(counts, d)) << "q=" << q << " d=" << d;
      EXPECT_GE(r.m, prev);
      EXPECT_LE(r.m, d + 1u);
      prev = r.m;
    }
  }
}

TEST(UnivariateMinimality, Verdicts) {
  const auto x = U(2, {0, 1}), x1 = U(2, {1, 1});
  auto v = verify_univariate_minimality({x, x1, x * x1});
  EXPECT_TRUE(v.unit_ideal);
  EXPECT_FALSE(v.minimal);
  EXPECT_EQ(v.redundant, 2u);
  v = verify_univariate_minimality({x});
  EXPECT_FALSE(v.unit_ideal);
  EXPECT_FALSE(v.minimal);
  EXPECT_EQ(v.gcd_all, x);
}

TEST(UPoly, DivisionAndGcd) {
  const auto a = U(3, {1, 0, 1}) * U(3, {2, 1}), b = U(3, {2, 1}) * U(3, {0, 1});
  EXPECT_EQ(gcd(a, b), U(3, {2, 1}));
  const auto [quo, rem] = divrem(a, U(3, {1, 1}));
  EXPECT_EQ(quo * U(3, {1, 1}) + rem, a);
  EXPECT_LT(rem.degree(), 1);
}
