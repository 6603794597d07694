#include <gtest/gtest.h>

#include "mingens/errors.hpp"
#include "mingens/generator_count.hpp"
#include "mingens/groebner.hpp"
#include "random_instances.hpp"

using namespace mingens;

namespace {

const Field Q = Field::rationals();

std::vector<MultiPoly> G(std::initializer_list<const char*> texts, std::size_t n = 2, const Field& f = Q) {
  std::vector<MultiPoly> out;
  for (const char* t : texts) out.push_back(parse_poly(t, n, f));
  return out;
}

using C = std::vector<std::size_t>;

}  // namespace

TEST(DegreeProfile, MonomialIdeal) {
  const auto p = degree_profile(Q, 2, G({"X^2", "X*Y", "Y^2"}), 2);
  EXPECT_EQ(p.c, (C{0, 0, 3}));
  EXPECT_TRUE(p.stabilized);
  EXPECT_EQ(p.working_degree, 2u);
}

TEST(DegreeProfile, UnitIdeal) {
  const auto p = degree_profile(Q, 2, G({"1"}), 3);
  EXPECT_EQ(p.c, (C{1, 2, 3, 4}));
}

TEST(DegreeProfile, NonHomogeneousNeedsEscalation) {
  const auto p = degree_profile(Q, 2, G({"X^2 + Y", "X^2"}), 2);
  EXPECT_EQ(p.c, (C{0, 1, 3}));
  EXPECT_TRUE(p.stabilized);
}

TEST(DegreeProfile, EmptyInputIsAllZero) {
  const auto p = degree_profile(Q, 3, {}, 2);
  EXPECT_EQ(p.c, (C{0, 0, 0}));
}

TEST(DegreeProfile, RejectsOversizedGenerators) {
  EXPECT_THROW(degree_profile(Q, 2, G({"X^3"}), 2), DegreeOverflow);
  EXPECT_THROW(degree_profile(Q, 2, G({"X"}), 2, 1u), InvalidArgument);
}

TEST(Telescope, MonomialIdealKeepsItsGenerators) {
  const auto r = telescope_generators(Q, 2, G({"X^2", "X*Y", "Y^2"}), 2);
  EXPECT_EQ(r.generators.size(), 3u);
  EXPECT_EQ(r.claimed_bound, 3u);
  EXPECT_TRUE(verify_monomial_lower_bound(Q, 2, 2, r.generators));
}

TEST(Telescope, UnitIdealInOneVariable) {
  const auto r = telescope_generators(Q, 1, G({"1", "X"}, 1), 1);
  ASSERT_EQ(r.generators.size(), 1u);
  EXPECT_EQ(r.generators[0], parse_poly("1", 1, Q));
}

TEST(Telescope, NonHomogeneousExample) {
  const auto gens = G({"X^2 + Y", "X^2"});
  const auto r = telescope_generators(Q, 2, gens, 2);
  EXPECT_EQ(r.generators.size(), 3u);
  EXPECT_EQ(r.profile.c, (C{0, 1, 3}));
  EXPECT_TRUE(ideal_equal(Q, 2, r.generators, gens));
  // Top parts span every quadratic form.
  std::vector<MultiPoly> tops;
  for (const auto& g : r.generators)
    if (g.degree() == 2u) tops.push_back(degree_part(g, 2));
  EXPECT_EQ(tops.size(), 2u);
}

TEST(SharpInstance, Examples) {
  EXPECT_EQ(sharp_instance(Q, 2, 2), G({"X^2", "X*Y", "Y^2"}));
  EXPECT_EQ(sharp_instance(Q, 1, 5), G({"X^5"}, 1));
  EXPECT_EQ(sharp_instance(Q, 3, 2).size(), 6u);
}

TEST(MonomialLowerBound, Verdicts) {
  EXPECT_TRUE(verify_monomial_lower_bound(Q, 2, 2, sharp_instance(Q, 2, 2)));
  EXPECT_FALSE(verify_monomial_lower_bound(Q, 2, 2, G({"X^2", "X*Y"})));
  EXPECT_TRUE(verify_monomial_lower_bound(Q, 2, 2, G({"X^2", "X*Y", "Y^2", "X^2 + X*Y"})));
  EXPECT_FALSE(verify_monomial_lower_bound(Q, 2, 2, G({"X^2", "X*Y", "Y^2 + X"})));
}

TEST(DegreeProfile, RandomInstancesSatisfyTheBounds) {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 30; ++t) {
    const Field field = t % 2 ? Field::prime(5) : Q;
    const std::size_t n = 1 + rng() % 3;
    const unsigned d = 1 + static_cast<unsigned>(rng() % 4);
    const auto gens = testing_support::random_gens(field, n, d, t % 3 == 0, rng);
    const auto r = telescope_generators(field, n, gens, d);
    const auto& c = r.profile.c;
    ASSERT_EQ(c.size(), d + 1u);
    for (unsigned k = 0; k <= d; ++k) {
      EXPECT_LE(c[k], binomial(n + k - 1, k));
      if (k > 0) EXPECT_GE(c[k], c[k - 1]);
    }
    EXPECT_EQ(r.generators.size(), c[d]);
    EXPECT_LE(r.generators.size(), r.claimed_bound);
  }
}

TEST(Telescope, HomogeneousOutputGeneratesTheSameIdeal) {
  std::mt19937_64 rng(77);
  for (int t = 0; t < 12; ++t) {
    const Field field = t % 2 ? Field::prime(5) : Q;
    const std::size_t n = 2 + rng() % 2;
    const unsigned d = 2 + static_cast<unsigned>(rng() % 2);
    const auto gens = testing_support::random_gens(field, n, d, true, rng);
    const auto r = telescope_generators(field, n, gens, d);
    EXPECT_TRUE(ideal_equal(field, n, r.generators, gens));
  }
}
