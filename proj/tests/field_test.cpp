#include <random>

#include <gtest/gtest.h>

#include "mingens/errors.hpp"
#include "mingens/field.hpp"
#include "oracles.hpp"

using namespace mingens;

TEST(Field, ExtensionOfDegreeOneIsThePrimeField) {
  EXPECT_EQ(Field::extension(2, 1), Field::prime(2));
  EXPECT_EQ(Field::extension(2, 1).kind(), FieldKind::Prime);
}

TEST(Field, QuadraticOverF2) {
  const Field f4 = Field::extension(2, 2);
  EXPECT_EQ(f4.modulus(), (std::vector<std::uint64_t>{1, 1, 1}));
  EXPECT_EQ(f4.order(), 4u);
  EXPECT_EQ(f4.spec(), "gf:2^2");
}

TEST(Field, ModulusIsSmallestIrreducibleConstantTermFirst) {
  for (auto [p, e] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {5, 2}}) {
    std::vector<oracle::Coeffs> irr = oracle::irreducibles_by_products(p, e);
    ASSERT_FALSE(irr.empty());
    // Lexicographic comparison starting at the constant term.
    const auto best = *std::min_element(irr.begin(), irr.end());
    EXPECT_EQ(Field::extension(p, e).modulus(), best) << "p=" << p << " e=" << e;
    EXPECT_TRUE(oracle::is_irreducible_brute(Field::extension(p, e).modulus(), p));
  }
}

TEST(Field, RejectsNonPrimeCharacteristic) {
  EXPECT_THROW(Field::prime(4), InvalidArgument);
  EXPECT_THROW(Field::extension(6, 2), InvalidArgument);
  EXPECT_THROW(Field::with_modulus(2, {1, 0, 1}), InvalidArgument);  // t^2 + 1 = (t + 1)^2
}

TEST(Field, ContextsAreInterned) {
  EXPECT_EQ(Field::extension(3, 2), Field::extension(3, 2));
  EXPECT_EQ(Field::galois(9), Field::extension(3, 2));
  EXPECT_FALSE(Field::prime(3) == Field::prime(5));
  EXPECT_FALSE(Field::rationals() == Field::prime(2));
}

TEST(Field, CrossContextArithmeticIsAnError) {
  const Element a = Field::prime(5).from_int(2);
  const Element b = Field::prime(7).from_int(2);
  EXPECT_THROW(a + b, ContextMismatch);
  EXPECT_THROW(a * Field::rationals().one(), ContextMismatch);
}

TEST(Field, RationalsAreReduced) {
  const Field q = Field::rationals();
  const Element x = q.from_rational(mpq_class(6, -4));
  EXPECT_EQ(x.to_string(), "-3/2");
  EXPECT_EQ(q.zero().rational().get_den(), 1);
  EXPECT_EQ((q.from_int(3) / q.from_int(3)).to_string(), "1");
}

TEST(Field, FrobeniusOfTInF4) {
  const Field f4 = Field::extension(2, 2);
  const Element t = f4.from_coeffs(std::vector<std::uint64_t>{0, 1});
  EXPECT_EQ(frobenius(t), t + f4.one());
  EXPECT_EQ(frobenius(t), t * t);
  EXPECT_EQ(frobenius(frobenius(t)), t);
}

TEST(Field, FrobeniusFixesPrimeSubfieldAndHasOrderE) {
  for (auto [p, e] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 4}, {3, 3}, {5, 2}}) {
    const Field f = Field::extension(p, e);
    for (std::uint64_t c = 0; c < p; ++c) EXPECT_EQ(frobenius(f.from_code(c)), f.from_code(c));
    for (const auto& a : f.elements()) {
      EXPECT_EQ(frobenius(a, e), a);
      EXPECT_EQ(frobenius(a), a.pow(p));
    }
  }
}

TEST(Field, FrobeniusIsARingHomomorphism) {
  const Field f = Field::extension(3, 3);
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const Element a = f.from_code(rng() % f.order());
    const Element b = f.from_code(rng() % f.order());
    EXPECT_EQ(frobenius(a + b), frobenius(a) + frobenius(b));
    EXPECT_EQ(frobenius(a * b), frobenius(a) * frobenius(b));
  }
}

TEST(Field, ElementOrderExamples) {
  EXPECT_EQ(element_order(Field::prime(7).one()), 1u);
  EXPECT_EQ(element_order(Field::prime(5).from_int(2)), 4u);
  EXPECT_EQ(element_order(Field::prime(11).from_int(2)), 10u);
  EXPECT_THROW(element_order(Field::prime(5).zero()), InvalidArgument);
  EXPECT_THROW(element_order(Field::rationals().from_int(2)), InvalidArgument);
}

TEST(Field, ElementOrderMatchesBruteForceAndDividesGroupOrder) {
  for (const Field& f : {Field::prime(13), Field::extension(2, 4), Field::extension(3, 2), Field::extension(5, 2)}) {
    for (const auto& a : f.elements()) {
      if (a.is_zero()) continue;
      const std::uint64_t n = element_order(a);
      EXPECT_EQ(n, oracle::order_brute(a));
      EXPECT_EQ((f.order() - 1) % n, 0u);
    }
    EXPECT_EQ(element_order(f.primitive_element()), f.order() - 1);
  }
}

namespace {

void check_axioms(const Element& a, const Element& b, const Element& c) {
  EXPECT_EQ(a + b, b + a);
  EXPECT_EQ(a * b, b * a);
  EXPECT_EQ((a + b) + c, a + (b + c));
  EXPECT_EQ((a * b) * c, a * (b * c));
  EXPECT_EQ(a * (b + c), a * b + a * c);
  EXPECT_EQ(a - a, a.field().zero());
  if (!a.is_zero()) EXPECT_TRUE((a * a.inverse()).is_one());
}

}  // namespace

TEST(Field, AxiomsExhaustiveForSmallFields) {
  for (const Field& f : {Field::prime(2), Field::prime(7), Field::extension(2, 2), Field::extension(2, 3),
                         Field::extension(3, 2), Field::extension(2, 4)}) {
    const auto els = f.elements();
    for (const auto& a : els)
      for (const auto& b : els) {
        check_axioms(a, b, els[(a.code() + 3 * b.code()) % els.size()]);
        if (!b.is_zero()) EXPECT_EQ((a / b) * b, a);
      }
  }
}

TEST(Field, AxiomsRandomizedForLargerFields) {
  std::mt19937_64 rng(11);
  for (const Field& f : {Field::prime(1000003), Field::extension(7, 5), Field::extension(2, 24)}) {
    for (int t = 0; t < 1000; ++t)
      check_axioms(f.from_code(rng() % f.order()), f.from_code(rng() % f.order()), f.from_code(rng() % f.order()));
  }
  const Field q = Field::rationals();
  for (int t = 0; t < 1000; ++t) {
    auto r = [&] { return q.from_rational(mpq_class(static_cast<long>(rng() % 200) - 100, static_cast<long>(rng() % 50) + 1)); };
    check_axioms(r(), r(), r());
  }
}

TEST(Field, EmbedAndContract) {
  const Field f16 = Field::extension(2, 4);
  const Field f2 = Field::prime(2);
  EXPECT_EQ(embed(f2.one(), f16), f16.one());
  EXPECT_EQ(contract(f16.one(), f2), f2.one());
  EXPECT_THROW(contract(f16.primitive_element(), f2), InvalidArgument);
  EXPECT_THROW(embed(Field::prime(3).one(), f16), ContextMismatch);
}

TEST(Field, PrimalityAndFactoring) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(1000003));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(561));
  EXPECT_EQ(prime_factors(360), (std::vector<std::uint64_t>{2, 3, 5}));
  EXPECT_EQ(prime_factors(97), (std::vector<std::uint64_t>{97}));
}
