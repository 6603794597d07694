#include <random>

#include <gtest/gtest.h>

#include "mingens/errors.hpp"
#include "mingens/matrix.hpp"
#include "oracles.hpp"

using namespace mingens;

namespace {

const Field Q = Field::rationals();

Matrix M(const Field& f, std::vector<std::vector<long>> rows) {
  std::vector<std::vector<Element>> r;
  for (const auto& row : rows) {
    std::vector<Element> e;
    for (long x : row) e.push_back(f.from_int(x));
    r.push_back(e);
  }
  return Matrix::from_rows(f, rows.empty() ? 0 : rows[0].size(), r);
}

Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng, long range) {
  std::vector<std::vector<long>> r(rows, std::vector<long>(cols));
  for (auto& row : r)
    for (auto& x : row) x = static_cast<long>(rng() % (2 * range + 1)) - range;
  return M(f, r);
}

}  // namespace

TEST(Matrix, RankProfileExamples) {
  const Field f2 = Field::prime(2);
  auto r = rank_profile(M(f2, {{1, 1}, {1, 1}}));
  EXPECT_EQ(r.rank, 1u);
  EXPECT_EQ(r.pivot_rows, (std::vector<std::size_t>{0}));
  r = rank_profile(Matrix::identity(Q, 2));
  EXPECT_EQ(r.pivot_rows, (std::vector<std::size_t>{0, 1}));
  // X, 2X, X+Y, Y in the basis 1, X, Y
  r = rank_profile(M(Q, {{0, 1, 0}, {0, 2, 0}, {0, 1, 1}, {0, 0, 1}}));
  EXPECT_EQ(r.rank, 2u);
  EXPECT_EQ(r.pivot_rows, (std::vector<std::size_t>{0, 2}));
}

TEST(Matrix, DetExamples) {
  EXPECT_EQ(det(Matrix::identity(Q, 4)), Q.one());
  EXPECT_EQ(det(M(Q, {{1, 0}, {1, 1}})), Q.one());
  EXPECT_EQ(det(M(Q, {{1, 0, 0}, {1, 1, 1}, {1, 2, 4}})), Q.from_int(2));
  EXPECT_THROW(det(M(Q, {{1, 2, 3}})), InvalidArgument);
}

TEST(Matrix, DetMatchesLeibnizExpansion) {
  std::mt19937_64 rng(5);
  for (const Field& f : {Q, Field::prime(7), Field::extension(2, 3)}) {
    for (std::size_t n = 1; n <= 6; ++n) {
      for (int t = 0; t < 5; ++t) {
        Matrix m = random_matrix(f, n, n, rng, 3);
        if (t == 0 && n > 1)  // force a dependent row
          for (std::size_t j = 0; j < n; ++j) m(n - 1, j) = m(0, j) + m(0, j);
        EXPECT_EQ(det(m), oracle::det_leibniz(m)) << f.spec() << " n=" << n;
      }
    }
  }
}

TEST(Matrix, SolveExamples) {
  const std::vector<Element> b{Q.from_int(3), Q.from_int(-4)};
  EXPECT_EQ(solve(Matrix::identity(Q, 2), b), b);
  EXPECT_EQ(solve(M(Q, {{1, 0}, {1, 1}}), std::vector<Element>{Q.zero(), Q.one()}),
            (std::vector<Element>{Q.zero(), Q.one()}));
  const auto x = solve(M(Q, {{1, 0, 0}, {1, 1, 1}, {1, 2, 4}}), std::vector<Element>{Q.zero(), Q.zero(), Q.one()});
  EXPECT_EQ(x, (std::vector<Element>{Q.zero(), Q.from_rational(mpq_class(-1, 2)), Q.from_rational(mpq_class(1, 2))}));
  EXPECT_THROW(solve(M(Q, {{1, 1}, {2, 2}}), b), SingularMatrix);
}

TEST(Matrix, SolveAgreesWithLagrangeInterpolation) {
  const std::vector<mpq_class> nodes{mpq_class(-2), mpq_class(1, 3), mpq_class(0), mpq_class(5), mpq_class(7, 2)};
  std::vector<std::vector<Element>> rows;
  for (const auto& x : nodes) {
    std::vector<Element> row;
    mpq_class p = 1;
    for (std::size_t k = 0; k < nodes.size(); ++k, p *= x) row.push_back(Q.from_rational(p));
    rows.push_back(row);
  }
  const Matrix v = Matrix::from_rows(Q, nodes.size(), rows);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    std::vector<Element> e(nodes.size(), Q.zero());
    e[i] = Q.one();
    const auto sol = solve(v, e);
    const auto expected = oracle::lagrange_basis(nodes, i);
    for (std::size_t k = 0; k < nodes.size(); ++k) EXPECT_EQ(sol[k].rational(), expected[k]);
  }
}

TEST(Matrix, SolveRandomSystems) {
  std::mt19937_64 rng(9);
  for (const Field& f : {Q, Field::prime(101), Field::extension(3, 2)}) {
    for (int t = 0; t < 20; ++t) {
      const Matrix m = random_matrix(f, 5, 5, rng, 4);
      const Matrix b = random_matrix(f, 5, 2, rng, 4);
      if (det(m).is_zero()) {
        EXPECT_THROW(solve(m, b), SingularMatrix);
        continue;
      }
      EXPECT_EQ(m * solve(m, b), b);
    }
  }
}

TEST(Matrix, NullspaceExamples) {
  EXPECT_TRUE(nullspace(Matrix::identity(Q, 3)).empty());
  const Field f2 = Field::prime(2);
  const auto ns = nullspace(M(f2, {{1, 1}}));
  ASSERT_EQ(ns.size(), 1u);
  EXPECT_EQ(ns[0], (std::vector<Element>{f2.one(), f2.one()}));
  const auto full = nullspace(Matrix(Q, 0, 3));
  ASSERT_EQ(full.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(full[i][j], i == j ? Q.one() : Q.zero());
}

TEST(Matrix, RankNullityAndMinorsOracle) {
  std::mt19937_64 rng(21);
  for (const Field& f : {Q, Field::prime(3), Field::extension(2, 2)}) {
    for (int t = 0; t < 20; ++t) {
      const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
      const Matrix m = random_matrix(f, rows, cols, rng, 1);
      const auto rp = rank_profile(m);
      EXPECT_EQ(rp.rank, oracle::rank_by_minors(m));
      const auto ns = nullspace(m);
      EXPECT_EQ(rp.rank + ns.size(), cols);
      for (const auto& v : ns)
        for (const auto& e : m.apply(v)) EXPECT_TRUE(e.is_zero());
    }
  }
}

TEST(RowSpace, IncrementalInsertion) {
  RowSpace s(Q, 3);
  const std::vector<Element> a{Q.zero(), Q.one(), Q.zero()}, b{Q.zero(), Q.from_int(2), Q.zero()},
      c{Q.one(), Q.one(), Q.one()};
  EXPECT_TRUE(s.insert(a));
  EXPECT_FALSE(s.insert(b));
  EXPECT_TRUE(s.contains(b));
  EXPECT_TRUE(s.insert(c));
  EXPECT_EQ(s.rank(), 2u);
  EXPECT_EQ(s.pivot_columns(), (std::vector<std::size_t>{1, 0}));
  const auto basis = s.reduced_basis();
  ASSERT_EQ(basis.size(), 2u);
  EXPECT_EQ(basis[0], (std::vector<Element>{Q.one(), Q.zero(), Q.one()}));
  EXPECT_EQ(basis[1], a);
}
