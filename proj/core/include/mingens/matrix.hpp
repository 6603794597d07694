#pragma once

// Exact dense linear algebra over any Field. Over the rationals elimination is
// fraction-free (Bareiss for det/solve, primitive integer rows for rank and
// nullspace); over finite fields it is ordinary Gaussian elimination. Pivots
// are always taken first-found, never by magnitude, so results such as the
// pivot-row set are reproducible.

#include <cstddef>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "mingens/field.hpp"

namespace mingens {

class Matrix {
 public:
  Matrix() = default;
  Matrix(Field field, std::size_t rows, std::size_t cols);

  static Matrix identity(const Field& field, std::size_t n);
  // All rows must have length `cols`.
  static Matrix from_rows(const Field& field, std::size_t cols, const std::vector<std::vector<Element>>& rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Element& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Element& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::span<const Element> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::vector<Element> column(std::size_t j) const;

  Matrix transpose() const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  std::vector<Element> apply(std::span<const Element> v) const;

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Element> data_;
};

struct RankProfile {
  std::size_t rank = 0;
  // Lexicographically first maximal independent subset of rows.
  std::vector<std::size_t> pivot_rows;
};

RankProfile rank_profile(const Matrix& m);
Element det(const Matrix& m);
// Unique solution of m x = b; throws SingularMatrix.
std::vector<Element> solve(const Matrix& m, std::span<const Element> b);
// Column-wise solve of m X = b.
Matrix solve(const Matrix& m, const Matrix& b);
// Basis of {x : m x = 0}, one vector per free column (ascending), with a 1 in
// that column and zeros in the other free columns.
std::vector<std::vector<Element>> nullspace(const Matrix& m);

// Row span built up one row at a time. A row that is independent of the rows
// inserted so far becomes a basis row whose pivot is its first nonzero column
// after reduction; pivots are therefore distinct and basis rows keep their
// leading column forever.
class RowSpace {
 public:
  RowSpace(Field field, std::size_t cols);

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return pivots_.size(); }
  // Pivot columns in insertion order.
  const std::vector<std::size_t>& pivot_columns() const { return pivots_; }

  // Returns true iff the row was independent (and is now part of the basis).
  bool insert(std::span<const Element> row);
  bool contains(std::span<const Element> row) const;
  // Reduced row echelon form of the span, rows ordered by pivot column, each
  // normalized to a leading 1.
  std::vector<std::vector<Element>> reduced_basis() const;

 private:
  bool rational() const { return field_.kind() == FieldKind::Rational; }
  // Reduces in place; returns the first nonzero column or cols_ if zero.
  std::size_t reduce_int(std::vector<mpz_class>& r) const;
  std::size_t reduce_finite(std::vector<Element>& r) const;
  std::vector<mpz_class> to_integers(std::span<const Element> row) const;

  Field field_;
  std::size_t cols_;
  std::vector<std::size_t> pivots_;
  std::vector<std::vector<mpz_class>> int_rows_;  // rationals: primitive integer rows
  std::vector<std::vector<Element>> rows_;        // finite fields: pivot normalized to 1
};

}  // namespace mingens
