#include "mingens/matrix.hpp"

#include <algorithm>
#include <utility>

#include "mingens/errors.hpp"

namespace mingens {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

Matrix Matrix::identity(const Field& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

Matrix Matrix::from_rows(const Field& field, std::size_t cols, const std::vector<std::vector<Element>>& rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InvalidArgument("from_rows: ragged rows");
    for (std::size_t j = 0; j < cols; ++j) {
      if (rows[i][j].field() != field) throw ContextMismatch("from_rows: entry in a different field");
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

std::vector<Element> Matrix::column(std::size_t j) const {
  std::vector<Element> c;
  c.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
  return c;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.field_ != b.field_) throw ContextMismatch("matrix product over different fields");
  if (a.cols_ != b.rows_) throw InvalidArgument("matrix product: dimension mismatch");
  Matrix c(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Element& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
    }
  return c;
}

std::vector<Element> Matrix::apply(std::span<const Element> v) const {
  if (v.size() != cols_) throw InvalidArgument("matrix-vector product: dimension mismatch");
  std::vector<Element> out(rows_, field_.zero());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

namespace {

using IntMatrix = std::vector<std::vector<mpz_class>>;

// Scales a row of rationals by the lcm of its denominators.
std::vector<mpz_class> integer_row(std::span<const Element> row) {
  mpz_class l = 1;
  for (const auto& x : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.rational().get_den_mpz_t());
  std::vector<mpz_class> out;
  out.reserve(row.size());
  for (const auto& x : row) out.push_back(x.rational().get_num() * (l / x.rational().get_den()));
  return out;
}

// Fraction-free forward elimination on the first `n` columns. Returns the
// sign of the row permutation, or 0 if a pivot column has no nonzero entry.
int bareiss_forward(IntMatrix& m, std::size_t n) {
  int sign = 1;
  mpz_class prev = 1;
  const std::size_t width = m.empty() ? 0 : m[0].size();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < width; ++j) {
        m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign;
}

void require_square(const Matrix& m, const char* what) {
  if (m.rows() != m.cols()) throw InvalidArgument(std::string(what) + ": matrix is not square");
}

Matrix solve_rational(const Matrix& m, const Matrix& b) {
  const std::size_t n = m.rows(), k = b.cols();
  IntMatrix aug(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Element> row(m.row(i).begin(), m.row(i).end());
    row.insert(row.end(), b.row(i).begin(), b.row(i).end());
    aug[i] = integer_row(row);
  }
  if (bareiss_forward(aug, n) == 0) throw SingularMatrix("solve: matrix is singular");
  Matrix x(m.field(), n, k);
  for (std::size_t c = 0; c < k; ++c) {
    std::vector<mpq_class> sol(n);
    for (std::size_t i = n; i-- > 0;) {
      mpq_class acc(aug[i][n + c]);
      for (std::size_t j = i + 1; j < n; ++j) acc -= mpq_class(aug[i][j]) * sol[j];
      sol[i] = acc / mpq_class(aug[i][i]);
      sol[i].canonicalize();
    }
    for (std::size_t i = 0; i < n; ++i) x(i, c) = m.field().from_rational(sol[i]);
  }
  return x;
}

Matrix solve_finite(const Matrix& m, const Matrix& b) {
  const std::size_t n = m.rows(), k = b.cols();
  std::vector<std::vector<Element>> aug(n);
  for (std::size_t i = 0; i < n; ++i) {
    aug[i].assign(m.row(i).begin(), m.row(i).end());
    aug[i].insert(aug[i].end(), b.row(i).begin(), b.row(i).end());
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && aug[p][c].is_zero()) ++p;
    if (p == n) throw SingularMatrix("solve: matrix is singular");
    std::swap(aug[p], aug[c]);
    const Element inv = aug[c][c].inverse();
    for (auto& x : aug[c]) x *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || aug[i][c].is_zero()) continue;
      const Element f = aug[i][c];
      for (std::size_t j = c; j < n + k; ++j) aug[i][j] -= f * aug[c][j];
    }
  }
  Matrix x(m.field(), n, k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < k; ++c) x(i, c) = aug[i][n + c];
  return x;
}

}  // namespace

Element det(const Matrix& m) {
  require_square(m, "det");
  const std::size_t n = m.rows();
  const Field& f = m.field();
  if (n == 0) return f.one();
  if (f.kind() == FieldKind::Rational) {
    IntMatrix a(n);
    mpz_class scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = integer_row(m.row(i));
      mpz_class l = 1;
      for (const auto& x : m.row(i)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.rational().get_den_mpz_t());
      scale *= l;
    }
    const int sign = bareiss_forward(a, n);
    if (sign == 0) return f.zero();
    mpq_class d(a[n - 1][n - 1] * sign, scale);
    d.canonicalize();
    return f.from_rational(d);
  }
  std::vector<std::vector<Element>> a(n);
  for (std::size_t i = 0; i < n; ++i) a[i].assign(m.row(i).begin(), m.row(i).end());
  Element d = f.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) return f.zero();
    if (p != c) {
      std::swap(a[p], a[c]);
      d = -d;
    }
    d *= a[c][c];
    const Element inv = a[c][c].inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i][c].is_zero()) continue;
      const Element factor = a[i][c] * inv;
      for (std::size_t j = c; j < n; ++j) a[i][j] -= factor * a[c][j];
    }
  }
  return d;
}

Matrix solve(const Matrix& m, const Matrix& b) {
  require_square(m, "solve");
  if (b.rows() != m.rows()) throw InvalidArgument("solve: right-hand side has the wrong height");
  if (m.field() != b.field()) throw ContextMismatch("solve: right-hand side in a different field");
  if (m.rows() == 0) return Matrix(m.field(), 0, b.cols());
  return m.field().kind() == FieldKind::Rational ? solve_rational(m, b) : solve_finite(m, b);
}

std::vector<Element> solve(const Matrix& m, std::span<const Element> b) {
  Matrix rhs(m.field(), b.size(), 1);
  for (std::size_t i = 0; i < b.size(); ++i) rhs(i, 0) = b[i];
  return solve(m, rhs).column(0);
}

RankProfile rank_profile(const Matrix& m) {
  RowSpace space(m.field(), m.cols());
  RankProfile out;
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (space.insert(m.row(i))) out.pivot_rows.push_back(i);
  out.rank = out.pivot_rows.size();
  return out;
}

std::vector<std::vector<Element>> nullspace(const Matrix& m) {
  RowSpace space(m.field(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) space.insert(m.row(i));
  const auto basis = space.reduced_basis();
  std::vector<std::size_t> pivot_of_row;
  std::vector<bool> is_pivot(m.cols(), false);
  for (const auto& r : basis) {
    std::size_t c = 0;
    while (r[c].is_zero()) ++c;
    pivot_of_row.push_back(c);
    is_pivot[c] = true;
  }
  const Field& f = m.field();
  std::vector<std::vector<Element>> out;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Element> v(m.cols(), f.zero());
    v[free] = f.one();
    for (std::size_t r = 0; r < basis.size(); ++r) v[pivot_of_row[r]] = -basis[r][free];
    out.push_back(std::move(v));
  }
  return out;
}

// --- RowSpace ----------------------------------------------------------------------

RowSpace::RowSpace(Field field, std::size_t cols) : field_(field), cols_(cols) {}

std::vector<mpz_class> RowSpace::to_integers(std::span<const Element> row) const {
  if (row.size() != cols_) throw InvalidArgument("RowSpace: row has the wrong length");
  for (const auto& x : row)
    if (x.field() != field_) throw ContextMismatch("RowSpace: entry in a different field");
  return integer_row(row);
}

std::size_t RowSpace::reduce_int(std::vector<mpz_class>& r) const {
  mpz_class g, a, b;
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    const std::size_t c = pivots_[k];
    if (r[c] == 0) continue;
    const auto& basis = int_rows_[k];
    mpz_gcd(g.get_mpz_t(), basis[c].get_mpz_t(), r[c].get_mpz_t());
    a = basis[c] / g;
    b = r[c] / g;
    for (std::size_t j = 0; j < cols_; ++j) r[j] = a * r[j] - b * basis[j];
  }
  std::size_t lead = 0;
  while (lead < cols_ && r[lead] == 0) ++lead;
  if (lead < cols_) {
    mpz_class content = 0;
    for (const auto& x : r) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
    if (r[lead] < 0) content = -content;
    if (content != 1)
      for (auto& x : r) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), content.get_mpz_t());
  }
  return lead;
}

std::size_t RowSpace::reduce_finite(std::vector<Element>& r) const {
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    const std::size_t c = pivots_[k];
    if (r[c].is_zero()) continue;
    const Element factor = r[c];
    const auto& basis = rows_[k];
    for (std::size_t j = 0; j < cols_; ++j)
      if (!basis[j].is_zero()) r[j] -= factor * basis[j];
  }
  std::size_t lead = 0;
  while (lead < cols_ && r[lead].is_zero()) ++lead;
  return lead;
}

bool RowSpace::insert(std::span<const Element> row) {
  if (rational()) {
    auto r = to_integers(row);
    const std::size_t lead = reduce_int(r);
    if (lead == cols_) return false;
    pivots_.push_back(lead);
    int_rows_.push_back(std::move(r));
    return true;
  }
  if (row.size() != cols_) throw InvalidArgument("RowSpace: row has the wrong length");
  std::vector<Element> r(row.begin(), row.end());
  for (const auto& x : r)
    if (x.field() != field_) throw ContextMismatch("RowSpace: entry in a different field");
  const std::size_t lead = reduce_finite(r);
  if (lead == cols_) return false;
  const Element inv = r[lead].inverse();
  for (auto& x : r) x *= inv;
  pivots_.push_back(lead);
  rows_.push_back(std::move(r));
  return true;
}

bool RowSpace::contains(std::span<const Element> row) const {
  if (rational()) {
    auto r = to_integers(row);
    return reduce_int(r) == cols_;
  }
  if (row.size() != cols_) throw InvalidArgument("RowSpace: row has the wrong length");
  std::vector<Element> r(row.begin(), row.end());
  return reduce_finite(r) == cols_;
}

std::vector<std::vector<Element>> RowSpace::reduced_basis() const {
  std::vector<std::size_t> order(pivots_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });

  std::vector<std::vector<Element>> out;
  out.reserve(order.size());
  for (std::size_t idx : order) {
    if (rational()) {
      const auto& r = int_rows_[idx];
      const mpz_class& lead = r[pivots_[idx]];
      std::vector<Element> row;
      row.reserve(cols_);
      for (const auto& x : r) row.push_back(field_.from_rational(mpq_class(x, lead)));
      out.push_back(std::move(row));
    } else {
      out.push_back(rows_[idx]);
    }
  }
  // Back-substitution: clear every pivot column above and below its pivot.
  for (std::size_t i = out.size(); i-- > 0;) {
    const std::size_t c = pivots_[order[i]];
    for (std::size_t k = 0; k < out.size(); ++k) {
      if (k == i || out[k][c].is_zero()) continue;
      const Element factor = out[k][c];
      for (std::size_t j = c; j < cols_; ++j)
        if (!out[i][j].is_zero()) out[k][j] -= factor * out[i][j];
    }
  }
  return out;
}

}  // namespace mingens
