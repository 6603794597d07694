#include "mingens/certificate.hpp"

#include <algorithm>
#include <random>

#include "mingens/errors.hpp"
#include "mingens/rng.hpp"

namespace mingens {

namespace {

std::vector<Element> monomial_row(const Point& p, const std::vector<Monomial>& monos) {
  std::vector<Element> row;
  row.reserve(monos.size());
  for (const auto& m : monos) {
    Element v = p.field().one();
    for (std::size_t i = 0; i < m.nvars(); ++i)
      if (m[i] != 0) v *= p[i].pow(m[i]);
    row.push_back(std::move(v));
  }
  return row;
}

Element dot(std::span<const Element> a, std::span<const Element> b, const Field& field) {
  Element s = field.zero();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

std::vector<Element> nodes(const Field& field, unsigned d) {
  std::vector<Element> out;
  if (!field.is_finite()) {
    for (unsigned i = 0; i <= d; ++i) out.push_back(field.from_int(i));
    return out;
  }
  if (field.order() <= d) throw FieldTooSmall("|K| = " + std::to_string(field.order()) + " <= d");
  if (d == 0 || field.order() == std::uint64_t{d} + 1) {
    for (unsigned i = 0; i <= d; ++i) out.push_back(field.from_code(i));
    return out;
  }
  const Element z = field.primitive_element();
  const Element denom = (field.one() - z).inverse();
  Element zi = field.one();
  for (unsigned i = 0; i <= d; ++i) {
    out.push_back((field.one() - zi) * denom);
    zi *= z;
  }
  return out;
}

}  // namespace

std::vector<std::size_t> select_minimal_subset(const std::vector<MultiPoly>& gens, unsigned d) {
  if (gens.empty()) return {};
  const Field field = gens.front().field();
  const std::size_t n = gens.front().nvars();
  RowSpace space(field, monomial_count(n, d));
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].field() != field) throw ContextMismatch("generators over different fields");
    if (gens[i].nvars() != n) throw InvalidArgument("generators in different numbers of variables");
    if (space.insert(coefficient_vector(gens[i], d))) out.push_back(i);
  }
  return out;
}

Matrix build_vandermonde(const Field& field, std::size_t nvars, const std::vector<Point>& points, unsigned d) {
  const auto monos = monomials_up_to(nvars, d);
  std::vector<std::vector<Element>> rows;
  rows.reserve(points.size());
  for (const auto& p : points) {
    if (p.field() != field) throw ContextMismatch("point over a different field");
    if (p.dim() != nvars) throw InvalidArgument("point has the wrong dimension");
    rows.push_back(monomial_row(p, monos));
  }
  return Matrix::from_rows(field, monos.size(), rows);
}

std::vector<Point> structured_stream(const Field& field, std::size_t nvars, unsigned d) {
  const auto a = nodes(field, d);
  std::vector<Point> out;
  for (const auto& m : monomials_up_to(nvars, d)) {
    std::vector<Element> coords;
    for (std::size_t i = 0; i < nvars; ++i) coords.push_back(a[m[i]]);
    out.emplace_back(field, std::move(coords));
  }
  return out;
}

PointSearchResult greedy_point_search(const Field& field, std::size_t nvars, unsigned d,
                                      const PointSearchOptions& options) {
  if (nvars == 0) throw InvalidArgument("at least one variable required");
  if (field.is_finite() && field.order() <= d)
    throw FieldTooSmall("|K| = " + std::to_string(field.order()) + " <= d = " + std::to_string(d));

  const auto monos = monomials_up_to(nvars, d);
  const std::size_t target = monos.size();

  std::uint64_t grid = options.grid_size.value_or(std::uint64_t{d} + 1);
  if (field.is_finite()) grid = std::min(grid, field.order());
  if (grid <= d) throw InvalidArgument("grid must have more than d elements");

  std::vector<Point> stream;
  if (options.structured) stream = structured_stream(field, nvars, d);
  std::mt19937_64 rng(mix_seed(options.seed));

  PointSearchResult out;
  std::vector<std::vector<Element>> rows;
  while (out.points.size() < target) {
    std::vector<Element> h;
    if (rows.empty()) {
      h.assign(target, field.zero());
      h[0] = field.one();  // the constant 1 vanishes nowhere
    } else {
      h = nullspace(Matrix::from_rows(field, target, rows)).front();
    }
    auto accept = [&](const Point& p) {
      auto row = monomial_row(p, monos);
      if (dot(row, h, field).is_zero()) return false;
      rows.push_back(std::move(row));
      out.points.push_back(p);
      return true;
    };

    bool found = false;
    for (const auto& p : stream) {
      if (accept(p)) {
        ++out.structured_points;
        found = true;
        break;
      }
    }
    while (!found) {
      if (out.trials_used >= options.budget)
        throw BudgetExhausted("point search budget exhausted after " + std::to_string(out.trials_used) +
                                  " draws with " + std::to_string(out.points.size()) + " of " +
                                  std::to_string(target) + " points",
                              out.trials_used);
      ++out.trials_used;
      std::vector<Element> coords;
      for (std::size_t i = 0; i < nvars; ++i) {
        const std::uint64_t c = uniform_below(rng, grid);
        coords.push_back(field.is_finite() ? field.from_code(c) : field.from_int(static_cast<std::int64_t>(c)));
      }
      found = accept(Point(field, std::move(coords)));
    }
  }
  return out;
}

DualCertificate solve_certificate(const Field& field, std::size_t nvars, const std::vector<Point>& points, unsigned d) {
  const std::size_t N = monomial_count(nvars, d);
  if (points.size() != N)
    throw InvalidArgument("expected " + std::to_string(N) + " points, got " + std::to_string(points.size()));
  const Matrix a = build_vandermonde(field, nvars, points, d);
  const Matrix c = solve(a, Matrix::identity(field, N));
  DualCertificate cert{field, nvars, d, points, {}, {}};
  for (std::size_t i = 0; i < N; ++i) {
    const auto col = c.column(i);
    cert.polys.push_back(MultiPoly::from_coefficient_vector(field, nvars, d, col));
    cert.diagonal.push_back(field.one());
  }
  return cert;
}

CertificateVerdict verify_certificate(const DualCertificate& cert) {
  CertificateVerdict v;
  auto fail = [&](std::string msg) {
    v.valid = false;
    v.failure = std::move(msg);
    return v;
  };
  if (cert.points.size() != cert.polys.size())
    return fail("point count " + std::to_string(cert.points.size()) + " differs from polynomial count " +
                std::to_string(cert.polys.size()));
  if (cert.diagonal.size() != cert.polys.size()) return fail("diagonal length differs from polynomial count");

  for (std::size_t i = 0; i < cert.polys.size(); ++i) {
    const auto& f = cert.polys[i];
    v.poly = i;
    if (f.field() != cert.field || cert.diagonal[i].field() != cert.field) return fail("polynomial over a different field");
    if (f.nvars() != cert.nvars) return fail("polynomial has the wrong number of variables");
    if (f.degree().value_or(0) > cert.degree) return fail("polynomial degree exceeds d");
  }
  v.poly.reset();
  for (std::size_t j = 0; j < cert.points.size(); ++j) {
    v.point = j;
    if (cert.points[j].field() != cert.field) return fail("point over a different field");
    if (cert.points[j].dim() != cert.nvars) return fail("point has the wrong dimension");
    for (std::size_t k = 0; k < j; ++k) {
      if (cert.points[k] == cert.points[j]) {
        v.point = k;
        v.point_b = j;
        return fail("points are not pairwise distinct");
      }
    }
  }
  v.point.reset();

  for (std::size_t i = 0; i < cert.polys.size(); ++i) {
    for (std::size_t j = 0; j < cert.points.size(); ++j) {
      const Element value = evaluate(cert.polys[i], cert.points[j]);
      v.poly = i;
      v.point = j;
      if (i != j && !value.is_zero()) return fail("f_i(P_j) = " + value.to_string() + " != 0 off the diagonal");
      if (i == j && value.is_zero()) return fail("f_i(P_i) = 0 on the diagonal");
      if (i == j && value != cert.diagonal[i])
        return fail("f_i(P_i) = " + value.to_string() + " differs from the recorded " + cert.diagonal[i].to_string());
    }
  }
  v.poly.reset();
  v.point.reset();
  return v;
}

}  // namespace mingens
