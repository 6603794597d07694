#include "mingens/constructions.hpp"

#include "mingens/errors.hpp"

namespace mingens {

std::string to_string(ConstructionFamily f) {
  switch (f) {
    case ConstructionFamily::Char0Simplex:
      return "char0_simplex";
    case ConstructionFamily::QAnalogLine:
      return "q_analog_line";
    case ConstructionFamily::TwoVarTriangle:
      return "two_var_triangle";
  }
  return "unknown";
}

namespace {

// sum_i a_i X_i + c
MultiPoly linear(const Field&, const std::vector<Element>& a, const Element& c) {
  MultiPoly f = MultiPoly::constant(c, a.size());
  for (std::size_t i = 0; i < a.size(); ++i) f.add_term(a[i], Monomial::variable(a.size(), i));
  return f;
}

MultiPoly product(const Field& field, std::size_t n, const std::vector<MultiPoly>& factors) {
  MultiPoly f = MultiPoly::constant(field.one(), n);
  for (const auto& g : factors) f = f * g;
  return f;
}

void finish(ConstructionResult& r) {
  const Field& field = r.certificate.field;
  for (std::size_t i = 0; i < r.factors.size(); ++i) {
    r.certificate.polys.push_back(product(field, r.n, r.factors[i]));
    r.certificate.diagonal.push_back(evaluate(r.certificate.polys.back(), r.certificate.points[i]));
  }
  const CertificateVerdict v = verify_certificate(r.certificate);
  if (!v.valid) throw Error(to_string(r.family) + " produced an invalid certificate: " + v.failure);
}

}  // namespace

mpq_class simplex_diagonal(const std::vector<unsigned>& point, unsigned d) {
  unsigned f = 0;
  mpz_class v = 1;
  for (unsigned di : point) {
    f += di;
    mpz_class t;
    mpz_fac_ui(t.get_mpz_t(), di);
    v *= t;
  }
  if (f > d) throw InvalidArgument("point outside the simplex");
  mpz_class t;
  mpz_fac_ui(t.get_mpz_t(), d - f);
  v *= t;
  if ((d - f) % 2 == 1) v = -v;
  return mpq_class(v);
}

ConstructionResult char0_simplex(std::size_t n, unsigned d, const Field& field) {
  if (field.kind() != FieldKind::Rational)
    throw InvalidArgument("the lattice simplex needs characteristic 0; in characteristic p the points collide");
  if (n == 0) throw InvalidArgument("at least one variable required");
  ConstructionResult r;
  r.family = ConstructionFamily::Char0Simplex;
  r.n = n;
  r.d = d;
  r.certificate = DualCertificate{field, n, d, {}, {}, {}};
  const std::vector<Element> ones(n, field.one());
  for (const auto& m : monomials_up_to(n, d)) {
    std::vector<Element> coords;
    std::vector<MultiPoly> factors;
    for (std::size_t i = 0; i < n; ++i) {
      coords.push_back(field.from_int(m[i]));
      std::vector<Element> a(n, field.zero());
      a[i] = field.one();
      for (unsigned j = 0; j < m[i]; ++j) factors.push_back(linear(field, a, field.from_int(-static_cast<std::int64_t>(j))));
    }
    for (unsigned i = m.degree() + 1; i <= d; ++i)
      factors.push_back(linear(field, ones, field.from_int(-static_cast<std::int64_t>(i))));
    r.certificate.points.emplace_back(field, std::move(coords));
    r.factors.push_back(std::move(factors));
  }
  finish(r);
  const auto monos = monomials_up_to(n, d);
  for (std::size_t i = 0; i < monos.size(); ++i)
    if (r.certificate.diagonal[i].rational() != simplex_diagonal(monos[i].exponents(), d))
      throw Error("simplex diagonal disagrees with its closed form at " + r.certificate.points[i].to_string());
  return r;
}

ConstructionResult q_analog_line(unsigned d, const Element& zeta) {
  const Field field = zeta.field();
  if (zeta.is_one()) throw InvalidArgument("zeta = 1 gives a degenerate q-analog");
  ConstructionResult r;
  r.family = ConstructionFamily::QAnalogLine;
  r.n = 1;
  r.d = d;
  r.zeta = zeta;
  r.certificate = DualCertificate{field, 1, d, {}, {}, {}};

  std::vector<Element> alpha;
  const Element denom = (field.one() - zeta).inverse();
  Element power = field.one();
  for (unsigned i = 0; i <= d; ++i) {
    const Element a = (field.one() - power) * denom;
    for (unsigned j = 0; j < i; ++j)
      if (alpha[j] == a)
        throw OrderTooSmall("nodes " + std::to_string(j) + " and " + std::to_string(i) + " coincide; zeta has order <= d");
    alpha.push_back(a);
    power *= zeta;
  }
  for (unsigned i = 0; i <= d; ++i) {
    r.certificate.points.emplace_back(field, std::vector<Element>{alpha[i]});
    std::vector<MultiPoly> factors;
    for (unsigned j = 0; j <= d; ++j)
      if (j != i) factors.push_back(linear(field, {field.one()}, -alpha[j]));
    r.factors.push_back(std::move(factors));
  }
  finish(r);
  return r;
}

Element triangle_diagonal(unsigned i, unsigned j, unsigned d, const Element& x, const Element& y) {
  const Field field = x.field();
  Element v = field.one();
  auto p = [](const Element& e, long k) { return e.pow_signed(k); };
  for (unsigned a = 0; a < i; ++a) v *= p(y, a) - p(x, static_cast<long>(a) - i) * p(y, i);
  for (unsigned b = 0; b < j; ++b) v *= p(y, static_cast<long>(b) - j) * p(x, j) - p(x, b);
  for (unsigned k = i + j + 1; k <= d; ++k) v *= p(y, k - j) * p(x, j) - p(x, k - i) * p(y, i);
  return v;
}

ConstructionResult two_var_triangle(unsigned d, const Element& x, const Element& y) {
  const Field field = x.field();
  if (y.field() != field) throw ContextMismatch("x and y over different fields");
  if (x.is_zero() || y.is_zero()) throw InvalidArgument("x and y must be nonzero");
  for (unsigned m = 1; m <= d; ++m)
    if (x.pow(m) == y.pow(m)) throw PowerCollision(m);

  ConstructionResult r;
  r.family = ConstructionFamily::TwoVarTriangle;
  r.n = 2;
  r.d = d;
  r.x = x;
  r.y = y;
  r.certificate = DualCertificate{field, 2, d, {}, {}, {}};
  const auto monos = monomials_up_to(2, d);
  for (const auto& m : monos) {
    const unsigned i = m[0], j = m[1];
    const Element xi = x.pow(i), yi = y.pow(i), xj = x.pow(j), yj = y.pow(j);
    r.certificate.points.emplace_back(field, std::vector<Element>{(xi - yi) / xi, (xj - yj) / yj});
    std::vector<MultiPoly> factors;
    for (unsigned a = 0; a < i; ++a) factors.push_back(linear(field, {x.pow(a), field.zero()}, y.pow(a) - x.pow(a)));
    for (unsigned b = 0; b < j; ++b) factors.push_back(linear(field, {field.zero(), y.pow(b)}, y.pow(b) - x.pow(b)));
    for (unsigned k = i + j + 1; k <= d; ++k) factors.push_back(linear(field, {x.pow(k), y.pow(k)}, y.pow(k) - x.pow(k)));
    r.factors.push_back(std::move(factors));
  }
  if (!triangle_relations_hold(r.certificate.points, d, x, y)) throw Error("triangle points violate their line relations");
  finish(r);
  for (std::size_t t = 0; t < monos.size(); ++t)
    if (r.certificate.diagonal[t] != triangle_diagonal(monos[t][0], monos[t][1], d, x, y))
      throw Error("triangle diagonal disagrees with its closed form at " + r.certificate.points[t].to_string());
  return r;
}

bool triangle_relations_hold(const std::vector<Point>& points, unsigned d, const Element& x, const Element& y) {
  const auto monos = monomials_up_to(2, d);
  if (points.size() != monos.size()) return false;
  for (std::size_t t = 0; t < monos.size(); ++t) {
    const unsigned i = monos[t][0], j = monos[t][1], k = i + j;
    const Element& X = points[t][0];
    const Element& Y = points[t][1];
    if (X * x.pow(i) != x.pow(i) - y.pow(i)) return false;
    if (Y * y.pow(j) != x.pow(j) - y.pow(j)) return false;
    if (x.pow(k) * X + y.pow(k) * Y != x.pow(k) - y.pow(k)) return false;
  }
  return true;
}

}  // namespace mingens
