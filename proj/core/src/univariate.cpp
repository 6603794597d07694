#include "mingens/univariate.hpp"

#include <gmpxx.h>

#include "mingens/errors.hpp"

namespace mingens {

UPoly::UPoly(Field field, std::vector<Element> coeffs) : field_(field), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_)
    if (c.field() != field_) throw ContextMismatch("coefficient over a different field");
  trim();
}

UPoly UPoly::constant(const Element& c) { return UPoly(c.field(), {c}); }

UPoly UPoly::x(const Field& field) { return UPoly(field, {field.zero(), field.one()}); }

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Element UPoly::operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : field_.zero(); }

UPoly operator+(const UPoly& a, const UPoly& b) {
  if (a.field_ != b.field_) throw ContextMismatch("polynomials over different fields");
  std::vector<Element> c(std::max(a.coeffs_.size(), b.coeffs_.size()), a.field_.zero());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] + b[i];
  return UPoly(a.field_, std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  if (a.field_ != b.field_) throw ContextMismatch("polynomials over different fields");
  std::vector<Element> c(std::max(a.coeffs_.size(), b.coeffs_.size()), a.field_.zero());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] - b[i];
  return UPoly(a.field_, std::move(c));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.field_ != b.field_) throw ContextMismatch("polynomials over different fields");
  if (a.is_zero() || b.is_zero()) return UPoly(a.field_, {});
  std::vector<Element> c(a.coeffs_.size() + b.coeffs_.size() - 1, a.field_.zero());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UPoly(a.field_, std::move(c));
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  const Element inv = coeffs_.back().inverse();
  std::vector<Element> c;
  for (const auto& e : coeffs_) c.push_back(e * inv);
  return UPoly(field_, std::move(c));
}

Element UPoly::evaluate(const Element& x) const {
  Element v = field_.zero();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * x + *it;
  return v;
}

MultiPoly UPoly::to_multipoly() const {
  MultiPoly f(field_, 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) f.add_term(coeffs_[i], Monomial({static_cast<unsigned>(i)}));
  return f;
}

std::string UPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Element& c = coeffs_[k];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    const std::string mono = k == 0 ? "" : (k == 1 ? "X" : "X^" + std::to_string(k));
    if (mono.empty())
      out += c.to_string();
    else if (c.is_one())
      out += mono;
    else
      out += c.to_string() + "*" + mono;
  }
  return out;
}

std::pair<UPoly, UPoly> divrem(const UPoly& a, const UPoly& b) {
  if (a.field() != b.field()) throw ContextMismatch("polynomials over different fields");
  if (b.is_zero()) throw InvalidArgument("division by the zero polynomial");
  const Field& field = a.field();
  std::vector<Element> r = a.coeffs();
  const auto& bc = b.coeffs();
  const Element lead_inv = bc.back().inverse();
  if (r.size() < bc.size()) return {UPoly(field, {}), a};
  std::vector<Element> q(r.size() - bc.size() + 1, field.zero());
  for (std::size_t k = q.size(); k-- > 0;) {
    const Element c = r[k + bc.size() - 1] * lead_inv;
    q[k] = c;
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) r[k + j] -= c * bc[j];
  }
  r.resize(bc.size() - 1);
  return {UPoly(field, std::move(q)), UPoly(field, std::move(r))};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = divrem(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

namespace {

int moebius(std::uint64_t n) {
  int sign = 1;
  for (std::uint64_t p : prime_factors(n)) {
    if ((n / p) % p == 0) return 0;
    sign = -sign;
  }
  return sign;
}

void check_prime_power(std::uint64_t q) {
  if (q < 2 || prime_factors(q).size() != 1) throw InvalidArgument("not a prime power: " + std::to_string(q));
}

std::uint64_t to_u64(const mpz_class& v) {
  if (v < 0 || mpz_sizeinbase(v.get_mpz_t(), 2) > 64) throw DegreeOverflow("count exceeds 64 bits");
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, v.get_mpz_t());
  return out;
}

mpz_class count_big(std::uint64_t q, unsigned k) {
  mpz_class sum = 0;
  for (unsigned e = 1; e <= k; ++e) {
    if (k % e != 0) continue;
    const int mu = moebius(e);
    if (mu == 0) continue;
    mpz_class t;
    mpz_ui_pow_ui(t.get_mpz_t(), q, k / e);
    sum += mu * t;
  }
  return sum / k;
}

class IrreducibleStream {
 public:
  explicit IrreducibleStream(std::uint64_t q) : q_(q), field_(Field::galois(q)) {}

  UPoly next() {
    for (;;) {
      if (next_code_ == limit_) {
        finish_degree();
        ++degree_;
        next_code_ = 0;
        limit_ = 1;
        for (unsigned i = 0; i < degree_; ++i) {
          if (limit_ > UINT64_MAX / q_) throw DegreeOverflow("irreducible enumeration exceeds 64-bit codes");
          limit_ *= q_;
        }
      }
      UPoly f = candidate(next_code_++);
      if (irreducible(f)) {
        found_.push_back(f);
        if (counts_.size() <= degree_) counts_.resize(degree_ + 1, 0);
        ++counts_[degree_];
        return f;
      }
    }
  }

  const std::vector<std::uint64_t>& counts() const { return counts_; }
  const Field& field() const { return field_; }

 private:
  // Digit i of `code` (base q) is the X^i coefficient; the X^(k-1)
  // coefficient is the most significant, so codes run in lex order.
  UPoly candidate(std::uint64_t code) const {
    std::vector<Element> c;
    for (unsigned i = 0; i < degree_; ++i) {
      c.push_back(field_.from_code(code % q_));
      code /= q_;
    }
    c.push_back(field_.one());
    return UPoly(field_, std::move(c));
  }

  bool irreducible(const UPoly& f) const {
    for (const auto& h : found_) {
      if (2 * h.degree() > f.degree()) break;
      if (divrem(f, h).second.is_zero()) return false;
    }
    return true;
  }

  void finish_degree() const {
    if (degree_ == 0) return;
    const std::uint64_t seen = degree_ < counts_.size() ? counts_[degree_] : 0;
    if (seen != count_irreducibles(q_, degree_))
      throw Error("irreducible sieve disagrees with the counting formula in degree " + std::to_string(degree_));
  }

  std::uint64_t q_;
  Field field_;
  unsigned degree_ = 0;
  std::uint64_t next_code_ = 0;
  std::uint64_t limit_ = 0;
  std::vector<UPoly> found_;
  std::vector<std::uint64_t> counts_{0};
};

}  // namespace

std::uint64_t count_irreducibles(std::uint64_t q, unsigned k) {
  check_prime_power(q);
  if (k == 0) throw InvalidArgument("degree must be >= 1");
  return to_u64(count_big(q, k));
}

std::uint64_t cumulative_count(std::uint64_t q, unsigned n) {
  check_prime_power(q);
  mpz_class sum = 0;
  for (unsigned k = 1; k <= n; ++k) sum += count_big(q, k);
  return to_u64(sum);
}

IrreducibleTable enumerate_irreducibles(std::uint64_t q, std::size_t need) {
  check_prime_power(q);
  IrreducibleStream stream(q);
  IrreducibleTable table;
  table.q = q;
  for (std::size_t i = 0; i < need; ++i) table.entries.push_back(stream.next());
  table.counts_by_degree = stream.counts();
  return table;
}

ExtremalReport extremal_set(std::uint64_t q, unsigned d) {
  check_prime_power(q);
  if (d < 1) throw InvalidArgument("degree bound must be >= 1");
  IrreducibleStream stream(q);
  ExtremalReport r;
  r.q = q;
  r.d = d;
  r.irreducibles.push_back(stream.next());
  unsigned used = 0;
  for (;;) {
    UPoly h = stream.next();
    if (static_cast<long>(used) + h.degree() > static_cast<long>(d)) break;
    used += static_cast<unsigned>(h.degree());
    r.irreducibles.push_back(std::move(h));
  }
  r.m = r.irreducibles.size();
  r.max_degree = used;
  r.degenerate = r.m == 1;
  const Field& field = stream.field();
  for (const auto& h : r.irreducibles) r.degrees_used.push_back(static_cast<unsigned>(h.degree()));
  for (std::size_t i = 0; i < r.m; ++i) {
    UPoly f = UPoly::constant(field.one());
    for (std::size_t j = 0; j < r.m; ++j)
      if (j != i) f = f * r.irreducibles[j];
    r.generators.push_back(std::move(f));
  }
  return r;
}

UnivariateVerdict verify_univariate_minimality(const std::vector<UPoly>& gens) {
  if (gens.empty()) throw InvalidArgument("no generators");
  const Field field = gens.front().field();
  UnivariateVerdict v;
  v.gcd_all = UPoly(field, {});
  for (const auto& g : gens) v.gcd_all = gcd(v.gcd_all, g);
  v.unit_ideal = v.gcd_all.is_one();
  if (!v.unit_ideal) return v;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    UPoly g(field, {});
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (j != i) g = gcd(g, gens[j]);
    if (g.is_one()) {
      v.redundant = i;
      return v;
    }
  }
  v.minimal = true;
  return v;
}

}  // namespace mingens
