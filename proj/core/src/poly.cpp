#include "mingens/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "mingens/errors.hpp"

namespace mingens {

// --- Monomial -------------------------------------------------------------------

Monomial Monomial::variable(std::size_t n, std::size_t i, unsigned power) {
  std::vector<unsigned> e(n, 0);
  e.at(i) = power;
  return Monomial(std::move(e));
}

unsigned Monomial::degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0u); }

Monomial Monomial::operator*(const Monomial& other) const {
  std::vector<unsigned> e(exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exps_[i];
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  std::vector<unsigned> e(other.exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= exps_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& other) const {
  std::vector<unsigned> e(exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(e[i], other.exps_[i]);
  return Monomial(std::move(e));
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] && other.exps_[i]) return false;
  return true;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  const unsigned da = a.degree(), db = b.degree();
  if (da != db) return da <=> db;
  return a.exps_ <=> b.exps_;
}

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'X' + std::to_string(i + 1);
    if (exps_[i] > 1) out += '^' + std::to_string(exps_[i]);
  }
  return out.empty() ? "1" : out;
}

bool position_less(const Monomial& a, const Monomial& b) {
  const unsigned da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a.exponents() > b.exponents();
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  __extension__ unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::uint64_t>::max()) throw DegreeOverflow("binomial coefficient overflow");
  }
  return static_cast<std::uint64_t>(r);
}

std::size_t monomial_count(std::size_t n, unsigned d) { return static_cast<std::size_t>(binomial(n + d, d)); }

namespace {

void fill_degree(std::size_t n, unsigned remaining, std::vector<unsigned>& cur, std::size_t i,
                 std::vector<Monomial>& out) {
  if (i + 1 == n) {
    cur[i] = remaining;
    out.emplace_back(cur);
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    cur[i] = e;
    fill_degree(n, remaining - e, cur, i + 1, out);
  }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned d) {
  std::vector<Monomial> out;
  if (n == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  std::vector<unsigned> cur(n, 0);
  fill_degree(n, d, cur, 0, out);
  return out;
}

std::vector<Monomial> monomials_up_to(std::size_t n, unsigned d) {
  std::vector<Monomial> out;
  out.reserve(monomial_count(n, d));
  for (unsigned k = 0; k <= d; ++k) {
    auto part = monomials_of_degree(n, k);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

// --- Point ------------------------------------------------------------------------

Point::Point(Field field, std::vector<Element> coords) : field_(field), coords_(std::move(coords)) {
  for (const auto& c : coords_)
    if (c.field() != field_) throw ContextMismatch("point coordinate in a different field");
}

std::string Point::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) out += (i ? "," : "") + coords_[i].to_string();
  return out + ")";
}

Point frobenius(const Point& p, unsigned r) {
  std::vector<Element> c;
  c.reserve(p.dim());
  for (const auto& x : p.coords()) c.push_back(frobenius(x, r));
  return Point(p.field(), std::move(c));
}

// --- MultiPoly ----------------------------------------------------------------------

MultiPoly MultiPoly::constant(const Element& c, std::size_t nvars) {
  MultiPoly f(c.field(), nvars);
  f.add_term(c, Monomial::one(nvars));
  return f;
}

MultiPoly MultiPoly::variable(const Field& field, std::size_t nvars, std::size_t i) {
  return term(field.one(), Monomial::variable(nvars, i));
}

MultiPoly MultiPoly::term(const Element& c, Monomial m) {
  MultiPoly f(c.field(), m.nvars());
  f.add_term(c, m);
  return f;
}

MultiPoly MultiPoly::from_coefficient_vector(const Field& field, std::size_t nvars, unsigned d,
                                             std::span<const Element> coeffs) {
  const auto monos = monomials_up_to(nvars, d);
  if (coeffs.size() != monos.size()) throw InvalidArgument("coefficient vector has the wrong length");
  MultiPoly f(field, nvars);
  for (std::size_t i = 0; i < monos.size(); ++i) f.add_term(coeffs[i], monos[i]);
  return f;
}

std::optional<unsigned> MultiPoly::degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first.degree();
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const unsigned d = terms_.begin()->first.degree();
  return terms_.rbegin()->first.degree() == d;
}

const Monomial& MultiPoly::leading_monomial() const {
  if (terms_.empty()) throw InvalidArgument("zero polynomial has no leading term");
  return terms_.rbegin()->first;
}

const Element& MultiPoly::leading_coefficient() const {
  if (terms_.empty()) throw InvalidArgument("zero polynomial has no leading term");
  return terms_.rbegin()->second;
}

Element MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? field_.zero() : it->second;
}

void MultiPoly::add_term(const Element& c, const Monomial& m) {
  if (c.field() != field_) throw ContextMismatch("coefficient in a different field");
  if (m.nvars() != n_) throw InvalidArgument("monomial has the wrong number of variables");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MultiPoly::require_compatible(const MultiPoly& other) const {
  if (field_ != other.field_) throw ContextMismatch("polynomials over different fields");
  if (n_ != other.n_) throw InvalidArgument("polynomials in different numbers of variables");
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(field_, n_);
  for (const auto& [m, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, -c);
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  require_compatible(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(c, m);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  require_compatible(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(-c, m);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.require_compatible(b);
  MultiPoly out(a.field_, a.n_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ca * cb, ma * mb);
  return out;
}

MultiPoly MultiPoly::scaled(const Element& c) const {
  MultiPoly out(field_, n_);
  if (c.is_zero()) return out;
  for (const auto& [m, a] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, a * c);
  return out;
}

MultiPoly MultiPoly::shifted(const Monomial& s) const {
  MultiPoly out(field_, n_);
  for (const auto& [m, a] : terms_) out.terms_.emplace_hint(out.terms_.end(), m * s, a);
  return out;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly out = constant(field_.one(), n_);
  for (unsigned i = 0; i < k; ++i) out = out * *this;
  return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  return a.field_ == b.field_ && a.n_ == b.n_ && a.terms_ == b.terms_;
}

std::string MultiPoly::render() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    const bool unit_monomial = m.degree() == 0;
    std::string coef;
    bool negative = false;
    if (field_.kind() == FieldKind::Rational) {
      mpq_class v = c.rational();
      if (v < 0) {
        negative = true;
        v = -v;
      }
      coef = v.get_str();
    } else {
      coef = c.to_string();
    }
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (unit_monomial) {
      os << coef;
    } else {
      if (coef != "1") os << coef << '*';
      os << m.to_string();
    }
  }
  return os.str();
}

// --- operations ----------------------------------------------------------------------

Element evaluate(const MultiPoly& f, const Point& p) {
  if (f.field() != p.field()) throw ContextMismatch("evaluate: point in a different field");
  if (f.nvars() != p.dim()) throw InvalidArgument("evaluate: dimension mismatch");
  const std::size_t n = f.nvars();
  const unsigned deg = f.degree().value_or(0);
  // powers[i][k] = p_i^k
  std::vector<std::vector<Element>> powers(n);
  for (std::size_t i = 0; i < n; ++i) {
    powers[i].reserve(deg + 1);
    powers[i].push_back(f.field().one());
    for (unsigned k = 1; k <= deg; ++k) powers[i].push_back(powers[i].back() * p[i]);
  }
  Element acc = f.field().zero();
  for (const auto& [m, c] : f.terms()) {
    Element t = c;
    for (std::size_t i = 0; i < n; ++i)
      if (m[i]) t *= powers[i][m[i]];
    acc += t;
  }
  return acc;
}

MultiPoly degree_part(const MultiPoly& f, unsigned k) {
  MultiPoly out(f.field(), f.nvars());
  for (const auto& [m, c] : f.terms())
    if (m.degree() == k) out.add_term(c, m);
  return out;
}

std::vector<Element> coefficient_vector(const MultiPoly& f, unsigned d) {
  if (f.degree().value_or(0) > d) throw DegreeOverflow("coefficient_vector: degree exceeds bound");
  const auto monos = monomials_up_to(f.nvars(), d);
  std::vector<Element> out;
  out.reserve(monos.size());
  for (const auto& m : monos) out.push_back(f.coefficient(m));
  return out;
}

MultiPoly galois_apply(const MultiPoly& f, unsigned r) {
  if (f.field().kind() != FieldKind::Extension) throw InvalidArgument("galois_apply: extension field required");
  MultiPoly out(f.field(), f.nvars());
  for (const auto& [m, c] : f.terms()) out.add_term(frobenius(c, r), m);
  return out;
}

// --- parsing ---------------------------------------------------------------------------

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::size_t nvars, const Field& field) : s_(text), n_(nvars), field_(field) {}

  MultiPoly parse() {
    MultiPoly f = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly expr() {
    MultiPoly f = product();
    for (;;) {
      if (accept('+')) {
        f += product();
      } else if (accept('-')) {
        f -= product();
      } else {
        return f;
      }
    }
  }

  MultiPoly product() {
    MultiPoly f = unary();
    while (accept('*')) f = f * unary();
    return f;
  }

  MultiPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  MultiPoly power() {
    MultiPoly base = primary();
    if (accept('^')) {
      skip_ws();
      const std::size_t start = pos_;
      const std::string digits = read_digits();
      if (digits.empty()) fail("expected exponent");
      if (digits.size() > 6) {
        pos_ = start;
        fail("exponent too large");
      }
      return base.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  std::string read_digits() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  MultiPoly primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly f = expr();
      if (!accept(')')) fail("expected ')'");
      return f;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return MultiPoly::constant(number(), n_);
    if (c == '[') return MultiPoly::constant(vector_literal(), n_);
    if (c == 'X' || c == 'Y' || c == 'Z' || c == 'x' || c == 'y' || c == 'z') return variable();
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  Element number() {
    const std::size_t start = pos_;
    const std::string num = read_digits();
    const std::size_t after_num = pos_;
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      skip_ws();
      const std::size_t den_pos = pos_;
      const std::string den = read_digits();
      if (den.empty()) fail("expected denominator");
      mpz_class d(den);
      if (d == 0) {
        pos_ = den_pos;
        fail("zero denominator");
      }
      try {
        return field_.from_rational(mpq_class(mpz_class(num), d));
      } catch (const InvalidArgument& e) {
        pos_ = start;
        fail(std::string("coefficient not in field: ") + e.what());
      }
    }
    pos_ = after_num;
    return field_.from_integer(mpz_class(num));
  }

  Element vector_literal() {
    const std::size_t start = pos_;
    ++pos_;  // '['
    if (!field_.is_finite()) {
      pos_ = start;
      fail("coefficient not in field: vector literal over the rationals");
    }
    std::vector<std::uint64_t> coeffs;
    for (;;) {
      skip_ws();
      const std::string d = read_digits();
      if (d.empty()) fail("expected coefficient");
      if (d.size() > 19) fail("coefficient not in field");
      coeffs.push_back(std::stoull(d));
      if (accept(']')) break;
      if (!accept(',')) fail("expected ',' or ']'");
    }
    try {
      return field_.from_coeffs(coeffs);
    } catch (const InvalidArgument& e) {
      pos_ = start;
      fail(std::string("coefficient not in field: ") + e.what());
    }
  }

  MultiPoly variable() {
    const std::size_t start = pos_;
    const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(s_[pos_++])));
    std::size_t index = 0;
    const std::string digits = read_digits();
    if (!digits.empty()) {
      if (c != 'X' || digits.size() > 6) {
        pos_ = start;
        fail("unknown variable");
      }
      index = std::stoul(digits);
      if (index == 0) {
        pos_ = start;
        fail("unknown variable X0");
      }
    } else {
      index = c == 'X' ? 1 : (c == 'Y' ? 2 : 3);
    }
    if (index > n_) {
      pos_ = start;
      fail("unknown variable (only " + std::to_string(n_) + " variables)");
    }
    return MultiPoly::variable(field_, n_, index - 1);
  }

  std::string_view s_;
  std::size_t n_;
  Field field_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text, std::size_t nvars, const Field& field) {
  return Parser(text, nvars, field).parse();
}

Element parse_scalar(std::string_view text, const Field& field) {
  MultiPoly f = parse_poly(text, 0, field);
  return f.coefficient(Monomial::one(0));
}

}  // namespace mingens
