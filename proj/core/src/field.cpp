#include "mingens/field.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "mingens/errors.hpp"

namespace mingens {

namespace detail {

// Multiplication in extension fields goes through log/antilog tables below
// this size and through schoolbook reduction above it.
constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 20;

struct FieldData {
  FieldKind kind = FieldKind::Rational;
  std::uint64_t p = 0;
  unsigned e = 0;
  std::uint64_t q = 0;
  std::vector<std::uint64_t> modulus;
  std::vector<std::uint64_t> pow_p;  // p^i, i < e
  std::vector<std::uint32_t> exp_table;
  std::vector<std::uint32_t> log_table;
  std::uint64_t primitive = 0;  // 0 when not precomputed
};

}  // namespace detail

namespace {

using detail::FieldData;
using u64 = std::uint64_t;
__extension__ using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 a, u64 n, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (n) {
    if (n & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    n >>= 1;
  }
  return r;
}

u64 addmod(u64 a, u64 b, u64 m) {
  u64 s = a + b;
  if (s >= m || s < a) s -= m;
  return s;
}

u64 submod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + (m - b); }

// --- polynomials over F_p as little-endian coefficient vectors -------------

using FpPoly = std::vector<u64>;

void trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

FpPoly poly_mod(FpPoly a, const FpPoly& f, u64 p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const u64 lead_inv = powmod(f.back(), p - 2, p);
  while (a.size() >= f.size()) {
    const u64 c = mulmod(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i <= df; ++i) a[shift + i] = submod(a[shift + i], mulmod(c, f[i], p), p);
    trim(a);
  }
  return a;
}

FpPoly poly_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& f, u64 p) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = addmod(r[i + j], mulmod(a[i], b[j], p), p);
  }
  return poly_mod(std::move(r), f, p);
}

FpPoly poly_powmod(FpPoly a, u64 n, const FpPoly& f, u64 p) {
  FpPoly r{1};
  a = poly_mod(std::move(a), f, p);
  while (n) {
    if (n & 1) r = poly_mulmod(r, a, f, p);
    n >>= 1;
    if (n) a = poly_mulmod(a, a, f, p);
  }
  return r;
}

FpPoly poly_gcd(FpPoly a, FpPoly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    FpPoly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

FpPoly poly_sub(FpPoly a, const FpPoly& b, u64 p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = submod(a[i], b[i], p);
  trim(a);
  return a;
}

// --- extension arithmetic on packed codes -----------------------------------

std::vector<u64> decode(const FieldData& f, u64 code) {
  std::vector<u64> c(f.e, 0);
  for (unsigned i = 0; i < f.e; ++i) {
    c[i] = code % f.p;
    code /= f.p;
  }
  return c;
}

u64 encode(const FieldData& f, std::span<const u64> c) {
  u64 code = 0;
  for (std::size_t i = c.size(); i-- > 0;) code = code * f.p + c[i];
  return code;
}

u64 ext_add(const FieldData& f, u64 a, u64 b) {
  if (f.p == 2) return a ^ b;
  u64 r = 0;
  for (unsigned i = 0; i < f.e; ++i) {
    const u64 da = a % f.p, db = b % f.p;
    a /= f.p;
    b /= f.p;
    r += addmod(da, db, f.p) * f.pow_p[i];
  }
  return r;
}

u64 ext_neg(const FieldData& f, u64 a) {
  if (f.p == 2) return a;
  u64 r = 0;
  for (unsigned i = 0; i < f.e; ++i) {
    const u64 da = a % f.p;
    a /= f.p;
    r += ((f.p - da) % f.p) * f.pow_p[i];
  }
  return r;
}

u64 ext_mul_slow(const FieldData& f, u64 a, u64 b) {
  if (a == 0 || b == 0) return 0;
  FpPoly r = poly_mulmod(decode(f, a), decode(f, b), f.modulus, f.p);
  r.resize(f.e, 0);
  return encode(f, r);
}

u64 ext_mul(const FieldData& f, u64 a, u64 b) {
  if (a == 0 || b == 0) return 0;
  if (f.exp_table.empty()) return ext_mul_slow(f, a, b);
  const u64 s = static_cast<u64>(f.log_table[a]) + f.log_table[b];
  return f.exp_table[s % (f.q - 1)];
}

u64 ext_pow(const FieldData& f, u64 a, u64 n) {
  if (n == 0) return 1;
  if (a == 0) return 0;
  if (!f.exp_table.empty()) {
    const u64 s = mulmod(f.log_table[a], n % (f.q - 1), f.q - 1);
    return f.exp_table[s];
  }
  u64 r = 1;
  while (n) {
    if (n & 1) r = ext_mul_slow(f, r, a);
    n >>= 1;
    if (n) a = ext_mul_slow(f, a, a);
  }
  return r;
}

u64 finite_mul(const FieldData& f, u64 a, u64 b) {
  return f.kind == FieldKind::Prime ? mulmod(a, b, f.p) : ext_mul(f, a, b);
}

u64 finite_pow(const FieldData& f, u64 a, u64 n) {
  return f.kind == FieldKind::Prime ? powmod(a, n, f.p) : ext_pow(f, a, n);
}

u64 find_primitive(const FieldData& f) {
  const u64 group = f.q - 1;
  if (group == 1) return 1;
  const auto factors = prime_factors(group);
  for (u64 g = 1; g < f.q; ++g) {
    bool generator = true;
    for (u64 l : factors) {
      if (finite_pow(f, g, group / l) == 1) {
        generator = false;
        break;
      }
    }
    if (generator) return g;
  }
  throw Error("no primitive element found");
}

void build_tables(FieldData& f) {
  if (f.q > detail::kTableLimit) return;
  // find_primitive runs before the tables exist, so it uses slow multiplication.
  f.primitive = find_primitive(f);
  if (f.kind != FieldKind::Extension) return;
  f.exp_table.resize(f.q - 1);
  f.log_table.assign(f.q, 0);
  u64 x = 1;
  for (u64 i = 0; i + 1 < f.q; ++i) {
    f.exp_table[i] = static_cast<std::uint32_t>(x);
    f.log_table[x] = static_cast<std::uint32_t>(i);
    x = ext_mul_slow(f, x, f.primitive);
  }
}

std::vector<u64> checked_powers(u64 p, unsigned e, u64& q) {
  std::vector<u64> pw(e);
  u64 acc = 1;
  for (unsigned i = 0; i < e; ++i) {
    pw[i] = acc;
    if (acc > (std::uint64_t{1} << 62) / p) throw InvalidArgument("field order p^e too large");
    acc *= p;
  }
  q = acc;
  return pw;
}

struct Registry {
  std::mutex mutex;
  std::vector<std::unique_ptr<FieldData>> fields;
  std::map<std::pair<u64, unsigned>, const FieldData*> auto_extensions;

  static Registry& instance() {
    static Registry r;
    return r;
  }

  const FieldData* rationals() {
    std::lock_guard lock(mutex);
    for (const auto& f : fields)
      if (f->kind == FieldKind::Rational) return f.get();
    auto f = std::make_unique<FieldData>();
    fields.push_back(std::move(f));
    return fields.back().get();
  }

  // Caller holds the lock.
  const FieldData* intern(FieldKind kind, u64 p, std::vector<u64> modulus) {
    for (const auto& f : fields)
      if (f->kind == kind && f->p == p && f->modulus == modulus) return f.get();
    auto f = std::make_unique<FieldData>();
    f->kind = kind;
    f->p = p;
    if (kind == FieldKind::Prime) {
      f->e = 1;
      f->q = p;
      f->pow_p = {1};
    } else {
      f->e = static_cast<unsigned>(modulus.size() - 1);
      f->pow_p = checked_powers(p, f->e, f->q);
      f->modulus = std::move(modulus);
    }
    build_tables(*f);
    fields.push_back(std::move(f));
    return fields.back().get();
  }
};

const FieldData& rational_data() {
  static const FieldData* d = Registry::instance().rationals();
  return *d;
}

void require_finite(const FieldData* f, const char* what) {
  if (f == nullptr) throw InvalidArgument(std::string(what) + ": detached element");
  if (f->kind == FieldKind::Rational) throw InvalidArgument(std::string(what) + ": finite field required");
}

}  // namespace

// --- number theory helpers --------------------------------------------------

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % small == 0) return n == small;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<u64> out;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_irreducible_mod_p(std::span<const std::uint64_t> monic, std::uint64_t p) {
  FpPoly f(monic.begin(), monic.end());
  trim(f);
  if (f.empty() || f.back() != 1) throw InvalidArgument("modulus must be monic");
  const std::size_t e = f.size() - 1;
  if (e == 0) return false;
  if (e == 1) return true;
  const FpPoly x{0, 1};
  // x^(p^i) mod f for i = 1..e
  std::vector<FpPoly> frob(e + 1);
  frob[0] = x;
  for (std::size_t i = 1; i <= e; ++i) frob[i] = poly_powmod(frob[i - 1], p, f, p);
  if (poly_sub(frob[e], poly_mod(x, f, p), p) != FpPoly{}) return false;
  for (u64 r : prime_factors(e)) {
    FpPoly g = poly_gcd(f, poly_sub(frob[e / r], x, p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

// --- Field --------------------------------------------------------------------

Field::Field() : data_(&rational_data()) {}

Field Field::rationals() { return Field(); }

Field Field::prime(std::uint64_t p) {
  if (!is_prime(p)) throw InvalidArgument("not a prime: " + std::to_string(p));
  auto& reg = Registry::instance();
  std::lock_guard lock(reg.mutex);
  return Field(reg.intern(FieldKind::Prime, p, {}));
}

Field Field::extension(std::uint64_t p, unsigned e) {
  if (!is_prime(p)) throw InvalidArgument("not a prime: " + std::to_string(p));
  if (e == 0) throw InvalidArgument("extension degree must be >= 1");
  if (e == 1) return prime(p);
  u64 q = 0;
  (void)checked_powers(p, e, q);
  auto& reg = Registry::instance();
  {
    std::lock_guard lock(reg.mutex);
    auto it = reg.auto_extensions.find({p, e});
    if (it != reg.auto_extensions.end()) return Field(it->second);
  }
  // Enumerate c_0 as the most significant digit: constant-term-first lex order.
  std::vector<u64> m(e + 1, 0);
  m[e] = 1;
  const u64 count = q;  // p^e candidates for the lower coefficients
  for (u64 idx = 0; idx < count; ++idx) {
    u64 rest = idx;
    for (unsigned i = e; i-- > 0;) {
      m[i] = rest % p;
      rest /= p;
    }
    if (m[0] == 0) continue;
    if (is_irreducible_mod_p(m, p)) {
      std::lock_guard lock(reg.mutex);
      const FieldData* d = reg.intern(FieldKind::Extension, p, m);
      reg.auto_extensions[{p, e}] = d;
      return Field(d);
    }
  }
  throw Error("no irreducible polynomial found");
}

Field Field::with_modulus(std::uint64_t p, std::vector<std::uint64_t> modulus) {
  if (!is_prime(p)) throw InvalidArgument("not a prime: " + std::to_string(p));
  for (u64 c : modulus)
    if (c >= p) throw InvalidArgument("modulus coefficient out of range");
  if (modulus.size() < 2 || modulus.back() != 1) throw InvalidArgument("modulus must be monic of degree >= 1");
  if (!is_irreducible_mod_p(modulus, p)) throw InvalidArgument("modulus is not irreducible");
  if (modulus.size() == 2) return prime(p);
  auto& reg = Registry::instance();
  std::lock_guard lock(reg.mutex);
  return Field(reg.intern(FieldKind::Extension, p, std::move(modulus)));
}

Field Field::galois(std::uint64_t q) {
  if (q < 2) throw InvalidArgument("field order must be >= 2");
  const auto f = prime_factors(q);
  if (f.size() != 1) throw InvalidArgument("not a prime power: " + std::to_string(q));
  unsigned e = 0;
  for (u64 r = q; r > 1; r /= f[0]) ++e;
  return extension(f[0], e);
}

FieldKind Field::kind() const { return data_->kind; }
std::uint64_t Field::characteristic() const { return data_->p; }
unsigned Field::degree() const { return data_->e; }

std::uint64_t Field::order() const {
  if (data_->kind == FieldKind::Rational) throw InvalidArgument("the rationals have no finite order");
  return data_->q;
}

const std::vector<std::uint64_t>& Field::modulus() const { return data_->modulus; }

std::string Field::spec() const {
  switch (data_->kind) {
    case FieldKind::Rational:
      return "q";
    case FieldKind::Prime:
      return "gf:" + std::to_string(data_->p);
    case FieldKind::Extension:
      return "gf:" + std::to_string(data_->p) + "^" + std::to_string(data_->e);
  }
  return {};
}

Element Field::zero() const { return from_int(0); }
Element Field::one() const { return from_int(1); }

Element Field::from_int(std::int64_t v) const {
  if (data_->kind == FieldKind::Rational) return Element(data_, mpq_class(mpz_class(static_cast<long>(v))));
  const u64 p = data_->p;
  u64 r;
  if (v >= 0) {
    r = static_cast<u64>(v) % p;
  } else {
    // -(v+1) avoids overflow at INT64_MIN
    r = (p - 1) - (static_cast<u64>(-(v + 1)) % p);
  }
  return Element(data_, r);
}

Element Field::from_integer(const mpz_class& v) const {
  if (data_->kind == FieldKind::Rational) return Element(data_, mpq_class(v));
  return Element(data_, static_cast<u64>(mpz_fdiv_ui(v.get_mpz_t(), data_->p)));
}

Element Field::from_rational(const mpq_class& v) const {
  mpq_class c = v;
  c.canonicalize();
  if (data_->kind == FieldKind::Rational) return Element(data_, std::move(c));
  Element den = from_integer(c.get_den());
  if (den.is_zero()) throw InvalidArgument("denominator vanishes in characteristic " + std::to_string(data_->p));
  return from_integer(c.get_num()) / den;
}

Element Field::from_code(std::uint64_t code) const {
  require_finite(data_, "from_code");
  if (code >= data_->q) throw InvalidArgument("element code out of range");
  return Element(data_, code);
}

Element Field::from_coeffs(std::span<const std::uint64_t> coeffs) const {
  require_finite(data_, "from_coeffs");
  if (coeffs.size() > data_->e) throw InvalidArgument("too many coefficients for this field");
  for (u64 c : coeffs)
    if (c >= data_->p) throw InvalidArgument("coefficient not in [0,p)");
  return Element(data_, encode(*data_, coeffs));
}

std::vector<Element> Field::elements() const {
  require_finite(data_, "elements");
  std::vector<Element> out;
  out.reserve(data_->q);
  for (u64 c = 0; c < data_->q; ++c) out.push_back(Element(data_, c));
  return out;
}

Element Field::primitive_element() const {
  require_finite(data_, "primitive_element");
  if (data_->primitive != 0) return Element(data_, data_->primitive);
  return Element(data_, find_primitive(*data_));
}

// --- Element ------------------------------------------------------------------

Field Element::field() const {
  if (!ctx_) throw InvalidArgument("detached element");
  return Field(ctx_);
}

void Element::require_same(const Element& other) const {
  if (ctx_ != other.ctx_ || ctx_ == nullptr) throw ContextMismatch("elements belong to different fields");
}

bool Element::is_zero() const {
  if (ctx_ && ctx_->kind == FieldKind::Rational) return sgn(std::get<mpq_class>(value_)) == 0;
  return std::get<u64>(value_) == 0;
}

bool Element::is_one() const {
  if (ctx_ && ctx_->kind == FieldKind::Rational) return std::get<mpq_class>(value_) == 1;
  return std::get<u64>(value_) == 1;
}

std::uint64_t Element::code() const {
  require_finite(ctx_, "code");
  return std::get<u64>(value_);
}

const mpq_class& Element::rational() const {
  if (!ctx_ || ctx_->kind != FieldKind::Rational) throw InvalidArgument("not a rational element");
  return std::get<mpq_class>(value_);
}

std::vector<std::uint64_t> Element::coeffs() const {
  require_finite(ctx_, "coeffs");
  return decode(*ctx_, std::get<u64>(value_));
}

Element Element::operator-() const {
  if (!ctx_) throw InvalidArgument("detached element");
  switch (ctx_->kind) {
    case FieldKind::Rational:
      return Element(ctx_, mpq_class(-std::get<mpq_class>(value_)));
    case FieldKind::Prime: {
      const u64 a = std::get<u64>(value_);
      return Element(ctx_, a == 0 ? 0 : ctx_->p - a);
    }
    case FieldKind::Extension:
      return Element(ctx_, ext_neg(*ctx_, std::get<u64>(value_)));
  }
  return {};
}

Element& Element::operator+=(const Element& rhs) {
  require_same(rhs);
  switch (ctx_->kind) {
    case FieldKind::Rational:
      std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
      break;
    case FieldKind::Prime:
      value_ = addmod(std::get<u64>(value_), std::get<u64>(rhs.value_), ctx_->p);
      break;
    case FieldKind::Extension:
      value_ = ext_add(*ctx_, std::get<u64>(value_), std::get<u64>(rhs.value_));
      break;
  }
  return *this;
}

Element& Element::operator-=(const Element& rhs) {
  require_same(rhs);
  switch (ctx_->kind) {
    case FieldKind::Rational:
      std::get<mpq_class>(value_) -= std::get<mpq_class>(rhs.value_);
      break;
    case FieldKind::Prime:
      value_ = submod(std::get<u64>(value_), std::get<u64>(rhs.value_), ctx_->p);
      break;
    case FieldKind::Extension:
      value_ = ext_add(*ctx_, std::get<u64>(value_), ext_neg(*ctx_, std::get<u64>(rhs.value_)));
      break;
  }
  return *this;
}

Element& Element::operator*=(const Element& rhs) {
  require_same(rhs);
  if (ctx_->kind == FieldKind::Rational) {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
  } else {
    value_ = finite_mul(*ctx_, std::get<u64>(value_), std::get<u64>(rhs.value_));
  }
  return *this;
}

Element& Element::operator/=(const Element& rhs) {
  require_same(rhs);
  return *this *= rhs.inverse();
}

Element Element::inverse() const {
  if (!ctx_) throw InvalidArgument("detached element");
  if (is_zero()) throw InvalidArgument("division by zero");
  if (ctx_->kind == FieldKind::Rational) return Element(ctx_, mpq_class(1 / std::get<mpq_class>(value_)));
  return Element(ctx_, finite_pow(*ctx_, std::get<u64>(value_), ctx_->q - 2));
}

Element Element::pow(std::uint64_t n) const {
  if (!ctx_) throw InvalidArgument("detached element");
  if (ctx_->kind == FieldKind::Rational) {
    const mpq_class& a = std::get<mpq_class>(value_);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), a.get_num_mpz_t(), n);
    mpz_pow_ui(den.get_mpz_t(), a.get_den_mpz_t(), n);
    return Element(ctx_, mpq_class(num, den));
  }
  return Element(ctx_, finite_pow(*ctx_, std::get<u64>(value_), n));
}

Element Element::pow_signed(std::int64_t n) const {
  if (n >= 0) return pow(static_cast<u64>(n));
  return inverse().pow(static_cast<u64>(-(n + 1)) + 1);
}

int Element::compare(const Element& other) const {
  require_same(other);
  if (ctx_->kind == FieldKind::Rational) return cmp(std::get<mpq_class>(value_), std::get<mpq_class>(other.value_));
  const u64 a = std::get<u64>(value_), b = std::get<u64>(other.value_);
  return a < b ? -1 : (a > b ? 1 : 0);
}

bool operator==(const Element& a, const Element& b) {
  if (a.ctx_ != b.ctx_) return false;
  if (a.ctx_ == nullptr) return true;
  if (a.ctx_->kind == FieldKind::Rational) return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
  return std::get<u64>(a.value_) == std::get<u64>(b.value_);
}

std::string Element::to_string() const {
  if (!ctx_) return "<detached>";
  switch (ctx_->kind) {
    case FieldKind::Rational:
      return std::get<mpq_class>(value_).get_str();
    case FieldKind::Prime:
      return std::to_string(std::get<u64>(value_));
    case FieldKind::Extension: {
      std::ostringstream os;
      os << '[';
      const auto c = coeffs();
      for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
      os << ']';
      return os.str();
    }
  }
  return {};
}

// --- free functions -------------------------------------------------------------

Element frobenius(const Element& a, unsigned r) {
  const Field f = a.field();
  if (f.kind() != FieldKind::Extension) return a;
  r %= f.degree();
  Element out = a;
  for (unsigned i = 0; i < r; ++i) out = out.pow(f.characteristic());
  return out;
}

std::uint64_t element_order(const Element& a) {
  const Field f = a.field();
  if (!f.is_finite()) throw InvalidArgument("element_order: infinite field");
  if (a.is_zero()) throw InvalidArgument("element_order: zero has no multiplicative order");
  u64 order = f.order() - 1;
  for (u64 l : prime_factors(order)) {
    while (order % l == 0 && a.pow(order / l).is_one()) order /= l;
  }
  return order;
}

Element embed(const Element& a, const Field& ext) {
  const Field base = a.field();
  if (base == ext) return a;
  if (base.kind() != FieldKind::Prime || !ext.is_finite() || base.characteristic() != ext.characteristic())
    throw ContextMismatch("embed: element is not in the prime subfield of the target");
  return ext.from_code(a.code());
}

Element contract(const Element& a, const Field& base) {
  const Field ext = a.field();
  if (base == ext) return a;
  if (base.kind() != FieldKind::Prime || !ext.is_finite() || base.characteristic() != ext.characteristic())
    throw ContextMismatch("contract: incompatible fields");
  if (a.code() >= base.characteristic()) throw InvalidArgument("contract: element is not in the prime subfield");
  return base.from_code(a.code());
}

}  // namespace mingens
