#pragma once

// Exact scalar domains: the rationals, prime fields F_p and extension fields
// F_{p^e} = F_p[t]/(m(t)). Contexts are interned, so a Field is a cheap
// handle and two handles compare equal iff they describe the same model.

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace mingens {

enum class FieldKind { Rational, Prime, Extension };

namespace detail {
struct FieldData;
}

class Element;

class Field {
 public:
  // The rationals.
  Field();

  static Field rationals();
  static Field prime(std::uint64_t p);
  // F_{p^e} modulo the lexicographically smallest monic irreducible of degree
  // e (coefficients compared from the constant term upward). e == 1 gives
  // the prime field.
  static Field extension(std::uint64_t p, unsigned e);
  // Explicit modulus, little-endian and monic. Irreducibility is verified.
  static Field with_modulus(std::uint64_t p, std::vector<std::uint64_t> modulus);
  // F_q for a prime power q.
  static Field galois(std::uint64_t q);

  FieldKind kind() const;
  bool is_finite() const { return kind() != FieldKind::Rational; }
  // 0 for the rationals.
  std::uint64_t characteristic() const;
  // Extension degree over the prime field; 1 for F_p, 0 for Q.
  unsigned degree() const;
  // Cardinality q = p^e. Throws InvalidArgument for the rationals.
  std::uint64_t order() const;
  // Little-endian monic modulus of length e+1; empty unless kind() == Extension.
  const std::vector<std::uint64_t>& modulus() const;
  // "q", "gf:7" or "gf:2^4".
  std::string spec() const;

  Element zero() const;
  Element one() const;
  Element from_int(std::int64_t v) const;
  Element from_integer(const mpz_class& v) const;
  Element from_rational(const mpq_class& v) const;
  // Finite fields: the element whose base-p digits are its polynomial-basis
  // coefficients (little-endian). Requires code < order().
  Element from_code(std::uint64_t code) const;
  // Finite fields: polynomial-basis coefficients in [0,p), length <= e.
  Element from_coeffs(std::span<const std::uint64_t> coeffs) const;

  // Finite fields only: all elements ordered by code.
  std::vector<Element> elements() const;
  // Finite fields only: generator of the multiplicative group with least code.
  Element primitive_element() const;

  const detail::FieldData* data() const { return data_; }

  friend bool operator==(const Field& a, const Field& b) { return a.data_ == b.data_; }

 private:
  explicit Field(const detail::FieldData* d) : data_(d) {}
  friend class Element;

  const detail::FieldData* data_;
};

class Element {
 public:
  // Detached element; only valid as an assignment target.
  Element() = default;

  Field field() const;
  bool attached() const { return ctx_ != nullptr; }

  bool is_zero() const;
  bool is_one() const;

  // Finite fields: base-p packed polynomial-basis coefficients.
  std::uint64_t code() const;
  // Rationals only.
  const mpq_class& rational() const;
  // Finite fields: coefficient vector of length e (length 1 for F_p).
  std::vector<std::uint64_t> coeffs() const;

  Element operator-() const;
  Element& operator+=(const Element& rhs);
  Element& operator-=(const Element& rhs);
  Element& operator*=(const Element& rhs);
  Element& operator/=(const Element& rhs);

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const Element& b) { return a *= b; }
  friend Element operator/(Element a, const Element& b) { return a /= b; }

  Element inverse() const;
  Element pow(std::uint64_t n) const;
  // Negative exponents invert first.
  Element pow_signed(std::int64_t n) const;

  // Total order: by code on finite fields, by value on the rationals.
  int compare(const Element& other) const;

  friend bool operator==(const Element& a, const Element& b);
  friend bool operator<(const Element& a, const Element& b) { return a.compare(b) < 0; }

  // "a/b" or "a" over Q, decimal over F_p, "[c0,c1,...]" over F_{p^e}.
  std::string to_string() const;

 private:
  friend class Field;
  Element(const detail::FieldData* ctx, std::uint64_t code) : ctx_(ctx), value_(code) {}
  Element(const detail::FieldData* ctx, mpq_class v) : ctx_(ctx), value_(std::move(v)) {}
  void require_same(const Element& other) const;

  const detail::FieldData* ctx_ = nullptr;
  std::variant<std::uint64_t, mpq_class> value_{std::uint64_t{0}};
};

// a -> a^(p^r). The identity on Q and on F_p.
Element frobenius(const Element& a, unsigned r = 1);

// Least n >= 1 with a^n == 1. Finite fields only, a != 0.
std::uint64_t element_order(const Element& a);

// Prime-field element of `ext`'s characteristic, mapped into `ext`.
Element embed(const Element& a, const Field& ext);
// Element of `ext` lying in its prime subfield, re-encoded over `base`.
// Throws InvalidArgument when `a` is not in the prime subfield.
Element contract(const Element& a, const Field& base);

bool is_prime(std::uint64_t n);
// Rabin-style irreducibility test for a monic little-endian polynomial over F_p.
bool is_irreducible_mod_p(std::span<const std::uint64_t> monic, std::uint64_t p);
// Prime factors of n in increasing order, without multiplicity.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

}  // namespace mingens
