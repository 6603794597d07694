#pragma once

// Sparse multivariate polynomials over a Field.
//
// Two monomial orders are used throughout:
//  - the term order (graded lex, X1 > X2 > ... > Xn), exposed as Monomial's
//    operator<=>; the leading term of a polynomial is its largest monomial;
//  - the position order, used for coefficient vectors, Vandermonde columns
//    and canonical serialization: ascending total degree, and within a degree
//    the term order reversed, i.e. 1, X1, X2, ..., Xn, X1^2, X1*X2, ..., Xn^d.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mingens/field.hpp"

namespace mingens {

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<unsigned> exponents) : exps_(std::move(exponents)) {}

  static Monomial one(std::size_t n) { return Monomial(std::vector<unsigned>(n, 0)); }
  static Monomial variable(std::size_t n, std::size_t i, unsigned power = 1);

  std::size_t nvars() const { return exps_.size(); }
  unsigned degree() const;
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<unsigned>& exponents() const { return exps_; }

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  // other / *this; requires divides(other).
  Monomial quotient_of(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  // Graded lex with X1 > X2 > ... > Xn.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) = default;

  // "1", "X1^2*X3", ...
  std::string to_string() const;

 private:
  std::vector<unsigned> exps_;
};

bool position_less(const Monomial& a, const Monomial& b);

// C(n, k), throwing DegreeOverflow when it does not fit in 64 bits.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);
// C(n+d, d): the dimension of polynomials of degree <= d in n variables.
std::size_t monomial_count(std::size_t n, unsigned d);
// All monomials of total degree <= d in position order.
std::vector<Monomial> monomials_up_to(std::size_t n, unsigned d);
// All monomials of total degree exactly d, X1^d first.
std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned d);

class Point {
 public:
  Point() = default;
  Point(Field field, std::vector<Element> coords);

  const Field& field() const { return field_; }
  std::size_t dim() const { return coords_.size(); }
  const Element& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Element>& coords() const { return coords_; }

  friend bool operator==(const Point& a, const Point& b) { return a.field_ == b.field_ && a.coords_ == b.coords_; }
  std::string to_string() const;

 private:
  Field field_;
  std::vector<Element> coords_;
};

// Coordinate-wise Frobenius a -> a^(p^r).
Point frobenius(const Point& p, unsigned r = 1);

class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Element>;

  MultiPoly() = default;
  MultiPoly(Field field, std::size_t nvars) : field_(field), n_(nvars) {}

  static MultiPoly constant(const Element& c, std::size_t nvars);
  static MultiPoly variable(const Field& field, std::size_t nvars, std::size_t i);
  static MultiPoly term(const Element& c, Monomial m);
  // Inverse of coefficient_vector.
  static MultiPoly from_coefficient_vector(const Field& field, std::size_t nvars, unsigned d,
                                           std::span<const Element> coeffs);

  const Field& field() const { return field_; }
  std::size_t nvars() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  // Terms in ascending term order; zero coefficients are never stored.
  const TermMap& terms() const { return terms_; }

  // std::nullopt stands for the degree of the zero polynomial (-infinity).
  std::optional<unsigned> degree() const;
  bool is_homogeneous() const;

  // Leading monomial / coefficient under the term order. Requires !is_zero().
  const Monomial& leading_monomial() const;
  const Element& leading_coefficient() const;
  Element coefficient(const Monomial& m) const;

  void add_term(const Element& c, const Monomial& m);

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly scaled(const Element& c) const;
  MultiPoly shifted(const Monomial& m) const;  // multiplication by a monomial
  MultiPoly pow(unsigned k) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  // Human-readable form accepted by parse_poly, leading term first.
  std::string render() const;

 private:
  void require_compatible(const MultiPoly& other) const;

  Field field_;
  std::size_t n_ = 0;
  TermMap terms_;
};

// phi_P(f), the evaluation homomorphism.
Element evaluate(const MultiPoly& f, const Point& p);

// Sum of the terms of total degree exactly k.
MultiPoly degree_part(const MultiPoly& f, unsigned k);

// Coefficients in position order, length C(n+d, d). Throws DegreeOverflow if
// deg f > d.
std::vector<Element> coefficient_vector(const MultiPoly& f, unsigned d);

// Applies a -> a^(p^r) to every coefficient. Extension fields only.
MultiPoly galois_apply(const MultiPoly& f, unsigned r);

// Grammar: sums/differences of products of powers of
//   integer | integer/integer | [c0,c1,...] | X1..Xn | ( expr )
// with a unary minus. X, Y, Z are accepted as aliases for X1, X2, X3.
MultiPoly parse_poly(std::string_view text, std::size_t nvars, const Field& field);

// Parses a scalar literal (integer, a/b, or [c0,...]) in `field`.
Element parse_scalar(std::string_view text, const Field& field);

}  // namespace mingens
