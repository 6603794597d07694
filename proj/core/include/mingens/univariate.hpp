#pragma once

// One variable over F_q: irreducible enumeration, Gauss's counting formula,
// and the extremal minimal generating sets f_i = prod_{j != i} h_j built from
// the lowest-degree irreducibles h_1, h_2, ...

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mingens/field.hpp"
#include "mingens/poly.hpp"

namespace mingens {

// Dense univariate polynomial, coefficients little-endian with no trailing
// zeros. The zero polynomial has no coefficients.
class UPoly {
 public:
  UPoly() = default;
  UPoly(Field field, std::vector<Element> coeffs);

  static UPoly constant(const Element& c);
  static UPoly x(const Field& field);

  const Field& field() const { return field_; }
  const std::vector<Element>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_monic() const { return !is_zero() && coeffs_.back().is_one(); }
  Element operator[](std::size_t i) const;

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.field_ == b.field_ && a.coeffs_ == b.coeffs_; }

  UPoly monic() const;
  Element evaluate(const Element& x) const;
  MultiPoly to_multipoly() const;

  // "X^3 + X + 1"
  std::string to_string() const;

 private:
  void trim();
  Field field_;
  std::vector<Element> coeffs_;
};

// Quotient and remainder; throws InvalidArgument on division by zero.
std::pair<UPoly, UPoly> divrem(const UPoly& a, const UPoly& b);
// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);

// p_q(k) = (1/k) sum_{e | k} moebius(e) q^(k/e). Throws InvalidArgument unless
// q is a prime power and k >= 1, DegreeOverflow if the value exceeds 64 bits.
std::uint64_t count_irreducibles(std::uint64_t q, unsigned k);
// P_q(n) = sum_{k <= n} p_q(k).
std::uint64_t cumulative_count(std::uint64_t q, unsigned n);

struct IrreducibleTable {
  std::uint64_t q = 0;
  std::vector<UPoly> entries;
  // counts_by_degree[k] = entries of degree k; index 0 unused.
  std::vector<std::uint64_t> counts_by_degree;
};

// First `need` monic irreducibles over F_q by degree, then lex order within a
// degree comparing the X^(k-1) coefficient first and the constant last.
// Every completed degree is checked against count_irreducibles.
IrreducibleTable enumerate_irreducibles(std::uint64_t q, std::size_t need);

struct ExtremalReport {
  std::uint64_t q = 0;
  unsigned d = 0;
  std::size_t m = 0;
  std::vector<UPoly> irreducibles;  // h_1..h_m
  std::vector<unsigned> degrees_used;
  std::vector<UPoly> generators;  // f_i = prod_{j != i} h_j
  unsigned max_degree = 0;        // deg f_1
  bool degenerate = false;        // m == 1: the single generator 1
};

// m is the largest integer with sum_{i=2}^m deg h_i <= d.
ExtremalReport extremal_set(std::uint64_t q, unsigned d);

struct UnivariateVerdict {
  bool minimal = false;
  bool unit_ideal = false;   // gcd of all generators is 1
  UPoly gcd_all;
  // First index whose removal still leaves gcd 1.
  std::optional<std::size_t> redundant;
};

// A minimal generating set of the unit ideal: gcd of all is 1 while every
// leave-one-out gcd is not.
UnivariateVerdict verify_univariate_minimality(const std::vector<UPoly>& gens);

}  // namespace mingens
