#pragma once

// Minimality witnesses for generating sets of degree <= d: points P_j and
// polynomials f_i with f_i(P_j) = 0 for i != j and f_i(P_i) != 0. Every f_j
// other than f_i lies in the maximal ideal of P_i while f_i does not, so no
// generator can be dropped.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mingens/matrix.hpp"
#include "mingens/poly.hpp"

namespace mingens {

struct DualCertificate {
  Field field;
  std::size_t nvars = 0;
  unsigned degree = 0;
  std::vector<Point> points;
  std::vector<MultiPoly> polys;
  std::vector<Element> diagonal;  // f_i(P_i)
};

// Indices of a maximal linearly independent subset, chosen greedily from the
// front. Each input is a linear combination of the selected ones, so the
// subset generates the same ideal.
std::vector<std::size_t> select_minimal_subset(const std::vector<MultiPoly>& gens, unsigned d);

// Row i holds the monomials of degree <= d evaluated at points[i], in position
// order 1, X1, ..., Xn, X1^2, X1*X2, ...
Matrix build_vandermonde(const Field& field, std::size_t nvars, const std::vector<Point>& points, unsigned d);

struct PointSearchOptions {
  std::uint64_t seed = 0;
  std::uint64_t budget = 10000;  // random draws
  // Random grid S^n with |S| = min(|K|, grid_size); defaults to d + 1.
  std::optional<std::uint64_t> grid_size;
  // Try the deterministic node stream before drawing at random.
  bool structured = true;
};

struct PointSearchResult {
  std::vector<Point> points;
  std::uint64_t trials_used = 0;
  std::size_t structured_points = 0;
};

// Deterministic candidate stream: (a_{e_1}, ..., a_{e_n}) for sum e_i <= d,
// in position order of the exponents, over d + 1 distinct nodes a_0..a_d.
// The nodes are 0..d over Q, the q-analogs (1 - z^i)/(1 - z) of a primitive
// z over finite fields with |K| > d + 1, and all elements by code when
// |K| = d + 1. The stream is unisolvent, so the greedy search never needs a
// random draw when it is enabled.
std::vector<Point> structured_stream(const Field& field, std::size_t nvars, unsigned d);

// Greedy rank extension: while fewer than C(n+d, d) points are chosen, take a
// nonzero h of degree <= d vanishing on them and add a point with h != 0.
// Throws FieldTooSmall when |K| <= d and BudgetExhausted when random draws run
// out.
PointSearchResult greedy_point_search(const Field& field, std::size_t nvars, unsigned d,
                                      const PointSearchOptions& options);

// Solves A c_{f_i} = e_i. Throws SingularMatrix when the points are not
// unisolvent.
DualCertificate solve_certificate(const Field& field, std::size_t nvars, const std::vector<Point>& points, unsigned d);

struct CertificateVerdict {
  bool valid = true;
  std::string failure;  // empty when valid
  // Zero-based witness; point_b is set only for duplicate points.
  std::optional<std::size_t> poly;
  std::optional<std::size_t> point;
  std::optional<std::size_t> point_b;
};

// Re-evaluates every f_i at every P_j; independent of how the certificate
// was produced.
CertificateVerdict verify_certificate(const DualCertificate& cert);

}  // namespace mingens
