#pragma once

// Explicit certificate families whose polynomials are products of linear
// forms, each form "peeling off" one layer of the point configuration.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mingens/certificate.hpp"

namespace mingens {

enum class ConstructionFamily { Char0Simplex, QAnalogLine, TwoVarTriangle };

std::string to_string(ConstructionFamily f);

struct ConstructionResult {
  ConstructionFamily family = ConstructionFamily::Char0Simplex;
  std::size_t n = 0;
  unsigned d = 0;
  std::optional<Element> zeta;
  std::optional<Element> x;
  std::optional<Element> y;
  // factors[i] multiplies out to certificate.polys[i]; empty means 1.
  std::vector<std::vector<MultiPoly>> factors;
  DualCertificate certificate;
};

// Points (d_1, ..., d_n) in N^n with sum d_i <= d, in position order, and
//   f_P = prod_i prod_{j < d_i} (X_i - j) * prod_{i = f+1}^{d} (X_1 + ... + X_n - i)
// with f = sum d_i. The diagonal is (-1)^(d-f) (d-f)! prod d_i!. Rejects fields
// of positive characteristic, where X_i - p = X_i and the points collide.
ConstructionResult char0_simplex(std::size_t n, unsigned d, const Field& field);

// (-1)^(d-f) (d-f)! prod d_i! as an exact rational.
mpq_class simplex_diagonal(const std::vector<unsigned>& point, unsigned d);

// n = 1 at the nodes a_i = (1 - z^i)/(1 - z), i = 0..d, with
// f_i = prod_{j != i} (X - a_j). Throws InvalidArgument for z = 1 and
// OrderTooSmall when two nodes coincide.
ConstructionResult q_analog_line(unsigned d, const Element& zeta);

// n = 2 at P_ij = ((x^i - y^i)/x^i, (x^j - y^j)/y^j), i + j <= d, with
//   f_ij = prod_{i' < i} (x^i' X - (x^i' - y^i'))
//        * prod_{j' < j} (y^j' Y - (x^j' - y^j'))
//        * prod_{k = i+j+1}^{d} (x^k X + y^k Y - (x^k - y^k)).
// Points are listed in position order of (i, j). Throws PowerCollision(m) when
// x^m = y^m for some 1 <= m <= d.
ConstructionResult two_var_triangle(unsigned d, const Element& x, const Element& y);

// The three families of lines through the triangle: X = (x^i - y^i)/x^i for
// fixed i, Y = (x^j - y^j)/y^j for fixed j, and x^k X + y^k Y = x^k - y^k for
// fixed k = i + j. Points must be ordered as two_var_triangle emits them.
bool triangle_relations_hold(const std::vector<Point>& points, unsigned d, const Element& x, const Element& y);

// Closed form of f_ij(P_ij).
Element triangle_diagonal(unsigned i, unsigned j, unsigned d, const Element& x, const Element& y);

}  // namespace mingens
