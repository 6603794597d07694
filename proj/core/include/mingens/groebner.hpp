#pragma once

// Naive Buchberger under graded lex. Ground truth for small ideal-equality
// and membership checks only; hard size caps keep it out of hot paths.

#include <cstddef>
#include <vector>

#include "mingens/poly.hpp"

namespace mingens {

struct OracleLimits {
  std::size_t max_vars = 3;
  std::size_t max_input_terms = 64;
  std::size_t max_basis_size = 256;
  std::size_t max_pairs = 20000;
};

struct GroebnerBasis {
  Field field;
  std::size_t nvars = 0;
  // Reduced and monic, ordered by ascending leading monomial.
  std::vector<MultiPoly> basis;
};

GroebnerBasis buchberger(const Field& field, std::size_t nvars, const std::vector<MultiPoly>& gens,
                         const OracleLimits& limits = {});

// Fully reduced remainder of f modulo the basis.
MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& basis);

bool membership(const MultiPoly& f, const GroebnerBasis& gb);

bool ideal_equal(const Field& field, std::size_t nvars, const std::vector<MultiPoly>& a,
                 const std::vector<MultiPoly>& b, const OracleLimits& limits = {});

// Every member of `sub` lies in the ideal generated by `super`.
bool ideal_contains(const Field& field, std::size_t nvars, const std::vector<MultiPoly>& super,
                    const std::vector<MultiPoly>& sub, const OracleLimits& limits = {});

}  // namespace mingens
