#pragma once

// Upper bound on the number of generators of an ideal generated in degree
// <= d: the degree profile c_k = dim V_k, where V_k collects the degree-k
// parts of ideal members of degree <= k, and the telescoping construction that
// emits c_d generators of degree <= d.
//
// V_{<=k} is computed from the Macaulay span {m * f_j : deg <= D} at a working
// degree D >= d. For homogeneous inputs D = d is exact. Otherwise D escalates
// until the profile is unchanged for two consecutive steps or D reaches
// 2d + 2; `stabilized` records which happened.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "mingens/poly.hpp"

namespace mingens {

struct DegreeProfile {
  std::size_t nvars = 0;
  unsigned degree = 0;
  unsigned working_degree = 0;
  std::vector<std::size_t> c;  // c_0 .. c_d
  bool stabilized = false;
};

struct GeneratorReport {
  std::vector<MultiPoly> generators;
  DegreeProfile profile;
  std::uint64_t claimed_bound = 0;  // C(n+d-1, d)
};

// working_degree == std::nullopt selects the escalation strategy.
DegreeProfile degree_profile(const Field& field, std::size_t nvars, const std::vector<MultiPoly>& gens, unsigned d,
                             std::optional<unsigned> working_degree = std::nullopt);

GeneratorReport telescope_generators(const Field& field, std::size_t nvars, const std::vector<MultiPoly>& gens,
                                     unsigned d, std::optional<unsigned> working_degree = std::nullopt);

// Generators of (X1, ..., Xn)^d: every monomial of degree exactly d.
std::vector<MultiPoly> sharp_instance(const Field& field, std::size_t nvars, unsigned d);

// True iff every candidate is homogeneous of degree exactly d and the
// candidates span all C(n+d-1, d) degree-d forms.
bool verify_monomial_lower_bound(const Field& field, std::size_t nvars, unsigned d,
                                 const std::vector<MultiPoly>& candidate);

}  // namespace mingens
