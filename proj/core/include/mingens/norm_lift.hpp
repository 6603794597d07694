#pragma once

// Probe of the conjectured lower bound over a finite base field F_q: build a
// dual system g_i, P_i of degree d' over F_{q^k}, require every g_i to be
// nonzero at every Frobenius conjugate of P_i, and descend each g_i to F_q by
// the Galois norm f_i = prod_r sigma^r(g_i). The conjugate condition is an
// unproven assumption, so searches report acceptance statistics either way.
//
// Only prime q is supported: Frobenius is a -> a^p throughout.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mingens/certificate.hpp"
#include "mingens/poly.hpp"

namespace mingens {

struct ConjectureParams {
  std::uint64_t q = 0;
  unsigned d = 0;
  std::size_t n = 0;
  unsigned k = 0;        // floor(log_q d) + 1
  unsigned d_prime = 0;  // floor(d / k)
  std::uint64_t target_size = 0;  // C(n + d', d')
};

ConjectureParams conjecture_params(std::uint64_t q, unsigned d, std::size_t n);

struct GaloisSearchStats {
  std::uint64_t budget = 0;
  std::uint64_t trials_used = 0;
  std::uint64_t attempts = 0;           // attempts started
  std::uint64_t galois_rejections = 0;  // full certificates failing the conjugate test
  std::uint64_t singular = 0;           // never expected; counted rather than hidden
  bool budget_exhausted = false;
  std::optional<std::uint64_t> accepted_attempt;
  std::vector<std::uint64_t> attempt_seeds;
};

struct GaloisSearchResult {
  bool success = false;
  Field extension;
  // Set when success: points over F_{q^k} and the solver's g_i.
  std::optional<DualCertificate> lifted;
  GaloisSearchStats stats;
};

// `budget` bounds the random point draws across all attempts; attempt a uses
// seed derive_seed(seed, a) and draws from the whole of F_{q^k}.
GaloisSearchResult galois_search(const ConjectureParams& params, std::uint64_t seed, std::uint64_t budget,
                                 std::uint64_t max_attempts = 1000);

// N(g) = prod_{r < k} sigma^r(g), re-encoded over the prime field `base`.
// Throws Error if a coefficient is not Frobenius-fixed.
MultiPoly descend_by_norm(const MultiPoly& g, const Field& base);

// Coefficients of f mapped from the prime field into `ext`.
MultiPoly embed_poly(const MultiPoly& f, const Field& ext);

struct NormInstance {
  ConjectureParams params;
  Field base;
  Field extension;
  std::vector<Point> points;  // over F_{q^k}
  std::vector<MultiPoly> lifted_g;
  std::vector<MultiPoly> descended_f;  // over F_q
  bool galois_ok = false;
  GaloisSearchStats stats;
};

// Throws BudgetExhausted when no attempt is accepted.
NormInstance build_conjecture_instance(std::uint64_t q, unsigned d, std::size_t n, std::uint64_t seed,
                                       std::uint64_t budget, std::uint64_t max_attempts = 1000);

struct NormVerdict {
  bool valid = true;
  std::string failure;
  std::optional<std::size_t> poly;
  std::optional<std::size_t> point;
};

// Independent re-check: each f_i equals the recomputed norm of g_i, has
// degree <= d, and f_i(P_j) = 0 in F_{q^k} exactly when i != j.
NormVerdict verify_norm_instance(const NormInstance& inst);

}  // namespace mingens
