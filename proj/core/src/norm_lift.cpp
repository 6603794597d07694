#include "mingens/norm_lift.hpp"

#include "mingens/errors.hpp"
#include "mingens/rng.hpp"

namespace mingens {

ConjectureParams conjecture_params(std::uint64_t q, unsigned d, std::size_t n) {
  if (!is_prime(q)) throw InvalidArgument("q must be prime, got " + std::to_string(q));
  if (d < 1) throw InvalidArgument("d must be >= 1");
  if (n < 1) throw InvalidArgument("at least one variable required");
  ConjectureParams p{q, d, n, 0, 0, 0};
  // k = floor(log_q d) + 1 is the least k with q^k > d.
  std::uint64_t power = 1;
  while (power <= d) {
    power *= q;
    ++p.k;
  }
  p.d_prime = d / p.k;
  p.target_size = monomial_count(n, p.d_prime);
  return p;
}

namespace {

bool galois_condition(const DualCertificate& cert, unsigned k) {
  for (std::size_t i = 0; i < cert.polys.size(); ++i)
    for (unsigned r = 0; r < k; ++r)
      if (evaluate(cert.polys[i], frobenius(cert.points[i], r)).is_zero()) return false;
  return true;
}

}  // namespace

GaloisSearchResult galois_search(const ConjectureParams& params, std::uint64_t seed, std::uint64_t budget,
                                 std::uint64_t max_attempts) {
  GaloisSearchResult out;
  out.extension = Field::extension(params.q, params.k);
  out.stats.budget = budget;
  for (std::uint64_t a = 0; a < max_attempts; ++a) {
    const std::uint64_t s = derive_seed(seed, a);
    ++out.stats.attempts;
    out.stats.attempt_seeds.push_back(s);
    PointSearchOptions opt;
    opt.seed = s;
    opt.budget = budget - out.stats.trials_used;
    opt.grid_size = out.extension.order();
    opt.structured = false;
    PointSearchResult found;
    try {
      found = greedy_point_search(out.extension, params.n, params.d_prime, opt);
    } catch (const BudgetExhausted& e) {
      out.stats.trials_used += e.trials_used();
      out.stats.budget_exhausted = true;
      return out;
    }
    out.stats.trials_used += found.trials_used;
    DualCertificate cert;
    try {
      cert = solve_certificate(out.extension, params.n, found.points, params.d_prime);
    } catch (const SingularMatrix&) {
      ++out.stats.singular;
      continue;
    }
    if (!galois_condition(cert, params.k)) {
      ++out.stats.galois_rejections;
      continue;
    }
    out.success = true;
    out.stats.accepted_attempt = a;
    out.lifted = std::move(cert);
    return out;
  }
  return out;
}

MultiPoly embed_poly(const MultiPoly& f, const Field& ext) {
  MultiPoly out(ext, f.nvars());
  for (const auto& [m, c] : f.terms()) out.add_term(embed(c, ext), m);
  return out;
}

MultiPoly descend_by_norm(const MultiPoly& g, const Field& base) {
  const Field& ext = g.field();
  if (!ext.is_finite() || base.kind() != FieldKind::Prime || ext.characteristic() != base.characteristic())
    throw InvalidArgument("norm descent needs F_{p^k} over F_p");
  MultiPoly n = g;
  for (unsigned r = 1; r < ext.degree(); ++r) n = n * galois_apply(g, r);
  MultiPoly out(base, g.nvars());
  for (const auto& [m, c] : n.terms()) {
    if (frobenius(c) != c) throw Error("norm coefficient " + c.to_string() + " is not Frobenius-fixed");
    out.add_term(contract(c, base), m);
  }
  return out;
}

NormInstance build_conjecture_instance(std::uint64_t q, unsigned d, std::size_t n, std::uint64_t seed,
                                       std::uint64_t budget, std::uint64_t max_attempts) {
  const ConjectureParams params = conjecture_params(q, d, n);
  GaloisSearchResult found = galois_search(params, seed, budget, max_attempts);
  if (!found.success)
    throw BudgetExhausted("no attempt satisfied the conjugate condition (" + std::to_string(found.stats.attempts) +
                              " attempts, " + std::to_string(found.stats.galois_rejections) + " rejected)",
                          found.stats.trials_used);
  NormInstance inst;
  inst.params = params;
  inst.base = Field::prime(q);
  inst.extension = found.extension;
  inst.points = found.lifted->points;
  inst.lifted_g = found.lifted->polys;
  for (const auto& g : inst.lifted_g) inst.descended_f.push_back(descend_by_norm(g, inst.base));
  inst.galois_ok = true;
  inst.stats = std::move(found.stats);
  const NormVerdict v = verify_norm_instance(inst);
  if (!v.valid) throw Error("norm instance failed verification: " + v.failure);
  return inst;
}

NormVerdict verify_norm_instance(const NormInstance& inst) {
  NormVerdict v;
  auto fail = [&](std::string msg) {
    v.valid = false;
    v.failure = std::move(msg);
    return v;
  };
  const std::size_t m = inst.descended_f.size();
  if (inst.lifted_g.size() != m || inst.points.size() != m) return fail("list lengths differ");
  if (m != inst.params.target_size) return fail("instance size differs from the target");
  const unsigned k = inst.extension.degree();
  for (std::size_t i = 0; i < m; ++i) {
    v.poly = i;
    const auto& f = inst.descended_f[i];
    if (f.field() != inst.base) return fail("descended polynomial is not over the base field");
    if (f.degree().value_or(0) > inst.params.d) return fail("descended degree exceeds d");
    // Recompute the norm in the extension and compare coefficient by coefficient.
    MultiPoly norm = inst.lifted_g[i];
    for (unsigned r = 1; r < k; ++r) norm = norm * galois_apply(inst.lifted_g[i], r);
    for (const auto& [mono, c] : norm.terms())
      if (frobenius(c) != c) return fail("norm coefficient is not Frobenius-fixed");
    if (norm != embed_poly(f, inst.extension)) return fail("descended polynomial differs from the norm of g");
  }
  v.poly.reset();
  for (std::size_t i = 0; i < m; ++i) {
    const MultiPoly fe = embed_poly(inst.descended_f[i], inst.extension);
    for (std::size_t j = 0; j < m; ++j) {
      const bool zero = evaluate(fe, inst.points[j]).is_zero();
      v.poly = i;
      v.point = j;
      if (i != j && !zero) return fail("f_i(P_j) != 0 off the diagonal");
      if (i == j && zero) return fail("f_i(P_i) = 0");
    }
  }
  v.poly.reset();
  v.point.reset();
  return v;
}

}  // namespace mingens
