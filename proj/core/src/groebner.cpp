#include "mingens/groebner.hpp"

#include <algorithm>
#include <set>

#include "mingens/errors.hpp"

namespace mingens {

namespace {

MultiPoly monic(const MultiPoly& f) { return f.scaled(f.leading_coefficient().inverse()); }

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g) {
  const Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  const MultiPoly a = f.shifted(f.leading_monomial().quotient_of(l)).scaled(f.leading_coefficient().inverse());
  const MultiPoly b = g.shifted(g.leading_monomial().quotient_of(l)).scaled(g.leading_coefficient().inverse());
  return a - b;
}

void check_inputs(const Field& field, std::size_t nvars, const std::vector<MultiPoly>& gens,
                  const OracleLimits& limits) {
  if (nvars > limits.max_vars) throw OracleCapExceeded("oracle refuses: too many variables");
  std::size_t terms = 0;
  for (const auto& g : gens) {
    if (g.field() != field) throw ContextMismatch("oracle: generator over a different field");
    if (g.nvars() != nvars) throw InvalidArgument("oracle: generator has the wrong number of variables");
    terms += g.term_count();
  }
  if (terms > limits.max_input_terms) throw OracleCapExceeded("oracle refuses: too many input terms");
}

}  // namespace

MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& basis) {
  MultiPoly p = f;
  MultiPoly rem(f.field(), f.nvars());
  while (!p.is_zero()) {
    const Monomial lm = p.leading_monomial();
    const Element lc = p.leading_coefficient();
    bool reduced = false;
    for (const auto& g : basis) {
      if (g.is_zero() || !g.leading_monomial().divides(lm)) continue;
      p -= g.shifted(g.leading_monomial().quotient_of(lm)).scaled(lc / g.leading_coefficient());
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.add_term(lc, lm);
      p.add_term(-lc, lm);
    }
  }
  return rem;
}

GroebnerBasis buchberger(const Field& field, std::size_t nvars, const std::vector<MultiPoly>& gens,
                         const OracleLimits& limits) {
  check_inputs(field, nvars, gens, limits);
  std::vector<MultiPoly> g;
  for (const auto& f : gens)
    if (!f.is_zero()) g.push_back(monic(f));

  using Pair = std::pair<std::size_t, std::size_t>;
  std::set<Pair> pending;
  for (std::size_t j = 0; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pending.insert({i, j});

  auto lcm_of = [&](const Pair& p) { return g[p.first].leading_monomial().lcm(g[p.second].leading_monomial()); };
  std::size_t processed = 0;
  while (!pending.empty()) {
    if (++processed > limits.max_pairs) throw OracleCapExceeded("oracle refuses: pair budget exceeded");
    // Normal selection strategy: smallest lcm first.
    auto best = pending.begin();
    Monomial best_lcm = lcm_of(*best);
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      Monomial l = lcm_of(*it);
      if (l < best_lcm) {
        best = it;
        best_lcm = std::move(l);
      }
    }
    const Pair pr = *best;
    pending.erase(best);
    const auto& [i, j] = pr;
    if (g[i].leading_monomial().coprime(g[j].leading_monomial())) continue;
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == i || k == j) continue;
      if (!g[k].leading_monomial().divides(best_lcm)) continue;
      const Pair ik{std::min(i, k), std::max(i, k)}, jk{std::min(j, k), std::max(j, k)};
      chain = !pending.contains(ik) && !pending.contains(jk);
    }
    if (chain) continue;
    MultiPoly r = normal_form(s_polynomial(g[i], g[j]), g);
    if (r.is_zero()) continue;
    g.push_back(monic(r));
    if (g.size() > limits.max_basis_size) throw OracleCapExceeded("oracle refuses: basis too large");
    for (std::size_t k = 0; k + 1 < g.size(); ++k) pending.insert({k, g.size() - 1});
  }

  // Minimalize, then inter-reduce.
  std::vector<MultiPoly> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t k = 0; k < g.size() && !redundant; ++k) {
      if (k == i) continue;
      const auto& lk = g[k].leading_monomial();
      const auto& li = g[i].leading_monomial();
      if (lk.divides(li) && (lk != li || k < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  std::vector<MultiPoly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<MultiPoly> others;
    for (std::size_t k = 0; k < minimal.size(); ++k)
      if (k != i) others.push_back(minimal[k]);
    const MultiPoly lead = MultiPoly::term(minimal[i].leading_coefficient(), minimal[i].leading_monomial());
    MultiPoly tail = normal_form(minimal[i] - lead, others);
    reduced.push_back(monic(lead + tail));
  }
  std::sort(reduced.begin(), reduced.end(),
            [](const MultiPoly& a, const MultiPoly& b) { return a.leading_monomial() < b.leading_monomial(); });
  return GroebnerBasis{field, nvars, std::move(reduced)};
}

bool membership(const MultiPoly& f, const GroebnerBasis& gb) {
  if (f.field() != gb.field) throw ContextMismatch("membership: polynomial over a different field");
  return normal_form(f, gb.basis).is_zero();
}

bool ideal_contains(const Field& field, std::size_t nvars, const std::vector<MultiPoly>& super,
                    const std::vector<MultiPoly>& sub, const OracleLimits& limits) {
  const GroebnerBasis gb = buchberger(field, nvars, super, limits);
  return std::all_of(sub.begin(), sub.end(), [&](const MultiPoly& f) { return membership(f, gb); });
}

bool ideal_equal(const Field& field, std::size_t nvars, const std::vector<MultiPoly>& a,
                 const std::vector<MultiPoly>& b, const OracleLimits& limits) {
  return ideal_contains(field, nvars, a, b, limits) && ideal_contains(field, nvars, b, a, limits);
}

}  // namespace mingens
