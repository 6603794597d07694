#include "mingens/generator_count.hpp"

#include <algorithm>
#include <map>

#include "mingens/errors.hpp"
#include "mingens/matrix.hpp"

namespace mingens {

namespace {

struct Telescope {
  std::vector<std::size_t> c;
  std::vector<MultiPoly> generators;
};

void check_gens(const Field& field, std::size_t nvars, const std::vector<MultiPoly>& gens, unsigned d) {
  if (nvars == 0) throw InvalidArgument("at least one variable required");
  for (const auto& g : gens) {
    if (g.field() != field) throw ContextMismatch("generator over a different field");
    if (g.nvars() != nvars) throw InvalidArgument("generator has the wrong number of variables");
    if (g.degree().value_or(0) > d) throw DegreeOverflow("generator degree exceeds the bound d");
  }
}

// Reduced echelon basis of the Macaulay span at working degree D, with columns
// in descending term order so each row's pivot is its leading monomial.
std::vector<MultiPoly> macaulay_echelon(const Field& field, std::size_t nvars, const std::vector<MultiPoly>& gens,
                                        unsigned D) {
  std::vector<Monomial> columns = monomials_up_to(nvars, D);
  std::sort(columns.begin(), columns.end(), [](const Monomial& a, const Monomial& b) { return b < a; });
  std::map<Monomial, std::size_t> index;
  for (std::size_t i = 0; i < columns.size(); ++i) index.emplace(columns[i], i);

  RowSpace space(field, columns.size());
  std::vector<Element> row(columns.size(), field.zero());
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    const unsigned dg = *g.degree();
    for (const auto& m : monomials_up_to(nvars, D - dg)) {
      std::fill(row.begin(), row.end(), field.zero());
      for (const auto& [t, coef] : g.terms()) row[index.at(t * m)] = coef;
      space.insert(row);
    }
  }
  std::vector<MultiPoly> out;
  for (const auto& r : space.reduced_basis()) {
    MultiPoly f(field, nvars);
    for (std::size_t j = 0; j < r.size(); ++j) f.add_term(r[j], columns[j]);
    out.push_back(std::move(f));
  }
  return out;
}

// The inductive step: V_k is spanned by X1 * V_{k-1} together with the top
// parts of echelon rows of leading degree k; rows that enlarge the span are
// the new generators.
Telescope telescope(const Field& field, std::size_t nvars, const std::vector<MultiPoly>& echelon, unsigned d) {
  Telescope out;
  std::vector<std::vector<Element>> prev_basis;
  std::vector<Monomial> prev_monos;
  for (unsigned k = 0; k <= d; ++k) {
    const auto monos = monomials_of_degree(nvars, k);
    std::map<Monomial, std::size_t> index;
    for (std::size_t i = 0; i < monos.size(); ++i) index.emplace(monos[i], i);
    RowSpace space(field, monos.size());

    const Monomial x1 = Monomial::variable(nvars, 0);
    for (const auto& v : prev_basis) {
      std::vector<Element> shifted(monos.size(), field.zero());
      for (std::size_t i = 0; i < v.size(); ++i) shifted[index.at(prev_monos[i] * x1)] = v[i];
      space.insert(shifted);
    }
    for (const auto& r : echelon) {
      if (r.leading_monomial().degree() != k) continue;
      std::vector<Element> top(monos.size(), field.zero());
      for (const auto& [m, coef] : r.terms())
        if (m.degree() == k) top[index.at(m)] = coef;
      if (space.insert(top)) out.generators.push_back(r);
    }
    out.c.push_back(space.rank());
    prev_basis = space.reduced_basis();
    prev_monos = monos;
  }
  return out;
}

struct Computed {
  DegreeProfile profile;
  std::vector<MultiPoly> generators;
};

Computed compute(const Field& field, std::size_t nvars, const std::vector<MultiPoly>& gens, unsigned d,
                 std::optional<unsigned> working_degree) {
  check_gens(field, nvars, gens, d);
  const bool homogeneous = std::all_of(gens.begin(), gens.end(), [](const MultiPoly& g) { return g.is_homogeneous(); });

  auto at = [&](unsigned D) { return telescope(field, nvars, macaulay_echelon(field, nvars, gens, D), d); };

  Computed out;
  out.profile.nvars = nvars;
  out.profile.degree = d;
  if (working_degree) {
    if (*working_degree < d) throw InvalidArgument("working degree must be >= d");
    Telescope t = at(*working_degree);
    out.profile.working_degree = *working_degree;
    out.profile.c = std::move(t.c);
    out.profile.stabilized = homogeneous;
    out.generators = std::move(t.generators);
    return out;
  }

  unsigned D = d;
  Telescope t = at(D);
  bool stabilized = homogeneous;
  unsigned unchanged = 0;
  const unsigned cap = 2 * d + 2;
  while (!stabilized && D < cap) {
    Telescope next = at(D + 1);
    ++D;
    unchanged = next.c == t.c ? unchanged + 1 : 0;
    t = std::move(next);
    if (unchanged >= 2) stabilized = true;
  }
  out.profile.working_degree = D;
  out.profile.c = std::move(t.c);
  out.profile.stabilized = stabilized;
  out.generators = std::move(t.generators);
  return out;
}

}  // namespace

DegreeProfile degree_profile(const Field& field, std::size_t nvars, const std::vector<MultiPoly>& gens, unsigned d,
                             std::optional<unsigned> working_degree) {
  return compute(field, nvars, gens, d, working_degree).profile;
}

GeneratorReport telescope_generators(const Field& field, std::size_t nvars, const std::vector<MultiPoly>& gens,
                                     unsigned d, std::optional<unsigned> working_degree) {
  Computed c = compute(field, nvars, gens, d, working_degree);
  GeneratorReport report;
  report.generators = std::move(c.generators);
  report.profile = std::move(c.profile);
  report.claimed_bound = binomial(nvars + d - 1, d);
  return report;
}

std::vector<MultiPoly> sharp_instance(const Field& field, std::size_t nvars, unsigned d) {
  if (nvars == 0) throw InvalidArgument("at least one variable required");
  std::vector<MultiPoly> out;
  for (auto& m : monomials_of_degree(nvars, d)) out.push_back(MultiPoly::term(field.one(), std::move(m)));
  return out;
}

bool verify_monomial_lower_bound(const Field& field, std::size_t nvars, unsigned d,
                                 const std::vector<MultiPoly>& candidate) {
  const auto monos = monomials_of_degree(nvars, d);
  std::map<Monomial, std::size_t> index;
  for (std::size_t i = 0; i < monos.size(); ++i) index.emplace(monos[i], i);
  RowSpace space(field, monos.size());
  for (const auto& f : candidate) {
    if (f.field() != field || f.nvars() != nvars || f.is_zero()) return false;
    std::vector<Element> row(monos.size(), field.zero());
    for (const auto& [m, c] : f.terms()) {
      if (m.degree() != d) return false;
      row[index.at(m)] = c;
    }
    space.insert(row);
  }
  return space.rank() == monos.size();
}

}  // namespace mingens
