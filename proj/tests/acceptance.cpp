// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdlib>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "json_io.hpp"
#include "mingens/constructions.hpp"
#include "mingens/errors.hpp"
#include "mingens/generator_count.hpp"
#include "mingens/groebner.hpp"
#include "mingens/norm_lift.hpp"
#include "mingens/univariate.hpp"
#include "oracles.hpp"
#include "random_instances.hpp"

using namespace mingens;
using nlohmann::json;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

struct CliRun {
  int code;
  std::string out, err;
};

CliRun cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& text) {
  char name[] = "/tmp/mingens_acceptance_XXXXXX";
  const int fd = mkstemp(name);
  if (fd < 0) throw std::runtime_error("mkstemp failed");
  FILE* f = fdopen(fd, "w");
  std::fputs(text.c_str(), f);
  std::fclose(f);
  return name;
}

mpq_class factorial(unsigned k) {
  mpq_class r = 1;
  for (unsigned i = 2; i <= k; ++i) r *= i;
  return r;
}

// 1. sharp instances hit C(n+d-1, d) exactly, under a second each.
Outcome sharpness_of_the_generator_bound() {
  Outcome o;
  const std::vector<std::array<unsigned, 3>> cases{{2, 2, 3}, {2, 3, 4}, {3, 2, 6}, {3, 3, 10}};
  std::ostringstream summary;
  for (const auto& [n, d, expected] : cases) {
    const auto start = std::chrono::steady_clock::now();
    const auto r = cli({"mu-bound", "--field", "q", "-n", std::to_string(n), "-d", std::to_string(d), "--sharp"});
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.code != 0) {
      o.fail("exit " + std::to_string(r.code) + ": " + r.err);
      continue;
    }
    const json doc = json::parse(r.out);
    const auto count = doc["count"].get<unsigned>();
    if (count != expected) o.fail("n=" + std::to_string(n) + " d=" + std::to_string(d) + " gave " + std::to_string(count));
    if (!doc["lower_bound_verified"].get<bool>()) o.fail("lower bound not verified");
    if (secs >= 1.0) o.fail("took " + std::to_string(secs) + " s");
    summary << "(" << n << "," << d << ")=" << count << " ";
  }
  if (o.pass) o.detail = summary.str();
  return o;
}

// 2. profile monotone and bounded; homogeneous output generates the same ideal.
Outcome profile_invariants() {
  Outcome o;
  std::mt19937_64 rng(20240601);
  unsigned homogeneous = 0;
  for (int t = 0; t < 20; ++t) {
    const Field field = t % 2 ? Field::prime(5) : Field::rationals();
    const std::size_t n = 1 + rng() % 3;
    const unsigned d = 1 + static_cast<unsigned>(rng() % 4);
    const bool homog = t % 3 != 2;
    const auto gens = testing_support::random_gens(field, n, d, homog, rng);
    const auto r = telescope_generators(field, n, gens, d);
    const auto& c = r.profile.c;
    for (unsigned k = 0; k <= d; ++k) {
      if (c[k] > binomial(n + k - 1, k)) o.fail("c_k above C(n+k-1,k) at instance " + std::to_string(t));
      if (k > 0 && c[k] < c[k - 1]) o.fail("c_k decreasing at instance " + std::to_string(t));
    }
    if (homog) {
      ++homogeneous;
      if (!ideal_equal(field, n, r.generators, gens)) o.fail("ideal changed at instance " + std::to_string(t));
    }
  }
  if (o.pass) o.detail = "20 instances, " + std::to_string(homogeneous) + " homogeneous checked by Groebner bases";
  return o;
}

// 3. certificate search succeeds, re-verifies with diagonal 1; F_2 too small.
Outcome certificate_search_sharpness() {
  Outcome o;
  struct Case {
    std::string field, n, d;
    std::size_t points;
  };
  for (const Case& c : {Case{"gf:7", "2", "3", 10}, Case{"gf:11", "2", "4", 15}, Case{"q", "3", "2", 10}}) {
    const auto r = cli({"certificate", "search", "--field", c.field, "-n", c.n, "-d", c.d, "--seed", "1", "--budget", "10000"});
    if (r.code != 0) {
      o.fail(c.field + " search exit " + std::to_string(r.code));
      continue;
    }
    const json doc = json::parse(r.out);
    const DualCertificate cert = io::certificate_from_json(doc);
    if (cert.points.size() != c.points) o.fail(c.field + " gave " + std::to_string(cert.points.size()) + " points");
    for (const auto& e : cert.diagonal)
      if (!e.is_one()) o.fail(c.field + " diagonal not 1");
    if (!verify_certificate(cert).valid) o.fail(c.field + " does not verify in-process");
    const std::string file = temp_file(r.out);
    const auto v = cli({"certificate", "verify", file});
    std::remove(file.c_str());
    if (v.code != 0) o.fail(c.field + " verify exit " + std::to_string(v.code));
  }
  const auto small = cli({"certificate", "search", "--field", "gf:2", "-n", "1", "-d", "2", "--seed", "1"});
  if (small.code != 1 || small.err.find("FieldTooSmall") == std::string::npos) o.fail("F_2, d=2 not reported as FieldTooSmall");
  if (o.pass) o.detail = "F_7 10 pts, F_11 15 pts, Q 10 pts re-verified; F_2 d=2 FieldTooSmall";
  return o;
}

// 4. simplex reproduces the six generators; diagonals match the closed form.
Outcome char0_simplex_construction() {
  Outcome o;
  const Field Q = Field::rationals();
  const auto r = char0_simplex(2, 2, Q);
  std::vector<std::string> got, want;
  for (const auto& f : r.certificate.polys) got.push_back(f.render());
  for (const char* t : {"X*Y", "X*(X-1)", "Y*(Y-1)", "X*(X+Y-2)", "Y*(X+Y-2)", "(X+Y-1)*(X+Y-2)"})
    want.push_back(parse_poly(t, 2, Q).render());
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  if (got != want) o.fail("n=2 d=2 generators differ");
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (unsigned d = 0; d <= 4; ++d) {
      const auto s = char0_simplex(n, d, Q);
      if (!verify_certificate(s.certificate).valid) o.fail("certificate invalid");
      for (std::size_t i = 0; i < s.certificate.points.size(); ++i) {
        const auto& p = s.certificate.points[i];
        unsigned f = 0;
        mpq_class expected = 1;
        for (std::size_t k = 0; k < n; ++k) {
          const unsigned di = static_cast<unsigned>(p[k].rational().get_num().get_ui());
          f += di;
          expected *= factorial(di);
        }
        expected *= factorial(d - f);
        if ((d - f) % 2) expected = -expected;
        if (evaluate(s.certificate.polys[i], p).rational() != expected) o.fail("diagonal mismatch");
        ++checked;
      }
    }
  }
  if (o.pass) o.detail = "six generators exact; " + std::to_string(checked) + " diagonal values match";
  return o;
}

// 5. triangle over F_11; PowerCollision over F_3.
Outcome two_variable_triangle() {
  Outcome o;
  const Field f11 = Field::prime(11);
  const auto r = two_var_triangle(4, f11.one(), f11.from_int(2));
  if (r.certificate.polys.size() != 15) o.fail("F_11 gave " + std::to_string(r.certificate.polys.size()) + " polys");
  const auto& c = r.certificate;
  for (std::size_t i = 0; i < c.polys.size(); ++i)
    for (std::size_t j = 0; j < c.points.size(); ++j)
      if (evaluate(c.polys[i], c.points[j]).is_zero() != (i != j)) o.fail("delta pattern broken");
  if (!verify_certificate(c).valid) o.fail("verify_certificate rejects");
  try {
    const Field f3 = Field::prime(3);
    two_var_triangle(2, f3.one(), f3.from_int(2));
    o.fail("F_3 accepted");
  } catch (const PowerCollision& e) {
    if (e.exponent() != 2) o.fail("collision reported at m=" + std::to_string(e.exponent()));
  }
  if (o.pass) o.detail = "15 polys with exact delta pattern; F_3 PowerCollision m=2";
  return o;
}

// 6. brute-force irreducible counts against the Moebius formula.
Outcome irreducible_counts() {
  Outcome o;
  const std::vector<std::uint64_t> q2{2, 1, 2, 3, 6, 9, 18, 30};
  for (unsigned k = 1; k <= 8; ++k) {
    const auto brute = oracle::irreducibles_by_products(2, k).size();
    if (brute != count_irreducibles(2, k) || brute != q2[k - 1]) o.fail("q=2 k=" + std::to_string(k));
  }
  for (unsigned k = 1; k <= 5; ++k)
    if (oracle::irreducibles_by_products(3, k).size() != count_irreducibles(3, k)) o.fail("q=3 k=" + std::to_string(k));
  if (o.pass) o.detail = "q=2 k<=8 and q=3 k<=5 agree";
  return o;
}

// 7. extremal sets: examples, maximality, minimality, monotonicity.
Outcome univariate_extremal() {
  Outcome o;
  const auto a = extremal_set(2, 3);
  if (a.m != 3 || a.max_degree != 3) o.fail("q=2 d=3");
  if (extremal_set(2, 100).m != 22) o.fail("q=2 d=100");
  std::vector<std::uint64_t> counts{0};
  std::vector<unsigned> degrees;  // irreducible degrees in enumeration order, from the brute-force sieve
  for (unsigned k = 1; k <= 8; ++k) {
    counts.push_back(oracle::irreducibles_by_products(2, k).size());
    degrees.insert(degrees.end(), counts.back(), k);
  }
  std::size_t prev = 0;
  for (unsigned d = 1; d <= 200; ++d) {
    const auto r = extremal_set(2, d);
    if (r.m != oracle::extremal_m_from_counts(counts, d)) o.fail("m differs from the oracle at d=" + std::to_string(d));
    unsigned budget = 0;
    for (std::size_t i = 1; i <= r.m && i < degrees.size(); ++i) budget += degrees[i];
    if (budget <= d) o.fail("m+1 fits at d=" + std::to_string(d));
    if (!verify_univariate_minimality(r.generators).minimal) o.fail("not minimal at d=" + std::to_string(d));
    if (r.m < prev) o.fail("m decreases at d=" + std::to_string(d));
    prev = r.m;
  }
  if (o.pass) o.detail = "m(3)=3, m(100)=22; d<=200 maximal, minimal, nondecreasing";
  return o;
}

// 8. q > d: the extremal set has d+1 elements.
Outcome large_field_regime() {
  Outcome o;
  for (unsigned d = 1; d <= 3; ++d)
    if (extremal_set(5, d).m != d + 1 || binomial(1 + d, d) != d + 1) o.fail("d=" + std::to_string(d));
  if (o.pass) o.detail = "q=5, d=1..3 gives 2,3,4";
  return o;
}

// 9. every accepted norm-lift instance verifies; acceptance rate reported.
Outcome conjecture_probe() {
  Outcome o;
  const auto p = conjecture_params(2, 8, 2);
  if (p.k != 4 || p.d_prime != 2 || p.target_size != 6) o.fail("params");
  unsigned accepted = 0, tried = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed, ++tried) {
    try {
      const NormInstance inst = build_conjecture_instance(2, 8, 2, seed, 10000, 1);
      ++accepted;
      const auto v = verify_norm_instance(inst);
      if (!v.valid) o.fail("seed " + std::to_string(seed) + ": " + v.failure);
      for (const auto& f : inst.descended_f)
        if (f.degree().value_or(0) > 8) o.fail("degree above 8");
    } catch (const BudgetExhausted&) {
    }
  }
  if (o.pass) {
    char rate[64];
    std::snprintf(rate, sizeof rate, "%.2f", double(accepted) / tried);
    o.detail = std::to_string(accepted) + "/" + std::to_string(tried) + " attempts accepted (rate " + rate +
               "), all verified";
  }
  return o;
}

// 10. same manifest, same bytes.
Outcome determinism() {
  Outcome o;
  const std::string spec = temp_file(
      R"({"command":"conjecture probe","fixed":{"n":2,"budget":20000,"seed":7},"grid":{"q":[2,3],"d":{"from":6,"to":9}}})");
  const std::vector<std::vector<std::string>> commands{
      {"certificate", "search", "--field", "gf:7", "-n", "2", "-d", "3", "--seed", "1"},
      {"certificate", "search", "--field", "gf:11", "-n", "2", "-d", "4", "--seed", "5", "--no-structured"},
      {"certificate", "search", "--field", "gf:2^4", "-n", "2", "-d", "3", "--seed", "2", "--no-structured"},
      {"certificate", "search", "--field", "q", "-n", "3", "-d", "2", "--seed", "3", "--no-structured"},
      {"conjecture", "probe", "--q", "2", "--d", "8", "-n", "2", "--seed", "3", "--budget", "100000"},
      {"conjecture", "probe", "--q", "3", "--d", "9", "-n", "2", "--seed", "4", "--budget", "100000"},
      {"batch", spec, "--jobs", "1"},
  };
  for (const auto& args : commands) {
    const auto a = cli(args), b = cli(args);
    if (a.code != b.code || a.out != b.out) o.fail(args[0] + " " + args[1] + " differs between runs");
  }
  if (cli({"batch", spec, "--jobs", "1"}).out != cli({"batch", spec, "--jobs", "4"}).out) o.fail("batch depends on --jobs");
  std::remove(spec.c_str());
  if (o.pass) o.detail = std::to_string(commands.size() + 1) + " randomized runs byte-identical";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"generator bound is sharp on monomial instances", sharpness_of_the_generator_bound},
      {"degree profile invariants on random instances", profile_invariants},
      {"certificate search reaches C(n+d,d) points", certificate_search_sharpness},
      {"characteristic-zero simplex construction", char0_simplex_construction},
      {"two-variable power triangle", two_variable_triangle},
      {"irreducible counts, brute force vs Moebius", irreducible_counts},
      {"univariate extremal sets", univariate_extremal},
      {"large-field regime gives d+1 generators", large_field_regime},
      {"norm-lift probe instances verify", conjecture_probe},
      {"determinism of randomized commands", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first << " -- " << o.detail
              << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
