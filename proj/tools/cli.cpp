#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "json_io.hpp"
#include "mingens/constructions.hpp"
#include "mingens/errors.hpp"
#include "mingens/generator_count.hpp"
#include "mingens/groebner.hpp"
#include "mingens/norm_lift.hpp"
#include "mingens/univariate.hpp"
#include "mingens/version.hpp"

namespace mingens::cli {

using io::json;

namespace {

constexpr std::uint64_t kDefaultBudget = 10000;

std::uint64_t default_budget() {
  if (const char* env = std::getenv("MINGENS_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw InvalidArgument(std::string("MINGENS_BUDGET is not a number: ") + env);
    }
  }
  return kDefaultBudget;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what(), e.byte);
  }
}

json manifest(const std::string& command, const json& params, const std::optional<Field>& field,
              std::optional<std::uint64_t> seed, const std::string& outcome) {
  json m;
  m["tool"] = "mingens";
  m["version"] = MINGENS_VERSION;
  m["command"] = command;
  m["params"] = params;
  m["field"] = field ? io::to_json(*field) : json(nullptr);
  m["seed"] = seed ? json(*seed) : json(nullptr);
  m["outcome"] = outcome;
  return m;
}

void emit(std::ostream& out, json doc) { out << doc.dump(2) << "\n"; }

std::vector<MultiPoly> read_gens(const std::vector<std::string>& texts, const std::string& file, const Field& field,
                                 std::size_t n) {
  std::vector<MultiPoly> gens;
  for (const auto& t : texts) gens.push_back(parse_poly(t, n, field));
  if (!file.empty()) {
    json j = read_json_file(file);
    if (j.is_object()) j = j.contains("gens") ? j.at("gens") : j.at("generators");
    for (const auto& g : j) gens.push_back(io::poly_from_json(g, field, n));
  }
  return gens;
}

json poly_list(const std::vector<MultiPoly>& polys) {
  json j = json::array();
  for (const auto& f : polys) j.push_back(io::to_json(f));
  return j;
}

json text_list(const std::vector<MultiPoly>& polys) {
  json j = json::array();
  for (const auto& f : polys) j.push_back(f.render());
  return j;
}

// Condensed view of a command's JSON for batch tables.
json summarize(const std::string& command, const json& doc) {
  json s = json::object();
  auto copy = [&](const json& src, std::initializer_list<const char*> keys) {
    for (const char* k : keys)
      if (src.contains(k)) s[k] = src.at(k);
  };
  if (command == "univariate extremal") {
    copy(doc, {"m", "max_degree", "degenerate"});
  } else if (command == "univariate count") {
    copy(doc, {"rows"});
  } else if (command == "certificate search") {
    if (doc.contains("certificate")) s["points"] = doc["certificate"]["points"].size();
    if (doc.contains("search")) copy(doc["search"], {"trials_used", "structured_points"});
  } else if (command == "conjecture probe") {
    copy(doc, {"success"});
    if (doc.contains("params")) copy(doc["params"], {"k", "d_prime", "target_size"});
    if (doc.contains("stats"))
      copy(doc["stats"], {"attempts", "galois_rejections", "acceptance_rate", "trials_used"});
  } else if (command == "mu-bound") {
    copy(doc, {"count", "claimed_bound", "lower_bound_verified"});
    if (doc.contains("profile")) s["c"] = doc["profile"]["c"];
  } else if (command.starts_with("construct")) {
    if (doc.contains("certificate")) s["size"] = doc["certificate"]["polys"].size();
  } else if (command == "oracle gb") {
    if (doc.contains("basis")) s["basis_size"] = doc["basis"].size();
  } else if (command == "oracle member") {
    copy(doc, {"member"});
  }
  return s;
}

std::string cell_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void print_table(std::ostream& out, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) {
    width[c] = header[c].size();
    for (const auto& r : rows) width[c] = std::max(width[c], r[c].size());
  }
  auto line = [&](const std::vector<std::string>& r) {
    for (std::size_t c = 0; c < r.size(); ++c) out << (c ? "  " : "") << std::setw(static_cast<int>(width[c])) << r[c];
    out << "\n";
  };
  line(header);
  for (const auto& r : rows) line(r);
}

struct Cell {
  std::string command;
  json params;
};

std::vector<Cell> expand_batch(const json& spec) {
  std::vector<Cell> cells;
  if (spec.contains("cells")) {
    for (const auto& c : spec.at("cells")) cells.push_back({c.at("command").get<std::string>(), c.value("params", json::object())});
    return cells;
  }
  if (!spec.contains("grid") || spec.at("grid").empty()) return cells;
  const std::string command = spec.at("command").get<std::string>();
  const json fixed = spec.value("fixed", json::object());
  std::vector<std::pair<std::string, std::vector<json>>> axes;
  for (const auto& [key, values] : spec.at("grid").items()) {
    std::vector<json> v;
    if (values.is_object()) {
      const long from = values.at("from").get<long>(), to = values.at("to").get<long>();
      const long step = values.value("step", 1L);
      if (step <= 0) throw InvalidArgument("grid step must be positive");
      for (long x = from; x <= to; x += step) v.push_back(x);
    } else {
      for (const auto& x : values) v.push_back(x);
    }
    if (v.empty()) return cells;
    axes.emplace_back(key, std::move(v));
  }
  std::vector<std::size_t> idx(axes.size(), 0);
  for (;;) {
    json params = fixed;
    for (std::size_t a = 0; a < axes.size(); ++a) params[axes[a].first] = axes[a].second[idx[a]];
    cells.push_back({command, params});
    std::size_t a = axes.size();
    while (a-- > 0) {
      if (++idx[a] < axes[a].second.size()) break;
      idx[a] = 0;
    }
    if (a == static_cast<std::size_t>(-1)) break;
  }
  return cells;
}

std::vector<std::string> cell_args(const Cell& cell) {
  std::vector<std::string> args;
  std::istringstream words(cell.command);
  for (std::string w; words >> w;) args.push_back(w);
  for (const auto& [key, value] : cell.params.items()) {
    if (value.is_boolean()) {
      if (value.get<bool>()) args.push_back("--" + key);
    } else if (value.is_array()) {
      for (const auto& v : value) {
        args.push_back("--" + key);
        args.push_back(cell_text(v));
      }
    } else {
      args.push_back("--" + key);
      args.push_back(cell_text(value));
    }
  }
  return args;
}

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err, const DispatchOptions& options) : out_(out), err_(err), opt_(options) {}

  int run(const std::vector<std::string>& args) {
    CLI::App app{"Minimal generating sets of polynomial ideals: bounds, certificates, constructions."};
    app.name("mingens");
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(MINGENS_VERSION));

    std::string field_spec = "q";
    std::size_t n = 1;
    unsigned d = 1;
    std::uint64_t seed = 0, budget = 0, q = 2;
    std::vector<std::string> gens;
    std::string gens_file;

    auto field_opt = [&](CLI::App* c) { c->add_option("--field", field_spec, "q, gf:p or gf:p^e")->capture_default_str(); };
    auto n_opt = [&](CLI::App* c) { c->add_option("-n,--n", n, "number of variables")->required()->check(CLI::PositiveNumber); };
    auto d_opt = [&](CLI::App* c) { c->add_option("-d,--d", d, "degree bound")->required(); };
    auto gens_opt = [&](CLI::App* c) {
      c->add_option("--gen", gens, "generator, e.g. X1^2+X2 (repeatable)");
      c->add_option("--gens-file", gens_file, "JSON array of generators");
    };

    // mu-bound
    auto* mu = app.add_subcommand("mu-bound", "degree profile and telescoped generators");
    field_opt(mu);
    n_opt(mu);
    d_opt(mu);
    gens_opt(mu);
    bool sharp = false;
    std::optional<unsigned> working;
    mu->add_flag("--sharp", sharp, "use the monomials of degree exactly d");
    mu->add_option("--working-degree", working, "fixed Macaulay working degree");

    // certificate
    auto* cert = app.add_subcommand("certificate", "dual certificates");
    cert->require_subcommand(1);
    auto* search = cert->add_subcommand("search", "find unisolvent points and solve for f_i(P_j) = delta_ij");
    field_opt(search);
    n_opt(search);
    d_opt(search);
    search->add_option("--seed", seed)->required();
    search->add_option("--budget", budget, "random point draws (default $MINGENS_BUDGET or 10000)");
    std::optional<std::uint64_t> grid;
    bool no_structured = false;
    search->add_option("--grid", grid, "random grid side |S| (default d+1)");
    search->add_flag("--no-structured", no_structured, "skip the deterministic node stream");
    auto* verify = cert->add_subcommand("verify", "re-check a certificate file");
    std::string cert_file;
    verify->add_option("file", cert_file)->required();

    // univariate
    auto* uni = app.add_subcommand("univariate", "one variable over F_q");
    uni->require_subcommand(1);
    auto* extremal = uni->add_subcommand("extremal", "extremal minimal generating set");
    extremal->add_option("--q", q)->required();
    extremal->add_option("-d,--d", d)->required();
    auto* count = uni->add_subcommand("count", "irreducible counts p_q(k) and P_q(k)");
    unsigned max_degree = 1;
    count->add_option("--q", q)->required();
    count->add_option("--max-degree", max_degree)->required();

    // conjecture
    auto* conj = app.add_subcommand("conjecture", "norm-lift probe");
    conj->require_subcommand(1);
    auto* probe = conj->add_subcommand("probe", "search F_{q^k} for a Galois-stable dual system and descend");
    std::uint64_t attempts = 1000;
    probe->add_option("--q", q)->required();
    probe->add_option("-d,--d", d)->required();
    n_opt(probe);
    probe->add_option("--seed", seed)->required();
    probe->add_option("--budget", budget, "random point draws over all attempts");
    probe->add_option("--attempts", attempts)->capture_default_str();

    // construct
    auto* cons = app.add_subcommand("construct", "explicit certificate families");
    cons->require_subcommand(1);
    auto* simplex = cons->add_subcommand("simplex", "lattice simplex over Q");
    field_opt(simplex);
    n_opt(simplex);
    d_opt(simplex);
    std::string zeta_text, x_text = "1", y_text;
    auto* qline = cons->add_subcommand("qline", "q-analog nodes on a line");
    field_opt(qline);
    d_opt(qline);
    qline->add_option("--zeta", zeta_text)->required();
    auto* tri = cons->add_subcommand("triangle", "two-variable power triangle");
    field_opt(tri);
    d_opt(tri);
    tri->add_option("--x", x_text)->capture_default_str();
    tri->add_option("--y", y_text)->required();

    // oracle
    auto* oracle = app.add_subcommand("oracle", "Groebner basis ground truth (small inputs)");
    oracle->require_subcommand(1);
    auto* gb = oracle->add_subcommand("gb", "reduced Groebner basis, graded lex");
    field_opt(gb);
    n_opt(gb);
    gens_opt(gb);
    auto* member = oracle->add_subcommand("member", "ideal membership");
    field_opt(member);
    n_opt(member);
    gens_opt(member);
    std::string f_text;
    member->add_option("--f", f_text)->required();

    // batch
    auto* batch = app.add_subcommand("batch", "run a grid of commands and tabulate");
    std::string batch_file;
    bool timings = false;
    unsigned jobs = 1;
    batch->add_option("spec", batch_file)->required();
    batch->add_flag("--timings", timings, "record wall-clock seconds per cell (output no longer reproducible)");
    batch->add_option("--jobs", jobs, "cells run in parallel")->capture_default_str()->check(CLI::PositiveNumber);

    try {
      std::vector<std::string> rev(args.rbegin(), args.rend());
      app.parse(rev);
    } catch (const CLI::ParseError& e) {
      const int code = app.exit(e, out_, err_);
      return code == 0 ? kOk : kUsage;
    }

    const bool budget_given = (search->parsed() && search->count("--budget") > 0) ||
                              (probe->parsed() && probe->count("--budget") > 0);
    if (!budget_given) budget = default_budget();

    if (mu->parsed()) {
      const Field field = io::parse_field_spec(field_spec);
      std::vector<MultiPoly> g = read_gens(gens, gens_file, field, n);
      if (sharp) {
        auto s = sharp_instance(field, n, d);
        g.insert(g.end(), s.begin(), s.end());
      }
      const GeneratorReport report = telescope_generators(field, n, g, d, working);
      json params{{"n", n}, {"d", d}, {"gens", text_list(g)}, {"sharp", sharp}};
      params["working_degree"] = working ? json(*working) : json(nullptr);
      json doc;
      doc["manifest"] = manifest("mu-bound", params, field, std::nullopt, "ok");
      doc["generators"] = poly_list(report.generators);
      doc["generators_text"] = text_list(report.generators);
      doc["count"] = report.generators.size();
      doc["claimed_bound"] = report.claimed_bound;
      doc["profile"] = io::to_json(report.profile);
      doc["lower_bound_verified"] = verify_monomial_lower_bound(field, n, d, report.generators);
      emit(out_, doc);
      return kOk;
    }

    if (search->parsed()) {
      const Field field = io::parse_field_spec(field_spec);
      json params{{"n", n}, {"d", d}, {"budget", budget}, {"structured", !no_structured}};
      params["grid"] = grid ? json(*grid) : json(nullptr);
      PointSearchOptions opt;
      opt.seed = seed;
      opt.budget = budget;
      opt.grid_size = grid;
      opt.structured = !no_structured;
      PointSearchResult found;
      try {
        found = greedy_point_search(field, n, d, opt);
      } catch (const BudgetExhausted& e) {
        json doc;
        doc["manifest"] = manifest("certificate search", params, field, seed, "budget_exhausted");
        doc["search"] = {{"trials_used", e.trials_used()}};
        emit(out_, doc);
        err_ << "error: " << e.what() << "\n";
        return kBudgetExhausted;
      }
      const DualCertificate c = solve_certificate(field, n, found.points, d);
      const CertificateVerdict v = verify_certificate(c);
      json doc;
      doc["manifest"] = manifest("certificate search", params, field, seed, v.valid ? "ok" : "invalid");
      doc["certificate"] = io::to_json(c);
      doc["search"] = {{"trials_used", found.trials_used}, {"structured_points", found.structured_points}};
      doc["verdict"] = io::to_json(v);
      emit(out_, doc);
      return v.valid ? kOk : kVerificationFailed;
    }

    if (verify->parsed()) {
      const DualCertificate c = io::certificate_from_json(read_json_file(cert_file));
      const CertificateVerdict v = verify_certificate(c);
      json doc;
      doc["manifest"] = manifest("certificate verify", {{"file", cert_file}}, c.field, std::nullopt,
                                 v.valid ? "valid" : "invalid");
      doc["verdict"] = io::to_json(v);
      emit(out_, doc);
      if (!v.valid) err_ << "certificate invalid: " << v.failure << "\n";
      return v.valid ? kOk : kVerificationFailed;
    }

    if (extremal->parsed()) {
      const ExtremalReport r = extremal_set(q, d);
      const UnivariateVerdict v = verify_univariate_minimality(r.generators);
      json doc = io::to_json(r);
      doc["minimal"] = v.minimal;
      doc["manifest"] = manifest("univariate extremal", {{"q", q}, {"d", d}}, Field::galois(q), std::nullopt,
                                 v.minimal ? "ok" : "not_minimal");
      emit(out_, doc);
      return v.minimal ? kOk : kVerificationFailed;
    }

    if (count->parsed()) {
      json rows = json::array();
      std::uint64_t cumulative = 0;
      for (unsigned k = 1; k <= max_degree; ++k) {
        const std::uint64_t p = count_irreducibles(q, k);
        cumulative += p;
        rows.push_back({{"k", k}, {"p", p}, {"cumulative", cumulative}});
      }
      if (opt_.tty) {
        std::vector<std::vector<std::string>> t;
        for (const auto& r : rows) t.push_back({cell_text(r["k"]), cell_text(r["p"]), cell_text(r["cumulative"])});
        print_table(out_, {"k", "p_q(k)", "P_q(k)"}, t);
        return kOk;
      }
      json doc;
      doc["manifest"] = manifest("univariate count", {{"q", q}, {"max_degree", max_degree}}, Field::galois(q),
                                 std::nullopt, "ok");
      doc["rows"] = rows;
      emit(out_, doc);
      return kOk;
    }

    if (probe->parsed()) {
      const ConjectureParams params = conjecture_params(q, d, n);
      const GaloisSearchResult found = galois_search(params, seed, budget, attempts);
      json mparams{{"q", q}, {"d", d}, {"n", n}, {"budget", budget}, {"attempts", attempts}};
      json doc;
      doc["params"] = io::to_json(params);
      doc["success"] = found.success;
      if (!found.success) {
        doc["stats"] = io::to_json(found.stats);
        doc["manifest"] = manifest("conjecture probe", mparams, found.extension, seed, "no_acceptance");
        emit(out_, doc);
        err_ << "no attempt satisfied the conjugate condition within the budget\n";
        return kBudgetExhausted;
      }
      NormInstance inst;
      inst.params = params;
      inst.base = Field::prime(q);
      inst.extension = found.extension;
      inst.points = found.lifted->points;
      inst.lifted_g = found.lifted->polys;
      for (const auto& g : inst.lifted_g) inst.descended_f.push_back(descend_by_norm(g, inst.base));
      inst.galois_ok = true;
      inst.stats = found.stats;
      const NormVerdict v = verify_norm_instance(inst);
      json body = io::to_json(inst);
      for (auto& [key, value] : body.items()) doc[key] = value;
      doc["verdict"] = {{"valid", v.valid}, {"failure", v.failure}};
      doc["manifest"] = manifest("conjecture probe", mparams, found.extension, seed, v.valid ? "ok" : "invalid");
      emit(out_, doc);
      return v.valid ? kOk : kVerificationFailed;
    }

    if (simplex->parsed() || qline->parsed() || tri->parsed()) {
      const Field field = io::parse_field_spec(field_spec);
      ConstructionResult r;
      json params{{"d", d}};
      std::string command;
      if (simplex->parsed()) {
        command = "construct simplex";
        params["n"] = n;
        r = char0_simplex(n, d, field);
      } else if (qline->parsed()) {
        command = "construct qline";
        params["zeta"] = zeta_text;
        r = q_analog_line(d, parse_scalar(zeta_text, field));
      } else {
        command = "construct triangle";
        params["x"] = x_text;
        params["y"] = y_text;
        r = two_var_triangle(d, parse_scalar(x_text, field), parse_scalar(y_text, field));
      }
      const CertificateVerdict v = verify_certificate(r.certificate);
      json doc = io::to_json(r);
      doc["polys_text"] = text_list(r.certificate.polys);
      doc["verdict"] = io::to_json(v);
      doc["manifest"] = manifest(command, params, field, std::nullopt, v.valid ? "ok" : "invalid");
      emit(out_, doc);
      return v.valid ? kOk : kVerificationFailed;
    }

    if (gb->parsed() || member->parsed()) {
      const Field field = io::parse_field_spec(field_spec);
      const std::vector<MultiPoly> g = read_gens(gens, gens_file, field, n);
      const GroebnerBasis basis = buchberger(field, n, g);
      json params{{"n", n}, {"gens", text_list(g)}};
      json doc;
      if (gb->parsed()) {
        doc["basis"] = poly_list(basis.basis);
        doc["basis_text"] = text_list(basis.basis);
        doc["manifest"] = manifest("oracle gb", params, field, std::nullopt, "ok");
      } else {
        const MultiPoly f = parse_poly(f_text, n, field);
        params["f"] = f.render();
        doc["member"] = membership(f, basis);
        doc["normal_form"] = normal_form(f, basis.basis).render();
        doc["manifest"] = manifest("oracle member", params, field, std::nullopt, "ok");
      }
      emit(out_, doc);
      return kOk;
    }

    if (batch->parsed()) return run_batch(batch_file, timings, jobs);
    return kUsage;
  }

 private:
  int run_batch(const std::string& file, bool timings, unsigned jobs) {
    const json spec = read_json_file(file);
    const std::vector<Cell> cells = expand_batch(spec);
    std::vector<json> rows(cells.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i; (i = next++) < cells.size();) {
        std::ostringstream cout, cerr;
        const auto start = std::chrono::steady_clock::now();
        const int code = dispatch(cell_args(cells[i]), cout, cerr);
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        json row{{"cell", i}, {"command", cells[i].command}, {"params", cells[i].params}, {"exit", code}};
        json doc;
        try {
          doc = json::parse(cout.str());
        } catch (const json::parse_error&) {
          doc = json::object();
        }
        row["summary"] = summarize(cells[i].command, doc);
        if (code != kOk) row["error"] = cerr.str();
        if (timings) row["seconds"] = seconds;
        rows[i] = std::move(row);
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < std::min<std::size_t>(jobs, cells.size()); ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    if (opt_.tty) {
      std::vector<std::string> header{"cell", "command", "params", "exit", "summary"};
      if (timings) header.push_back("seconds");
      std::vector<std::vector<std::string>> t;
      for (const auto& r : rows) {
        std::vector<std::string> line{cell_text(r["cell"]), cell_text(r["command"]), r["params"].dump(),
                                      cell_text(r["exit"]), r["summary"].dump()};
        if (timings) line.push_back(cell_text(r["seconds"]));
        t.push_back(std::move(line));
      }
      print_table(out_, header, t);
      return kOk;
    }
    json doc;
    doc["manifest"] = manifest("batch", {{"spec", spec}, {"timings", timings}}, std::nullopt, std::nullopt, "ok");
    doc["rows"] = rows;
    emit(out_, doc);
    return kOk;
  }

  std::ostream& out_;
  std::ostream& err_;
  DispatchOptions opt_;
};

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
             const DispatchOptions& options) {
  try {
    return Runner(out, err, options).run(args);
  } catch (const BudgetExhausted& e) {
    err << "error: " << e.what() << "\n";
    return kBudgetExhausted;
  } catch (const PowerCollision& e) {
    err << "error: PowerCollision: " << e.what() << "\n";
    return kUsage;
  } catch (const FieldTooSmall& e) {
    err << "error: FieldTooSmall: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const json::exception& e) {
    err << "error: malformed JSON input: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace mingens::cli
