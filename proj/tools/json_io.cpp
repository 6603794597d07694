#include "json_io.hpp"

#include <algorithm>
#include <charconv>

#include "mingens/errors.hpp"

namespace mingens::io {

namespace {

std::uint64_t parse_u64(std::string_view s, std::size_t offset) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) throw ParseError("expected an integer", offset);
  return v;
}

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing key \"") + key + "\"", 0);
  return j.at(key);
}

}  // namespace

Field parse_field_spec(std::string_view spec) {
  if (spec == "q" || spec == "Q") return Field::rationals();
  if (!spec.starts_with("gf:")) throw ParseError("field spec must be q, gf:p or gf:p^e", 0);
  const std::string_view rest = spec.substr(3);
  const auto caret = rest.find('^');
  const std::uint64_t p = parse_u64(rest.substr(0, caret), 3);
  if (!is_prime(p)) throw ParseError("characteristic " + std::to_string(p) + " is not prime", 3);
  if (caret == std::string_view::npos) return Field::prime(p);
  const std::uint64_t e = parse_u64(rest.substr(caret + 1), 4 + caret);
  if (e == 0 || e > 64) throw ParseError("extension degree out of range", 4 + caret);
  return Field::extension(p, static_cast<unsigned>(e));
}

json to_json(const Field& field) {
  json j;
  j["spec"] = field.spec();
  switch (field.kind()) {
    case FieldKind::Rational:
      j["kind"] = "rational";
      break;
    case FieldKind::Prime:
      j["kind"] = "prime";
      j["p"] = field.characteristic();
      break;
    case FieldKind::Extension:
      j["kind"] = "extension";
      j["p"] = field.characteristic();
      j["e"] = field.degree();
      j["modulus"] = field.modulus();
      break;
  }
  return j;
}

Field field_from_json(const json& j) {
  if (j.is_string()) return parse_field_spec(j.get<std::string>());
  const Field field = parse_field_spec(require(j, "spec").get<std::string>());
  if (field.kind() == FieldKind::Extension && j.contains("modulus")) {
    const auto modulus = j.at("modulus").get<std::vector<std::uint64_t>>();
    if (modulus != field.modulus()) return Field::with_modulus(field.characteristic(), modulus);
  }
  return field;
}

json to_json(const Element& e) {
  switch (e.field().kind()) {
    case FieldKind::Rational:
      return e.to_string();
    case FieldKind::Prime:
      return e.code();
    case FieldKind::Extension:
      return e.coeffs();
  }
  return nullptr;
}

Element element_from_json(const json& j, const Field& field) {
  if (j.is_string()) return parse_scalar(j.get<std::string>(), field);
  if (j.is_number_unsigned()) return field.from_integer(mpz_class(std::to_string(j.get<std::uint64_t>())));
  if (j.is_number_integer()) return field.from_int(j.get<std::int64_t>());
  if (j.is_array()) {
    if (!field.is_finite()) throw ParseError("coefficient vectors need a finite field", 0);
    const auto c = j.get<std::vector<std::uint64_t>>();
    for (auto v : c)
      if (v >= field.characteristic()) throw ParseError("coefficient out of range", 0);
    if (c.size() > field.degree()) throw ParseError("too many coefficients for the field", 0);
    return field.from_coeffs(c);
  }
  throw ParseError("unrecognized scalar " + j.dump(), 0);
}

json to_json(const Point& p) {
  json j = json::array();
  for (const auto& c : p.coords()) j.push_back(to_json(c));
  return j;
}

Point point_from_json(const json& j, const Field& field) {
  if (!j.is_array()) throw ParseError("a point must be an array", 0);
  std::vector<Element> coords;
  for (const auto& c : j) coords.push_back(element_from_json(c, field));
  return Point(field, std::move(coords));
}

json to_json(const MultiPoly& f) {
  std::vector<std::pair<Monomial, Element>> terms(f.terms().begin(), f.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return position_less(a.first, b.first); });
  json j = json::array();
  for (const auto& [m, c] : terms) j.push_back({{"exps", m.exponents()}, {"coef", to_json(c)}});
  return j;
}

MultiPoly poly_from_json(const json& j, const Field& field, std::size_t nvars) {
  if (j.is_string()) return parse_poly(j.get<std::string>(), nvars, field);
  if (!j.is_array()) throw ParseError("a polynomial must be a term list or a string", 0);
  MultiPoly f(field, nvars);
  for (const auto& t : j) {
    auto exps = require(t, "exps").get<std::vector<unsigned>>();
    if (exps.size() != nvars) throw ParseError("exponent vector has the wrong length", 0);
    f.add_term(element_from_json(require(t, "coef"), field), Monomial(std::move(exps)));
  }
  return f;
}

json to_json(const UPoly& f) {
  json j = json::array();
  for (const auto& c : f.coeffs()) j.push_back(to_json(c));
  return {{"coeffs", j}, {"text", f.to_string()}, {"degree", f.degree()}};
}

json to_json(const DualCertificate& cert) {
  json j;
  j["field"] = to_json(cert.field);
  j["n"] = cert.nvars;
  j["d"] = cert.degree;
  j["points"] = json::array();
  for (const auto& p : cert.points) j["points"].push_back(to_json(p));
  j["polys"] = json::array();
  for (const auto& f : cert.polys) j["polys"].push_back(to_json(f));
  j["diagonal"] = json::array();
  for (const auto& e : cert.diagonal) j["diagonal"].push_back(to_json(e));
  return j;
}

DualCertificate certificate_from_json(const json& doc) {
  const json& j = doc.contains("certificate") ? doc.at("certificate") : doc;
  DualCertificate cert;
  cert.field = field_from_json(require(j, "field"));
  cert.nvars = require(j, "n").get<std::size_t>();
  cert.degree = require(j, "d").get<unsigned>();
  for (const auto& p : require(j, "points")) cert.points.push_back(point_from_json(p, cert.field));
  for (const auto& f : require(j, "polys")) cert.polys.push_back(poly_from_json(f, cert.field, cert.nvars));
  for (const auto& e : require(j, "diagonal")) cert.diagonal.push_back(element_from_json(e, cert.field));
  return cert;
}

json to_json(const CertificateVerdict& v) {
  json j;
  j["valid"] = v.valid;
  if (!v.valid) {
    j["failure"] = v.failure;
    json w = json::object();
    if (v.poly) w["poly"] = *v.poly;
    if (v.point) w["point"] = *v.point;
    if (v.point_b) w["point_b"] = *v.point_b;
    j["witness"] = w;
  }
  return j;
}

json to_json(const DegreeProfile& p) {
  return {{"n", p.nvars},
          {"d", p.degree},
          {"working_degree", p.working_degree},
          {"c", p.c},
          {"stabilized", p.stabilized}};
}

json to_json(const ExtremalReport& r) {
  json j;
  j["q"] = r.q;
  j["d"] = r.d;
  j["m"] = r.m;
  j["max_degree"] = r.max_degree;
  j["degenerate"] = r.degenerate;
  j["degrees_used"] = r.degrees_used;
  j["irreducibles"] = json::array();
  for (const auto& h : r.irreducibles) j["irreducibles"].push_back(h.to_string());
  j["generators"] = json::array();
  for (const auto& f : r.generators) j["generators"].push_back(to_json(f));
  return j;
}

json to_json(const ConjectureParams& p) {
  return {{"q", p.q}, {"d", p.d}, {"n", p.n}, {"k", p.k}, {"d_prime", p.d_prime}, {"target_size", p.target_size}};
}

json to_json(const GaloisSearchStats& s) {
  json j;
  j["budget"] = s.budget;
  j["trials_used"] = s.trials_used;
  j["attempts"] = s.attempts;
  j["galois_rejections"] = s.galois_rejections;
  j["singular"] = s.singular;
  j["budget_exhausted"] = s.budget_exhausted;
  j["accepted_attempt"] = s.accepted_attempt ? json(*s.accepted_attempt) : json(nullptr);
  const std::uint64_t completed = s.galois_rejections + (s.accepted_attempt ? 1 : 0);
  j["acceptance_rate"] = completed == 0 ? json(nullptr) : json(static_cast<double>(s.accepted_attempt ? 1 : 0) / completed);
  j["attempt_seeds"] = s.attempt_seeds;
  return j;
}

json to_json(const NormInstance& inst) {
  json j;
  j["params"] = to_json(inst.params);
  j["base_field"] = to_json(inst.base);
  j["extension_field"] = to_json(inst.extension);
  j["points"] = json::array();
  for (const auto& p : inst.points) j["points"].push_back(to_json(p));
  j["lifted_g"] = json::array();
  for (const auto& g : inst.lifted_g) j["lifted_g"].push_back(to_json(g));
  j["descended_f"] = json::array();
  for (const auto& f : inst.descended_f) j["descended_f"].push_back(to_json(f));
  j["galois_ok"] = inst.galois_ok;
  j["stats"] = to_json(inst.stats);
  return j;
}

json to_json(const ConstructionResult& r) {
  json j;
  j["family"] = to_string(r.family);
  j["n"] = r.n;
  j["d"] = r.d;
  if (r.zeta) j["zeta"] = to_json(*r.zeta);
  if (r.x) j["x"] = to_json(*r.x);
  if (r.y) j["y"] = to_json(*r.y);
  j["factors"] = json::array();
  for (const auto& fs : r.factors) {
    json row = json::array();
    for (const auto& g : fs) row.push_back(g.render());
    j["factors"].push_back(row);
  }
  j["certificate"] = to_json(r.certificate);
  return j;
}

}  // namespace mingens::io
