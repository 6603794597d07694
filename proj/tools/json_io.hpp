#pragma once

// JSON encoding of fields, scalars, polynomials and certificates.
//
// Scalars: "a/b" (or "a" for integers) over Q, a number over F_p, an array of
// polynomial-basis coefficients over F_{p^e}. Polynomials: arrays of
// {"exps": [...], "coef": scalar} in position order.

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "mingens/certificate.hpp"
#include "mingens/constructions.hpp"
#include "mingens/generator_count.hpp"
#include "mingens/norm_lift.hpp"
#include "mingens/univariate.hpp"

namespace mingens::io {

using json = nlohmann::json;

// "q", "gf:p" or "gf:p^e". Throws ParseError.
Field parse_field_spec(std::string_view spec);

json to_json(const Field& field);
// Accepts the object written by to_json; an explicit modulus is honored.
Field field_from_json(const json& j);

json to_json(const Element& e);
Element element_from_json(const json& j, const Field& field);

json to_json(const Point& p);
Point point_from_json(const json& j, const Field& field);

json to_json(const MultiPoly& f);
MultiPoly poly_from_json(const json& j, const Field& field, std::size_t nvars);

json to_json(const UPoly& f);

json to_json(const DualCertificate& cert);
DualCertificate certificate_from_json(const json& j);

json to_json(const CertificateVerdict& v);
json to_json(const DegreeProfile& p);
json to_json(const ExtremalReport& r);
json to_json(const ConjectureParams& p);
json to_json(const GaloisSearchStats& s);
json to_json(const NormInstance& inst);
json to_json(const ConstructionResult& r);

}  // namespace mingens::io
