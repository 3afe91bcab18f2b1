#pragma once

#include <string>
#include <optional>
#include <span>
#include <variant>

#include "json.hpp"

#include "cubiform/cubic.hpp"
#include "cubiform/obstruct.hpp"
#include "cubiform/quotient.hpp"

namespace cubiform::io {

using Json = nlohmann::ordered_json;

/// Malformed or schema-violating input.
class SchemaError : public Error {
 public:
  using Error::Error;
};

/// Rationals as "p/q" (or "p"); extension elements as
/// {"a": "p/q", "b": "r/s", "zeta": "i" | "omega"}.
Json to_json(const FieldElem& x);
/// Accepts a rational string, an integer, or the object form. A rational is
/// embedded into `field`; an object must name `field`'s generator.
FieldElem field_elem_from_json(const Json& j, FieldTag field);
/// Natural field of a JSON scalar: Q for strings and integers, the named
/// extension for objects.
FieldTag field_of(const Json& j);

/// {"m": int, "field": "Q" | "Q_I" | "Q_OMEGA", "entries": [[[a, b, c], coeff], ...]}
/// with 1-based sorted indices, entries in key order.
Json to_json(const CubicForm& f);
CubicForm cubic_from_json(const Json& j);

/// Canonical text (two-space indentation, trailing newline). Round-trips
/// bit-exactly through cubic_from_json.
std::string dump(const Json& j);

/// Parses a JSON array of scalars into a point over `field`.
Point point_from_json(const Json& j, FieldTag field);
/// Field of the widest entry, or nullopt when two extensions are mixed.
std::optional<FieldTag> point_field(const Json& j);
Json to_json(std::span<const FieldElem> p);

/// Parses the CLI zeta names "1", "-1", "i", "-i", "omega", "-omega".
FieldElem parse_zeta(std::string_view text);
std::string zeta_text(const FieldElem& zeta);

/// {"zeta": "...", "order": d}
Json to_json(const DiagonalAction& act);
DiagonalAction action_from_json(const Json& j);

/// {"form": CubicForm, "k": k, "a": ["a_1", ...]}
Json to_json(const ResolutionModel& model);
ResolutionModel model_from_json(const Json& j);

/// Steps carry {minor: {rows, cols}, known_zeros_before, reduced_form,
/// coefficient, variable, conclusion}, indices 1-based.
Json to_json(const RankCertificate& cert, FieldTag field);
RankCertificate certificate_from_json(const Json& j);

/// {status, certificate, counterexample, residual_assumptions}
Json to_json(const Verdict& v, FieldTag field);
Json to_json(const CertifyResult& r, FieldTag field);

/// Any of the three model-file shapes.
using ModelFile = std::variant<CubicForm, ResolutionModel, DiagonalAction>;
ModelFile model_file_from_json(const Json& j);

Json parse_text(std::string_view text);

}  // namespace cubiform::io
