#include "cubiform/io.hpp"

#include <algorithm>

namespace cubiform::io {

namespace {

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string("missing key '") + key + "'");
  return j.at(key);
}

int require_index(const Json& j, std::size_t m, const char* what) {
  if (!j.is_number_integer()) throw SchemaError(std::string(what) + " must be an integer");
  long v = j.get<long>();
  if (v < 1 || v > static_cast<long>(m)) {
    throw SchemaError(std::string(what) + " " + std::to_string(v) + " out of range 1.." + std::to_string(m));
  }
  return static_cast<int>(v - 1);
}

std::vector<int> index_list(const Json& j, std::size_t m, const char* what) {
  if (!j.is_array()) throw SchemaError(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const Json& x : j) out.push_back(require_index(x, m, what));
  return out;
}

Json one_based(const std::vector<int>& v) {
  Json out = Json::array();
  for (int x : v) out.push_back(x + 1);
  return out;
}

std::string var(int v) { return "x" + std::to_string(v + 1); }

std::string coefficient_text(const FieldElem& c) { return c.is_rational() ? c.to_string() : "(" + c.to_string() + ")"; }

std::string square_text(const FieldElem& c, int v) { return coefficient_text(c) + "*" + var(v) + "^2"; }

std::string cross_text(const FieldElem& c, int a, int b) { return coefficient_text(c) + "*" + var(a) + "*" + var(b); }

Json minor_json(const MinorRef& r) {
  return Json{{"rows", {r.rows[0] + 1, r.rows[1] + 1}}, {"cols", {r.cols[0] + 1, r.cols[1] + 1}}};
}

MinorRef minor_from_json(const Json& j, std::size_t m) {
  std::vector<int> rows = index_list(require(j, "rows"), m, "minor row");
  std::vector<int> cols = index_list(require(j, "cols"), m, "minor column");
  if (rows.size() != 2 || cols.size() != 2) throw SchemaError("a minor names two rows and two columns");
  return MinorRef{{rows[0], rows[1]}, {cols[0], cols[1]}};
}

void expect_text(const Json& j, const char* key, const std::string& expected) {
  const Json& v = require(j, key);
  if (!v.is_string() || v.get<std::string>() != expected) {
    throw SchemaError(std::string(key) + " does not match the step data (expected '" + expected + "')");
  }
}

Json certificate_json(const RankCertificate& cert) {
  Json steps = Json::array();
  for (const CertificateStep& s : cert.steps) {
    steps.push_back(Json{{"minor", minor_json(s.minor)},
                         {"known_zeros_before", one_based(s.known_zeros_before)},
                         {"reduced_form", square_text(s.coefficient, s.variable)},
                         {"coefficient", to_json(s.coefficient)},
                         {"variable", s.variable + 1},
                         {"conclusion", var(s.variable) + "=0"}});
  }
  Json out{{"variables", cert.variables}, {"steps", std::move(steps)}};
  if (!cert.branch.empty()) {
    const CertificateBranch& b = cert.branch.front();
    Json cases = Json::array();
    for (const RankCertificate& c : b.cases) cases.push_back(certificate_json(c));
    out["branch"] = Json{{"minor", minor_json(b.minor)},
                         {"known_zeros_before", one_based(b.known_zeros_before)},
                         {"reduced_form", cross_text(b.coefficient, b.first, b.second)},
                         {"coefficient", to_json(b.coefficient)},
                         {"variables", {b.first + 1, b.second + 1}},
                         {"cases", std::move(cases)}};
  }
  return out;
}

RankCertificate certificate_body(const Json& j, FieldTag field) {
  RankCertificate cert;
  const Json& vars = require(j, "variables");
  if (!vars.is_number_unsigned()) throw SchemaError("variables must be a non-negative integer");
  cert.variables = vars.get<std::size_t>();
  const std::size_t m = cert.variables;
  for (const Json& s : require(j, "steps")) {
    CertificateStep step;
    step.minor = minor_from_json(require(s, "minor"), m);
    step.known_zeros_before = index_list(require(s, "known_zeros_before"), m, "known zero");
    step.coefficient = field_elem_from_json(require(s, "coefficient"), field);
    step.variable = require_index(require(s, "variable"), m, "variable");
    expect_text(s, "reduced_form", square_text(step.coefficient, step.variable));
    expect_text(s, "conclusion", var(step.variable) + "=0");
    cert.steps.push_back(std::move(step));
  }
  if (j.contains("branch")) {
    const Json& b = j.at("branch");
    CertificateBranch node;
    node.minor = minor_from_json(require(b, "minor"), m);
    node.known_zeros_before = index_list(require(b, "known_zeros_before"), m, "known zero");
    node.coefficient = field_elem_from_json(require(b, "coefficient"), field);
    std::vector<int> pair = index_list(require(b, "variables"), m, "branch variable");
    if (pair.size() != 2) throw SchemaError("a branch splits on exactly two variables");
    node.first = pair[0];
    node.second = pair[1];
    expect_text(b, "reduced_form", cross_text(node.coefficient, node.first, node.second));
    for (const Json& c : require(b, "cases")) node.cases.push_back(certificate_body(c, field));
    cert.branch.push_back(std::move(node));
  }
  return cert;
}

}  // namespace

Json to_json(const FieldElem& x) {
  if (x.tag() == FieldTag::Q) return to_string(x.a());
  return Json{{"a", to_string(x.a())}, {"b", to_string(x.b())}, {"zeta", std::string(zeta_name(x.tag()))}};
}

FieldTag field_of(const Json& j) {
  if (j.is_object()) {
    const Json& z = require(j, "zeta");
    if (!z.is_string()) throw SchemaError("zeta must be a string");
    try {
      return parse_zeta_name(z.get<std::string>());
    } catch (const FieldError& e) {
      throw SchemaError(e.what());
    }
  }
  return FieldTag::Q;
}

FieldElem field_elem_from_json(const Json& j, FieldTag field) {
  try {
    if (j.is_string()) return FieldElem(parse_rational(j.get<std::string>())).widen(field);
    if (j.is_number_integer()) return FieldElem(Rational(j.get<long>())).widen(field);
    if (j.is_object()) {
      FieldTag tag = field_of(j);
      const Json& a = require(j, "a");
      const Json& b = require(j, "b");
      if (!a.is_string() || !b.is_string()) throw SchemaError("a and b must be rational strings");
      FieldElem x(tag, parse_rational(a.get<std::string>()), parse_rational(b.get<std::string>()));
      return x.widen(field);
    }
  } catch (const FieldError& e) {
    throw SchemaError(e.what());
  }
  throw SchemaError("field element must be a rational string or {a, b, zeta}: " + j.dump());
}

Json to_json(const CubicForm& f) {
  Json entries = Json::array();
  for (const auto& [key, t] : f.entries()) {
    entries.push_back(Json::array({Json::array({key[0] + 1, key[1] + 1, key[2] + 1}), to_json(t)}));
  }
  return Json{{"m", f.size()}, {"field", std::string(field_name(f.tag()))}, {"entries", std::move(entries)}};
}

CubicForm cubic_from_json(const Json& j) {
  const Json& mj = require(j, "m");
  if (!mj.is_number_unsigned()) throw SchemaError("m must be a non-negative integer");
  const std::size_t m = mj.get<std::size_t>();
  const Json& fj = require(j, "field");
  if (!fj.is_string()) throw SchemaError("field must be a string");
  FieldTag tag;
  try {
    tag = parse_field_name(fj.get<std::string>());
  } catch (const FieldError& e) {
    throw SchemaError(e.what());
  }
  const Json& entries = require(j, "entries");
  if (!entries.is_array()) throw SchemaError("entries must be an array");
  CubicForm f(m, tag);
  for (const Json& e : entries) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_array() || e[0].size() != 3) {
      throw SchemaError("entry must be [[a, b, c], coefficient]: " + e.dump());
    }
    std::vector<int> idx = index_list(e[0], m, "tensor index");
    if (!std::is_sorted(idx.begin(), idx.end())) throw SchemaError("tensor indices must be sorted: " + e.dump());
    if (f.entries().contains({idx[0], idx[1], idx[2]})) throw SchemaError("duplicate entry: " + e.dump());
    FieldElem c = field_elem_from_json(e[1], tag);
    if (c.is_zero()) throw SchemaError("zero coefficients are not stored: " + e.dump());
    f.set(idx[0], idx[1], idx[2], c);
  }
  return f;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::optional<FieldTag> point_field(const Json& j) {
  if (!j.is_array()) throw SchemaError("point must be a JSON array");
  FieldTag tag = FieldTag::Q;
  for (const Json& x : j) {
    FieldTag t = field_of(x);
    if (t == FieldTag::Q) continue;
    if (tag != FieldTag::Q && tag != t) return std::nullopt;
    tag = t;
  }
  return tag;
}

Point point_from_json(const Json& j, FieldTag field) {
  if (!j.is_array()) throw SchemaError("point must be a JSON array");
  Point p;
  for (const Json& x : j) p.push_back(field_elem_from_json(x, field));
  return p;
}

Json to_json(std::span<const FieldElem> p) {
  Json out = Json::array();
  for (const FieldElem& x : p) out.push_back(to_json(x));
  return out;
}

FieldElem parse_zeta(std::string_view text) {
  if (text == "1") return FieldElem(1);
  if (text == "-1") return FieldElem(-1);
  if (text == "i") return FieldElem::i();
  if (text == "-i") return -FieldElem::i();
  if (text == "omega") return FieldElem::omega();
  if (text == "-omega") return -FieldElem::omega();
  throw SchemaError("unknown zeta '" + std::string(text) + "' (expected 1, -1, i, -i, omega or -omega)");
}

std::string zeta_text(const FieldElem& zeta) {
  for (const char* name : {"1", "-1", "i", "-i", "omega", "-omega"}) {
    if (parse_zeta(name) == zeta) return name;
  }
  return zeta.to_string();
}

Json to_json(const DiagonalAction& act) { return Json{{"zeta", zeta_text(act.zeta())}, {"order", act.order()}}; }

DiagonalAction action_from_json(const Json& j) {
  const Json& z = require(j, "zeta");
  if (!z.is_string()) throw SchemaError("zeta must be a string");
  FieldElem zeta = parse_zeta(z.get<std::string>());
  if (!j.contains("order")) return DiagonalAction(zeta);
  if (!j.at("order").is_number_integer()) throw SchemaError("order must be an integer");
  try {
    return DiagonalAction(zeta, j.at("order").get<int>());
  } catch (const DomainError& e) {
    throw SchemaError(e.what());
  }
}

Json to_json(const ResolutionModel& model) {
  Json a = Json::array();
  for (long ai : model.a()) a.push_back(std::to_string(ai));
  return Json{{"form", to_json(model.fz())}, {"k", model.k()}, {"a", std::move(a)}};
}

ResolutionModel model_from_json(const Json& j) {
  CubicForm fz = cubic_from_json(require(j, "form"));
  const Json& aj = require(j, "a");
  if (!aj.is_array()) throw SchemaError("a must be an array");
  std::vector<long> a;
  for (const Json& x : aj) {
    Rational r;
    try {
      if (x.is_number_integer()) r = x.get<long>();
      else if (x.is_string()) r = parse_rational(x.get<std::string>());
      else throw SchemaError("a_i must be an integer: " + x.dump());
    } catch (const FieldError& e) {
      throw SchemaError(e.what());
    }
    if (r.get_den() != 1 || !r.get_num().fits_slong_p()) throw SchemaError("a_i must be an integer: " + x.dump());
    a.push_back(r.get_num().get_si());
  }
  if (j.contains("k")) {
    const Json& k = j.at("k");
    if (!k.is_number_unsigned() || k.get<std::size_t>() != a.size()) {
      throw SchemaError("k must equal the number of a_i values");
    }
  }
  return ResolutionModel(std::move(fz), std::move(a));
}

Json to_json(const RankCertificate& cert, FieldTag field) {
  Json out{{"field", std::string(field_name(field))}};
  out.update(certificate_json(cert));
  return out;
}

RankCertificate certificate_from_json(const Json& j) {
  const Json& fj = require(j, "field");
  if (!fj.is_string()) throw SchemaError("field must be a string");
  try {
    return certificate_body(j, parse_field_name(fj.get<std::string>()));
  } catch (const FieldError& e) {
    throw SchemaError(e.what());
  }
}

Json to_json(const Verdict& v, FieldTag field) {
  Json assumptions = Json::array();
  for (const std::string& s : v.residual_assumptions) assumptions.push_back(s);
  return Json{{"status", std::string(to_string(v.status))},
              {"certificate", v.certificate ? to_json(*v.certificate, field) : Json()},
              {"counterexample", v.counterexample ? to_json(*v.counterexample) : Json()},
              {"residual_assumptions", std::move(assumptions)}};
}

Json to_json(const CertifyResult& r, FieldTag field) {
  Json out{{"status", std::string(to_string(r.status))},
           {"certificate", r.certificate ? to_json(*r.certificate, field) : Json()},
           {"counterexample", r.counterexample ? to_json(*r.counterexample) : Json()}};
  if (r.counterexample) out["counterexample_rank"] = r.counterexample_rank;
  return out;
}

ModelFile model_file_from_json(const Json& j) {
  if (!j.is_object()) throw SchemaError("model file must be a JSON object");
  if (j.contains("entries")) return cubic_from_json(j);
  if (j.contains("form")) return model_from_json(j);
  if (j.contains("zeta")) return action_from_json(j);
  throw SchemaError("model file is neither a cubic form, a resolution model nor an action spec");
}

Json parse_text(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace cubiform::io
