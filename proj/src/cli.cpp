#include "cubiform/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "cubiform/exterior.hpp"
#include "cubiform/io.hpp"

namespace cubiform::cli {

namespace {

using io::Json;
using io::SchemaError;

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CubicForm load_form(const std::string& path) {
  io::ModelFile file = io::model_file_from_json(io::parse_text(read_file(path)));
  if (auto* f = std::get_if<CubicForm>(&file)) return *f;
  if (auto* m = std::get_if<ResolutionModel>(&file)) return m->full_form();
  return quotient_cubic(std::get<DiagonalAction>(file));
}

ResolutionModel load_model(const std::string& path) {
  io::ModelFile file = io::model_file_from_json(io::parse_text(read_file(path)));
  if (auto* m = std::get_if<ResolutionModel>(&file)) return *m;
  throw SchemaError("'" + path + "' is not a resolution model {form, k, a}");
}

FieldElem parse_scalar(const std::string& text, FieldTag field) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error&) {
    j = text;  // bare rational such as 3/2
  }
  return io::field_elem_from_json(j, field);
}

unsigned default_threads() {
  if (const char* env = std::getenv("CUBIFORM_THREADS")) {
    try {
      int n = std::stoi(env);
      if (n > 0) return static_cast<unsigned>(n);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::string point_text(std::span<const FieldElem> p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ", " : "") + p[i].to_string();
  return s + ")";
}

std::string index_set(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i] + 1);
  return s + "}";
}

void write_steps(std::ostream& os, const RankCertificate& cert, const std::string& indent) {
  std::size_t n = 0;
  for (const CertificateStep& s : cert.steps) {
    os << indent << ++n << ". rows (" << s.minor.rows[0] + 1 << "," << s.minor.rows[1] + 1 << ") cols ("
       << s.minor.cols[0] + 1 << "," << s.minor.cols[1] + 1 << ")  known zeros " << index_set(s.known_zeros_before)
       << "  minor = " << s.coefficient.to_string() << "*x" << s.variable + 1 << "^2  =>  x" << s.variable + 1
       << "=0\n";
  }
  for (const CertificateBranch& b : cert.branch) {
    os << indent << "split on rows (" << b.minor.rows[0] + 1 << "," << b.minor.rows[1] + 1 << ") cols ("
       << b.minor.cols[0] + 1 << "," << b.minor.cols[1] + 1 << ")  minor = " << b.coefficient.to_string() << "*x"
       << b.first + 1 << "*x" << b.second + 1 << "\n";
    const int assumed[2] = {b.first, b.second};
    for (std::size_t c = 0; c < b.cases.size(); ++c) {
      os << indent << "case x" << assumed[c] + 1 << "=0:\n";
      write_steps(os, b.cases[c], indent + "  ");
    }
  }
}

void write_report(std::ostream& os, const ResolutionModel& model, const Verdict& v) {
  os << "verdict: " << to_string(v.status) << "\n";
  os << "model: m = " << model.fz().size() << ", k = " << model.k() << ", a = [";
  for (std::size_t i = 0; i < model.k(); ++i) os << (i ? ", " : "") << model.a()[i];
  os << "]\n";
  if (v.certificate) {
    ReplayResult replay = replay_certificate(model.fz(), *v.certificate);
    os << "certificate: " << v.certificate->step_count() << " elimination steps, "
       << (v.certificate->uses_branching() ? "with branching" : "no branching") << ", replay "
       << (replay.ok ? "ok" : "FAILED: " + replay.message) << "\n";
    write_steps(os, *v.certificate, "  ");
    os << "every class of Hessian rank <= 2 is a pullback class or a combination of at most two exceptional "
          "classes\n";
  } else if (v.counterexample) {
    os << "counterexample: " << point_text(*v.counterexample) << " has Hessian rank <= 1 on F_Z\n";
  } else {
    os << "no certificate found within the branch depth limit\n";
  }
  os << "residual assumptions (not machine-checked):\n";
  for (const std::string& s : v.residual_assumptions) os << "  - " << s << "\n";
}

class Output {
 public:
  Output(std::ostream& fallback, const std::string& path) : fallback_(fallback), path_(path) {}

  std::ostream& stream() { return path_.empty() ? fallback_ : buffer_; }

  void flush() {
    if (path_.empty()) return;
    std::ofstream f(path_);
    if (!f) throw SchemaError("cannot write '" + path_ + "'");
    f << buffer_.str();
  }

 private:
  std::ostream& fallback_;
  std::string path_;
  std::ostringstream buffer_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cubic forms of threefolds, Hessian rank strata and blow-up obstruction certificates", "cubiform"};
  app.require_subcommand(1);

  std::string out_path;
  unsigned threads = default_threads();
  int depth = 4;
  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", out_path, "Write output to FILE instead of stdout"); };
  auto add_prover = [&](CLI::App* sub) {
    sub->add_option("--threads", threads, "Worker threads for minor enumeration (env CUBIFORM_THREADS)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--depth", depth, "Maximum nested case splits")->check(CLI::NonNegativeNumber);
  };

  auto* abelian = app.add_subcommand("abelian", "Emit the cubic form of a complex 3-torus in the 15-element H^2 basis");
  add_out(abelian);

  std::string zeta;
  auto* quotient = app.add_subcommand("quotient", "Emit the quotient cubic for a diagonal cyclic action");
  quotient->add_option("--zeta", zeta, "Generator: i, -omega, -1 or 1")->required();
  add_out(quotient);

  std::string form_path;
  std::string point_text_arg;
  auto* rank_cmd = app.add_subcommand("rank", "Hessian rank of a form at a point");
  rank_cmd->add_option("form", form_path, "Model file (form, resolution model or action)")->required();
  rank_cmd->add_option("--point", point_text_arg, "Point as a JSON array, e.g. '[\"1\",\"0\"]'")->required();
  add_out(rank_cmd);

  auto* hessian = app.add_subcommand("hessian", "Print the Hessian as a matrix of linear forms");
  hessian->add_option("form", form_path, "Model file")->required();
  add_out(hessian);

  std::string a_text;
  std::string b_text;
  auto* bpoint = app.add_subcommand("blowup-point", "Cubic after blowing up a point: a x0^3 + F");
  bpoint->add_option("form", form_path, "Model file")->required();
  bpoint->add_option("--a", a_text, "E^3 (nonzero)")->required();
  add_out(bpoint);

  auto* bcurve = app.add_subcommand("blowup-curve", "Cubic after blowing up a curve: a x0^3 + 3 sum b_i x0^2 x_i + F");
  bcurve->add_option("form", form_path, "Model file")->required();
  bcurve->add_option("--a", a_text, "E^3")->required();
  bcurve->add_option("--b", b_text, "JSON array of E^2 . f*gamma_i")->required();
  add_out(bcurve);

  auto* resolve = app.add_subcommand("resolve", "Build a resolution model F_Z + sum a_i y_i^3");
  resolve->add_option("form", form_path, "Model file for F_Z");
  resolve->add_option("--zeta", zeta, "Use the quotient cubic of this action as F_Z");
  resolve->add_option("--a", a_text, "JSON array of nonzero integers E_i^3")->required();
  add_out(resolve);

  auto* certify = app.add_subcommand("certify", "Prove that Hessian rank <= 1 only at the origin");
  certify->add_option("form", form_path, "Model file")->required();
  add_prover(certify);
  add_out(certify);

  bool as_json = false;
  auto* obstruct = app.add_subcommand("obstruct", "Decide the blow-down obstruction for a resolution model");
  obstruct->add_option("model", form_path, "Resolution model file")->required();
  obstruct->add_flag("--json", as_json, "Emit the verdict as JSON");
  add_prover(obstruct);
  add_out(obstruct);

  std::vector<std::string> argv(args.rbegin(), args.rend());
  if (!argv.empty()) argv.pop_back();
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    Output output(out, out_path);
    std::ostream& os = output.stream();
    int code = kExitOk;
    ProverOptions options{depth, threads};

    if (*abelian) {
      os << io::dump(io::to_json(abelian_cubic()));
    } else if (*quotient) {
      os << io::dump(io::to_json(quotient_cubic(DiagonalAction(io::parse_zeta(zeta)))));
    } else if (*rank_cmd) {
      CubicForm f = load_form(form_path);
      Json pj = io::parse_text(point_text_arg);
      auto ptag = io::point_field(pj);
      if (!ptag) throw SchemaError("point mixes i and omega coordinates");
      if (f.tag() == FieldTag::Q && *ptag != FieldTag::Q) f = f.widen(*ptag);
      Point p = io::point_from_json(pj, f.tag());
      Matrix h = hessian_at(f, p);
      Json rows = Json::array();
      for (std::size_t r = 0; r < h.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < h.cols(); ++c) row.push_back(io::to_json(h(r, c)));
        rows.push_back(std::move(row));
      }
      os << io::dump(Json{{"rank", rank(h)}, {"hessian", std::move(rows)}});
    } else if (*hessian) {
      CubicForm f = load_form(form_path);
      HessianForm h = hessian_form(f);
      Json rows = Json::array();
      for (std::size_t r = 0; r < h.size(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < h.size(); ++c) row.push_back(h(r, c).to_string());
        rows.push_back(std::move(row));
      }
      os << io::dump(Json{{"m", f.size()}, {"field", std::string(field_name(f.tag()))}, {"hessian", std::move(rows)}});
    } else if (*bpoint) {
      CubicForm f = load_form(form_path);
      os << io::dump(io::to_json(blowup_point(f, parse_scalar(a_text, f.tag()))));
    } else if (*bcurve) {
      CubicForm f = load_form(form_path);
      Point b = io::point_from_json(io::parse_text(b_text), f.tag());
      os << io::dump(io::to_json(blowup_curve(f, parse_scalar(a_text, f.tag()), b)));
    } else if (*resolve) {
      if (form_path.empty() == zeta.empty()) throw SchemaError("resolve needs exactly one of a form file or --zeta");
      CubicForm fz = zeta.empty() ? load_form(form_path) : quotient_cubic(DiagonalAction(io::parse_zeta(zeta)));
      Json model{{"form", io::to_json(fz)}, {"a", io::parse_text(a_text)}};
      os << io::dump(io::to_json(io::model_from_json(model)));
    } else if (*certify) {
      CubicForm f = load_form(form_path);
      CertifyResult r = certify_rank1_trivial(f, options);
      os << io::dump(io::to_json(r, f.tag()));
      if (r.status != CertifyStatus::Certified) code = kExitInconclusive;
    } else if (*obstruct) {
      ResolutionModel model = load_model(form_path);
      Verdict v = decide_blowdown_obstruction(model, options);
      if (as_json) os << io::dump(io::to_json(v, model.fz().tag()));
      else write_report(os, model, v);
      if (v.status != VerdictStatus::Obstructed) code = kExitInconclusive;
    }
    output.flush();
    return code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace cubiform::cli
