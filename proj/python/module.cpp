// Python bindings. Forms, models and results cross the boundary as JSON text
// in the same schema the command line tool reads and writes.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cubiform/exterior.hpp"
#include "cubiform/io.hpp"
#include "cubiform/obstruct.hpp"
#include "cubiform/quotient.hpp"

namespace py = pybind11;
using namespace cubiform;

namespace {

CubicForm form_of(const std::string& text) {
  io::ModelFile file = io::model_file_from_json(io::parse_text(text));
  if (auto* f = std::get_if<CubicForm>(&file)) return *f;
  if (auto* m = std::get_if<ResolutionModel>(&file)) return m->full_form();
  return quotient_cubic(std::get<DiagonalAction>(file));
}

std::size_t hessian_rank(const std::string& form, const std::string& point) {
  CubicForm f = form_of(form);
  io::Json pj = io::parse_text(point);
  auto tag = io::point_field(pj);
  if (!tag) throw io::SchemaError("point mixes i and omega coordinates");
  if (f.tag() == FieldTag::Q && *tag != FieldTag::Q) f = f.widen(*tag);
  return hessian_rank_at(f, io::point_from_json(pj, f.tag()));
}

std::string resolve(const std::string& form, const std::vector<long>& a) {
  return io::dump(io::to_json(ResolutionModel(form_of(form), a)));
}

std::string certify(const std::string& form, unsigned threads, int depth) {
  CubicForm f = form_of(form);
  CertifyResult r;
  {
    py::gil_scoped_release release;
    r = certify_rank1_trivial(f, ProverOptions{depth, threads});
  }
  return io::dump(io::to_json(r, f.tag()));
}

std::string obstruct(const std::string& model_text, unsigned threads, int depth) {
  ResolutionModel model = io::model_from_json(io::parse_text(model_text));
  Verdict v;
  {
    py::gil_scoped_release release;
    v = decide_blowdown_obstruction(model, ProverOptions{depth, threads});
  }
  return io::dump(io::to_json(v, model.fz().tag()));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  py::register_exception<Error>(m, "CubiformError", PyExc_ValueError);

  m.def("abelian_cubic", [] { return io::dump(io::to_json(abelian_cubic())); });
  m.def("quotient_cubic",
        [](const std::string& zeta) { return io::dump(io::to_json(quotient_cubic(DiagonalAction(io::parse_zeta(zeta))))); },
        py::arg("zeta"));
  m.def("hessian_rank", &hessian_rank, py::arg("form"), py::arg("point"));
  m.def("resolve", &resolve, py::arg("form"), py::arg("a"));
  m.def("certify", &certify, py::arg("form"), py::arg("threads") = 1, py::arg("depth") = 4);
  m.def("obstruct", &obstruct, py::arg("model"), py::arg("threads") = 1, py::arg("depth") = 4);
}
