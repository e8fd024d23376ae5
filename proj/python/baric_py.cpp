#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "baric/cli.hpp"
#include "baric/document.hpp"
#include "baric/ideals.hpp"
#include "baric/propcheck.hpp"

namespace py = pybind11;
using namespace baric;

namespace {

using Coords = std::vector<std::string>;

Coords to_strings(const Vector& v) {
  Coords out;
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

Vector from_strings(const Coords& c, const FieldSpec& field) {
  Vector v;
  for (const auto& s : c) v.push_back(parse_scalar(s, field));
  return v;
}

std::vector<Coords> basis_of(const Subspace& s) {
  std::vector<Coords> out;
  for (const auto& v : s.basis_vectors()) out.push_back(to_strings(v));
  return out;
}

py::dict flags_of(const BaricAlgebra& b) {
  const auto f = property_flags(b.algebra());
  py::dict d;
  d["commutative"] = f.commutative;
  d["associative"] = f.associative;
  d["left_alternative"] = f.left_alternative;
  d["right_alternative"] = f.right_alternative;
  d["unital"] = f.unital;
  d["unit"] = f.unit ? py::cast(to_strings(*f.unit)) : py::none();
  d["center_dim"] = commutative_center(b.algebra()).dim();
  return d;
}

py::object decompose(const BaricAlgebra& b, const std::vector<Coords>& candidates) {
  std::vector<Vector> cands;
  for (const auto& c : candidates) cands.push_back(from_strings(c, b.field()));
  const auto d = decomposability(b, cands);
  py::dict out;
  out["kind"] = to_string(d.kind);
  out["idempotent"] = d.idempotent ? py::cast(to_strings(*d.idempotent)) : py::none();
  out["first"] = d.first ? py::cast(basis_of(*d.first)) : py::none();
  out["second"] = d.second ? py::cast(basis_of(*d.second)) : py::none();
  return std::move(out);
}

py::object classify(const BaricAlgebra& b) {
  const auto c = classify_scalar_action(b);
  if (!c) return py::none();
  py::dict out;
  std::vector<Coords> transform, iso;
  for (const auto& r : c->transform.row_vectors()) transform.push_back(to_strings(r));
  for (const auto& r : c->isomorphism.row_vectors()) iso.push_back(to_strings(r));
  out["transform"] = transform;
  out["isomorphism"] = iso;
  out["target"] = c->target;
  out["verified"] = baric_isomorphic_by(c->isomorphism, b, c->target);
  return std::move(out);
}

}  // namespace

PYBIND11_MODULE(_baric, m) {
  m.doc() = "Exact baric algebras and bowtie products";

  static py::exception<Error> error(m, "BaricError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  py::class_<BaricAlgebra>(m, "BaricAlgebra")
      .def_static("from_json", &load_document, py::arg("text"))
      .def_static("load", [](const std::string& path) { return load(path); }, py::arg("path"))
      .def("to_json", &save_document)
      .def("save", [](const BaricAlgebra& b, const std::string& path) { save(b, path); }, py::arg("path"))
      .def_property_readonly("dim", &BaricAlgebra::dim)
      .def_property_readonly("field", [](const BaricAlgebra& b) { return b.field().to_string(); })
      .def_property_readonly("weight", [](const BaricAlgebra& b) { return to_strings(b.weight().values()); })
      .def_property_readonly("is_bowtie", [](const BaricAlgebra& b) { return b.provenance().has_value(); })
      .def("multiply",
           [](const BaricAlgebra& b, const Coords& x, const Coords& y) {
             return to_strings(multiply(b.algebra(), from_strings(x, b.field()), from_strings(y, b.field())));
           },
           py::arg("x"), py::arg("y"))
      .def("kernel", [](const BaricAlgebra& b) { return basis_of(b.kernel()); })
      .def("__eq__", [](const BaricAlgebra& a, const BaricAlgebra& b) { return a == b; })
      .def("__repr__", [](const BaricAlgebra& b) {
        return "<BaricAlgebra dim=" + std::to_string(b.dim()) + " field=" + b.field().to_string() + ">";
      });

  m.def("bowtie", &bowtie, py::arg("left"), py::arg("right"));
  m.def("kpow", [](std::size_t n, const std::string& field) { return kpow(FieldSpec::parse(field), n); },
        py::arg("n"), py::arg("field") = "q");
  m.def("dual_numbers", [](const std::string& field) { return dual_numbers(FieldSpec::parse(field)); },
        py::arg("field") = "q");
  m.def("componentwise", [](std::size_t n, const std::string& field) { return componentwise(FieldSpec::parse(field), n); },
        py::arg("n"), py::arg("field") = "q");
  m.def("random_baric",
        [](const std::string& field, std::size_t dim, bool commutative, bool unital, std::uint64_t seed) {
          return random_baric(FieldSpec::parse(field), dim, {commutative, unital}, seed);
        },
        py::arg("field"), py::arg("dim"), py::arg("commutative") = false, py::arg("unital") = false,
        py::arg("seed") = 0);
  m.def("property_flags", &flags_of, py::arg("algebra"));
  m.def("weights", [](const BaricAlgebra& b) {
    std::vector<Coords> out;
    for (const auto& w : enumerate_weights(b.algebra())) out.push_back(to_strings(w.values()));
    return out;
  });
  m.def("kernel_ideals", [](const BaricAlgebra& b) {
    std::vector<std::vector<Coords>> out;
    for (const auto& s : kernel_ideals(b)) out.push_back(basis_of(s));
    return out;
  });
  m.def("decompose", &decompose, py::arg("algebra"), py::arg("candidates") = std::vector<Coords>{});
  m.def("classify", &classify, py::arg("algebra"));
  m.def("proposition_ids", [] {
    std::vector<std::string> ids;
    for (auto id : proposition_ids()) ids.emplace_back(id);
    return ids;
  });
  m.def("check",
        [](const std::string& id, std::size_t trials, std::uint64_t seed) {
          const auto r = check(id, trials, seed);
          py::dict d;
          d["proposition_id"] = r.proposition_id;
          d["trials"] = r.trials;
          d["failures"] = r.failures;
          d["seed"] = r.seed;
          d["first_counterexample"] = r.first_counterexample ? py::cast(*r.first_counterexample) : py::none();
          d["line"] = r.to_line();
          return d;
        },
        py::arg("proposition_id"), py::arg("trials") = 20, py::arg("seed") = 1);
  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
