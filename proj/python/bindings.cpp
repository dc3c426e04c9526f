#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cering/run.hpp"
#include "cering/verify.hpp"

namespace py = pybind11;
using namespace cering;

namespace {

// Element handle with operator arithmetic; algebra identity is enforced
// by the underlying library.
struct PyElement {
    Element elem;

    std::string str() const { return elem.to_string(); }
};

struct PyAlgebra {
    AlgebraPtr alg;

    PyElement element(const std::string& expr) const {
        return PyElement{Element(alg, parse_element(*alg, expr))};
    }
};

RunConfig make_config(const std::string& input, const std::string& method, uint64_t seed,
                      const std::vector<std::string>& skip, size_t jobs) {
    RunConfig cfg;
    cfg.input = input;
    cfg.method = ce_method_from_name(method);
    cfg.seed = seed;
    cfg.skip = std::set<std::string>(skip.begin(), skip.end());
    cfg.jobs = jobs;
    return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact structure-constant algebra core";

    py::register_exception<Error>(m, "CeringError");

    py::class_<PyAlgebra>(m, "Algebra")
        .def_property_readonly("name", [](const PyAlgebra& a) { return a.alg->name(); })
        .def_property_readonly("dim", [](const PyAlgebra& a) { return a.alg->dim(); })
        .def_property_readonly("field", [](const PyAlgebra& a) { return a.alg->field().name(); })
        .def_property_readonly("basis",
                               [](const PyAlgebra& a) { return a.alg->basis_labels(); })
        .def("is_commutative", [](const PyAlgebra& a) { return a.alg->is_commutative(); })
        .def("element", &PyAlgebra::element, py::arg("expr"),
             "parse an element expression over this algebra")
        .def("center_elements",
             [](const PyAlgebra& a) {
                 Subspace c = center(a.alg);
                 std::vector<std::string> out;
                 for (const auto& r : c.rows()) out.push_back(a.alg->format_element(r));
                 return out;
             })
        .def("radical_elements",
             [](const PyAlgebra& a) {
                 Subspace j = jacobson_radical(a.alg);
                 std::vector<std::string> out;
                 for (const auto& r : j.rows()) out.push_back(a.alg->format_element(r));
                 return out;
             })
        .def("__repr__",
             [](const PyAlgebra& a) {
                 return "<Algebra " + a.alg->name() + " dim=" + std::to_string(a.alg->dim()) +
                        ">";
             });

    py::class_<PyElement>(m, "Element")
        .def("__mul__", [](const PyElement& a, const PyElement& b) {
            return PyElement{a.elem * b.elem};
        })
        .def("__add__", [](const PyElement& a, const PyElement& b) {
            return PyElement{a.elem + b.elem};
        })
        .def("__sub__", [](const PyElement& a, const PyElement& b) {
            return PyElement{a.elem - b.elem};
        })
        .def("commutator", [](const PyElement& a, const PyElement& b) {
            return PyElement{a.elem.commutator(b.elem)};
        })
        .def("is_zero", [](const PyElement& a) { return a.elem.is_zero(); })
        .def("__eq__", [](const PyElement& a, const PyElement& b) { return a.elem == b.elem; })
        .def("__str__", &PyElement::str)
        .def("__repr__", [](const PyElement& a) { return "<Element " + a.str() + ">"; });

    m.def("algebra", [](const std::string& input) { return PyAlgebra{resolve_input(input)}; },
          py::arg("input"),
          "build an algebra from a construction name or a spec-file path");

    m.def("load_spec_text",
          [](const std::string& text, const std::string& name) {
              return PyAlgebra{algebra_from_spec_text(text, name)};
          },
          py::arg("text"), py::arg("name") = "spec");

    m.def("build_json",
          [](const std::string& input) { return cmd_build(make_config(input, "auto", 1, {}, 1)).dump(); },
          py::arg("input"));

    m.def("report_json",
          [](const std::string& input, const std::string& method, uint64_t seed,
             const std::vector<std::string>& skip) {
              return cmd_report(make_config(input, method, seed, skip, 1)).dump();
          },
          py::arg("input"), py::arg("method") = "auto", py::arg("seed") = 1,
          py::arg("skip") = std::vector<std::string>{});

    m.def("quotient_json",
          [](const std::string& input, const std::vector<std::string>& generators,
             const std::string& method, uint64_t seed) {
              RunConfig cfg = make_config(input, method, seed, {}, 1);
              cfg.generators = generators;
              return cmd_quotient(cfg).dump();
          },
          py::arg("input"), py::arg("generators"), py::arg("method") = "auto",
          py::arg("seed") = 1);

    m.def("scan_json",
          [](const std::string& family, const std::string& method, uint64_t seed, size_t jobs) {
              RunConfig cfg = make_config("", method, seed, {}, jobs);
              cfg.family = family;
              return cmd_scan(cfg).dump();
          },
          py::arg("family"), py::arg("method") = "auto", py::arg("seed") = 1,
          py::arg("jobs") = 1);

    m.def("verify_paper_json",
          [](uint64_t seed) { return verify_to_json(verify_paper(seed)).dump(); },
          py::arg("seed") = 1);

    m.attr("__version__") = "0.1.0";
}
