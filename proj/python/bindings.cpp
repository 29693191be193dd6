#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lrw/json_io.hpp"

namespace py = pybind11;
using namespace lrw;

namespace {

// value wrapper so python can hold the immutable presentation
struct PyPresentation {
    Presentation ptr;
};

std::string dump(const Json& j) { return j.dump(2); }

EnvelopingMode mode_from_string(const std::string& m) {
    if (m == "twisted")
        return EnvelopingMode::Twisted;
    if (m == "central")
        return EnvelopingMode::Central;
    throw InputError("mode must be 'twisted' or 'central'");
}

}  // namespace

PYBIND11_MODULE(_lrworkbench, m) {
    m.doc() = "Exact Lie-Rinehart workbench: cohomology, PBW rewriting, window "
              "modules, Chern classes";

    py::register_exception<InputError>(m, "InputError");
    py::register_exception<GradingError>(m, "GradingError");
    py::register_exception<PreconditionError>(m, "PreconditionError");

    py::class_<PyPresentation>(m, "Presentation")
        .def_static("torus", [](int n) { return PyPresentation{LiePresentation::torus(n)}; },
                    py::arg("n"))
        .def_static("affine", [](int n) { return PyPresentation{LiePresentation::affine(n)}; },
                    py::arg("n"))
        .def_static("point_abelian",
                    [](int l) { return PyPresentation{LiePresentation::point_abelian(l)}; },
                    py::arg("l"))
        .def_static("from_json",
                    [](const std::string& text) {
                        try {
                            return PyPresentation{presentation_from_json(Json::parse(text))};
                        } catch (const Json::exception& e) {
                            throw InputError(e.what());
                        }
                    })
        .def_property_readonly("rank", [](const PyPresentation& p) { return p.ptr->rank(); })
        .def_property_readonly("num_vars",
                               [](const PyPresentation& p) { return p.ptr->context()->num_vars(); })
        .def("describe",
             [](const PyPresentation& p) { return dump(presentation_json(p.ptr)); })
        .def("check_axioms",
             [](const PyPresentation& p, std::uint64_t seed) {
                 return dump(axiom_report_json(p.ptr->check_axioms(seed)));
             },
             py::arg("seed") = 1)
        .def("is_graded",
             [](const PyPresentation& p) { return p.ptr->generator_degrees().has_value(); });

    py::class_<Cochain>(m, "Cochain")
        .def_static("zero",
                    [](const PyPresentation& pres, int degree) { return Cochain(pres.ptr, degree); },
                    py::arg("presentation"), py::arg("degree"))
        .def_static("from_json",
                    [](const PyPresentation& pres, const std::string& text) {
                        try {
                            return cochain_from_json(pres.ptr, Json::parse(text));
                        } catch (const Json::exception& e) {
                            throw InputError(e.what());
                        }
                    })
        .def_static("constant_two_form",
                    [](const PyPresentation& pres, int i, int j, const std::string& coeff) {
                        Cochain c(pres.ptr, 2);
                        c.set_value({i, j}, LaurentPoly::constant(pres.ptr->context(),
                                                                  Rational::parse(coeff)));
                        return c;
                    },
                    py::arg("presentation"), py::arg("i"), py::arg("j"), py::arg("coeff") = "1")
        .def_property_readonly("degree", &Cochain::degree)
        .def("to_json", [](const Cochain& c) { return dump(cochain_json(c)); })
        .def("is_zero", &Cochain::is_zero)
        .def("scaled",
             [](const Cochain& c, const std::string& q) { return c.scaled(Rational::parse(q)); })
        .def("__add__", [](const Cochain& a, const Cochain& b) { return a + b; })
        .def("__sub__", [](const Cochain& a, const Cochain& b) { return a - b; })
        .def("__eq__", [](const Cochain& a, const Cochain& b) { return a == b; });

    m.def("differential", &ce_differential, py::arg("cochain"));
    m.def("is_cocycle", &is_cocycle, py::arg("cochain"));
    m.def("wedge", &wedge, py::arg("a"), py::arg("b"));
    m.def("class_equal", &class_equal, py::arg("a"), py::arg("b"));
    m.def("class_is_zero", &class_is_zero, py::arg("a"));

    m.def(
        "cohomology",
        [](const PyPresentation& pres, int p, int D) {
            return dump(cohomology_window_json(cohomology_window(pres.ptr, p, D)));
        },
        py::arg("presentation"), py::arg("p"), py::arg("window") = 4);
    m.def(
        "betti",
        [](const PyPresentation& pres, int D) {
            std::vector<int> out;
            for (int p = 0; p <= pres.ptr->rank(); ++p)
                out.push_back(cohomology_window(pres.ptr, p, D).dimension);
            return out;
        },
        py::arg("presentation"), py::arg("window") = 4);
    m.def(
        "char_ring_dim",
        [](const PyPresentation& pres, const std::vector<Cochain>& basis, int D) {
            return char_ring_dim(pres.ptr, basis, D).dimension;
        },
        py::arg("presentation"), py::arg("basis"), py::arg("window") = 4);

    m.def(
        "normal_form",
        [](const PyPresentation& pres, const Cochain& twist, const std::string& mode,
           const std::string& word_json) {
            RewriteSystem sys(pres.ptr, twist, mode_from_string(mode));
            Word w;
            try {
                w = word_from_json(pres.ptr->context(), Json::parse(word_json));
            } catch (const Json::exception& e) {
                throw InputError(e.what());
            }
            return dump(uelement_json(sys.normal_form(w)));
        },
        py::arg("presentation"), py::arg("twist"), py::arg("mode"), py::arg("word_json"));
    m.def(
        "diamond_check",
        [](const PyPresentation& pres, const Cochain& twist, const std::string& mode) {
            RewriteSystem sys(pres.ptr, twist, mode_from_string(mode));
            return dump(confluence_report_json(sys.diamond_check()));
        },
        py::arg("presentation"), py::arg("twist"), py::arg("mode") = "twisted");

    m.def("rank_formula", &window_rank_formula, py::arg("l"), py::arg("k"), py::arg("i"));
    m.def(
        "window_module_report",
        [](const PyPresentation& pres, const Cochain& twist, int k, int i) {
            auto sys =
                std::make_shared<const RewriteSystem>(pres.ptr, twist, EnvelopingMode::Twisted);
            WindowModule mod = build_window_module(sys, k, i);
            return dump(window_module_json(mod, window_curvature_report(mod)));
        },
        py::arg("presentation"), py::arg("twist"), py::arg("k"), py::arg("i"));

    m.def(
        "chern_report",
        [](const PyPresentation& pres, const std::string& connection_json) {
            Connection conn;
            try {
                conn = connection_from_json(pres.ptr, Json::parse(connection_json));
            } catch (const Json::exception& e) {
                throw InputError(e.what());
            }
            Json j;
            j["rank"] = conn.rank;
            j["curvature"] = curvature_form_json(curvature(conn));
            j["trace"] = cochain_json(trace_curvature(conn));
            CohomologyClass cls = c1(conn);
            j["c1"] = cochain_json(cls.representative);
            j["c1_class_zero"] = class_is_zero(cls.representative);
            j["ch"] = even_poly_json(chern_character(conn));
            return dump(j);
        },
        py::arg("presentation"), py::arg("connection_json"));

    m.def(
        "c1_section_report",
        [](const PyPresentation& pres, const Cochain& c, int k, int i) {
            KClass section = c1_section(pres.ptr, c, k, i);
            Json j;
            j["section"] = kclass_json(section);
            j["c1_matches_class"] = class_equal(k_c1(pres.ptr, section), c);
            j["flat_connection_obstructed"] = !class_is_zero(c);
            return dump(j);
        },
        py::arg("presentation"), py::arg("c"), py::arg("k"), py::arg("i"));

    m.def(
        "kernel_demo",
        [](const PyPresentation& pres, const std::vector<Cochain>& F, const std::vector<int>& ks,
           const std::vector<int>& is, int k0, int i0) {
            Json j;
            j["eta"] = kernel_sum_json(kernel_sum_demo(pres.ptr, F, ks, is, k0, i0));
            j["omega"] = kernel_product_json(kernel_product_demo(pres.ptr, F, ks, is, k0, i0));
            return dump(j);
        },
        py::arg("presentation"), py::arg("F"), py::arg("ks"), py::arg("is_"), py::arg("k0"),
        py::arg("i0"));
}
