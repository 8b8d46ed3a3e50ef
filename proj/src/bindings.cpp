#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gtq/drinfeld.hpp"
#include "gtq/error.hpp"
#include "gtq/json_io.hpp"
#include "gtq/quiver.hpp"
#include "gtq/tableau.hpp"

namespace py = pybind11;
using namespace gtq;

namespace {

// rationals cross the boundary as fractions.Fraction; anything with a sane
// str() (int, str, Fraction) is accepted on the way in
Rat rat_in(py::handle h) { return parse_rat(py::str(h).cast<std::string>()); }

py::object rat_out(const Rat& r) {
    return py::module_::import("fractions").attr("Fraction")(rat_str(r));
}

py::object dict_out(const json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

Tableau tableau_in(py::handle rows) {
    std::vector<std::vector<Rat>> out;
    for (py::handle row : py::reinterpret_borrow<py::sequence>(rows)) {
        std::vector<Rat> r;
        for (py::handle e : py::reinterpret_borrow<py::sequence>(row)) r.push_back(rat_in(e));
        out.push_back(std::move(r));
    }
    return Tableau(out);
}

PathWord resolve_word(const QuiverWindow& w, const std::vector<std::tuple<std::string, int, int>>& steps) {
    PathWord word;
    int cur = w.vertex_index(canonical_ideal(w.root()));
    for (const auto& [kind, m, i] : steps) {
        if (kind != "b" && kind != "c") throw InputError("step kind must be \"b\" or \"c\"");
        int e = w.edge_at(cur, kind[0], m, i);
        if (e < 0)
            throw InputError("step " + kind + " at row " + std::to_string(m) + ", position " +
                             std::to_string(i) + " leaves the window or hits a critical point");
        word.edges.push_back(e);
        cur = w.edges()[e].target;
    }
    return word;
}

DrinfeldKind kind_in(const std::string& k) {
    if (k == "a") return DrinfeldKind::A;
    if (k == "b") return DrinfeldKind::B;
    if (k == "c") return DrinfeldKind::C;
    if (k == "d") return DrinfeldKind::D;
    throw InputError("kind must be one of a, b, c, d");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact Gelfand-Tsetlin / Drinfeld quiver toolkit";

    py::register_exception<Error>(m, "Error");
    py::register_exception<InputError>(m, "InputError");
    py::register_exception<InconsistentConstraints>(m, "InconsistentConstraints");
    py::register_exception<IrreducibleWord>(m, "IrreducibleWord");
    static py::exception<NonGenericWindow> exc_nongeneric(m, "NonGenericWindowError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const NonGenericWindow& e) {
            py::set_error(exc_nongeneric, e.what());
        }
    });

    py::class_<Tableau>(m, "Tableau")
        .def(py::init(&tableau_in), py::arg("rows"),
             "rows bottom-up: rows[m-1] has m entries (int, str, or Fraction)")
        .def_property_readonly("n", &Tableau::rank)
        .def("rows",
             [](const Tableau& t) {
                 py::list out;
                 for (const auto& row : t.rows()) {
                     py::list r;
                     for (const auto& e : row) r.append(rat_out(e));
                     out.append(r);
                 }
                 return out;
             })
        .def("entry", [](const Tableau& t, int m, int i) { return rat_out(t.entry(m, i)); },
             py::arg("m"), py::arg("i"))
        .def("__eq__", [](const Tableau& a, const Tableau& b) { return a == b; })
        .def("__repr__",
             [](const Tableau& t) { return "Tableau(" + tableau_to_json(t).dump() + ")"; });

    py::class_<AlgebraElement>(m, "AlgebraElement")
        .def("__str__", &AlgebraElement::str)
        .def("__repr__", &AlgebraElement::str)
        .def("__eq__", [](const AlgebraElement& a, const AlgebraElement& b) { return a == b; })
        .def("is_zero", &AlgebraElement::is_zero)
        .def("to_dict", [](const AlgebraElement& a) { return dict_out(algebra_to_json(a)); });

    py::class_<UPoly>(m, "UPoly")
        .def("__eq__", [](const UPoly& a, const UPoly& b) { return a == b; })
        .def("degree", &UPoly::degree_u)
        .def("coeff", [](const UPoly& p, int d) { return p.coeff(d); }, py::arg("d"))
        .def("evaluate", [](const UPoly& p, py::handle x) { return p.evaluate(rat_in(x)); },
             py::arg("x"))
        .def("to_dict", [](const UPoly& p) { return dict_out(upoly_to_json(p)); });

    m.def("classify", [](const Tableau& t) { return dict_out(classification_to_json(classify_tableau(t))); },
          py::arg("tableau"), "kind (generic / singular / critical) and the offending pairs");
    m.def("gamma", [](const Tableau& t, int mm, int k) { return rat_out(gamma_value(t, mm, k)); },
          py::arg("tableau"), py::arg("m"), py::arg("k"));
    m.def("alpha",
          [](const Tableau& t, int mm) {
              ScalarPoly p = alpha_polynomial(t, mm);
              py::list out;
              for (int d = 0; d <= p.degree(); ++d) out.append(rat_out(p.coeff(d)));
              return out;
          },
          py::arg("tableau"), py::arg("m"), "coefficients of alpha_m, constant term first");
    m.def("canonical_rows",
          [](const Tableau& t) {
              py::list out;
              GTIdeal ideal = canonical_ideal(t);
              for (const auto& row : ideal.rows()) {
                  py::list r;
                  for (const auto& e : row) r.append(rat_out(e));
                  out.append(r);
              }
              return out;
          },
          py::arg("tableau"), "row-sorted (descending) canonical form of the maximal ideal");
    m.def("same_component",
          [](const Tableau& a, const Tableau& b) { return same_nc_component(a, b); },
          py::arg("a"), py::arg("b"));
    m.def("orbit_equivalent",
          [](const Tableau& a, const Tableau& b) { return module_orbit_equivalent(a, b); },
          py::arg("a"), py::arg("b"));

    m.def("generator",
          [](int n, int i, int j) { return AlgebraElement::generator(n, i, j); },
          py::arg("n"), py::arg("i"), py::arg("j"));
    m.def("gt_generator", &gt_generator, py::arg("n"), py::arg("m"), py::arg("k"));
    m.def("drinfeld_polynomial",
          [](int n, const std::string& kind, int mm) {
              return drinfeld_polynomial(n, kind_in(kind), mm);
          },
          py::arg("n"), py::arg("kind"), py::arg("m"));
    m.def("hw_eigenvalue",
          [](const AlgebraElement& a, py::handle lam) {
              std::vector<Rat> l;
              for (py::handle x : py::reinterpret_borrow<py::sequence>(lam)) l.push_back(rat_in(x));
              return rat_out(hw_eigenvalue(a, l));
          },
          py::arg("element"), py::arg("weight"));
    m.def("verify", [](int n) { return dict_out(report_to_json(verify_nt_relations(n))); },
          py::arg("n"), "exact residuals of the nine defining relation families");

    py::class_<QuiverWindow>(m, "Window")
        .def(py::init([](const Tableau& root, int radius) { return build_window(root, radius); }),
             py::arg("root"), py::arg("radius"))
        .def_property_readonly("n", &QuiverWindow::rank)
        .def_property_readonly("radius", &QuiverWindow::radius)
        .def("vertex_count", [](const QuiverWindow& w) { return w.vertices().size(); })
        .def("edge_count", [](const QuiverWindow& w) { return w.edges().size(); })
        .def("to_dict", [](const QuiverWindow& w) { return dict_out(window_to_json(w)); })
        .def("solve",
             [](const QuiverWindow& w, unsigned long tree_seed) {
                 return dict_out(module_to_json(w, solve_module(w, tree_seed)));
             },
             py::arg("tree_seed") = 0)
        .def("reduce",
             [](const QuiverWindow& w, const std::vector<std::tuple<std::string, int, int>>& steps) {
                 return rat_out(reduce_cycle(w, resolve_word(w, steps)));
             },
             py::arg("word"), "word: list of (kind, m, i) steps applied from the root")
        .def("probe",
             [](const QuiverWindow& w, int samples, int max_len, unsigned long seed, int vertex) {
                 int base = vertex >= 0 ? vertex : w.vertex_index(canonical_ideal(w.root()));
                 return dict_out(probe_to_json(cyclic_dimension_probe(w, base, samples, max_len, seed)));
             },
             py::arg("samples") = 100, py::arg("max_len") = 8, py::arg("seed") = 1,
             py::arg("vertex") = -1);
}
