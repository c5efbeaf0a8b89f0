#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "klr/brauer.hpp"
#include "klr/classifier.hpp"
#include "klr/error.hpp"
#include "klr/maximal_weights.hpp"
#include "klr/quiver_io.hpp"
#include "klr/tableaux_gdim.hpp"
#include "klr/weight_quiver.hpp"

namespace py = pybind11;
using namespace klr;

namespace {

TClass parse_t(const std::string& t) {
    if (t == "two") return TClass::TIsTwo;
    if (t == "minus-two") return TClass::TIsMinusTwo;
    if (t == "sign") return TClass::TIsSignEll;
    if (t == "other") return TClass::TOther;
    throw py::value_error("t must be one of two, minus-two, sign, other");
}

std::map<int, long long> poly_dict(const LaurentPoly& p) { return {p.terms().begin(), p.terms().end()}; }

} // namespace

PYBIND11_MODULE(_klrtype, m) {
    py::register_exception<Error>(m, "KlrError");

    m.def("equiv_class", &equiv_class, py::arg("weight"));
    m.def("solve_x", &solve_x, py::arg("base"), py::arg("target"));
    m.def(
        "max_plus",
        [](const IntVec& base) {
            py::list out;
            for (const MaxWeightEntry& e : max_plus(base)) {
                py::dict d;
                d["weight"] = e.weight;
                d["x"] = e.x;
                d["beta"] = e.beta.coeffs;
                d["max_weight"] = py::make_tuple(e.max_weight.lambda, e.max_weight.delta);
                out.append(d);
            }
            return out;
        },
        py::arg("base"));
    m.def("quiver_json", [](const IntVec& base) { return to_json(build_quiver(base)).dump(); }, py::arg("base"));
    m.def("tquiver_json", [](const IntVec& base) { return to_json(t_subquiver(base)).dump(); }, py::arg("base"));
    m.def("quiver_dot", [](const IntVec& base) { return to_dot(build_quiver(base)); }, py::arg("base"));
    m.def(
        "classify",
        [](const IntVec& base, const IntVec& beta, int char_p, const std::string& t) {
            return std::string(to_string(classify(base, RootVector{beta}, FieldParams{char_p, parse_t(t)})));
        },
        py::arg("base"), py::arg("beta"), py::arg("char_p") = 0, py::arg("t") = "other");
    m.def(
        "graded_dim",
        [](const IntVec& base, const IntVec& beta, const IntVec& nu, const IntVec& nu2) {
            return poly_dict(graded_dim(canonical_charges(base), RootVector{beta}, nu, nu2));
        },
        py::arg("base"), py::arg("beta"), py::arg("nu"), py::arg("nu2"));
    m.def(
        "graded_dim_total",
        [](const IntVec& base, const IntVec& beta) {
            return poly_dict(graded_dim_total(canonical_charges(base), RootVector{beta}));
        },
        py::arg("base"), py::arg("beta"));
    m.def("line_cartan", [](int n, int mult) { return cartan_matrix(line_graph(n, mult)); }, py::arg("n_edges"),
          py::arg("mult"));
    m.def("gamma_cartan", [](int s, int a, int mult) { return cartan_matrix(gamma_family(s, a, mult)); },
          py::arg("s"), py::arg("a"), py::arg("mult"));
    m.def(
        "decomp_search",
        [](const IntMatrix& c, int max_entry, bool unitriangular) {
            return decomp_search(c, DecompOptions{max_entry, unitriangular, 50'000'000}).solutions;
        },
        py::arg("cartan"), py::arg("max_entry") = 0, py::arg("unitriangular") = true);
}
