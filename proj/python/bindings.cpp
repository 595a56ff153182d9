// Python bindings for the main operations; heavy lifting stays in C++.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dshift/dilation.hpp"
#include "dshift/extremal.hpp"
#include "dshift/fock.hpp"
#include "dshift/h2space.hpp"
#include "dshift/numerics.hpp"
#include "dshift/shift.hpp"
#include "dshift/zeta.hpp"

namespace py = pybind11;
using namespace dshift;

namespace {

py::object to_py_int(const BigInt& b) {
    return py::reinterpret_steal<py::object>(PyLong_FromString(b.str().c_str(), nullptr, 10));
}

py::object to_py_fraction(const Rational& r) {
    auto fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_py_int(numerator(r)), to_py_int(denominator(r)));
}

WeightKind parse_kind(const std::string& name) {
    if (name == "drury-arveson") return WeightKind::DruryArveson;
    if (name == "hardy") return WeightKind::HardyBoundary;
    if (name == "bergman") return WeightKind::Bergman;
    throw std::invalid_argument("unknown weight system: " + name);
}

DContraction make_contraction(int d, const std::vector<Matrix>& ops) {
    return validate(d, ops);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "numerical toolkit for the truncated d-shift";

    // combinatorics
    m.def("dim_symmetric", [](int d, int n) { return to_py_int(dim_symmetric(d, n)); },
          py::arg("d"), py::arg("n"));
    m.def("dim_by_recurrence", [](int d, int n) { return to_py_int(dim_by_recurrence(d, n)); },
          py::arg("d"), py::arg("n"));
    m.def("dim_asymptotic_ratio", &dim_asymptotic_ratio, py::arg("d"), py::arg("n"));
    m.def("enumerate_degree", &enumerate_degree, py::arg("d"), py::arg("n"));

    // monomial norms, exact
    m.def("monomial_norm_sq",
          [](const MultiIndex& k) { return to_py_fraction(monomial_norm_sq(k)); },
          py::arg("alpha"));
    m.def("sym_project_oracle",
          [](int d, const std::vector<int>& word) {
              return to_py_fraction(sym_project_oracle(d, word));
          },
          py::arg("d"), py::arg("word"));
    m.def("weight",
          [](const std::string& kind, int d, const MultiIndex& alpha) {
              return to_py_fraction(weight_system(parse_kind(kind), d).weight(alpha));
          },
          py::arg("kind"), py::arg("d"), py::arg("alpha"));

    // polynomials
    py::class_<Poly>(m, "Poly")
        .def(py::init<int>(), py::arg("d"))
        .def_static("monomial", &Poly::monomial, py::arg("d"), py::arg("alpha"),
                    py::arg("c") = Complex(1.0))
        .def("set_coeff", &Poly::set_coeff, py::arg("alpha"), py::arg("c"))
        .def("coeff", &Poly::coeff, py::arg("alpha"))
        .def("degree", &Poly::degree)
        .def("to_json", &Poly::to_json)
        .def_static("from_json", &Poly::from_json, py::arg("text"))
        .def("__mul__", [](const Poly& a, const Poly& b) { return a * b; });
    m.def("evaluate", &evaluate, py::arg("f"), py::arg("z"));
    m.def("h2_inner", &h2_inner, py::arg("f"), py::arg("g"));
    m.def("kernel_value",
          [](const std::vector<Complex>& x, const std::vector<Complex>& y) {
              return kernel_value(PointInBall(x), PointInBall(y));
          },
          py::arg("x"), py::arg("y"));
    m.def("sphere_sup",
          [](const Poly& f, long budget) { return sphere_sup(f, budget).value; },
          py::arg("f"), py::arg("budget") = 4096);

    // truncated shift operators (dense numpy matrices)
    m.def("shift_matrix",
          [](int k, int d, int n) { return shift_matrix(k, build_basis(d, n)).mat; },
          py::arg("k"), py::arg("d"), py::arg("N"));
    m.def("multiplication_matrix",
          [](const Poly& f, int n) {
              return multiplication_matrix(f, build_basis(f.dim(), n)).mat;
          },
          py::arg("f"), py::arg("N"));
    m.def("basis_indices",
          [](int d, int n) { return build_basis(d, n)->indices(); },
          py::arg("d"), py::arg("N"));
    m.def("relation_residuals",
          [](int d, int n) { return relation_residuals(build_basis(d, n)); },
          py::arg("d"), py::arg("N"));
    m.def("operator_norm", [](const Matrix& a) { return operator_norm(a).value; },
          py::arg("a"));

    // growth and energy
    m.def("ratio_growth",
          [](int d, int n) {
              auto r = ratio_growth(d, n);
              return py::dict(py::arg("value") = r.value, py::arg("asymptote") = r.asymptote);
          },
          py::arg("d"), py::arg("n"));
    m.def("energy_shift",
          [](int d, int n) {
              auto r = energy_shift(d, n);
              return py::dict(py::arg("closed_form") = r.closed_form,
                              py::arg("direct") = r.direct,
                              py::arg("binomial_bound") = r.binomial_bound);
          },
          py::arg("d"), py::arg("n"));
    m.def("energy_lower_bound",
          [](int d, const std::vector<Matrix>& ops, int n) {
              MatrixTuple t;
              t.d = d;
              t.ops = ops;
              return energy_lower_bound(t, n);
          },
          py::arg("d"), py::arg("ops"), py::arg("n"));

    // dilation
    m.def("dilate",
          [](int d, const std::vector<Matrix>& ops, int n) {
              auto dil = build_L(make_contraction(d, ops), n);
              return py::dict(py::arg("defect_rank") = dil.defect_rank,
                              py::arg("l_norm") = dil.l_norm,
                              py::arg("coisometry_residual") = dil.coisometry_residual,
                              py::arg("tail_bound") = dil.tail_bound);
          },
          py::arg("d"), py::arg("ops"), py::arg("N"));
    m.def("vn_check",
          [](int d, const std::vector<Matrix>& ops, const Poly& f, int n) {
              auto r = vn_check(make_contraction(d, ops), f, n);
              return py::dict(py::arg("lhs") = r.lhs, py::arg("rhs") = r.rhs,
                              py::arg("rhs_half") = r.rhs_half, py::arg("margin") = r.margin);
          },
          py::arg("d"), py::arg("ops"), py::arg("f"), py::arg("N"));

    // trace power sums
    m.def("zeta_partial", &zeta_partial, py::arg("d"), py::arg("p"), py::arg("cutoff"));
    m.def("convergence_verdict",
          [](int d, double p, long cutoff) {
              auto r = convergence_verdict(d, p, cutoff);
              return py::dict(py::arg("partial_sum") = r.partial_sum,
                              py::arg("tail_bound") = r.tail_bound,
                              py::arg("verdict") = r.verdict, py::arg("boundary") = r.boundary,
                              py::arg("slow") = r.slow);
          },
          py::arg("d"), py::arg("p"), py::arg("cutoff") = 10000L);
}
