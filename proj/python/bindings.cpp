#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "merodiff/diffmat.hpp"
#include "merodiff/eigensolver.hpp"
#include "merodiff/experiments.hpp"
#include "merodiff/specfun.hpp"

namespace py = pybind11;
using namespace merodiff;

namespace {

NodeSet<Complex> make_nodes(const std::vector<Complex>& points) {
    return NodeSet<Complex>(points);
}

PoleSet<Complex> make_poles(const std::vector<std::pair<Complex, int>>& poles) {
    std::vector<Pole<Complex>> ps;
    for (const auto& [loc, order] : poles) ps.push_back({loc, order});
    return PoleSet<Complex>(std::move(ps));
}

std::vector<std::vector<Complex>> matrix_rows(const CMatrix& m) {
    std::vector<std::vector<Complex>> rows(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        rows[i].resize(m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
    }
    return rows;
}

CMatrix matrix_from_rows(const std::vector<std::vector<Complex>>& rows) {
    if (rows.empty()) throw DimensionError("empty matrix");
    CMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size()) throw DimensionError("ragged matrix");
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    }
    return m;
}

}  // namespace

PYBIND11_MODULE(_merodiff, m) {
    m.doc() = "complex differentiation matrices for rational and periodic meromorphic functions";

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<NumericalError>(m, "NumericalFailure", PyExc_ArithmeticError);

    py::class_<DiffMatrix<Complex>>(m, "DiffMatrix")
        .def_property_readonly("basis",
                               [](const DiffMatrix<Complex>& d) {
                                   switch (d.basis) {
                                       case BasisFamily::Algebraic: return "algebraic";
                                       case BasisFamily::Trigonometric: return "trigonometric";
                                       case BasisFamily::Rational: return "rational";
                                       default: return "periodic-meromorphic";
                                   }
                               })
        .def_readonly("order", &DiffMatrix<Complex>::order)
        .def_property_readonly("nodes",
                               [](const DiffMatrix<Complex>& d) { return d.nodes.points(); })
        .def_property_readonly("matrix",
                               [](const DiffMatrix<Complex>& d) { return matrix_rows(d.matrix); })
        .def("apply", &DiffMatrix<Complex>::apply, py::arg("samples"));

    m.def("segment_nodes",
          [](Complex direction, double t0, double t1, int n) {
              return segment_nodes(direction, t0, t1, n).points();
          },
          py::arg("direction"), py::arg("t0"), py::arg("t1"), py::arg("n"));
    m.def("equispaced_periodic_nodes",
          [](int n) { return equispaced_periodic_nodes(n).points(); }, py::arg("n"));
    m.def("validate_against_poles",
          [](const std::vector<Complex>& nodes,
             const std::vector<std::pair<Complex, int>>& poles) {
              validate_against_poles(make_nodes(nodes), make_poles(poles));
          },
          py::arg("nodes"), py::arg("poles"));

    m.def("algebraic_matrix",
          [](const std::vector<Complex>& nodes) { return algebraic_matrix(make_nodes(nodes)); },
          py::arg("nodes"));
    m.def("trigonometric_matrix",
          [](const std::vector<Complex>& nodes) {
              return trigonometric_matrix(make_nodes(nodes));
          },
          py::arg("nodes"));
    m.def("hyperbolic_matrix",
          [](const std::vector<double>& imag_parts) { return hyperbolic_matrix(imag_parts); },
          py::arg("imag_parts"));
    m.def("rational_matrix",
          [](const std::vector<Complex>& nodes,
             const std::vector<std::pair<Complex, int>>& poles) {
              return rational_matrix(make_nodes(nodes), make_poles(poles));
          },
          py::arg("nodes"), py::arg("poles"));
    m.def("rational_power",
          [](const std::vector<Complex>& nodes,
             const std::vector<std::pair<Complex, int>>& poles, int order) {
              return rational_power(make_nodes(nodes), make_poles(poles), order);
          },
          py::arg("nodes"), py::arg("poles"), py::arg("order"));
    m.def("periodic_meromorphic_matrix",
          [](const std::vector<Complex>& nodes,
             const std::vector<std::pair<Complex, int>>& poles) {
              return periodic_meromorphic_matrix(make_nodes(nodes), make_poles(poles));
          },
          py::arg("nodes"), py::arg("poles"));
    m.def("periodic_meromorphic_power",
          [](const std::vector<Complex>& nodes,
             const std::vector<std::pair<Complex, int>>& poles, int order) {
              return periodic_meromorphic_power(make_nodes(nodes), make_poles(poles), order);
          },
          py::arg("nodes"), py::arg("poles"), py::arg("order"));

    m.def("lagrange_eval",
          [](const std::vector<Complex>& nodes, const std::vector<Complex>& samples, Complex z) {
              return lagrange_eval<Complex>(make_nodes(nodes), samples, z);
          },
          py::arg("nodes"), py::arg("samples"), py::arg("z"));
    m.def("gauss_trig_eval",
          [](const std::vector<Complex>& nodes, const std::vector<Complex>& samples, Complex z) {
              return gauss_trig_eval<Complex>(make_nodes(nodes), samples, z);
          },
          py::arg("nodes"), py::arg("samples"), py::arg("z"));
    m.def("rational_interp_eval",
          [](const std::vector<Complex>& nodes,
             const std::vector<std::pair<Complex, int>>& poles,
             const std::vector<Complex>& samples, Complex z) {
              return rational_interp_eval<Complex>(make_nodes(nodes), make_poles(poles), samples, z);
          },
          py::arg("nodes"), py::arg("poles"), py::arg("samples"), py::arg("z"));

    m.def("min_nodes_exact",
          [](int numer_degree, int pole_count, int order) {
              return min_nodes_exact(numer_degree, static_cast<std::size_t>(pole_count), order);
          },
          py::arg("numer_degree"), py::arg("pole_count"), py::arg("order"));
    m.def("conservative_nodes_bound",
          [](int numer_degree, int pole_count, int order) {
              return conservative_nodes_bound(numer_degree, static_cast<std::size_t>(pole_count),
                                              order);
          },
          py::arg("numer_degree"), py::arg("pole_count"), py::arg("order"));

    m.def("rational_test", &rational_test<double>, py::arg("z"), py::arg("order"));
    m.def("elliptic_K", &elliptic_K<double>, py::arg("m"));
    m.def("jacobi_sn_cn_dn",
          [](Complex z, double mm) {
              const auto v = jacobi_sn_cn_dn(z, mm);
              return py::make_tuple(v.sn, v.cn, v.dn);
          },
          py::arg("z"), py::arg("m"));
    m.def("weierstrass_p",
          [](Complex z, Complex omega1, Complex omega2, int derivative) {
              return weierstrass_p(z, EllipticParams<double>::weierstrass(omega1, omega2),
                                   derivative);
          },
          py::arg("z"), py::arg("omega1"), py::arg("omega2"), py::arg("derivative") = 0);
    m.def("kummer_M", &kummer_M<double>, py::arg("a"), py::arg("b"), py::arg("z"));

    m.def("build_kummer_operator",
          [](const std::vector<Complex>& z_diag, Complex b,
             const std::vector<std::vector<Complex>>& d) {
              return matrix_rows(build_kummer_operator(z_diag, b, matrix_from_rows(d)));
          },
          py::arg("z_diag"), py::arg("b"), py::arg("d"));
    m.def("smallest_eigenpair",
          [](const std::vector<std::vector<Complex>>& a, double tol, int max_iter) {
              const auto pair = smallest_eigenpair(matrix_from_rows(a), tol, max_iter);
              return py::make_tuple(pair.lambda, pair.vector, pair.iterations, pair.residual);
          },
          py::arg("a"), py::arg("tol") = 1e-12, py::arg("max_iter") = 500);

    m.def("table1_sweep",
          [](int n_min, int n_max) {
              std::vector<std::pair<int, double>> rows;
              for (const auto& r : experiments::table1_sweep(n_min, n_max))
                  rows.emplace_back(r.n, r.error);
              return rows;
          },
          py::arg("n_min") = 4, py::arg("n_max") = 11);
    m.def("elliptic_sweep",
          [](const std::string& function, const std::vector<int>& n_values, Complex omega1,
             Complex omega2) {
              experiments::EllipticConfig config;
              if (function == "jacobi")
                  config.function = experiments::EllipticFunction::Jacobi;
              else if (function == "weierstrass")
                  config.function = experiments::EllipticFunction::Weierstrass;
              else
                  throw ValidationError("function must be jacobi or weierstrass");
              config.n_values = n_values;
              config.omega1 = omega1;
              config.omega2 = omega2;
              std::vector<std::pair<int, double>> rows;
              for (const auto& r : experiments::elliptic_sweep(config))
                  rows.emplace_back(r.n, r.error);
              return rows;
          },
          py::arg("function"), py::arg("n_values"), py::arg("omega1") = Complex{2, 0},
          py::arg("omega2") = Complex{0, 2});
    m.def("kummer_experiment",
          [](Complex b, int n, Complex scale, const std::string& basis, const std::string& gauge) {
              experiments::KummerConfig config;
              config.b = b;
              config.n = n;
              config.scale = scale;
              if (basis == "algebraic")
                  config.basis = experiments::KummerBasis::Algebraic;
              else if (basis == "trigonometric")
                  config.basis = experiments::KummerBasis::Trigonometric;
              else
                  throw ValidationError("basis must be algebraic or trigonometric");
              if (gauge == "max-entry")
                  config.gauge = experiments::EigenvectorGauge::MaxEntry;
              else if (gauge == "least-squares")
                  config.gauge = experiments::EigenvectorGauge::LeastSquares;
              else
                  throw ValidationError("gauge must be max-entry or least-squares");
              const auto r = experiments::kummer_experiment(config);
              py::dict out;
              out["lambda_m"] = r.lambda;
              out["error"] = r.error;
              out["nodes"] = r.nodes;
              out["eigenvector"] = r.eigenvector;
              out["oracle"] = r.oracle;
              out["iterations"] = r.iterations;
              out["residual"] = r.residual;
              return out;
          },
          py::arg("b"), py::arg("n") = 21, py::arg("scale") = Complex{5, 5},
          py::arg("basis") = "algebraic", py::arg("gauge") = "max-entry");
}
