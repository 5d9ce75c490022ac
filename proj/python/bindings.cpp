// Python bindings. Vectors and matrices travel as numpy arrays, extended
// reals as floats with IEEE infinities, solutions as dicts.

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "renyivar/dist.hpp"
#include "renyivar/errors.hpp"
#include "renyivar/markov.hpp"
#include "renyivar/spectral.hpp"
#include "renyivar/var_iid.hpp"
#include "renyivar/var_markov.hpp"

namespace py = pybind11;
using namespace renyivar;

namespace {

double to_float(const ExtReal& x) { return x.to_double(); }

py::dict cert(const CertResult& c) {
  py::dict d;
  d["pass"] = c.pass;
  d["slack"] = c.slack;
  return d;
}

py::dict solution(const VarSolution& s) {
  py::dict d;
  d["value"] = to_float(s.value);
  d["optimizer"] = s.optimizer ? py::cast(Eigen::VectorXd(s.optimizer->weights())) : py::none();
  d["regime"] = regime_name(s.regime);
  d["residual"] = s.residual;
  return d;
}

py::dict solution(const MarkovVarSolution& s) {
  py::dict d;
  d["value"] = to_float(s.value);
  d["optimizer"] = s.optimizer ? py::cast(Eigen::MatrixXd(s.optimizer->entries())) : py::none();
  d["class_used"] = s.class_used;
  d["log_perron_root"] = s.perron ? py::cast(s.perron->log_lambda) : py::none();
  d["regime"] = regime_name(s.regime);
  d["residual"] = s.residual;
  return d;
}

Dist dist(const Eigen::VectorXd& w) { return Dist(w); }
PairMeasure pair(const Eigen::MatrixXd& m) { return PairMeasure(m); }

}  // namespace

PYBIND11_MODULE(_renyivar, m) {
  m.doc() = "Renyi divergences, their variational formulas and Markov rates";
  m.attr("__version__") = RENYIVAR_VERSION;

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<DimensionMismatch>(m, "DimensionMismatch", base);
  py::register_exception<InvalidArgument>(m, "InvalidArgument", base);
  py::register_exception<IndeterminateForm>(m, "IndeterminateForm", base);
  py::register_exception<Infeasible>(m, "Infeasible", base);
  py::register_exception<ConvergenceFailure>(m, "ConvergenceFailure", base);

  // i.i.d.
  m.def("rel_entropy", [](const Eigen::VectorXd& nu, const Eigen::VectorXd& theta) {
    return to_float(rel_entropy(dist(nu), dist(theta)));
  }, py::arg("nu"), py::arg("theta"));
  m.def("renyi_div", [](double a, const Eigen::VectorXd& nu, const Eigen::VectorXd& theta) {
    return to_float(renyi_div(Alpha(a), dist(nu), dist(theta)));
  }, py::arg("alpha"), py::arg("nu"), py::arg("theta"));
  m.def("solve_variational", [](double a, const Eigen::VectorXd& nu, const Eigen::VectorXd& theta) {
    return solution(solve_variational(Alpha(a), dist(nu), dist(theta)));
  }, py::arg("alpha"), py::arg("nu"), py::arg("theta"));
  m.def("certify_inequality",
        [](double a, const Eigen::VectorXd& mu, const Eigen::VectorXd& nu,
           const Eigen::VectorXd& theta, double tol) {
          return cert(certify_inequality(Alpha(a), dist(mu), dist(nu), dist(theta), tol));
        },
        py::arg("alpha"), py::arg("mu"), py::arg("nu"), py::arg("theta"),
        py::arg("tol") = kDefaultTolerances.iid_certificate);
  m.def("log_exp_integral", [](const Eigen::VectorXd& g, const Eigen::VectorXd& mu) {
    return log_exp_integral(BoundedFn(g), dist(mu));
  }, py::arg("g"), py::arg("mu"));
  m.def("dv_solve", [](const Eigen::VectorXd& g, const Eigen::VectorXd& mu) {
    return solution(dv_solve(BoundedFn(g), dist(mu)));
  }, py::arg("g"), py::arg("mu"));
  m.def("acd_sup", [](double a, const Eigen::VectorXd& g, const Eigen::VectorXd& theta) {
    return solution(acd_sup(Alpha(a), BoundedFn(g), dist(theta)));
  }, py::arg("alpha"), py::arg("g"), py::arg("theta"));
  m.def("acd_inf", [](double a, const Eigen::VectorXd& g, const Eigen::VectorXd& nu) {
    return solution(acd_inf(Alpha(a), BoundedFn(g), dist(nu)));
  }, py::arg("alpha"), py::arg("g"), py::arg("nu"));

  // Markov
  m.def("rel_entropy_rate", [](const Eigen::MatrixXd& nu, const Eigen::MatrixXd& theta) {
    return to_float(rel_entropy_rate(pair(nu), pair(theta)));
  }, py::arg("nu"), py::arg("theta"));
  m.def("renyi_rate", [](double a, const Eigen::MatrixXd& nu, const Eigen::MatrixXd& theta) {
    return to_float(renyi_rate(Alpha(a), pair(nu), pair(theta)));
  }, py::arg("alpha"), py::arg("nu"), py::arg("theta"));
  m.def("solve_markov_variational",
        [](double a, const Eigen::MatrixXd& nu, const Eigen::MatrixXd& theta) {
          return solution(solve_markov_variational(Alpha(a), pair(nu), pair(theta)));
        },
        py::arg("alpha"), py::arg("nu"), py::arg("theta"));
  m.def("certify_markov_inequality",
        [](double a, const Eigen::MatrixXd& mu, const Eigen::MatrixXd& nu,
           const Eigen::MatrixXd& theta, double tol) {
          return cert(certify_markov_inequality(Alpha(a), pair(mu), pair(nu), pair(theta), tol));
        },
        py::arg("alpha"), py::arg("mu"), py::arg("nu"), py::arg("theta"),
        py::arg("tol") = kDefaultTolerances.markov_certificate);
  m.def("varadhan_growth", [](const Eigen::MatrixXd& g, const Eigen::MatrixXd& mu) {
    return to_float(varadhan_growth(EdgeFn(g), pair(mu)));
  }, py::arg("g"), py::arg("mu"));
  m.def("varadhan_solve", [](const Eigen::MatrixXd& g, const Eigen::MatrixXd& mu) {
    return solution(varadhan_solve(EdgeFn(g), pair(mu)));
  }, py::arg("g"), py::arg("mu"));
  m.def("markov_acd_sup", [](double a, const Eigen::MatrixXd& g, const Eigen::MatrixXd& theta) {
    return solution(markov_acd_sup(Alpha(a), EdgeFn(g), pair(theta)));
  }, py::arg("alpha"), py::arg("g"), py::arg("theta"));
  m.def("markov_acd_inf", [](double a, const Eigen::MatrixXd& g, const Eigen::MatrixXd& nu) {
    return solution(markov_acd_inf(Alpha(a), EdgeFn(g), pair(nu)));
  }, py::arg("alpha"), py::arg("g"), py::arg("nu"));

  // nonnegative matrices
  m.def("growth_rate", [](const Eigen::MatrixXd& a) {
    return to_float(growth_rate(NonnegMatrix(a)));
  }, py::arg("matrix"));
  m.def("growth_rate_bruteforce", [](const Eigen::MatrixXd& a, long n) {
    return to_float(growth_rate_bruteforce(NonnegMatrix(a), n));
  }, py::arg("matrix"), py::arg("n"));
}
