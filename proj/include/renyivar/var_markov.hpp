#pragma once

#include <optional>
#include <vector>

#include <Eigen/Core>

#include "renyivar/config.hpp"
#include "renyivar/dist.hpp"
#include "renyivar/markov.hpp"
#include "renyivar/spectral.hpp"
#include "renyivar/var_iid.hpp"

namespace renyivar {

/// A real function on edges, G = [g(i, j)].
class EdgeFn {
 public:
  explicit EdgeFn(Eigen::MatrixXd values);

  static EdgeFn constant(Eigen::Index d, double c) {
    return EdgeFn(Eigen::MatrixXd::Constant(d, d, c));
  }

  Eigen::Index dim() const { return values_.rows(); }
  double operator()(Eigen::Index i, Eigen::Index j) const { return values_(i, j); }
  const Eigen::MatrixXd& values() const { return values_; }

  EdgeFn scaled(double s) const { return EdgeFn(Eigen::MatrixXd(s * values_)); }

 private:
  Eigen::MatrixXd values_;
};

struct MarkovVarSolution {
  ExtReal value;
  std::optional<PairMeasure> optimizer;
  std::vector<int> class_used;        // support of the optimizer's twist
  std::optional<PerronData> perron;   // eigendata used for the twist
  Regime regime = Regime::alpha_gt_1;
  double residual = 0.0;
};

/// mu(i, j) = u(i) M(i, j) w(j) / Z on one class, with u, w the Perron
/// vectors of M restricted to that class. Always a stationary pair measure.
PairMeasure eigen_twist(const NonnegMatrix& m, const PerronData& p);

/// (1/alpha) D(mu||theta) - (1/(alpha-1)) D(mu||nu) with relative entropy rates.
ExtReal markov_objective(const Alpha& alpha, const PairMeasure& mu, const PairMeasure& nu,
                         const PairMeasure& theta);

/// Attaining pair measure for the rate characterization of R_alpha(nu||theta),
/// built by twisting the tilted kernel with its Perron eigenvectors on the
/// class of largest Perron root.
MarkovVarSolution solve_markov_variational(const Alpha& alpha, const PairMeasure& nu,
                                           const PairMeasure& theta,
                                           const Tolerances& tol = kDefaultTolerances);

CertResult certify_markov_inequality(const Alpha& alpha, const PairMeasure& mu,
                                     const PairMeasure& nu, const PairMeasure& theta,
                                     double tol = kDefaultTolerances.markov_certificate);

/// Log-domain matrix [e^{s g(i,j)} mu(j|i)].
NonnegMatrix exp_tilted_kernel(double s, const EdgeFn& g, const PairMeasure& mu);

/// rho([e^{g(i,j)} mu(j|i)]).
ExtReal varadhan_growth(const EdgeFn& g, const PairMeasure& mu,
                        const Tolerances& tol = kDefaultTolerances);

/// Attaining theta for Varadhan's formula, theta << mu.
MarkovVarSolution varadhan_solve(const EdgeFn& g, const PairMeasure& mu,
                                 const Tolerances& tol = kDefaultTolerances);

/// slack = varadhan_growth - (sum g theta - D(theta||mu)); +inf when theta is
/// not absolutely continuous w.r.t. mu.
CertResult varadhan_certify(const EdgeFn& g, const PairMeasure& mu, const PairMeasure& theta,
                            double tol = kDefaultTolerances.markov_certificate);

/// Value (1/alpha) rho([e^{alpha g} theta(j|i)]) and the attaining nu.
MarkovVarSolution markov_acd_sup(const Alpha& alpha, const EdgeFn& g, const PairMeasure& theta,
                                 const Tolerances& tol = kDefaultTolerances);

/// Value (1/(alpha-1)) rho([e^{(alpha-1) g} nu(j|i)]) and the attaining theta,
/// obtained from markov_acd_sup at (1 - alpha, -g).
MarkovVarSolution markov_acd_inf(const Alpha& alpha, const EdgeFn& g, const PairMeasure& nu,
                                 const Tolerances& tol = kDefaultTolerances);

struct RhoIdentityReport {
  double rho_n = 0.0;            // rho([e^{alpha g} theta(j|i)])
  double rho_m = 0.0;            // rho([e^{g} theta(j|i)]) over all classes
  double rho_m_class = 0.0;      // log Perron root of the same on the selected class
  double rho_tilted = 0.0;       // rho([nu*(j|i)^alpha theta(j|i)^(1-alpha)])
  double rho_shifted = 0.0;      // rho([e^{(alpha-1) g} nu*(j|i)])
  double drift_tilted = 0.0;     // |rho_tilted - (rho_n - alpha rho_m_class)|
  double drift_shifted = 0.0;    // |rho_shifted - (rho_n - rho_m_class)|
  bool pass = false;
};

RhoIdentityReport rho_identities_check(const Alpha& alpha, const EdgeFn& g,
                                       const PairMeasure& theta,
                                       double tol = kDefaultTolerances.markov_certificate);

/// slack = (1/alpha) rho([e^{alpha g} theta(j|i)])
///         - (1/(alpha-1)) rho([e^{(alpha-1) g} nu(j|i)]) + R_alpha(nu||theta).
CertResult certify_markov_acd(const Alpha& alpha, const EdgeFn& g, const PairMeasure& nu,
                              const PairMeasure& theta,
                              double tol = kDefaultTolerances.markov_certificate);

}  // namespace renyivar
