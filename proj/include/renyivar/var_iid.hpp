#pragma once

#include <optional>
#include <vector>

#include <Eigen/Core>

#include "renyivar/config.hpp"
#include "renyivar/dist.hpp"
#include "renyivar/ext_real.hpp"

namespace renyivar {

/// A bounded real function on a finite alphabet.
class BoundedFn {
 public:
  explicit BoundedFn(Eigen::VectorXd values);
  explicit BoundedFn(const std::vector<double>& values);

  static BoundedFn constant(Eigen::Index d, double c) {
    return BoundedFn(Eigen::VectorXd::Constant(d, c));
  }

  Eigen::Index size() const { return values_.size(); }
  double operator[](Eigen::Index x) const { return values_(x); }
  const Eigen::VectorXd& values() const { return values_; }

  BoundedFn scaled(double s) const { return BoundedFn(Eigen::VectorXd(s * values_)); }

 private:
  Eigen::VectorXd values_;
};

/// Result of a closed-form variational solve.
struct VarSolution {
  ExtReal value;
  std::optional<Dist> optimizer;  // absent when no measure attains the value
  Regime regime = Regime::alpha_gt_1;
  double residual = 0.0;  // |value - objective recomputed at the optimizer|
};

/// Outcome of checking one side of a variational inequality.
/// slack >= -tolerance means pass; slack may be +inf for trivial passes.
struct CertResult {
  bool pass = false;
  double slack = 0.0;
};

/// (1/alpha) D(mu||theta) - (1/(alpha-1)) D(mu||nu).
/// Throws IndeterminateForm when both relative entropies are infinite with
/// opposing signs.
ExtReal objective(const Alpha& alpha, const Dist& mu, const Dist& nu, const Dist& theta);

/// Closed-form extremum of the relative-entropy characterization of
/// R_alpha(nu||theta): the geometric mixture mu ~ nu^alpha theta^(1-alpha) on
/// {nu theta > 0}, or the infinite-value witness when applicable.
VarSolution solve_variational(const Alpha& alpha, const Dist& nu, const Dist& theta);

/// Member of the truncated optimizer family for alpha > 1 and nu << theta,
/// with densities taken against theta. Only states whose tilt
/// (nu/theta)^alpha is at most exp(log_k) are kept.
struct TruncatedPoint {
  Dist mu;
  double log_k;
  double log_z;  // log of the retained tilt mass
  ExtReal objective;
};

TruncatedPoint truncated_optimizer(const Alpha& alpha, const Dist& nu, const Dist& theta,
                                   double log_k);

/// log K values on a doubling grid starting at the median positive tilt and
/// ending at the first value not below the largest tilt.
std::vector<double> truncation_grid(const Alpha& alpha, const Dist& nu, const Dist& theta);

/// Checks the one-sided inequality at a feasible mu. Throws Infeasible if mu
/// violates the regime's absolute-continuity constraint.
CertResult certify_inequality(const Alpha& alpha, const Dist& mu, const Dist& nu,
                              const Dist& theta, double tol = kDefaultTolerances.iid_certificate);

/// log sum_x e^{g(x)} mu(x).
double log_exp_integral(const BoundedFn& g, const Dist& mu);

/// Gibbs tilt theta ~ e^g mu attaining the elementary variational formula.
VarSolution dv_solve(const BoundedFn& g, const Dist& mu);

/// slack = log_exp_integral(g, mu) - (sum g theta - D(theta||mu)).
CertResult dv_certify(const BoundedFn& g, const Dist& mu, const Dist& theta,
                      double tol = kDefaultTolerances.dv_identity);

/// sup form: (1/alpha) log sum e^{alpha g} theta, attained by nu ~ e^g theta.
VarSolution acd_sup(const Alpha& alpha, const BoundedFn& g, const Dist& theta);

/// inf form: (1/(alpha-1)) log sum e^{(alpha-1) g} nu, with the attaining theta
/// produced by acd_sup under alpha -> 1 - alpha, g -> -g.
VarSolution acd_inf(const Alpha& alpha, const BoundedFn& g, const Dist& nu);

/// slack = (1/alpha) log sum e^{alpha g} theta
///         - (1/(alpha-1)) log sum e^{(alpha-1) g} nu + R_alpha(nu||theta).
CertResult acd_certify(const Alpha& alpha, const BoundedFn& g, const Dist& nu,
                       const Dist& theta, double tol = kDefaultTolerances.iid_certificate);

}  // namespace renyivar
