#pragma once

#include <vector>

#include <Eigen/Core>

#include "renyivar/config.hpp"
#include "renyivar/dist.hpp"
#include "renyivar/ext_real.hpp"
#include "renyivar/spectral.hpp"

namespace renyivar {

/// Edge law of a stationary Markov chain on {0..d-1}: a probability mass
/// function on pairs whose row and column marginals coincide.
///
/// Total mass is normalized to one on construction; marginal imbalance above
/// tol.balance is rejected rather than projected away.
class PairMeasure {
 public:
  explicit PairMeasure(Eigen::MatrixXd entries, const Tolerances& tol = kDefaultTolerances);

  Eigen::Index dim() const { return entries_.rows(); }
  double operator()(Eigen::Index i, Eigen::Index j) const { return entries_(i, j); }
  const Eigen::MatrixXd& entries() const { return entries_; }

  /// nu(k, *) for every k.
  Eigen::VectorXd marginal() const { return entries_.rowwise().sum(); }

  /// max_k |nu(k, *) - nu(*, k)|.
  double balance_error() const;

 private:
  Eigen::MatrixXd entries_;
};

/// Conditional next-state law. Rows are zero for states outside the support.
struct Kernel {
  Eigen::MatrixXd rows;
  std::vector<int> support_states;
};

/// {k : nu(k, *) > 0}.
std::vector<int> support(const PairMeasure& nu);

/// nu(j|i) = nu(i, j) / nu(i, *) on the support, identically zero off it.
Kernel kernel(const PairMeasure& nu);

/// Entrywise support containment: theta(i, j) = 0 implies nu(i, j) = 0.
bool abs_cont_pair(const PairMeasure& nu, const PairMeasure& theta);

/// Relative entropy rate between the stationary chains; +inf unless nu << theta.
ExtReal rel_entropy_rate(const PairMeasure& nu, const PairMeasure& theta);

/// Law of (X_1, ..., X_n) under the chain defined by nu, indexed with X_1 as
/// the most significant base-d digit. Requires n >= 2 and d^n <= 1e7.
Dist path_distribution(const PairMeasure& nu, int n);

/// Checks nu << theta <=> nu_n << theta_n at level n by explicit enumeration.
bool check_abs_cont_lift(const PairMeasure& nu, const PairMeasure& theta, int n);

/// Log-domain matrix [nu(j|i)^a theta(j|i)^(1-a)], zero wherever either factor
/// vanishes.
NonnegMatrix tilted_kernel(double a, const PairMeasure& nu, const PairMeasure& theta);

/// Renyi divergence rate R_alpha(nu || theta) via the growth rate of the
/// tilted kernel; +inf for alpha > 1 without nu << theta, and
/// R_{1-alpha}(theta || nu) for alpha < 0.
ExtReal renyi_rate(const Alpha& alpha, const PairMeasure& nu, const PairMeasure& theta,
                   const Tolerances& tol = kDefaultTolerances);

/// Uniform edge measure of a directed cycle given as its vertex sequence
/// (v0 -> v1 -> ... -> v0).
PairMeasure cycle_measure(Eigen::Index d, const std::vector<int>& cycle);

}  // namespace renyivar
