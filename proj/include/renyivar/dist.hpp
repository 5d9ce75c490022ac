#pragma once

#include <vector>

#include <Eigen/Core>

#include "renyivar/config.hpp"
#include "renyivar/ext_real.hpp"

namespace renyivar {

/// Probability mass function on the alphabet {0, ..., d-1}.
///
/// Construction divides by the total mass, so inputs that drift slightly from
/// one (JSON round trips, for example) are accepted. Negative, non-finite and
/// all-zero inputs are rejected.
class Dist {
 public:
  explicit Dist(Eigen::VectorXd weights);
  explicit Dist(const std::vector<double>& weights);

  static Dist uniform(Eigen::Index d);
  static Dist point_mass(Eigen::Index d, Eigen::Index x);

  Eigen::Index size() const { return weights_.size(); }
  double operator[](Eigen::Index x) const { return weights_(x); }
  const Eigen::VectorXd& weights() const { return weights_; }

  /// Indices with positive mass.
  std::vector<Eigen::Index> support() const;

 private:
  Eigen::VectorXd weights_;
};

/// Order of a Renyi divergence; any real except 0 and 1.
class Alpha {
 public:
  explicit Alpha(double value, const Tolerances& tol = kDefaultTolerances);

  double value() const { return value_; }
  operator double() const { return value_; }

  /// The dual order 1 - alpha.
  Alpha dual() const { return Alpha(1.0 - value_); }

 private:
  double value_;
};

enum class Regime { alpha_gt_1, alpha_in_01, alpha_lt_0 };

Regime regime_of(const Alpha& alpha);
const char* regime_name(Regime r);

/// theta(x) = 0 implies nu(x) = 0.
bool abs_cont(const Dist& nu, const Dist& theta);

/// Relative entropy D(nu || theta) in nats; +inf unless nu << theta.
ExtReal rel_entropy(const Dist& nu, const Dist& theta);

/// Renyi divergence of order alpha, normalized by 1/(alpha(alpha-1)) so that
/// it is nonnegative for every admissible order.
///
/// alpha > 1 and nu not << theta gives +inf; alpha < 0 is evaluated as
/// R_{1-alpha}(theta || nu). Otherwise the sum of nu^alpha theta^(1-alpha)
/// runs over the common support only and is carried out in the log domain;
/// an empty common support gives +inf.
ExtReal renyi_div(const Alpha& alpha, const Dist& nu, const Dist& theta);

/// Same quantity evaluated through the densities nu/eta and theta/eta on
/// {eta > 0}. Requires nu << eta and theta << eta.
ExtReal renyi_via_reference(const Alpha& alpha, const Dist& nu, const Dist& theta,
                            const Dist& eta);

/// log sum_x nu(x)^a theta(x)^(1-a) over {nu theta > 0}; -inf when empty.
double log_geometric_mass(double a, const Dist& nu, const Dist& theta);

}  // namespace renyivar
