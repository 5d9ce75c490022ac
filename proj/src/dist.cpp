#include "renyivar/dist.hpp"

#include <cmath>
#include <string>

#include "renyivar/errors.hpp"
#include "renyivar/logspace.hpp"

namespace renyivar {

namespace {

void require_same_size(const char* op, const Dist& a, const Dist& b) {
  if (a.size() != b.size()) {
    throw DimensionMismatch(op, static_cast<std::size_t>(a.size()),
                            static_cast<std::size_t>(b.size()));
  }
}

}  // namespace

Dist::Dist(Eigen::VectorXd weights) : weights_(std::move(weights)) {
  if (weights_.size() < 1) throw InvalidArgument("Dist: empty alphabet");
  double total = 0.0;
  for (Eigen::Index i = 0; i < weights_.size(); ++i) {
    const double w = weights_(i);
    if (!std::isfinite(w) || w < 0.0) {
      throw InvalidArgument("Dist: weight " + std::to_string(i) +
                            " is negative or not finite");
    }
    total += w;
  }
  if (total <= 0.0) throw InvalidArgument("Dist: all weights are zero");
  weights_ /= total;
}

Dist::Dist(const std::vector<double>& weights)
    : Dist(Eigen::Map<const Eigen::VectorXd>(weights.data(),
                                             static_cast<Eigen::Index>(weights.size()))) {}

Dist Dist::uniform(Eigen::Index d) { return Dist(Eigen::VectorXd::Ones(d)); }

Dist Dist::point_mass(Eigen::Index d, Eigen::Index x) {
  if (x < 0 || x >= d) throw InvalidArgument("Dist::point_mass: index out of range");
  Eigen::VectorXd w = Eigen::VectorXd::Zero(d);
  w(x) = 1.0;
  return Dist(std::move(w));
}

std::vector<Eigen::Index> Dist::support() const {
  std::vector<Eigen::Index> out;
  for (Eigen::Index i = 0; i < size(); ++i) {
    if (weights_(i) > 0.0) out.push_back(i);
  }
  return out;
}

Alpha::Alpha(double value, const Tolerances& tol) : value_(value) {
  if (!std::isfinite(value)) throw InvalidArgument("Alpha: not finite");
  if (std::abs(value) < tol.alpha_exclusion || std::abs(value - 1.0) < tol.alpha_exclusion) {
    throw InvalidArgument("Alpha: order must differ from 0 and 1");
  }
  if (std::abs(value) > tol.max_abs_alpha) throw InvalidArgument("Alpha: |alpha| too large");
}

Regime regime_of(const Alpha& alpha) {
  if (alpha.value() > 1.0) return Regime::alpha_gt_1;
  if (alpha.value() > 0.0) return Regime::alpha_in_01;
  return Regime::alpha_lt_0;
}

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::alpha_gt_1:
      return "alpha_gt_1";
    case Regime::alpha_in_01:
      return "alpha_in_01";
    default:
      return "alpha_lt_0";
  }
}

bool abs_cont(const Dist& nu, const Dist& theta) {
  require_same_size("abs_cont", nu, theta);
  for (Eigen::Index x = 0; x < nu.size(); ++x) {
    if (theta[x] == 0.0 && nu[x] > 0.0) return false;
  }
  return true;
}

ExtReal rel_entropy(const Dist& nu, const Dist& theta) {
  require_same_size("rel_entropy", nu, theta);
  if (!abs_cont(nu, theta)) return ExtReal::pos_inf();
  double acc = 0.0;
  for (Eigen::Index x = 0; x < nu.size(); ++x) {
    if (nu[x] > 0.0) acc += nu[x] * (std::log(nu[x]) - std::log(theta[x]));
  }
  return ExtReal::finite(acc);
}

double log_geometric_mass(double a, const Dist& nu, const Dist& theta) {
  require_same_size("log_geometric_mass", nu, theta);
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(nu.size()));
  for (Eigen::Index x = 0; x < nu.size(); ++x) {
    if (nu[x] > 0.0 && theta[x] > 0.0) {
      terms.push_back(a * std::log(nu[x]) + (1.0 - a) * std::log(theta[x]));
    }
  }
  return log_sum_exp(terms);
}

ExtReal renyi_div(const Alpha& alpha, const Dist& nu, const Dist& theta) {
  require_same_size("renyi_div", nu, theta);
  const double a = alpha.value();
  if (a < 0.0) return renyi_div(alpha.dual(), theta, nu);
  if (a > 1.0 && !abs_cont(nu, theta)) return ExtReal::pos_inf();
  const double log_mass = log_geometric_mass(a, nu, theta);
  if (log_mass == kNegInf) return ExtReal::pos_inf();
  return ExtReal::finite(log_mass / (a * (a - 1.0)));
}

ExtReal renyi_via_reference(const Alpha& alpha, const Dist& nu, const Dist& theta,
                            const Dist& eta) {
  require_same_size("renyi_via_reference", nu, theta);
  require_same_size("renyi_via_reference", nu, eta);
  if (!abs_cont(nu, eta) || !abs_cont(theta, eta)) {
    throw Infeasible("renyi_via_reference: nu and theta must be absolutely continuous "
                     "with respect to eta");
  }
  double a = alpha.value();
  const Dist* p = &nu;
  const Dist* q = &theta;
  if (a < 0.0) {
    a = 1.0 - a;
    std::swap(p, q);
  }
  if (a > 1.0 && !abs_cont(*p, *q)) return ExtReal::pos_inf();
  // integrand (p')^a (q')^(1-a) d eta over {p' q' > 0}
  std::vector<double> terms;
  for (Eigen::Index x = 0; x < eta.size(); ++x) {
    if (eta[x] <= 0.0) continue;
    const double dp = (*p)[x] / eta[x];
    const double dq = (*q)[x] / eta[x];
    if (dp > 0.0 && dq > 0.0) {
      terms.push_back(a * std::log(dp) + (1.0 - a) * std::log(dq) + std::log(eta[x]));
    }
  }
  const double log_mass = log_sum_exp(terms);
  if (log_mass == kNegInf) return ExtReal::pos_inf();
  return ExtReal::finite(log_mass / (a * (a - 1.0)));
}

}  // namespace renyivar
