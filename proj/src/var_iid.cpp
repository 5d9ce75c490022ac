#include "renyivar/var_iid.hpp"

#include <algorithm>
#include <cmath>

#include "renyivar/errors.hpp"
#include "renyivar/logspace.hpp"

namespace renyivar {

namespace {

void require_same_size(const char* op, Eigen::Index a, Eigen::Index b) {
  if (a != b) {
    throw DimensionMismatch(op, static_cast<std::size_t>(a), static_cast<std::size_t>(b));
  }
}

// Normalizes log-weights into a distribution; -inf entries get zero mass.
Dist from_log_weights(const Eigen::VectorXd& logw) {
  const double lz = log_sum_exp(logw);
  Eigen::VectorXd w(logw.size());
  for (Eigen::Index i = 0; i < logw.size(); ++i) {
    w(i) = logw(i) == kNegInf ? 0.0 : std::exp(logw(i) - lz);
  }
  return Dist(std::move(w));
}

// Geometric mixture proportional to p^a q^(1-a) on {p q > 0}.
Dist geometric_mixture(double a, const Dist& p, const Dist& q) {
  Eigen::VectorXd logw(p.size());
  for (Eigen::Index x = 0; x < p.size(); ++x) {
    logw(x) = (p[x] > 0.0 && q[x] > 0.0)
                  ? a * std::log(p[x]) + (1.0 - a) * std::log(q[x])
                  : kNegInf;
  }
  return from_log_weights(logw);
}

// Gibbs tilt proportional to e^{s g} base.
Dist gibbs_tilt(double s, const BoundedFn& g, const Dist& base) {
  Eigen::VectorXd logw(base.size());
  for (Eigen::Index x = 0; x < base.size(); ++x) {
    logw(x) = base[x] > 0.0 ? s * g[x] + std::log(base[x]) : kNegInf;
  }
  return from_log_weights(logw);
}

// log sum_x e^{s g(x)} mu(x)
double log_tilted_mass(double s, const BoundedFn& g, const Dist& mu) {
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(mu.size()));
  for (Eigen::Index x = 0; x < mu.size(); ++x) {
    if (mu[x] > 0.0) terms.push_back(s * g[x] + std::log(mu[x]));
  }
  return log_sum_exp(terms);
}

// Smallest state charged by p but not by q, if any.
std::optional<Eigen::Index> first_violation(const Dist& p, const Dist& q) {
  for (Eigen::Index x = 0; x < p.size(); ++x) {
    if (p[x] > 0.0 && q[x] == 0.0) return x;
  }
  return std::nullopt;
}

bool feasible(Regime r, const Dist& mu, const Dist& nu, const Dist& theta) {
  switch (r) {
    case Regime::alpha_gt_1:
      return abs_cont(mu, nu);
    case Regime::alpha_in_01:
      return abs_cont(mu, nu) && abs_cont(mu, theta);
    default:
      return abs_cont(mu, theta);
  }
}

}  // namespace

BoundedFn::BoundedFn(Eigen::VectorXd values) : values_(std::move(values)) {
  if (values_.size() < 1) throw InvalidArgument("BoundedFn: empty");
  for (Eigen::Index i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_(i))) throw InvalidArgument("BoundedFn: entry not finite");
  }
}

BoundedFn::BoundedFn(const std::vector<double>& values)
    : BoundedFn(Eigen::Map<const Eigen::VectorXd>(values.data(),
                                                  static_cast<Eigen::Index>(values.size()))) {}

ExtReal objective(const Alpha& alpha, const Dist& mu, const Dist& nu, const Dist& theta) {
  require_same_size("objective", mu.size(), nu.size());
  require_same_size("objective", mu.size(), theta.size());
  const double a = alpha.value();
  const ExtReal d_theta = rel_entropy(mu, theta);
  const ExtReal d_nu = rel_entropy(mu, nu);
  const ExtReal first = (1.0 / a) * d_theta;
  const ExtReal second = (-1.0 / (a - 1.0)) * d_nu;
  if (!first.is_finite() && !second.is_finite() && first != second) {
    throw IndeterminateForm("objective: both relative entropies infinite with opposing signs; "
                            "mu lies outside the regime's feasible set");
  }
  return first + second;
}

VarSolution solve_variational(const Alpha& alpha, const Dist& nu, const Dist& theta) {
  require_same_size("solve_variational", nu.size(), theta.size());
  const Regime regime = regime_of(alpha);
  const double a = alpha.value();
  VarSolution sol;
  sol.regime = regime;

  // alpha < 0 is the alpha > 1 problem for (1 - alpha, theta, nu); the
  // objective is literally the same function of mu.
  const bool swapped = regime == Regime::alpha_lt_0;
  const Dist& p = swapped ? theta : nu;
  const Dist& q = swapped ? nu : theta;
  const double order = swapped ? 1.0 - a : a;

  if (regime != Regime::alpha_in_01) {
    if (auto x = first_violation(p, q)) {
      sol.value = ExtReal::pos_inf();
      sol.optimizer = Dist::point_mass(p.size(), *x);
      sol.residual = ext_distance(sol.value, objective(alpha, *sol.optimizer, nu, theta));
      return sol;
    }
  }
  const double log_mass = log_geometric_mass(order, p, q);
  if (log_mass == kNegInf) {
    // only reachable for 0 < alpha < 1: no mu is absolutely continuous
    // with respect to both nu and theta
    sol.value = ExtReal::pos_inf();
    return sol;
  }
  sol.value = ExtReal::finite(log_mass / (order * (order - 1.0)));
  // the mixture p^order q^(1-order) equals nu^a theta^(1-a) in every regime
  sol.optimizer = geometric_mixture(a, nu, theta);
  sol.residual = ext_distance(sol.value, objective(alpha, *sol.optimizer, nu, theta));
  return sol;
}

TruncatedPoint truncated_optimizer(const Alpha& alpha, const Dist& nu, const Dist& theta,
                                   double log_k) {
  require_same_size("truncated_optimizer", nu.size(), theta.size());
  const double a = alpha.value();
  if (a <= 1.0) throw InvalidArgument("truncated_optimizer: requires alpha > 1");
  if (!abs_cont(nu, theta)) throw Infeasible("truncated_optimizer: requires nu << theta");
  // density of nu^a theta^(1-a) against theta is (nu/theta)^a
  Eigen::VectorXd logw(nu.size());
  for (Eigen::Index x = 0; x < nu.size(); ++x) {
    if (nu[x] > 0.0) {
      const double log_tilt = a * (std::log(nu[x]) - std::log(theta[x]));
      logw(x) = log_tilt <= log_k ? log_tilt + std::log(theta[x]) : kNegInf;
    } else {
      logw(x) = kNegInf;
    }
  }
  const double log_z = log_sum_exp(logw);
  if (log_z == kNegInf) throw InvalidArgument("truncated_optimizer: K below every tilt");
  Dist mu = from_log_weights(logw);
  ExtReal obj = objective(alpha, mu, nu, theta);
  return TruncatedPoint{std::move(mu), log_k, log_z, obj};
}

std::vector<double> truncation_grid(const Alpha& alpha, const Dist& nu, const Dist& theta) {
  require_same_size("truncation_grid", nu.size(), theta.size());
  const double a = alpha.value();
  std::vector<double> log_tilts;
  for (Eigen::Index x = 0; x < nu.size(); ++x) {
    if (nu[x] > 0.0 && theta[x] > 0.0) {
      log_tilts.push_back(a * (std::log(nu[x]) - std::log(theta[x])));
    }
  }
  if (log_tilts.empty()) return {};
  std::sort(log_tilts.begin(), log_tilts.end());
  const double start = log_tilts[(log_tilts.size() - 1) / 2];
  const double top = log_tilts.back();
  std::vector<double> grid;
  for (double lk = start;; lk += std::log(2.0)) {
    grid.push_back(lk);
    if (lk >= top) break;
  }
  return grid;
}

CertResult certify_inequality(const Alpha& alpha, const Dist& mu, const Dist& nu,
                              const Dist& theta, double tol) {
  require_same_size("certify_inequality", mu.size(), nu.size());
  require_same_size("certify_inequality", mu.size(), theta.size());
  const Regime regime = regime_of(alpha);
  if (!feasible(regime, mu, nu, theta)) {
    throw Infeasible("certify_inequality: mu outside the feasible set for this regime");
  }
  const ExtReal bound = renyi_div(alpha, nu, theta);
  const ExtReal obj = objective(alpha, mu, nu, theta);
  double slack;
  if (bound.is_finite() && obj.is_finite()) {
    slack = regime == Regime::alpha_in_01 ? obj.value() - bound.value()
                                          : bound.value() - obj.value();
  } else if (bound == obj) {
    slack = 0.0;  // both +inf: the extremum is attained
  } else if (regime == Regime::alpha_in_01) {
    slack = obj.is_pos_inf() ? kPosInf : -kPosInf;
  } else {
    slack = bound.is_pos_inf() ? kPosInf : -kPosInf;
  }
  return CertResult{slack >= -tol, slack};
}

double log_exp_integral(const BoundedFn& g, const Dist& mu) {
  require_same_size("log_exp_integral", g.size(), mu.size());
  return log_tilted_mass(1.0, g, mu);
}

VarSolution dv_solve(const BoundedFn& g, const Dist& mu) {
  require_same_size("dv_solve", g.size(), mu.size());
  VarSolution sol;
  sol.value = ExtReal::finite(log_exp_integral(g, mu));
  Dist tilt = gibbs_tilt(1.0, g, mu);
  const double achieved = g.values().dot(tilt.weights()) - rel_entropy(tilt, mu).value();
  sol.residual = std::abs(sol.value.value() - achieved);
  sol.optimizer = std::move(tilt);
  return sol;
}

CertResult dv_certify(const BoundedFn& g, const Dist& mu, const Dist& theta, double tol) {
  require_same_size("dv_certify", g.size(), mu.size());
  require_same_size("dv_certify", g.size(), theta.size());
  const ExtReal d = rel_entropy(theta, mu);
  if (!d.is_finite()) return CertResult{true, kPosInf};
  const double slack = log_exp_integral(g, mu) - (g.values().dot(theta.weights()) - d.value());
  return CertResult{slack >= -tol, slack};
}

VarSolution acd_sup(const Alpha& alpha, const BoundedFn& g, const Dist& theta) {
  require_same_size("acd_sup", g.size(), theta.size());
  const double a = alpha.value();
  VarSolution sol;
  sol.regime = regime_of(alpha);
  sol.value = ExtReal::finite(log_tilted_mass(a, g, theta) / a);
  Dist opt = gibbs_tilt(1.0, g, theta);
  const ExtReal achieved =
      ExtReal::finite(log_tilted_mass(a - 1.0, g, opt) / (a - 1.0)) - renyi_div(alpha, opt, theta);
  sol.residual = ext_distance(sol.value, achieved);
  sol.optimizer = std::move(opt);
  return sol;
}

VarSolution acd_inf(const Alpha& alpha, const BoundedFn& g, const Dist& nu) {
  require_same_size("acd_inf", g.size(), nu.size());
  const double a = alpha.value();
  VarSolution sol;
  sol.regime = regime_of(alpha);
  sol.value = ExtReal::finite(log_tilted_mass(a - 1.0, g, nu) / (a - 1.0));
  VarSolution dual = acd_sup(alpha.dual(), g.scaled(-1.0), nu);
  const Dist& opt = *dual.optimizer;
  const ExtReal achieved =
      ExtReal::finite(log_tilted_mass(a, g, opt) / a) + renyi_div(alpha, nu, opt);
  sol.residual = ext_distance(sol.value, achieved);
  sol.optimizer = opt;
  return sol;
}

CertResult acd_certify(const Alpha& alpha, const BoundedFn& g, const Dist& nu,
                       const Dist& theta, double tol) {
  require_same_size("acd_certify", g.size(), nu.size());
  require_same_size("acd_certify", g.size(), theta.size());
  const double a = alpha.value();
  const ExtReal r = renyi_div(alpha, nu, theta);
  if (!r.is_finite()) return CertResult{true, kPosInf};
  const double slack =
      log_tilted_mass(a, g, theta) / a - log_tilted_mass(a - 1.0, g, nu) / (a - 1.0) + r.value();
  return CertResult{slack >= -tol, slack};
}

}  // namespace renyivar
