#include "renyivar/var_markov.hpp"

#include <cmath>

#include "renyivar/errors.hpp"
#include "renyivar/logspace.hpp"

namespace renyivar {

namespace {

void require_same_dim(const char* op, Eigen::Index a, Eigen::Index b) {
  if (a != b) {
    throw DimensionMismatch(op, static_cast<std::size_t>(a), static_cast<std::size_t>(b));
  }
}

bool feasible(Regime r, const PairMeasure& mu, const PairMeasure& nu, const PairMeasure& theta) {
  switch (r) {
    case Regime::alpha_gt_1:
      return abs_cont_pair(mu, nu);
    case Regime::alpha_in_01:
      return abs_cont_pair(mu, nu) && abs_cont_pair(mu, theta);
    default:
      return abs_cont_pair(mu, theta);
  }
}

double sum_g(const EdgeFn& g, const PairMeasure& theta) {
  return g.values().cwiseProduct(theta.entries()).sum();
}

// Attaches the twist built from Perron data `p` of `m` to `sol`.
void attach_twist(MarkovVarSolution& sol, const NonnegMatrix& m, PerronData p) {
  sol.optimizer = eigen_twist(m, p);
  sol.class_used = p.states;
  sol.perron = std::move(p);
}

}  // namespace

EdgeFn::EdgeFn(Eigen::MatrixXd values) : values_(std::move(values)) {
  if (values_.rows() != values_.cols() || values_.rows() < 1) {
    throw InvalidArgument("EdgeFn: matrix must be square and nonempty");
  }
  if (!values_.allFinite()) throw InvalidArgument("EdgeFn: entries must be finite");
}

PairMeasure eigen_twist(const NonnegMatrix& m, const PerronData& p) {
  const Eigen::Index d = m.dim();
  Eigen::MatrixXd logw = Eigen::MatrixXd::Constant(d, d, kNegInf);
  for (int i : p.states) {
    for (int j : p.states) {
      if (m.positive(i, j)) {
        logw(i, j) = std::log(p.left(i)) + m.log_entry(i, j) + std::log(p.right(j));
      }
    }
  }
  const double lz =
      log_sum_exp(std::span<const double>(logw.data(), static_cast<std::size_t>(logw.size())));
  Eigen::MatrixXd w(d, d);
  for (Eigen::Index k = 0; k < logw.size(); ++k) {
    w.data()[k] = logw.data()[k] == kNegInf ? 0.0 : std::exp(logw.data()[k] - lz);
  }
  return PairMeasure(std::move(w));
}

ExtReal markov_objective(const Alpha& alpha, const PairMeasure& mu, const PairMeasure& nu,
                         const PairMeasure& theta) {
  require_same_dim("markov_objective", mu.dim(), nu.dim());
  require_same_dim("markov_objective", mu.dim(), theta.dim());
  const double a = alpha.value();
  const ExtReal first = (1.0 / a) * rel_entropy_rate(mu, theta);
  const ExtReal second = (-1.0 / (a - 1.0)) * rel_entropy_rate(mu, nu);
  if (!first.is_finite() && !second.is_finite() && first != second) {
    throw IndeterminateForm("markov_objective: both rates infinite with opposing signs; "
                            "mu lies outside the regime's feasible set");
  }
  return first + second;
}

MarkovVarSolution solve_markov_variational(const Alpha& alpha, const PairMeasure& nu,
                                           const PairMeasure& theta, const Tolerances& tol) {
  require_same_dim("solve_markov_variational", nu.dim(), theta.dim());
  const double a = alpha.value();
  MarkovVarSolution sol;
  sol.regime = regime_of(alpha);

  if (sol.regime == Regime::alpha_in_01) {
    const NonnegMatrix full = tilted_kernel(a, nu, theta);
    const auto tau = maximal_abs_cont(full);
    if (!tau) {
      sol.value = ExtReal::pos_inf();
      return sol;
    }
    // restrict to S_tau; cyclic classes (and their Perron roots) are unchanged
    std::vector<bool> in_tau(static_cast<std::size_t>(nu.dim()), false);
    for (int s : support(*tau)) in_tau[s] = true;
    std::vector<std::vector<bool>> keep(in_tau.size(), std::vector<bool>(in_tau.size()));
    for (std::size_t i = 0; i < in_tau.size(); ++i) {
      for (std::size_t j = 0; j < in_tau.size(); ++j) keep[i][j] = in_tau[i] && in_tau[j];
    }
    const NonnegMatrix m = full.masked(keep);
    PerronData top = *top_class(m, tol);
    sol.value = ExtReal::finite(top.log_lambda / (a * (a - 1.0)));
    attach_twist(sol, m, std::move(top));
  } else {
    // alpha < 0 is the alpha > 1 problem for (1 - alpha, theta, nu)
    const bool swapped = sol.regime == Regime::alpha_lt_0;
    const PairMeasure& p = swapped ? theta : nu;
    const PairMeasure& q = swapped ? nu : theta;
    const double order = swapped ? 1.0 - a : a;
    if (!abs_cont_pair(p, q)) {
      sol.value = ExtReal::pos_inf();
      sol.optimizer = p;
      sol.class_used = support(p);
      sol.residual = ext_distance(sol.value, markov_objective(alpha, p, nu, theta));
      return sol;
    }
    const NonnegMatrix m = tilted_kernel(order, p, q);
    PerronData top = *top_class(m, tol);
    sol.value = ExtReal::finite(top.log_lambda / (order * (order - 1.0)));
    attach_twist(sol, m, std::move(top));
  }
  sol.residual = ext_distance(sol.value, markov_objective(alpha, *sol.optimizer, nu, theta));
  return sol;
}

CertResult certify_markov_inequality(const Alpha& alpha, const PairMeasure& mu,
                                     const PairMeasure& nu, const PairMeasure& theta,
                                     double tol) {
  require_same_dim("certify_markov_inequality", mu.dim(), nu.dim());
  require_same_dim("certify_markov_inequality", mu.dim(), theta.dim());
  const Regime regime = regime_of(alpha);
  if (!feasible(regime, mu, nu, theta)) {
    throw Infeasible("certify_markov_inequality: mu outside the feasible set for this regime");
  }
  const ExtReal bound = renyi_rate(alpha, nu, theta);
  const ExtReal obj = markov_objective(alpha, mu, nu, theta);
  double slack;
  if (bound.is_finite() && obj.is_finite()) {
    slack = regime == Regime::alpha_in_01 ? obj.value() - bound.value()
                                          : bound.value() - obj.value();
  } else if (bound == obj) {
    slack = 0.0;
  } else if (regime == Regime::alpha_in_01) {
    slack = obj.is_pos_inf() ? kPosInf : -kPosInf;
  } else {
    slack = bound.is_pos_inf() ? kPosInf : -kPosInf;
  }
  return CertResult{slack >= -tol, slack};
}

NonnegMatrix exp_tilted_kernel(double s, const EdgeFn& g, const PairMeasure& mu) {
  require_same_dim("exp_tilted_kernel", g.dim(), mu.dim());
  const Kernel k = kernel(mu);
  const Eigen::Index d = mu.dim();
  Eigen::MatrixXd l(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      l(i, j) = k.rows(i, j) > 0.0 ? s * g(i, j) + std::log(k.rows(i, j)) : kNegInf;
    }
  }
  return NonnegMatrix::from_log(std::move(l));
}

ExtReal varadhan_growth(const EdgeFn& g, const PairMeasure& mu, const Tolerances& tol) {
  return growth_rate(exp_tilted_kernel(1.0, g, mu), tol);
}

MarkovVarSolution varadhan_solve(const EdgeFn& g, const PairMeasure& mu, const Tolerances& tol) {
  const NonnegMatrix m = exp_tilted_kernel(1.0, g, mu);
  MarkovVarSolution sol;
  PerronData top = *top_class(m, tol);
  sol.value = ExtReal::finite(top.log_lambda);
  attach_twist(sol, m, std::move(top));
  const double achieved =
      sum_g(g, *sol.optimizer) - rel_entropy_rate(*sol.optimizer, mu).value();
  sol.residual = std::abs(sol.value.value() - achieved);
  return sol;
}

CertResult varadhan_certify(const EdgeFn& g, const PairMeasure& mu, const PairMeasure& theta,
                            double tol) {
  require_same_dim("varadhan_certify", g.dim(), theta.dim());
  const ExtReal d = rel_entropy_rate(theta, mu);
  if (!d.is_finite()) return CertResult{true, kPosInf};
  const double slack = varadhan_growth(g, mu).value() - (sum_g(g, theta) - d.value());
  return CertResult{slack >= -tol, slack};
}

MarkovVarSolution markov_acd_sup(const Alpha& alpha, const EdgeFn& g, const PairMeasure& theta,
                                 const Tolerances& tol) {
  const double a = alpha.value();
  const NonnegMatrix n = exp_tilted_kernel(a, g, theta);
  const NonnegMatrix m = exp_tilted_kernel(1.0, g, theta);
  MarkovVarSolution sol;
  sol.regime = regime_of(alpha);
  // class chosen by the Perron root of N, twisted with the eigenvectors of M
  const PerronData top_n = *top_class(n, tol);
  sol.value = ExtReal::finite(top_n.log_lambda / a);
  PerronData pm = perron(m, top_n.states, tol);
  pm.class_index = top_n.class_index;
  attach_twist(sol, m, std::move(pm));
  const ExtReal shifted = growth_rate(exp_tilted_kernel(a - 1.0, g, *sol.optimizer), tol);
  const ExtReal achieved =
      (1.0 / (a - 1.0)) * shifted - renyi_rate(alpha, *sol.optimizer, theta, tol);
  sol.residual = ext_distance(sol.value, achieved);
  return sol;
}

MarkovVarSolution markov_acd_inf(const Alpha& alpha, const EdgeFn& g, const PairMeasure& nu,
                                 const Tolerances& tol) {
  const double a = alpha.value();
  MarkovVarSolution sol = markov_acd_sup(alpha.dual(), g.scaled(-1.0), nu, tol);
  sol.regime = regime_of(alpha);
  sol.value = (1.0 / (a - 1.0)) * growth_rate(exp_tilted_kernel(a - 1.0, g, nu), tol);
  const PairMeasure& opt = *sol.optimizer;
  const ExtReal achieved = (1.0 / a) * growth_rate(exp_tilted_kernel(a, g, opt), tol) +
                           renyi_rate(alpha, nu, opt, tol);
  sol.residual = ext_distance(sol.value, achieved);
  return sol;
}

RhoIdentityReport rho_identities_check(const Alpha& alpha, const EdgeFn& g,
                                       const PairMeasure& theta, double tol) {
  const double a = alpha.value();
  const MarkovVarSolution sup = markov_acd_sup(alpha, g, theta);
  const PairMeasure& opt = *sup.optimizer;
  RhoIdentityReport r;
  r.rho_n = growth_rate(exp_tilted_kernel(a, g, theta)).value();
  r.rho_m = growth_rate(exp_tilted_kernel(1.0, g, theta)).value();
  r.rho_m_class = sup.perron->log_lambda;
  r.rho_tilted = growth_rate(tilted_kernel(a, opt, theta)).value();
  r.rho_shifted = growth_rate(exp_tilted_kernel(a - 1.0, g, opt)).value();
  r.drift_tilted = std::abs(r.rho_tilted - (r.rho_n - a * r.rho_m_class));
  r.drift_shifted = std::abs(r.rho_shifted - (r.rho_n - r.rho_m_class));
  r.pass = r.drift_tilted <= tol && r.drift_shifted <= tol;
  return r;
}

CertResult certify_markov_acd(const Alpha& alpha, const EdgeFn& g, const PairMeasure& nu,
                              const PairMeasure& theta, double tol) {
  require_same_dim("certify_markov_acd", nu.dim(), theta.dim());
  require_same_dim("certify_markov_acd", g.dim(), theta.dim());
  const double a = alpha.value();
  const ExtReal r = renyi_rate(alpha, nu, theta);
  if (!r.is_finite()) return CertResult{true, kPosInf};
  const double slack = growth_rate(exp_tilted_kernel(a, g, theta)).value() / a -
                       growth_rate(exp_tilted_kernel(a - 1.0, g, nu)).value() / (a - 1.0) +
                       r.value();
  return CertResult{slack >= -tol, slack};
}

}  // namespace renyivar
