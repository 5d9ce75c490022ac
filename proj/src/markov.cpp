#include "renyivar/markov.hpp"

#include <cmath>
#include <string>

#include "renyivar/errors.hpp"
#include "renyivar/logspace.hpp"

namespace renyivar {

namespace {

void require_same_dim(const char* op, const PairMeasure& a, const PairMeasure& b) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch(op, static_cast<std::size_t>(a.dim()),
                            static_cast<std::size_t>(b.dim()));
  }
}

constexpr double kMaxPaths = 1e7;

void require_path_budget(const char* op, Eigen::Index d, int n) {
  if (n < 2) throw InvalidArgument(std::string(op) + ": n must be >= 2");
  if (static_cast<double>(n) * std::log(static_cast<double>(d)) > std::log(kMaxPaths) + 1e-12) {
    throw InvalidArgument(std::string(op) + ": d^n exceeds the enumeration budget of 1e7 paths");
  }
}

}  // namespace

PairMeasure::PairMeasure(Eigen::MatrixXd entries, const Tolerances& tol)
    : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() < 1) {
    throw InvalidArgument("PairMeasure: matrix must be square and nonempty");
  }
  double total = 0.0;
  for (Eigen::Index i = 0; i < entries_.size(); ++i) {
    const double v = entries_.data()[i];
    if (!std::isfinite(v) || v < 0.0) {
      throw InvalidArgument("PairMeasure: entries must be finite and nonnegative");
    }
    total += v;
  }
  if (total <= 0.0) throw InvalidArgument("PairMeasure: all entries are zero");
  entries_ /= total;
  const double imbalance = balance_error();
  if (imbalance > tol.balance) {
    throw InvalidArgument("PairMeasure: row and column marginals differ by " +
                          std::to_string(imbalance));
  }
}

double PairMeasure::balance_error() const {
  return (entries_.rowwise().sum() - entries_.colwise().sum().transpose()).cwiseAbs().maxCoeff();
}

std::vector<int> support(const PairMeasure& nu) {
  std::vector<int> out;
  const Eigen::VectorXd marg = nu.marginal();
  for (Eigen::Index k = 0; k < nu.dim(); ++k) {
    if (marg(k) > 0.0) out.push_back(static_cast<int>(k));
  }
  return out;
}

Kernel kernel(const PairMeasure& nu) {
  Kernel k;
  k.support_states = support(nu);
  k.rows = Eigen::MatrixXd::Zero(nu.dim(), nu.dim());
  for (int i : k.support_states) {
    k.rows.row(i) = nu.entries().row(i) / nu.entries().row(i).sum();
  }
  return k;
}

bool abs_cont_pair(const PairMeasure& nu, const PairMeasure& theta) {
  require_same_dim("abs_cont_pair", nu, theta);
  for (Eigen::Index i = 0; i < nu.dim(); ++i) {
    for (Eigen::Index j = 0; j < nu.dim(); ++j) {
      if (theta(i, j) == 0.0 && nu(i, j) > 0.0) return false;
    }
  }
  return true;
}

ExtReal rel_entropy_rate(const PairMeasure& nu, const PairMeasure& theta) {
  require_same_dim("rel_entropy_rate", nu, theta);
  if (!abs_cont_pair(nu, theta)) return ExtReal::pos_inf();
  const Kernel kn = kernel(nu);
  const Kernel kt = kernel(theta);
  double acc = 0.0;
  for (int i : kn.support_states) {
    for (Eigen::Index j = 0; j < nu.dim(); ++j) {
      if (nu(i, j) > 0.0) acc += nu(i, j) * (std::log(kn.rows(i, j)) - std::log(kt.rows(i, j)));
    }
  }
  return ExtReal::finite(acc);
}

Dist path_distribution(const PairMeasure& nu, int n) {
  const Eigen::Index d = nu.dim();
  require_path_budget("path_distribution", d, n);
  const Kernel k = kernel(nu);
  // mass of every prefix, extended one coordinate at a time
  Eigen::VectorXd mass(d * d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) mass(i * d + j) = nu(i, j);
  }
  for (int len = 2; len < n; ++len) {
    Eigen::VectorXd next(mass.size() * d);
    for (Eigen::Index p = 0; p < mass.size(); ++p) {
      const Eigen::Index last = p % d;
      for (Eigen::Index j = 0; j < d; ++j) next(p * d + j) = mass(p) * k.rows(last, j);
    }
    mass = std::move(next);
  }
  return Dist(std::move(mass));
}

bool check_abs_cont_lift(const PairMeasure& nu, const PairMeasure& theta, int n) {
  require_same_dim("check_abs_cont_lift", nu, theta);
  require_path_budget("check_abs_cont_lift", nu.dim(), n);
  return abs_cont_pair(nu, theta) == abs_cont(path_distribution(nu, n), path_distribution(theta, n));
}

NonnegMatrix tilted_kernel(double a, const PairMeasure& nu, const PairMeasure& theta) {
  require_same_dim("tilted_kernel", nu, theta);
  const Kernel kn = kernel(nu);
  const Kernel kt = kernel(theta);
  const Eigen::Index d = nu.dim();
  Eigen::MatrixXd l(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      const double p = kn.rows(i, j);
      const double q = kt.rows(i, j);
      l(i, j) = (p > 0.0 && q > 0.0) ? a * std::log(p) + (1.0 - a) * std::log(q) : kNegInf;
    }
  }
  return NonnegMatrix::from_log(std::move(l));
}

ExtReal renyi_rate(const Alpha& alpha, const PairMeasure& nu, const PairMeasure& theta,
                   const Tolerances& tol) {
  require_same_dim("renyi_rate", nu, theta);
  const double a = alpha.value();
  if (a < 0.0) return renyi_rate(alpha.dual(), theta, nu, tol);
  if (a > 1.0 && !abs_cont_pair(nu, theta)) return ExtReal::pos_inf();
  const ExtReal rho = growth_rate(tilted_kernel(a, nu, theta), tol);
  return (1.0 / (a * (a - 1.0))) * rho;
}

PairMeasure cycle_measure(Eigen::Index d, const std::vector<int>& cycle) {
  if (cycle.empty()) throw InvalidArgument("cycle_measure: empty cycle");
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
  const double w = 1.0 / static_cast<double>(cycle.size());
  for (std::size_t k = 0; k < cycle.size(); ++k) {
    m(cycle[k], cycle[(k + 1) % cycle.size()]) += w;
  }
  return PairMeasure(std::move(m));
}

}  // namespace renyivar
