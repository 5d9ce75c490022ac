#pragma once

#include <cmath>
#include <limits>
#include <span>

#include <Eigen/Core>

namespace renyivar {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();
inline constexpr double kPosInf = std::numeric_limits<double>::infinity();

/// log(x) with log(0) = -inf; x must be >= 0.
inline double log0(double x) { return x > 0.0 ? std::log(x) : kNegInf; }

/// log(sum_i exp(v_i)); -inf entries are skipped and an empty or all -inf
/// input yields -inf.
double log_sum_exp(std::span<const double> v);

inline double log_sum_exp(const Eigen::VectorXd& v) {
  return log_sum_exp(std::span<const double>(v.data(), static_cast<std::size_t>(v.size())));
}

/// log(exp(a) + exp(b)).
inline double log_add_exp(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  const double hi = a > b ? a : b;
  const double lo = a > b ? b : a;
  return hi + std::log1p(std::exp(lo - hi));
}

/// Row vector times matrix in the log domain:
/// out(j) = log sum_i exp(v(i) + m(i, j)).
Eigen::VectorXd log_vec_mat(const Eigen::VectorXd& v, const Eigen::MatrixXd& m);

/// Matrix product in the log domain.
Eigen::MatrixXd log_mat_mat(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

}  // namespace renyivar
