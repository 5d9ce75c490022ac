#include "renyivar/logspace.hpp"

#include <algorithm>

namespace renyivar {

double log_sum_exp(std::span<const double> v) {
  double hi = kNegInf;
  for (double x : v) hi = std::max(hi, x);
  if (hi == kNegInf) return kNegInf;
  double acc = 0.0;
  for (double x : v) {
    if (x != kNegInf) acc += std::exp(x - hi);
  }
  return hi + std::log(acc);
}

Eigen::VectorXd log_vec_mat(const Eigen::VectorXd& v, const Eigen::MatrixXd& m) {
  const Eigen::Index n = m.cols();
  Eigen::VectorXd out(n);
  Eigen::VectorXd terms(m.rows());
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      terms(i) = (v(i) == kNegInf || m(i, j) == kNegInf) ? kNegInf : v(i) + m(i, j);
    }
    out(j) = log_sum_exp(terms);
  }
  return out;
}

Eigen::MatrixXd log_mat_mat(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  Eigen::MatrixXd out(a.rows(), b.cols());
  Eigen::VectorXd terms(a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      for (Eigen::Index k = 0; k < a.cols(); ++k) {
        terms(k) = (a(i, k) == kNegInf || b(k, j) == kNegInf) ? kNegInf : a(i, k) + b(k, j);
      }
      out(i, j) = log_sum_exp(terms);
    }
  }
  return out;
}

}  // namespace renyivar
