#pragma once

#include <cmath>
#include <random>

#include <Eigen/Core>

#include "renyivar/dist.hpp"
#include "renyivar/markov.hpp"

namespace testing {

inline bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

inline renyivar::Dist coin(double p) { return renyivar::Dist(std::vector<double>{p, 1.0 - p}); }

// i.i.d. pair measure p(i) p(j)
inline renyivar::PairMeasure iid_pair(const Eigen::VectorXd& p) {
  return renyivar::PairMeasure(p * p.transpose());
}

inline renyivar::PairMeasure iid_coin(double p) { return iid_pair(Eigen::Vector2d(p, 1.0 - p)); }

inline Eigen::MatrixXd mat2(double a, double b, double c, double d) {
  Eigen::MatrixXd m(2, 2);
  m << a, b, c, d;
  return m;
}

}  // namespace testing
