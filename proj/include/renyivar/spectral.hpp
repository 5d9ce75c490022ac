#pragma once

#include <optional>
#include <vector>

#include <Eigen/Core>

#include "renyivar/config.hpp"
#include "renyivar/ext_real.hpp"

namespace renyivar {

class PairMeasure;

/// Square matrix with nonnegative entries.
///
/// Entries are held in the log domain (zero entries as -inf) so that tilted
/// kernels such as nu(j|i)^alpha theta(j|i)^(1-alpha) with large |alpha| never
/// overflow before reaching the spectral routines.
class NonnegMatrix {
 public:
  /// From linear-scale entries; each must be finite and >= 0.
  explicit NonnegMatrix(const Eigen::MatrixXd& entries);

  /// From log-scale entries; each must be < +inf and not NaN.
  static NonnegMatrix from_log(Eigen::MatrixXd log_entries);

  Eigen::Index dim() const { return log_.rows(); }
  bool positive(Eigen::Index i, Eigen::Index j) const { return log_(i, j) != -kInf; }
  double log_entry(Eigen::Index i, Eigen::Index j) const { return log_(i, j); }
  const Eigen::MatrixXd& log_entries() const { return log_; }

  /// Linear-scale entries (may overflow to +inf for extreme log entries).
  Eigen::MatrixXd entries() const;

  /// Copy with every entry outside keep(i, j) set to zero.
  NonnegMatrix masked(const std::vector<std::vector<bool>>& keep) const;

 private:
  static constexpr double kInf = std::numeric_limits<double>::infinity();
  NonnegMatrix() = default;
  Eigen::MatrixXd log_;
};

/// Strongly connected components of a support digraph.
struct ClassDecomposition {
  std::vector<std::vector<int>> classes;  // discovery order, states sorted within
  std::vector<std::optional<int>> class_of;
  std::vector<bool> cyclic;  // class carries at least one edge

  std::vector<int> cyclic_classes() const;
};

/// Perron-Frobenius data of an irreducible block of a nonnegative matrix.
struct PerronData {
  double log_lambda = 0.0;
  Eigen::VectorXd left;   // zero off the class, positive on it
  Eigen::VectorXd right;  // zero off the class, positive on it; sums to one
  int class_index = -1;   // index into the decomposition it came from, or -1
  std::vector<int> states;

  double lambda() const { return std::exp(log_lambda); }
};

/// Directed graph on {0..d-1} with an edge i -> j iff m(i, j) > 0 contains a
/// directed cycle (self-loops count).
bool has_cycle(const NonnegMatrix& m);

/// SCCs of the support digraph restricted to `states` (all states if empty).
ClassDecomposition classes(const NonnegMatrix& m, const std::vector<int>& states = {});

/// Perron root and positive left/right eigenvectors of m restricted to
/// `cls`, which must be a cyclic SCC of m's support digraph.
///
/// Power iteration on the (rescaled) block shifted by (1 + max diagonal) I,
/// stopped when successive quotients agree to tol.perron_stop, then polished
/// by inverse iteration. Normalized so that sum(right) = 1 and
/// left . right = 1.
PerronData perron(const NonnegMatrix& m, const std::vector<int>& cls,
                  const Tolerances& tol = kDefaultTolerances);

/// Largest Perron root over cyclic SCCs; ties go to the class holding the
/// smallest state index. nullopt if the support digraph is acyclic.
std::optional<PerronData> top_class(const NonnegMatrix& m,
                                    const Tolerances& tol = kDefaultTolerances);

/// rho(M) = lim (1/n) log sum_ij M^n(i, j): -inf without a directed cycle,
/// otherwise the log of the largest Perron root over cyclic SCCs.
ExtReal growth_rate(const NonnegMatrix& m, const Tolerances& tol = kDefaultTolerances);

/// (1/n) log sum_ij M^n(i, j) via log-domain repeated squaring.
ExtReal growth_rate_bruteforce(const NonnegMatrix& m, long n);

/// log sum_ij M^k(i, j) for k = 1..n_max by direct log-domain iteration
/// (-inf once M^k vanishes).
std::vector<double> log_total_mass(const NonnegMatrix& m, long n_max);

/// m(i, j) > 0 iff mu(i, j) > 0.
bool compatible(const NonnegMatrix& m, const PairMeasure& mu);

/// A pair measure tau whose support is exactly the set of edges inside cyclic
/// SCCs of m; every pair measure absolutely continuous w.r.t. m is absolutely
/// continuous w.r.t. tau. Only the support is canonical. nullopt when m has
/// no directed cycle.
std::optional<PairMeasure> maximal_abs_cont(const NonnegMatrix& m);

/// max_ij |(u M)_j - lambda u_j| and max_i |(M w)_i - lambda w_i| relative to
/// lambda, computed on a rescaled copy of the block.
struct PerronResidual {
  double left = 0.0;
  double right = 0.0;
};
PerronResidual perron_residual(const NonnegMatrix& m, const PerronData& p);

}  // namespace renyivar
