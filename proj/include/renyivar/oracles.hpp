#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <variant>
#include <vector>

#include <Eigen/Core>

#include "renyivar/dist.hpp"
#include "renyivar/ext_real.hpp"
#include "renyivar/markov.hpp"
#include "renyivar/var_iid.hpp"
#include "renyivar/var_markov.hpp"

// Finite-n and brute-force cross-checks. Nothing in this header calls the
// closed-form solvers of var_iid / var_markov; the types are shared only as
// problem descriptions.
namespace renyivar::oracles {

enum class Mode { cesaro, difference };

const char* mode_name(Mode m);

struct ConvergenceReport {
  std::vector<std::pair<long, ExtReal>> sequence;  // strictly increasing n
  ExtReal limit_claim;
  double final_gap = 0.0;
  Mode mode = Mode::cesaro;
};

/// Both views of one finite-n sequence f(n): f(n)/n for n >= 2 and
/// f(n) - f(n-1) for n >= 3.
struct OracleReports {
  ConvergenceReport cesaro;
  ConvergenceReport difference;
};

/// (1/n) R_alpha(nu_n || theta_n) through a log-domain forward recursion over
/// path prefixes, compared against renyi_rate.
OracleReports renyi_rate_oracle(const Alpha& alpha, const PairMeasure& nu,
                                const PairMeasure& theta, long n_max);

/// (1/n) D(nu_n || theta_n) accumulated step by step from the law of X_k,
/// compared against rel_entropy_rate.
OracleReports rel_entropy_rate_oracle(const PairMeasure& nu, const PairMeasure& theta,
                                      long n_max);

/// (1/n) log sum over paths of mu_n(path) exp(sum_k g(i_k, i_{k+1})).
double varadhan_finite_n_oracle(const EdgeFn& g, const PairMeasure& mu, long n);

/// The same quantity for n = 2..n_max, compared against varadhan_growth.
OracleReports varadhan_report(const EdgeFn& g, const PairMeasure& mu, long n_max);

// ---------------------------------------------------------------------------
// Random sampling of feasible points.

using Rng = std::mt19937_64;

/// Generator for trial `trial` of a run seeded with `seed`.
Rng trial_rng(std::uint64_t seed, std::uint64_t trial);

/// Flat Dirichlet draw on the states where mask is true.
Dist random_dist_on(const std::vector<bool>& mask, Rng& rng);
Dist random_dist(Eigen::Index d, Rng& rng);

/// Stationary law of a stochastic kernel restricted to an irreducible set of
/// states, by power iteration of the lazy chain.
Eigen::VectorXd stationary_law(const Eigen::MatrixXd& kernel_rows, const std::vector<int>& states);

/// Random stationary pair measure whose support lies inside `edges`: a random
/// subgraph is drawn, a random kernel placed on one (or several) of its cyclic
/// classes, and edges weighted by the stationary law. nullopt if `edges`
/// carries no directed cycle.
std::optional<PairMeasure> random_pair_on(const std::vector<std::vector<bool>>& edges, Rng& rng);

/// Random pair measure with every edge positive.
PairMeasure random_full_pair(Eigen::Index d, Rng& rng);

/// Pair measure pi(i) k(j|i) from kernel weights on a strongly connected edge
/// set; weights are normalized row by row.
PairMeasure pair_from_kernel_weights(const Eigen::MatrixXd& weights);

// ---------------------------------------------------------------------------
// Random-search falsification.

struct IidVarProblem {
  Alpha alpha;
  Dist nu, theta;
};
struct IidAcdProblem {
  Alpha alpha;
  BoundedFn g;
  Dist theta;
};
struct IidDvProblem {
  BoundedFn g;
  Dist mu;
};
struct MarkovVarProblem {
  Alpha alpha;
  PairMeasure nu, theta;
};
struct MarkovAcdProblem {
  Alpha alpha;
  EdgeFn g;
  PairMeasure theta;
};
struct VaradhanProblem {
  EdgeFn g;
  PairMeasure mu;
};

using Problem = std::variant<IidVarProblem, IidAcdProblem, IidDvProblem, MarkovVarProblem,
                             MarkovAcdProblem, VaradhanProblem>;

const char* problem_name(const Problem& p);

struct SearchReport {
  ExtReal closed_form;
  bool is_sup = true;
  long trials = 0;
  double best = 0.0;            // best objective seen among random samples
  double worst_excess = 0.0;    // max amount by which a sample beat closed_form
  bool never_beaten = true;     // worst_excess <= tol
  std::optional<double> hill_climb;  // value reached by local refinement
  double hill_climb_gap = 0.0;       // |hill_climb - closed_form|
};

/// Samples `trials` feasible points, evaluates the problem's objective at each
/// and reports whether any of them beats the closed-form extremum by more than
/// `tol`. When `hill_climb` is set, also runs 200 sweeps of coordinate tilts
/// with step halving from a fixed interior starting point.
SearchReport random_search_extremum(const Problem& problem, long trials, std::uint64_t seed,
                                    bool hill_climb = true, double tol = 1e-8);

}  // namespace renyivar::oracles
