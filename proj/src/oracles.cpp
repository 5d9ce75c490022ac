#include "renyivar/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "renyivar/errors.hpp"
#include "renyivar/logspace.hpp"
#include "renyivar/spectral.hpp"

namespace renyivar::oracles {

namespace {

void require_same_dim(const char* op, Eigen::Index a, Eigen::Index b) {
  if (a != b) {
    throw DimensionMismatch(op, static_cast<std::size_t>(a), static_cast<std::size_t>(b));
  }
}

void require_n(const char* op, long n, long lo) {
  if (n < lo) throw InvalidArgument(std::string(op) + ": n must be >= " + std::to_string(lo));
}

// |a - b| with matching infinities counting as zero distance.
double gap(const ExtReal& a, const ExtReal& b) { return ext_distance(a, b); }

// Builds both report views from f(2..n_max).
OracleReports make_reports(const std::vector<ExtReal>& f, const ExtReal& claim) {
  OracleReports out;
  out.cesaro.mode = Mode::cesaro;
  out.difference.mode = Mode::difference;
  out.cesaro.limit_claim = claim;
  out.difference.limit_claim = claim;
  for (std::size_t k = 0; k < f.size(); ++k) {
    const long n = static_cast<long>(k) + 2;
    out.cesaro.sequence.emplace_back(n, (1.0 / static_cast<double>(n)) * f[k]);
    if (k == 0) continue;
    ExtReal step;
    if (f[k].is_finite() && f[k - 1].is_finite()) {
      step = ExtReal::finite(f[k].value() - f[k - 1].value());
    } else {
      step = f[k];  // an infinite path sum stays infinite
    }
    out.difference.sequence.emplace_back(n, step);
  }
  if (!out.cesaro.sequence.empty()) {
    out.cesaro.final_gap = gap(out.cesaro.sequence.back().second, claim);
  }
  if (!out.difference.sequence.empty()) {
    out.difference.final_gap = gap(out.difference.sequence.back().second, claim);
  }
  return out;
}

// Log-domain [e^{s g(i,j)} mu(j|i)] built from scratch.
Eigen::MatrixXd log_tilted_rows(double s, const Eigen::MatrixXd& g, const PairMeasure& mu) {
  const Eigen::Index d = mu.dim();
  const Eigen::VectorXd marg = mu.marginal();
  Eigen::MatrixXd l(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      l(i, j) = mu(i, j) > 0.0 ? s * g(i, j) + std::log(mu(i, j)) - std::log(marg(i)) : kNegInf;
    }
  }
  return l;
}

double growth_of_log(Eigen::MatrixXd l) {
  return growth_rate(NonnegMatrix::from_log(std::move(l))).to_double();
}

std::vector<std::vector<bool>> edge_mask(const PairMeasure& mu) {
  const auto d = static_cast<std::size_t>(mu.dim());
  std::vector<std::vector<bool>> m(d, std::vector<bool>(d, false));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) m[i][j] = mu(i, j) > 0.0;
  }
  return m;
}

std::vector<bool> state_mask(const Dist& p) {
  std::vector<bool> m(static_cast<std::size_t>(p.size()));
  for (Eigen::Index x = 0; x < p.size(); ++x) m[x] = p[x] > 0.0;
  return m;
}

template <class Mask>
bool all_true(const Mask& m) {
  return std::all_of(m.begin(), m.end(), [](bool b) { return b; });
}

bool all_true(const std::vector<std::vector<bool>>& m) {
  return std::all_of(m.begin(), m.end(), [](const auto& r) { return all_true(r); });
}

}  // namespace

const char* mode_name(Mode m) { return m == Mode::cesaro ? "cesaro" : "difference"; }

// ---------------------------------------------------------------------------

OracleReports renyi_rate_oracle(const Alpha& alpha, const PairMeasure& nu,
                                const PairMeasure& theta, long n_max) {
  require_same_dim("renyi_rate_oracle", nu.dim(), theta.dim());
  require_n("renyi_rate_oracle", n_max, 2);
  const ExtReal claim = renyi_rate(alpha, nu, theta);

  double a = alpha.value();
  const PairMeasure* p = &nu;
  const PairMeasure* q = &theta;
  if (a < 0.0) {
    a = 1.0 - a;
    std::swap(p, q);
  }
  const Eigen::Index d = nu.dim();
  const double scale = 1.0 / (a * (a - 1.0));
  std::vector<ExtReal> f;
  f.reserve(static_cast<std::size_t>(n_max - 1));

  bool violated = false;
  if (a > 1.0) {
    for (Eigen::Index i = 0; i < d && !violated; ++i) {
      for (Eigen::Index j = 0; j < d; ++j) {
        if ((*p)(i, j) > 0.0 && (*q)(i, j) == 0.0) violated = true;
      }
    }
  }
  if (violated) {
    // the violating edge is itself a path of length two
    f.assign(static_cast<std::size_t>(n_max - 1), ExtReal::pos_inf());
    return make_reports(f, claim);
  }

  const Eigen::VectorXd pm = p->marginal();
  const Eigen::VectorXd qm = q->marginal();
  Eigen::MatrixXd step(d, d);
  Eigen::VectorXd v(d);
  for (Eigen::Index j = 0; j < d; ++j) {
    double acc = kNegInf;
    for (Eigen::Index i = 0; i < d; ++i) {
      const double pij = (*p)(i, j);
      const double qij = (*q)(i, j);
      const bool both = pij > 0.0 && qij > 0.0;
      if (both) acc = log_add_exp(acc, a * std::log(pij) + (1.0 - a) * std::log(qij));
      step(i, j) = both ? a * (std::log(pij) - std::log(pm(i))) +
                              (1.0 - a) * (std::log(qij) - std::log(qm(i)))
                        : kNegInf;
    }
    v(j) = acc;
  }
  for (long n = 2; n <= n_max; ++n) {
    if (n > 2) v = log_vec_mat(v, step);
    const double lm = log_sum_exp(v);
    // no common path of this length: the overlap is empty
    f.push_back(lm == kNegInf ? ExtReal::pos_inf() : ExtReal::finite(scale * lm));
  }
  return make_reports(f, claim);
}

OracleReports rel_entropy_rate_oracle(const PairMeasure& nu, const PairMeasure& theta,
                                      long n_max) {
  require_same_dim("rel_entropy_rate_oracle", nu.dim(), theta.dim());
  require_n("rel_entropy_rate_oracle", n_max, 2);
  const ExtReal claim = rel_entropy_rate(nu, theta);
  const Eigen::Index d = nu.dim();
  std::vector<ExtReal> f;
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      if (nu(i, j) > 0.0 && theta(i, j) == 0.0) {
        f.assign(static_cast<std::size_t>(n_max - 1), ExtReal::pos_inf());
        return make_reports(f, claim);
      }
    }
  }
  const Eigen::VectorXd nm = nu.marginal();
  const Eigen::VectorXd tm = theta.marginal();
  // D(nu(.|i) || theta(.|i)) per state, and the chain's transition rows
  Eigen::VectorXd local = Eigen::VectorXd::Zero(d);
  Eigen::MatrixXd rows = Eigen::MatrixXd::Zero(d, d);
  double first = 0.0;
  for (Eigen::Index i = 0; i < d; ++i) {
    if (nm(i) <= 0.0) continue;
    for (Eigen::Index j = 0; j < d; ++j) {
      if (nu(i, j) <= 0.0) continue;
      rows(i, j) = nu(i, j) / nm(i);
      local(i) += rows(i, j) * (std::log(rows(i, j)) - std::log(theta(i, j) / tm(i)));
      first += nu(i, j) * (std::log(nu(i, j)) - std::log(theta(i, j)));
    }
  }
  // law of X_{n-1}, pushed forward one step per n
  Eigen::RowVectorXd law = nm.transpose();
  double acc = first;
  f.push_back(ExtReal::finite(acc));
  for (long n = 3; n <= n_max; ++n) {
    law = law * rows;
    acc += law.dot(local);
    f.push_back(ExtReal::finite(acc));
  }
  return make_reports(f, claim);
}

double varadhan_finite_n_oracle(const EdgeFn& g, const PairMeasure& mu, long n) {
  require_same_dim("varadhan_finite_n_oracle", g.dim(), mu.dim());
  require_n("varadhan_finite_n_oracle", n, 2);
  const Eigen::Index d = mu.dim();
  const Eigen::MatrixXd step = log_tilted_rows(1.0, g.values(), mu);
  Eigen::VectorXd v(d);
  for (Eigen::Index j = 0; j < d; ++j) {
    double acc = kNegInf;
    for (Eigen::Index i = 0; i < d; ++i) {
      if (mu(i, j) > 0.0) acc = log_add_exp(acc, g(i, j) + std::log(mu(i, j)));
    }
    v(j) = acc;
  }
  for (long k = 3; k <= n; ++k) v = log_vec_mat(v, step);
  return log_sum_exp(v) / static_cast<double>(n);
}

OracleReports varadhan_report(const EdgeFn& g, const PairMeasure& mu, long n_max) {
  require_same_dim("varadhan_report", g.dim(), mu.dim());
  require_n("varadhan_report", n_max, 2);
  const ExtReal claim = ExtReal::from_double(growth_of_log(log_tilted_rows(1.0, g.values(), mu)));
  const Eigen::Index d = mu.dim();
  const Eigen::MatrixXd step = log_tilted_rows(1.0, g.values(), mu);
  Eigen::VectorXd v(d);
  for (Eigen::Index j = 0; j < d; ++j) {
    double acc = kNegInf;
    for (Eigen::Index i = 0; i < d; ++i) {
      if (mu(i, j) > 0.0) acc = log_add_exp(acc, g(i, j) + std::log(mu(i, j)));
    }
    v(j) = acc;
  }
  std::vector<ExtReal> f;
  for (long n = 2; n <= n_max; ++n) {
    if (n > 2) v = log_vec_mat(v, step);
    f.push_back(ExtReal::finite(log_sum_exp(v)));
  }
  return make_reports(f, claim);
}

// ---------------------------------------------------------------------------

Rng trial_rng(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  return Rng(seq);
}

Dist random_dist_on(const std::vector<bool>& mask, Rng& rng) {
  std::exponential_distribution<double> expo(1.0);
  Eigen::VectorXd w = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(mask.size()));
  for (std::size_t x = 0; x < mask.size(); ++x) {
    if (mask[x]) w(static_cast<Eigen::Index>(x)) = expo(rng) + 1e-300;
  }
  if (w.sum() <= 0.0) throw Infeasible("random_dist_on: empty support");
  return Dist(std::move(w));
}

Dist random_dist(Eigen::Index d, Rng& rng) {
  return random_dist_on(std::vector<bool>(static_cast<std::size_t>(d), true), rng);
}

Eigen::VectorXd stationary_law(const Eigen::MatrixXd& kernel_rows, const std::vector<int>& states) {
  const Eigen::Index d = kernel_rows.rows();
  Eigen::RowVectorXd pi = Eigen::RowVectorXd::Zero(d);
  for (int s : states) pi(s) = 1.0 / static_cast<double>(states.size());
  for (int it = 0; it < 200000; ++it) {
    Eigen::RowVectorXd next = 0.5 * (pi + pi * kernel_rows);
    next /= next.sum();
    const double change = (next - pi).cwiseAbs().sum();
    pi = std::move(next);
    if (change < 1e-16) break;
  }
  return pi.transpose();
}

PairMeasure pair_from_kernel_weights(const Eigen::MatrixXd& weights) {
  const Eigen::Index d = weights.rows();
  Eigen::MatrixXd rows = Eigen::MatrixXd::Zero(d, d);
  std::vector<int> states;
  for (Eigen::Index i = 0; i < d; ++i) {
    const double s = weights.row(i).sum();
    if (s > 0.0) {
      rows.row(i) = weights.row(i) / s;
      states.push_back(static_cast<int>(i));
    }
  }
  const Eigen::VectorXd pi = stationary_law(rows, states);
  return PairMeasure(pi.asDiagonal() * rows);
}

std::optional<PairMeasure> random_pair_on(const std::vector<std::vector<bool>>& edges, Rng& rng) {
  const auto d = static_cast<Eigen::Index>(edges.size());
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::exponential_distribution<double> expo(1.0);

  auto decompose = [&](const Eigen::MatrixXd& m) { return classes(NonnegMatrix(m)); };

  Eigen::MatrixXd full = Eigen::MatrixXd::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) full(i, j) = edges[i][j] ? 1.0 : 0.0;
  }
  if (decompose(full).cyclic_classes().empty()) return std::nullopt;

  // thin the edge set until a cycle survives; fall back to the full set
  Eigen::MatrixXd sub = full;
  ClassDecomposition dec = decompose(full);
  const double keep = 0.3 + 0.7 * unif(rng);
  for (int attempt = 0; attempt < 20; ++attempt) {
    Eigen::MatrixXd cand = Eigen::MatrixXd::Zero(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
      for (Eigen::Index j = 0; j < d; ++j) {
        if (full(i, j) > 0.0 && unif(rng) < keep) cand(i, j) = 1.0;
      }
    }
    ClassDecomposition cd = decompose(cand);
    if (!cd.cyclic_classes().empty()) {
      sub = std::move(cand);
      dec = std::move(cd);
      break;
    }
  }

  const std::vector<int> cyclic = dec.cyclic_classes();
  std::vector<int> chosen;
  if (cyclic.size() == 1 || unif(rng) < 0.5) {
    std::uniform_int_distribution<std::size_t> pick(0, cyclic.size() - 1);
    chosen.push_back(cyclic[pick(rng)]);
  } else {
    chosen = cyclic;
  }

  Eigen::MatrixXd total = Eigen::MatrixXd::Zero(d, d);
  for (int c : chosen) {
    const std::vector<int>& states = dec.classes[static_cast<std::size_t>(c)];
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(d, d);
    for (int i : states) {
      for (int j : states) {
        if (sub(i, j) > 0.0) w(i, j) = expo(rng) + 1e-300;
      }
    }
    const PairMeasure part = pair_from_kernel_weights(w);
    total += (expo(rng) + 1e-300) * part.entries();
  }
  return PairMeasure(std::move(total));
}

PairMeasure random_full_pair(Eigen::Index d, Rng& rng) {
  std::exponential_distribution<double> expo(1.0);
  Eigen::MatrixXd w(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) w(i, j) = expo(rng) + 1e-300;
  }
  return pair_from_kernel_weights(w);
}

// ---------------------------------------------------------------------------

namespace {

// One search problem in a uniform shape: a feasible region (states or edges),
// an objective on it, the closed-form extremum and its direction.
struct IidInstance {
  std::vector<bool> feasible;
  std::function<ExtReal(const Dist&)> eval;
  ExtReal closed;
  bool is_sup = true;
};

struct MarkovInstance {
  std::vector<std::vector<bool>> feasible;
  std::function<ExtReal(const PairMeasure&)> eval;
  ExtReal closed;
  bool is_sup = true;
};

// (1/a) D(mu||theta) - (1/(a-1)) D(mu||nu) from two relative entropies.
ExtReal combine(double a, const ExtReal& d_theta, const ExtReal& d_nu) {
  return (1.0 / a) * d_theta + (-1.0 / (a - 1.0)) * d_nu;
}

double log_mass(double s, const BoundedFn& g, const Dist& mu) {
  std::vector<double> t;
  for (Eigen::Index x = 0; x < mu.size(); ++x) {
    if (mu[x] > 0.0) t.push_back(s * g[x] + std::log(mu[x]));
  }
  return log_sum_exp(t);
}

IidInstance build(const IidVarProblem& p) {
  require_same_dim("random_search_extremum", p.nu.size(), p.theta.size());
  const double a = p.alpha.value();
  IidInstance in;
  in.is_sup = !(a > 0.0 && a < 1.0);
  const auto d = static_cast<std::size_t>(p.nu.size());
  in.feasible.assign(d, false);
  for (std::size_t x = 0; x < d; ++x) {
    const bool n = p.nu[x] > 0.0;
    const bool t = p.theta[x] > 0.0;
    in.feasible[x] = a > 1.0 ? n : (a < 0.0 ? t : (n && t));
  }
  in.closed = renyi_div(p.alpha, p.nu, p.theta);
  in.eval = [p, a](const Dist& mu) {
    return combine(a, rel_entropy(mu, p.theta), rel_entropy(mu, p.nu));
  };
  return in;
}

IidInstance build(const IidAcdProblem& p) {
  require_same_dim("random_search_extremum", p.g.size(), p.theta.size());
  const double a = p.alpha.value();
  IidInstance in;
  in.feasible.assign(static_cast<std::size_t>(p.theta.size()), true);
  in.closed = ExtReal::finite(log_mass(a, p.g, p.theta) / a);
  in.eval = [p, a](const Dist& nu) {
    return ExtReal::finite(log_mass(a - 1.0, p.g, nu) / (a - 1.0)) -
           renyi_div(p.alpha, nu, p.theta);
  };
  return in;
}

IidInstance build(const IidDvProblem& p) {
  require_same_dim("random_search_extremum", p.g.size(), p.mu.size());
  IidInstance in;
  in.feasible = state_mask(p.mu);
  in.closed = ExtReal::finite(log_mass(1.0, p.g, p.mu));
  in.eval = [p](const Dist& theta) {
    return ExtReal::finite(p.g.values().dot(theta.weights())) - rel_entropy(theta, p.mu);
  };
  return in;
}

MarkovInstance build(const MarkovVarProblem& p) {
  require_same_dim("random_search_extremum", p.nu.dim(), p.theta.dim());
  const double a = p.alpha.value();
  MarkovInstance in;
  in.is_sup = !(a > 0.0 && a < 1.0);
  const auto en = edge_mask(p.nu);
  const auto et = edge_mask(p.theta);
  in.feasible = a > 1.0 ? en : et;
  if (a > 0.0 && a < 1.0) {
    for (std::size_t i = 0; i < en.size(); ++i) {
      for (std::size_t j = 0; j < en.size(); ++j) in.feasible[i][j] = en[i][j] && et[i][j];
    }
  }
  in.closed = renyi_rate(p.alpha, p.nu, p.theta);
  in.eval = [p, a](const PairMeasure& mu) {
    return combine(a, rel_entropy_rate(mu, p.theta), rel_entropy_rate(mu, p.nu));
  };
  return in;
}

MarkovInstance build(const MarkovAcdProblem& p) {
  require_same_dim("random_search_extremum", p.g.dim(), p.theta.dim());
  const double a = p.alpha.value();
  MarkovInstance in;
  in.feasible = edge_mask(p.theta);
  in.closed = ExtReal::from_double(growth_of_log(log_tilted_rows(a, p.g.values(), p.theta)) / a);
  in.eval = [p, a](const PairMeasure& nu) {
    const double r = growth_of_log(log_tilted_rows(a - 1.0, p.g.values(), nu));
    return ExtReal::from_double(r / (a - 1.0)) - renyi_rate(p.alpha, nu, p.theta);
  };
  return in;
}

MarkovInstance build(const VaradhanProblem& p) {
  require_same_dim("random_search_extremum", p.g.dim(), p.mu.dim());
  MarkovInstance in;
  in.feasible = edge_mask(p.mu);
  in.closed = ExtReal::from_double(growth_of_log(log_tilted_rows(1.0, p.g.values(), p.mu)));
  in.eval = [p](const PairMeasure& theta) {
    const double lin = (p.g.values().array() * theta.entries().array()).sum();
    return ExtReal::finite(lin) - rel_entropy_rate(theta, p.mu);
  };
  return in;
}

// How far a sample beats the closed form in the problem's direction; +inf
// when an infinite sample overshoots a finite extremum.
double excess(const ExtReal& sample, const ExtReal& closed, bool is_sup) {
  const ExtReal diff_src = is_sup ? sample : closed;
  const ExtReal diff_ref = is_sup ? closed : sample;
  if (diff_src.is_finite() && diff_ref.is_finite()) return diff_src.value() - diff_ref.value();
  if (diff_src == diff_ref) return 0.0;
  return diff_src.to_double() > diff_ref.to_double() ? kPosInf : -kPosInf;
}

bool better(double cand, double best, bool is_sup) { return is_sup ? cand > best : cand < best; }

// Coordinate ascent on logits: each sweep tries +-step on every coordinate,
// keeps improvements and halves the step after a sweep without one.
template <class Build, class Eval>
double hill_climb(Eigen::VectorXd x, const Build& make, const Eval& eval, bool is_sup) {
  auto score = [&](const Eigen::VectorXd& y) { return eval(make(y)).to_double(); };
  double cur = score(x);
  double step = 1.0;
  for (int sweep = 0; sweep < 200; ++sweep) {
    bool moved = false;
    for (Eigen::Index k = 0; k < x.size(); ++k) {
      for (double sign : {1.0, -1.0}) {
        Eigen::VectorXd y = x;
        y(k) += sign * step;
        const double v = score(y);
        if (better(v, cur, is_sup)) {
          x = std::move(y);
          cur = v;
          moved = true;
          break;
        }
      }
    }
    if (!moved) step *= 0.5;
  }
  return cur;
}

void record(SearchReport& rep, const ExtReal& sample, double tol) {
  const double v = sample.to_double();
  if (rep.trials == 0 || better(v, rep.best, rep.is_sup)) rep.best = v;
  ++rep.trials;
  const double e = excess(sample, rep.closed_form, rep.is_sup);
  if (e > rep.worst_excess) rep.worst_excess = e;
  rep.never_beaten = rep.worst_excess <= tol;
}

SearchReport search(const IidInstance& in, long trials, std::uint64_t seed, bool climb,
                    double tol) {
  if (!std::any_of(in.feasible.begin(), in.feasible.end(), [](bool b) { return b; })) {
    throw Infeasible("random_search_extremum: the feasible set is empty");
  }
  SearchReport rep;
  rep.closed_form = in.closed;
  rep.is_sup = in.is_sup;
  for (long t = 0; t < trials; ++t) {
    Rng rng = trial_rng(seed, static_cast<std::uint64_t>(t));
    std::vector<bool> mask = in.feasible;
    // every other trial lands on a random face of the feasible simplex
    if (t % 2 == 1) {
      std::bernoulli_distribution drop(0.4);
      for (std::size_t x = 0; x < mask.size(); ++x) {
        if (mask[x] && drop(rng)) mask[x] = false;
      }
      if (!std::any_of(mask.begin(), mask.end(), [](bool b) { return b; })) mask = in.feasible;
    }
    record(rep, in.eval(random_dist_on(mask, rng)), tol);
  }
  if (climb && all_true(in.feasible) && in.closed.is_finite()) {
    const auto d = static_cast<Eigen::Index>(in.feasible.size());
    auto make = [](const Eigen::VectorXd& y) {
      Eigen::VectorXd w = (y.array() - y.maxCoeff()).exp();
      return Dist(std::move(w));
    };
    rep.hill_climb = hill_climb(Eigen::VectorXd::Zero(d), make, in.eval, in.is_sup);
    rep.hill_climb_gap = std::abs(*rep.hill_climb - in.closed.value());
  }
  return rep;
}

SearchReport search(const MarkovInstance& in, long trials, std::uint64_t seed, bool climb,
                    double tol) {
  SearchReport rep;
  rep.closed_form = in.closed;
  rep.is_sup = in.is_sup;
  for (long t = 0; t < trials; ++t) {
    Rng rng = trial_rng(seed, static_cast<std::uint64_t>(t));
    std::optional<PairMeasure> mu = random_pair_on(in.feasible, rng);
    if (!mu) throw Infeasible("random_search_extremum: the feasible edge set has no cycle");
    record(rep, in.eval(*mu), tol);
  }
  if (climb && all_true(in.feasible) && in.closed.is_finite()) {
    const auto d = static_cast<Eigen::Index>(in.feasible.size());
    auto make = [d](const Eigen::VectorXd& y) {
      Eigen::MatrixXd w(d, d);
      const double top = y.maxCoeff();
      for (Eigen::Index k = 0; k < y.size(); ++k) w(k / d, k % d) = std::exp(y(k) - top);
      return pair_from_kernel_weights(w);
    };
    rep.hill_climb = hill_climb(Eigen::VectorXd::Zero(d * d), make, in.eval, in.is_sup);
    rep.hill_climb_gap = std::abs(*rep.hill_climb - in.closed.value());
  }
  return rep;
}

}  // namespace

const char* problem_name(const Problem& p) {
  static constexpr const char* names[] = {"iid_variational", "iid_acd",      "iid_dv",
                                          "markov_variational", "markov_acd", "varadhan"};
  return names[p.index()];
}

SearchReport random_search_extremum(const Problem& problem, long trials, std::uint64_t seed,
                                    bool climb, double tol) {
  if (trials < 1) throw InvalidArgument("random_search_extremum: trials must be >= 1");
  return std::visit([&](const auto& p) { return search(build(p), trials, seed, climb, tol); },
                    problem);
}

}  // namespace renyivar::oracles
