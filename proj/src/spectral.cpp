#include "renyivar/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <numeric>
#include <optional>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include "renyivar/errors.hpp"
#include "renyivar/logspace.hpp"
#include "renyivar/markov.hpp"

namespace renyivar {

namespace {

using Graph = std::vector<std::vector<int>>;

Graph support_graph(const NonnegMatrix& m, const std::vector<bool>& active) {
  const int d = static_cast<int>(m.dim());
  Graph g(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    if (!active[i]) continue;
    for (int j = 0; j < d; ++j) {
      if (active[j] && m.positive(i, j)) g[i].push_back(j);
    }
  }
  return g;
}

// Tarjan's algorithm; components come out in reverse topological order.
std::vector<std::vector<int>> tarjan(const Graph& g, const std::vector<bool>& active) {
  const int n = static_cast<int>(g.size());
  std::vector<int> index(n, -1), low(n, -1);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack;
  std::vector<std::vector<int>> out;
  int counter = 0;

  std::function<void(int)> visit = [&](int v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (int w : g[v]) {
      if (index[w] == -1) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<int> comp;
      int w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp.push_back(w);
      } while (w != v);
      std::sort(comp.begin(), comp.end());
      out.push_back(std::move(comp));
    }
  };
  for (int v = 0; v < n; ++v) {
    if (active[v] && index[v] == -1) visit(v);
  }
  return out;
}

bool component_cyclic(const NonnegMatrix& m, const std::vector<int>& comp) {
  if (comp.size() > 1) return true;
  return m.positive(comp[0], comp[0]);
}

// Block of m on `cls`, rescaled so that its largest entry is one.
struct ScaledBlock {
  Eigen::MatrixXd block;
  double log_scale = 0.0;
};

ScaledBlock scaled_block(const NonnegMatrix& m, const std::vector<int>& cls) {
  const auto k = static_cast<Eigen::Index>(cls.size());
  double hi = kNegInf;
  for (int i : cls) {
    for (int j : cls) hi = std::max(hi, m.log_entry(i, j));
  }
  ScaledBlock out;
  out.log_scale = hi;
  out.block.resize(k, k);
  for (Eigen::Index a = 0; a < k; ++a) {
    for (Eigen::Index b = 0; b < k; ++b) {
      const double l = m.log_entry(cls[a], cls[b]);
      out.block(a, b) = l == kNegInf ? 0.0 : std::exp(l - hi);
    }
  }
  return out;
}

double max_residual(const Eigen::MatrixXd& b, double lambda, const Eigen::VectorXd& x) {
  return (b * x - lambda * x).cwiseAbs().maxCoeff();
}

// Spectral radius estimate from a dense eigensolver. Only sets the shift, so
// its relative accuracy for tiny roots does not matter.
double radius_estimate(const Eigen::MatrixXd& b) {
  const Eigen::EigenSolver<Eigen::MatrixXd> es(b, false);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

// Dominant eigenpair of a nonnegative irreducible block by shifted power
// iteration. The shift tracks the spectral radius: a shift far above it
// makes the contraction ratio 1 - O(rho / shift) and the iteration stalls.
// Returns nullopt when the cap is hit.
std::optional<std::pair<double, Eigen::VectorXd>> power_iterate(const Eigen::MatrixXd& b,
                                                                 double shift,
                                                                 const Tolerances& tol) {
  const Eigen::Index k = b.rows();
  Eigen::MatrixXd a = b;
  a.diagonal().array() += shift;
  Eigen::VectorXd x = Eigen::VectorXd::Constant(k, 1.0 / static_cast<double>(k));
  double q_prev = -1.0;
  for (long it = 0; it < tol.perron_max_iterations; ++it) {
    Eigen::VectorXd y = a * x;
    const double q = y.sum();  // sum(x) == 1
    x = y / q;
    if (std::abs(q - q_prev) <= tol.perron_stop * q) return std::pair{q - shift, x};
    q_prev = q;
  }
  return std::nullopt;
}

// Inverse iteration just above `rho`, for blocks whose subdominant
// eigenvalues crowd the Perron root.
std::optional<std::pair<double, Eigen::VectorXd>> inverse_iterate(const Eigen::MatrixXd& b,
                                                                  double rho) {
  const Eigen::Index k = b.rows();
  const double sigma = rho * (1.0 + 1e-9);
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(b - sigma * Eigen::MatrixXd::Identity(k, k));
  Eigen::VectorXd x = Eigen::VectorXd::Constant(k, 1.0 / static_cast<double>(k));
  for (int step = 0; step < 50; ++step) {
    Eigen::VectorXd y = lu.solve(x);
    const double s = y.sum();
    if (!std::isfinite(s) || s == 0.0) return std::nullopt;
    y /= s;
    const double change = (y - x).cwiseAbs().sum();
    x = y;
    if (change <= 1e-15) break;
  }
  if ((x.array() <= 0.0).any()) return std::nullopt;
  return std::pair{(b * x).sum(), x};
}

std::pair<double, Eigen::VectorXd> dominant_pair(const Eigen::MatrixXd& b, double rho,
                                                 const Tolerances& tol) {
  const double shift = std::max(rho, b.diagonal().maxCoeff());
  if (auto r = power_iterate(b, shift, tol)) return *r;
  if (auto r = inverse_iterate(b, rho)) {
    if (max_residual(b, r->first, r->second) <= tol.perron_residual * r->first) return *r;
  }
  throw ConvergenceFailure("perron: power iteration did not converge");
}

// Inverse iteration at a shift just above the power-iteration estimate.
// Keeps the polished vector only if it is positive and improves the residual.
Eigen::VectorXd polish(const Eigen::MatrixXd& b, double lambda, Eigen::VectorXd x) {
  const Eigen::Index k = b.rows();
  const double sigma = lambda + 1e-10 * std::max(lambda, 1.0);
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(b - sigma * Eigen::MatrixXd::Identity(k, k));
  Eigen::VectorXd best = x;
  double best_res = max_residual(b, lambda, x);
  for (int step = 0; step < 3; ++step) {
    Eigen::VectorXd y = lu.solve(x);
    const double s = y.sum();
    if (!std::isfinite(s) || s == 0.0) break;
    y /= s;
    if ((y.array() <= 0.0).any() || !y.allFinite()) break;
    const double lam = (b * y).sum();  // sum(y) == 1
    const double res = max_residual(b, lam, y);
    x = y;
    if (res < best_res) {
      best = y;
      best_res = res;
    }
  }
  return best;
}

}  // namespace

NonnegMatrix::NonnegMatrix(const Eigen::MatrixXd& entries) {
  if (entries.rows() != entries.cols() || entries.rows() < 1) {
    throw InvalidArgument("NonnegMatrix: matrix must be square and nonempty");
  }
  log_.resize(entries.rows(), entries.cols());
  for (Eigen::Index i = 0; i < entries.rows(); ++i) {
    for (Eigen::Index j = 0; j < entries.cols(); ++j) {
      const double v = entries(i, j);
      if (!std::isfinite(v) || v < 0.0) {
        throw InvalidArgument("NonnegMatrix: entries must be finite and nonnegative");
      }
      log_(i, j) = log0(v);
    }
  }
}

NonnegMatrix NonnegMatrix::from_log(Eigen::MatrixXd log_entries) {
  if (log_entries.rows() != log_entries.cols() || log_entries.rows() < 1) {
    throw InvalidArgument("NonnegMatrix: matrix must be square and nonempty");
  }
  for (Eigen::Index i = 0; i < log_entries.size(); ++i) {
    const double v = log_entries.data()[i];
    if (std::isnan(v) || v == kPosInf) {
      throw InvalidArgument("NonnegMatrix: log entries must be < +inf");
    }
  }
  NonnegMatrix out;
  out.log_ = std::move(log_entries);
  return out;
}

Eigen::MatrixXd NonnegMatrix::entries() const { return log_.array().exp().matrix(); }

NonnegMatrix NonnegMatrix::masked(const std::vector<std::vector<bool>>& keep) const {
  Eigen::MatrixXd l = log_;
  for (Eigen::Index i = 0; i < dim(); ++i) {
    for (Eigen::Index j = 0; j < dim(); ++j) {
      if (!keep[i][j]) l(i, j) = kNegInf;
    }
  }
  return from_log(std::move(l));
}

std::vector<int> ClassDecomposition::cyclic_classes() const {
  std::vector<int> out;
  for (std::size_t k = 0; k < classes.size(); ++k) {
    if (cyclic[k]) out.push_back(static_cast<int>(k));
  }
  return out;
}

bool has_cycle(const NonnegMatrix& m) {
  const ClassDecomposition dec = classes(m);
  return std::any_of(dec.cyclic.begin(), dec.cyclic.end(), [](bool c) { return c; });
}

ClassDecomposition classes(const NonnegMatrix& m, const std::vector<int>& states) {
  const int d = static_cast<int>(m.dim());
  std::vector<bool> active(d, states.empty());
  for (int s : states) {
    if (s < 0 || s >= d) throw InvalidArgument("classes: state index out of range");
    active[s] = true;
  }
  ClassDecomposition dec;
  dec.class_of.assign(d, std::nullopt);
  dec.classes = tarjan(support_graph(m, active), active);
  for (std::size_t k = 0; k < dec.classes.size(); ++k) {
    for (int s : dec.classes[k]) dec.class_of[s] = static_cast<int>(k);
    dec.cyclic.push_back(component_cyclic(m, dec.classes[k]));
  }
  return dec;
}

PerronData perron(const NonnegMatrix& m, const std::vector<int>& cls, const Tolerances& tol) {
  std::vector<int> sorted = cls;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.empty() || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidArgument("perron: class must be a nonempty set of states");
  }
  const ClassDecomposition inner = classes(m, sorted);
  if (inner.classes.size() != 1 || !inner.cyclic[0]) {
    throw InvalidArgument("perron: class is not an irreducible cyclic block");
  }

  const ScaledBlock sb = scaled_block(m, sorted);
  const double rho = radius_estimate(sb.block);
  auto [lam_r, w] = dominant_pair(sb.block, rho, tol);
  auto [lam_l, u] = dominant_pair(sb.block.transpose(), rho, tol);
  w = polish(sb.block, lam_r, std::move(w));
  u = polish(sb.block.transpose(), lam_l, std::move(u));
  // two-sided quotient; second-order accurate in the vector errors
  const double lam = u.dot(sb.block * w) / u.dot(w);
  u /= u.dot(w);

  PerronData out;
  out.states = sorted;
  out.log_lambda = std::log(lam) + sb.log_scale;
  out.left = Eigen::VectorXd::Zero(m.dim());
  out.right = Eigen::VectorXd::Zero(m.dim());
  for (std::size_t a = 0; a < sorted.size(); ++a) {
    out.left(sorted[a]) = u(static_cast<Eigen::Index>(a));
    out.right(sorted[a]) = w(static_cast<Eigen::Index>(a));
  }
  return out;
}

std::optional<PerronData> top_class(const NonnegMatrix& m, const Tolerances& tol) {
  const ClassDecomposition dec = classes(m);
  std::optional<PerronData> best;
  for (int k : dec.cyclic_classes()) {
    PerronData p = perron(m, dec.classes[k], tol);
    p.class_index = k;
    if (!best) {
      best = std::move(p);
      continue;
    }
    const double gap = p.log_lambda - best->log_lambda;
    const double scale = std::max(1.0, std::abs(best->log_lambda));
    if (gap > tol.class_tie * scale ||
        (std::abs(gap) <= tol.class_tie * scale && p.states.front() < best->states.front())) {
      best = std::move(p);
    }
  }
  return best;
}

ExtReal growth_rate(const NonnegMatrix& m, const Tolerances& tol) {
  const auto top = top_class(m, tol);
  if (!top) return ExtReal::neg_inf();
  return ExtReal::finite(top->log_lambda);
}

ExtReal growth_rate_bruteforce(const NonnegMatrix& m, long n) {
  if (n < 1) throw InvalidArgument("growth_rate_bruteforce: n must be >= 1");
  Eigen::MatrixXd base = m.log_entries();
  std::optional<Eigen::MatrixXd> acc;
  for (long e = n; e > 0; e >>= 1) {
    if (e & 1) acc = acc ? log_mat_mat(*acc, base) : base;
    if (e > 1) base = log_mat_mat(base, base);
  }
  const double total =
      log_sum_exp(std::span<const double>(acc->data(), static_cast<std::size_t>(acc->size())));
  if (total == kNegInf) return ExtReal::neg_inf();
  return ExtReal::finite(total / static_cast<double>(n));
}

std::vector<double> log_total_mass(const NonnegMatrix& m, long n_max) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(std::max(0L, n_max)));
  Eigen::VectorXd v = Eigen::VectorXd::Zero(m.dim());
  for (long k = 1; k <= n_max; ++k) {
    v = log_vec_mat(v, m.log_entries());
    out.push_back(log_sum_exp(v));
  }
  return out;
}

bool compatible(const NonnegMatrix& m, const PairMeasure& mu) {
  if (m.dim() != mu.dim()) {
    throw DimensionMismatch("compatible", static_cast<std::size_t>(m.dim()),
                            static_cast<std::size_t>(mu.dim()));
  }
  for (Eigen::Index i = 0; i < m.dim(); ++i) {
    for (Eigen::Index j = 0; j < m.dim(); ++j) {
      if (m.positive(i, j) != (mu(i, j) > 0.0)) return false;
    }
  }
  return true;
}

std::optional<PairMeasure> maximal_abs_cont(const NonnegMatrix& m) {
  const ClassDecomposition dec = classes(m);
  const std::vector<int> cyc = dec.cyclic_classes();
  if (cyc.empty()) return std::nullopt;
  const Eigen::Index d = m.dim();
  Eigen::MatrixXd total = Eigen::MatrixXd::Zero(d, d);

  for (int k : cyc) {
    const std::vector<int>& cls = dec.classes[k];
    Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(d, d);
    int edges = 0;
    for (int i : cls) {
      for (int j : cls) {
        if (!m.positive(i, j)) continue;
        ++edges;
        std::vector<int> cycle{i};
        if (i != j) {
          // shortest path j -> i inside the class closes a cycle through (i, j)
          std::vector<int> parent(static_cast<std::size_t>(d), -1);
          std::deque<int> queue{j};
          parent[j] = j;
          while (!queue.empty() && parent[i] == -1) {
            const int v = queue.front();
            queue.pop_front();
            for (int w : cls) {
              if (parent[w] == -1 && m.positive(v, w)) {
                parent[w] = v;
                queue.push_back(w);
              }
            }
          }
          std::vector<int> path;
          for (int v = i; v != j; v = parent[v]) path.push_back(v);
          path.push_back(j);
          std::reverse(path.begin(), path.end());  // j ... i
          path.pop_back();                         // drop i, it starts the cycle
          cycle.insert(cycle.end(), path.begin(), path.end());
        }
        acc += cycle_measure(d, cycle).entries();
      }
    }
    total += acc / static_cast<double>(edges);
  }
  total /= static_cast<double>(cyc.size());
  return PairMeasure(std::move(total));
}

PerronResidual perron_residual(const NonnegMatrix& m, const PerronData& p) {
  const ScaledBlock sb = scaled_block(m, p.states);
  const double lam = std::exp(p.log_lambda - sb.log_scale);
  const auto k = static_cast<Eigen::Index>(p.states.size());
  Eigen::VectorXd u(k), w(k);
  for (Eigen::Index a = 0; a < k; ++a) {
    u(a) = p.left(p.states[a]);
    w(a) = p.right(p.states[a]);
  }
  PerronResidual r;
  r.left = (sb.block.transpose() * u - lam * u).cwiseAbs().maxCoeff() / lam;
  r.right = (sb.block * w - lam * w).cwiseAbs().maxCoeff() / lam;
  return r;
}

}  // namespace renyivar
