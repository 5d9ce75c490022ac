#include "cli.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include <openssl/evp.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "renyivar/errors.hpp"
#include "renyivar/oracles.hpp"
#include "renyivar/spectral.hpp"
#include "renyivar/var_iid.hpp"
#include "renyivar/var_markov.hpp"

#ifndef RENYIVAR_VERSION
#define RENYIVAR_VERSION "0.0.0"
#endif

namespace renyivar::cli {

using json = nlohmann::ordered_json;

namespace {

// Problem-file trouble: exit 2 with the offending field named.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

InputError field_error(const std::string& field, const std::string& what) {
  return InputError("field '" + field + "': " + what);
}

// ---------------------------------------------------------------------------
// Output

void emit(std::ostream& os, const json& j) {
  switch (j.type()) {
    case json::value_t::object: {
      os << '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) os << ',';
        first = false;
        os << json(it.key()).dump() << ':';
        emit(os, it.value());
      }
      os << '}';
      break;
    }
    case json::value_t::array: {
      os << '[';
      for (std::size_t k = 0; k < j.size(); ++k) {
        if (k) os << ',';
        emit(os, j[k]);
      }
      os << ']';
      break;
    }
    case json::value_t::number_float:
      os << format_double(j.get<double>());
      break;
    default:
      os << j.dump();
  }
}

void emit_csv(std::ostream& os, const json& j, const std::string& prefix) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      emit_csv(os, it.value(), prefix.empty() ? it.key() : prefix + "." + it.key());
    }
  } else if (j.is_array()) {
    for (std::size_t k = 0; k < j.size(); ++k) {
      emit_csv(os, j[k], prefix + "[" + std::to_string(k) + "]");
    }
  } else if (j.is_string()) {
    os << prefix << ',' << j.get<std::string>() << '\n';
  } else {
    std::ostringstream v;
    emit(v, j);
    os << prefix << ',' << v.str() << '\n';
  }
}

json ext(const ExtReal& x) {
  if (x.is_pos_inf()) return "inf";
  if (x.is_neg_inf()) return "-inf";
  return x.value();
}

json num(double x) { return ext(ExtReal::from_double(x)); }

json vec(const Eigen::VectorXd& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(num(v(i)));
  return a;
}

json mat(const Eigen::MatrixXd& m) {
  json a = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) a.push_back(vec(m.row(i).transpose()));
  return a;
}

json states(const std::vector<int>& s) {
  json a = json::array();
  for (int x : s) a.push_back(x);
  return a;
}

std::string sha256_hex(const std::string& bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr);
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int k = 0; k < len; ++k) {
    out += hex[md[k] >> 4];
    out += hex[md[k] & 0xf];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Input

const std::map<std::string, std::set<std::string>> kAllowed = {
    {"iid_divergence", {"alpha", "nu", "theta"}},
    {"iid_variational", {"alpha", "nu", "theta", "mu"}},
    {"iid_acd", {"alpha", "nu", "theta", "mu", "g"}},
    {"markov_rate", {"alpha", "nu", "theta"}},
    {"markov_variational", {"alpha", "nu", "theta", "mu"}},
    {"markov_acd", {"alpha", "nu", "theta", "mu", "g"}},
    {"growth", {"m"}},
    {"oracle", {"alpha", "nu", "theta", "mu", "g"}},
};

struct Problem {
  json doc;
  std::string kind;
  json options = json::object();

  bool has(const char* f) const { return doc.contains(f); }

  double number(const std::string& f, const json& j) const {
    if (!j.is_number()) throw field_error(f, "expected a number");
    return j.get<double>();
  }

  Alpha alpha() const {
    if (!has("alpha")) throw field_error("alpha", "required for kind " + kind);
    try {
      return Alpha(number("alpha", doc["alpha"]));
    } catch (const InvalidArgument& e) {
      throw field_error("alpha", e.what());
    }
  }

  Eigen::VectorXd vector(const std::string& f) const {
    if (!doc.contains(f)) throw field_error(f, "required for kind " + kind);
    const json& a = doc[f];
    if (!a.is_array() || a.empty()) throw field_error(f, "expected a nonempty array of numbers");
    Eigen::VectorXd v(static_cast<Eigen::Index>(a.size()));
    for (std::size_t k = 0; k < a.size(); ++k) {
      v(static_cast<Eigen::Index>(k)) = number(f + "[" + std::to_string(k) + "]", a[k]);
    }
    return v;
  }

  Eigen::MatrixXd matrix(const std::string& f) const {
    if (!doc.contains(f)) throw field_error(f, "required for kind " + kind);
    const json& a = doc[f];
    if (!a.is_array() || a.empty()) throw field_error(f, "expected a square array of rows");
    const std::size_t d = a.size();
    Eigen::MatrixXd m(d, d);
    for (std::size_t i = 0; i < d; ++i) {
      const std::string row = f + "[" + std::to_string(i) + "]";
      if (!a[i].is_array() || a[i].size() != d) {
        throw field_error(row, "expected " + std::to_string(d) + " entries (square matrix)");
      }
      for (std::size_t j = 0; j < d; ++j) {
        m(i, j) = number(row + "[" + std::to_string(j) + "]", a[i][j]);
      }
    }
    return m;
  }

  Dist dist(const std::string& f) const {
    try {
      return Dist(vector(f));
    } catch (const InvalidArgument& e) {
      throw field_error(f, e.what());
    }
  }

  PairMeasure pair(const std::string& f) const {
    try {
      return PairMeasure(matrix(f));
    } catch (const InvalidArgument& e) {
      throw field_error(f, e.what());
    }
  }

  long option_int(const char* key, long fallback) const {
    if (!options.contains(key)) return fallback;
    if (!options[key].is_number_integer()) {
      throw field_error(std::string("options.") + key, "expected an integer");
    }
    return options[key].get<long>();
  }

  double option_real(const char* key, double fallback) const {
    if (!options.contains(key)) return fallback;
    return number(std::string("options.") + key, options[key]);
  }
};

std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t k = 0; k + 1 < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

Problem parse_problem(const std::string& text) {
  Problem p;
  try {
    p.doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_col(text, e.byte);
    throw InputError("malformed file at line " + std::to_string(line) + ", column " +
                     std::to_string(col) + ": " + e.what());
  }
  if (!p.doc.is_object()) throw InputError("malformed file: top level must be an object");
  if (!p.doc.contains("kind") || !p.doc["kind"].is_string()) {
    throw field_error("kind", "required string");
  }
  p.kind = p.doc["kind"].get<std::string>();
  const auto allowed = kAllowed.find(p.kind);
  if (allowed == kAllowed.end()) throw field_error("kind", "unknown kind '" + p.kind + "'");
  for (auto it = p.doc.begin(); it != p.doc.end(); ++it) {
    const std::string& k = it.key();
    if (k == "kind" || k == "options") continue;
    if (!allowed->second.count(k)) throw field_error(k, "not used by kind " + p.kind);
  }
  if (p.doc.contains("options")) {
    if (!p.doc["options"].is_object()) throw field_error("options", "expected an object");
    p.options = p.doc["options"];
  }
  // one dimension across every referenced object
  std::optional<std::size_t> dim;
  std::string first;
  for (const char* f : {"nu", "theta", "mu", "g", "m"}) {
    if (!p.doc.contains(f) || !p.doc[f].is_array()) continue;
    const std::size_t d = p.doc[f].size();
    if (dim && *dim != d) {
      throw field_error(f, "dimension mismatch (" + std::to_string(d) + " vs " +
                               std::to_string(*dim) + " in '" + first + "')");
    }
    dim = d;
    first = f;
  }
  return p;
}

bool is_markov(const std::string& kind) {
  return kind.rfind("markov", 0) == 0;
}

// ---------------------------------------------------------------------------
// Commands. Each fills `c` and returns the overall pass flag.

struct Context {
  const Problem& p;
  std::optional<double> tol;  // --tol or options.tolerance
  std::uint64_t seed = 0;
  double tolerance(double fallback) const { return tol.value_or(fallback); }
};

void require_kind(const Problem& p, std::initializer_list<const char*> kinds, const char* command) {
  for (const char* k : kinds) {
    if (p.kind == k) return;
  }
  throw field_error("kind", std::string("kind ") + p.kind + " is not valid for '" + command + "'");
}

bool cmd_div(const Context& cx, json& c) {
  const Problem& p = cx.p;
  require_kind(p, {"iid_divergence", "iid_variational"}, "div");
  const Dist nu = p.dist("nu");
  const Dist th = p.dist("theta");
  c["relative_entropy"] = ext(rel_entropy(nu, th));
  if (p.has("alpha")) {
    const Alpha a = p.alpha();
    c["regime"] = regime_name(regime_of(a));
    c["renyi_divergence"] = ext(renyi_div(a, nu, th));
  }
  return true;
}

bool cmd_rate(const Context& cx, json& c) {
  const Problem& p = cx.p;
  require_kind(p, {"markov_rate", "markov_variational"}, "rate");
  const PairMeasure nu = p.pair("nu");
  const PairMeasure th = p.pair("theta");
  c["relative_entropy_rate"] = ext(rel_entropy_rate(nu, th));
  if (p.has("alpha")) {
    const Alpha a = p.alpha();
    c["regime"] = regime_name(regime_of(a));
    c["renyi_rate"] = ext(renyi_rate(a, nu, th));
  }
  return true;
}

bool cmd_growth(const Context& cx, json& c) {
  const Problem& p = cx.p;
  require_kind(p, {"growth"}, "growth");
  NonnegMatrix m = [&] {
    try {
      return NonnegMatrix(p.matrix("m"));
    } catch (const InvalidArgument& e) {
      throw field_error("m", e.what());
    }
  }();
  const ClassDecomposition dec = classes(m);
  json cls = json::array();
  for (std::size_t k = 0; k < dec.classes.size(); ++k) {
    json e;
    e["states"] = states(dec.classes[k]);
    e["cyclic"] = static_cast<bool>(dec.cyclic[k]);
    if (dec.cyclic[k]) {
      const PerronData pd = perron(m, dec.classes[k]);
      e["log_perron_root"] = pd.log_lambda;
    }
    cls.push_back(e);
  }
  c["classes"] = cls;
  c["growth_rate"] = ext(growth_rate(m));
  bool pass = true;
  if (const auto top = top_class(m)) {
    const PerronResidual r = perron_residual(m, *top);
    c["top_class"] = states(top->states);
    c["perron_residual"] = {{"left", r.left}, {"right", r.right}};
    pass = std::max(r.left, r.right) <= cx.tolerance(kDefaultTolerances.perron_residual);
  }
  if (p.options.contains("n")) {
    const long n = p.option_int("n", 1);
    if (n < 1) throw field_error("options.n", "must be >= 1");
    c["bruteforce"] = {{"n", n}, {"value", ext(growth_rate_bruteforce(m, n))}};
  }
  return pass;
}

json solution_json(const VarSolution& s) {
  json j;
  j["value"] = ext(s.value);
  j["optimizer"] = s.optimizer ? vec(s.optimizer->weights()) : json(nullptr);
  j["residual"] = num(s.residual);
  return j;
}

json solution_json(const MarkovVarSolution& s) {
  json j;
  j["value"] = ext(s.value);
  j["optimizer"] = s.optimizer ? mat(s.optimizer->entries()) : json(nullptr);
  j["class_used"] = states(s.class_used);
  j["log_perron_root"] = s.perron ? json(s.perron->log_lambda) : json(nullptr);
  j["residual"] = num(s.residual);
  return j;
}

void merge(json& into, const json& from) {
  for (auto it = from.begin(); it != from.end(); ++it) into[it.key()] = it.value();
}

// The acd kinds carry one of three shapes; which one is fixed by the fields.
enum class AcdShape { sup, inf, certify, exp_integral, exp_integral_certify };

AcdShape acd_shape(const Problem& p) {
  const bool a = p.has("alpha"), n = p.has("nu"), t = p.has("theta"), m = p.has("mu");
  if (!p.has("g")) throw field_error("g", "required for kind " + p.kind);
  if (a && !m && n && t) return AcdShape::certify;
  if (a && !m && t) return AcdShape::sup;
  if (a && !m && n) return AcdShape::inf;
  if (!a && !n && m) return t ? AcdShape::exp_integral_certify : AcdShape::exp_integral;
  throw InputError("kind " + p.kind +
                   ": expected fields {alpha, g, theta}, {alpha, g, nu}, {alpha, g, nu, theta}, "
                   "{g, mu} or {g, mu, theta}");
}

template <class Sol>
bool finish_solution(const Context& cx, json& c, const Sol& s, double fallback) {
  c["regime"] = regime_name(s.regime);
  merge(c, solution_json(s));
  return !s.optimizer || s.residual <= cx.tolerance(fallback);
}

bool cmd_solve(const Context& cx, json& c) {
  const Problem& p = cx.p;
  const double iid_tol = kDefaultTolerances.iid_certificate;
  const double mk_tol = kDefaultTolerances.markov_certificate;
  if (p.kind == "iid_variational") {
    return finish_solution(cx, c, solve_variational(p.alpha(), p.dist("nu"), p.dist("theta")),
                           iid_tol);
  }
  if (p.kind == "markov_variational") {
    return finish_solution(
        cx, c, solve_markov_variational(p.alpha(), p.pair("nu"), p.pair("theta")), mk_tol);
  }
  if (p.kind == "iid_acd") {
    const BoundedFn g(p.vector("g"));
    switch (acd_shape(p)) {
      case AcdShape::sup:
        c["form"] = "sup";
        return finish_solution(cx, c, acd_sup(p.alpha(), g, p.dist("theta")), iid_tol);
      case AcdShape::inf:
        c["form"] = "inf";
        return finish_solution(cx, c, acd_inf(p.alpha(), g, p.dist("nu")), iid_tol);
      case AcdShape::exp_integral: {
        c["form"] = "exp_integral";
        const VarSolution s = dv_solve(g, p.dist("mu"));
        merge(c, solution_json(s));
        return s.residual <= cx.tolerance(kDefaultTolerances.dv_identity);
      }
      default:
        throw InputError("solve: kind iid_acd takes either nu or theta, not both");
    }
  }
  if (p.kind == "markov_acd") {
    const EdgeFn g(p.matrix("g"));
    switch (acd_shape(p)) {
      case AcdShape::sup:
        c["form"] = "sup";
        return finish_solution(cx, c, markov_acd_sup(p.alpha(), g, p.pair("theta")), mk_tol);
      case AcdShape::inf:
        c["form"] = "inf";
        return finish_solution(cx, c, markov_acd_inf(p.alpha(), g, p.pair("nu")), mk_tol);
      case AcdShape::exp_integral: {
        c["form"] = "exp_integral";
        const MarkovVarSolution s = varadhan_solve(g, p.pair("mu"));
        merge(c, solution_json(s));
        return !s.optimizer || s.residual <= cx.tolerance(mk_tol);
      }
      default:
        throw InputError("solve: kind markov_acd takes either nu or theta, not both");
    }
  }
  throw field_error("kind", "kind " + p.kind + " is not valid for 'solve'");
}

bool cert(json& c, const CertResult& r, double tol) {
  c["slack"] = num(r.slack);
  c["tolerance"] = tol;
  return r.slack >= -tol;
}

bool cmd_certify(const Context& cx, json& c) {
  const Problem& p = cx.p;
  const double iid_tol = cx.tolerance(kDefaultTolerances.iid_certificate);
  const double mk_tol = cx.tolerance(kDefaultTolerances.markov_certificate);
  if (p.kind == "iid_variational") {
    const Alpha a = p.alpha();
    const Dist mu = p.dist("mu"), nu = p.dist("nu"), th = p.dist("theta");
    c["regime"] = regime_name(regime_of(a));
    c["bound"] = ext(renyi_div(a, nu, th));
    c["objective"] = ext(objective(a, mu, nu, th));
    return cert(c, certify_inequality(a, mu, nu, th, iid_tol), iid_tol);
  }
  if (p.kind == "markov_variational") {
    const Alpha a = p.alpha();
    const PairMeasure mu = p.pair("mu"), nu = p.pair("nu"), th = p.pair("theta");
    c["regime"] = regime_name(regime_of(a));
    c["bound"] = ext(renyi_rate(a, nu, th));
    c["objective"] = ext(markov_objective(a, mu, nu, th));
    return cert(c, certify_markov_inequality(a, mu, nu, th, mk_tol), mk_tol);
  }
  if (p.kind == "iid_acd") {
    const BoundedFn g(p.vector("g"));
    switch (acd_shape(p)) {
      case AcdShape::certify:
        return cert(c, acd_certify(p.alpha(), g, p.dist("nu"), p.dist("theta"), iid_tol), iid_tol);
      case AcdShape::exp_integral_certify: {
        const double t = cx.tolerance(kDefaultTolerances.dv_identity);
        return cert(c, dv_certify(g, p.dist("mu"), p.dist("theta"), t), t);
      }
      default:
        throw InputError("certify: kind iid_acd needs {alpha, g, nu, theta} or {g, mu, theta}");
    }
  }
  if (p.kind == "markov_acd") {
    const EdgeFn g(p.matrix("g"));
    switch (acd_shape(p)) {
      case AcdShape::certify: {
        const Alpha a = p.alpha();
        const PairMeasure th = p.pair("theta");
        const bool ok = cert(c, certify_markov_acd(a, g, p.pair("nu"), th, mk_tol), mk_tol);
        const RhoIdentityReport r = rho_identities_check(a, g, th, mk_tol);
        c["rho_identities"] = {{"rho_n", num(r.rho_n)},
                               {"rho_m", num(r.rho_m)},
                               {"rho_m_class", num(r.rho_m_class)},
                               {"drift_tilted", num(r.drift_tilted)},
                               {"drift_shifted", num(r.drift_shifted)},
                               {"pass", r.pass}};
        return ok && r.pass;
      }
      case AcdShape::exp_integral_certify:
        return cert(c, varadhan_certify(g, p.pair("mu"), p.pair("theta"), mk_tol), mk_tol);
      default:
        throw InputError("certify: kind markov_acd needs {alpha, g, nu, theta} or {g, mu, theta}");
    }
  }
  throw field_error("kind", "kind " + p.kind + " is not valid for 'certify'");
}

json report_json(const oracles::ConvergenceReport& r, bool full) {
  json j;
  j["mode"] = oracles::mode_name(r.mode);
  j["limit_claim"] = ext(r.limit_claim);
  j["final_gap"] = num(r.final_gap);
  j["length"] = r.sequence.size();
  json seq = json::array();
  const std::size_t from = full || r.sequence.size() < 5 ? 0 : r.sequence.size() - 5;
  for (std::size_t k = from; k < r.sequence.size(); ++k) {
    seq.push_back({r.sequence[k].first, ext(r.sequence[k].second)});
  }
  j[full ? "sequence" : "sequence_tail"] = seq;
  return j;
}

bool convergence(const Context& cx, json& c, const oracles::OracleReports& r) {
  const bool full = cx.p.options.value("full_sequence", false);
  const double gap_tol = cx.p.option_real("gap_tolerance", 1e-6);
  c["cesaro"] = report_json(r.cesaro, full);
  c["difference"] = report_json(r.difference, full);
  c["gap_tolerance"] = gap_tol;
  return r.difference.final_gap <= gap_tol;
}

bool search(const Context& cx, json& c, const oracles::Problem& prob) {
  const long trials = cx.p.option_int("trials", 1000);
  if (trials < 1) throw field_error("options.trials", "must be >= 1");
  const double tol = cx.tolerance(1e-8);
  const oracles::SearchReport r = oracles::random_search_extremum(prob, trials, cx.seed, true, tol);
  c["problem"] = oracles::problem_name(prob);
  c["seed"] = cx.seed;
  c["trials"] = r.trials;
  c["direction"] = r.is_sup ? "sup" : "inf";
  c["closed_form"] = ext(r.closed_form);
  c["best_sample"] = num(r.best);
  c["worst_excess"] = num(r.worst_excess);
  c["never_beaten"] = r.never_beaten;
  bool ok = r.never_beaten;
  if (r.hill_climb) {
    c["hill_climb"] = num(*r.hill_climb);
    c["hill_climb_gap"] = num(r.hill_climb_gap);
    ok = ok && r.hill_climb_gap <= 1e-3;
  }
  return ok;
}

bool cmd_oracle(const Context& cx, json& c) {
  const Problem& p = cx.p;
  const long n_max = p.option_int("n_max", 200);
  if (p.kind == "markov_rate") {
    if (n_max < 2) throw field_error("options.n_max", "must be >= 2");
    const PairMeasure nu = p.pair("nu"), th = p.pair("theta");
    if (p.has("alpha")) {
      c["target"] = "renyi_rate";
      return convergence(cx, c, oracles::renyi_rate_oracle(p.alpha(), nu, th, n_max));
    }
    c["target"] = "rel_entropy_rate";
    return convergence(cx, c, oracles::rel_entropy_rate_oracle(nu, th, n_max));
  }
  if (p.kind == "oracle") {
    if (n_max < 2) throw field_error("options.n_max", "must be >= 2");
    c["target"] = "exp_integral_rate";
    return convergence(cx, c, oracles::varadhan_report(EdgeFn(p.matrix("g")), p.pair("mu"), n_max));
  }
  if (p.kind == "iid_variational") {
    return search(cx, c, oracles::IidVarProblem{p.alpha(), p.dist("nu"), p.dist("theta")});
  }
  if (p.kind == "markov_variational") {
    return search(cx, c, oracles::MarkovVarProblem{p.alpha(), p.pair("nu"), p.pair("theta")});
  }
  if (p.kind == "iid_acd") {
    switch (acd_shape(p)) {
      case AcdShape::sup:
        return search(cx, c,
                      oracles::IidAcdProblem{p.alpha(), BoundedFn(p.vector("g")), p.dist("theta")});
      case AcdShape::exp_integral:
        return search(cx, c, oracles::IidDvProblem{BoundedFn(p.vector("g")), p.dist("mu")});
      default:
        throw InputError("oracle: kind iid_acd needs {alpha, g, theta} or {g, mu}");
    }
  }
  if (p.kind == "markov_acd") {
    switch (acd_shape(p)) {
      case AcdShape::sup:
        return search(cx, c,
                      oracles::MarkovAcdProblem{p.alpha(), EdgeFn(p.matrix("g")), p.pair("theta")});
      case AcdShape::exp_integral:
        return search(cx, c, oracles::VaradhanProblem{EdgeFn(p.matrix("g")), p.pair("mu")});
      default:
        throw InputError("oracle: kind markov_acd needs {alpha, g, theta} or {g, mu}");
    }
  }
  throw field_error("kind", "kind " + p.kind + " is not valid for 'oracle'");
}

const std::map<std::string, bool (*)(const Context&, json&)> kCommands = {
    {"div", cmd_div},         {"rate", cmd_rate},       {"growth", cmd_growth},
    {"solve", cmd_solve},     {"certify", cmd_certify}, {"oracle", cmd_oracle},
};

}  // namespace

std::string format_double(double x) {
  if (std::isnan(x)) return "null";
  if (std::isinf(x)) return x > 0 ? "\"inf\"" : "\"-inf\"";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Relative entropy and Renyi divergence certificates", "renyivar"};
  std::string command;
  std::string path;
  bool as_json = false;
  bool as_csv = false;
  std::optional<double> tol;
  std::optional<std::uint64_t> seed;
  app.add_option("command", command, "div | rate | growth | solve | certify | oracle")
      ->required()
      ->check(CLI::IsMember({"div", "rate", "growth", "solve", "certify", "oracle"}));
  app.add_option("file", path, "problem file (JSON)")->required();
  auto* jf = app.add_flag("--json", as_json, "JSON certificate (default)");
  app.add_flag("--csv", as_csv, "flat key,value output")->excludes(jf);
  app.add_option("--tol", tol, "override the equality tolerance used for pass flags");
  app.add_option("--seed", seed, "seed for oracle commands (default 0)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "renyivar: " << e.what() << '\n';
    return kInputError;
  }
  if (tol && !(*tol >= 0.0 && std::isfinite(*tol))) {
    err << "renyivar: --tol must be a finite nonnegative number\n";
    return kInputError;
  }

  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err << "renyivar: cannot read '" << path << "'\n";
    return kInputError;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();

  json c;
  bool pass = false;
  try {
    const Problem p = parse_problem(text);
    Context cx{p, tol, 0};
    if (!cx.tol && p.options.contains("tolerance")) {
      cx.tol = p.option_real("tolerance", 0.0);
    }
    const long file_seed = p.option_int("seed", 0);
    if (file_seed < 0) throw field_error("options.seed", "must be >= 0");
    cx.seed = seed.value_or(static_cast<std::uint64_t>(file_seed));

    c["tool"] = "renyivar";
    c["version"] = RENYIVAR_VERSION;
    c["command"] = command;
    c["kind"] = p.kind;
    c["input_sha256"] = sha256_hex(text);
    if (p.has("alpha")) c["alpha"] = p.alpha().value();
    pass = kCommands.at(command)(cx, c);
    c["pass"] = pass;
  } catch (const InputError& e) {
    err << "renyivar: " << e.what() << '\n';
    return kInputError;
  } catch (const Error& e) {
    // library-side rejection of the inputs (dimension, domain, feasibility)
    err << "renyivar: " << e.what() << '\n';
    return kInputError;
  } catch (const json::exception& e) {
    err << "renyivar: malformed field: " << e.what() << '\n';
    return kInputError;
  }

  if (as_csv) {
    emit_csv(out, c, "");
  } else {
    emit(out, c);
    out << '\n';
  }
  return pass ? kPass : kCertificationFailed;
}

}  // namespace renyivar::cli
