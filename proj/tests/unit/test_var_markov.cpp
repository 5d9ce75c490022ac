#include <cmath>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "renyivar/errors.hpp"
#include "renyivar/oracles.hpp"
#include "renyivar/var_markov.hpp"

using namespace renyivar;
using testing::close;
using testing::iid_coin;
using testing::mat2;

namespace {

PairMeasure two_cycle() { return PairMeasure(mat2(0, 0.5, 0.5, 0)); }
PairMeasure self_loop() { return PairMeasure(mat2(1, 0, 0, 0)); }

EdgeFn diag_g(double x) { return EdgeFn(mat2(x, 0, 0, x)); }

const double kGrid[] = {-3.0, -1.0, -0.25, 0.25, 0.5, 0.9, 1.1, 2.0, 5.0};

}  // namespace

TEST_CASE("rate objective") {
  const PairMeasure nu(mat2(0.1, 0.2, 0.2, 0.5));
  const PairMeasure th(mat2(0.3, 0.1, 0.1, 0.5));
  CHECK(markov_objective(Alpha(2.0), nu, nu, nu).value() == 0.0);
  CHECK(close(markov_objective(Alpha(3.0), nu, nu, th).value(),
              rel_entropy_rate(nu, th).value() / 3.0, 1e-15));
  // fair coin vs biased coin, by four-term sums
  const double p = 0.2;
  const double d = 0.5 * std::log(0.5 / p) + 0.5 * std::log(0.5 / (1.0 - p));
  CHECK(close(markov_objective(Alpha(2.0), iid_coin(0.5), iid_coin(0.5), iid_coin(p)).value(),
              d / 2.0, 1e-15));
}

TEST_CASE("solve_markov_variational examples") {
  SUBCASE("identical inputs") {
    const PairMeasure nu(mat2(0.1, 0.2, 0.2, 0.5));
    const MarkovVarSolution s = solve_markov_variational(Alpha(2.0), nu, nu);
    CHECK(std::abs(s.value.value()) < 1e-12);
    CHECK((s.optimizer->entries() - nu.entries()).cwiseAbs().maxCoeff() < 1e-12);
  }
  SUBCASE("identical inputs keep only the top class") {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(3, 3);
    m << 0.2, 0, 0, 0, 0.3, 0.1, 0, 0.1, 0.3;
    const PairMeasure nu(m);
    const MarkovVarSolution s = solve_markov_variational(Alpha(0.5), nu, nu);
    CHECK(std::abs(s.value.value()) < 1e-12);
    CHECK(s.class_used == std::vector<int>{0});
    CHECK(close((*s.optimizer)(0, 0), 1.0, 1e-15));
  }
  SUBCASE("i.i.d. coins give the i.i.d. geometric mixture") {
    const double p = 0.2;
    const MarkovVarSolution s = solve_markov_variational(Alpha(2.0), iid_coin(0.5), iid_coin(p));
    CHECK(close(s.value.value(), renyi_rate(Alpha(2.0), iid_coin(0.5), iid_coin(p)).value(), 1e-12));
    const double w0 = 0.25 / p;
    const double w1 = 0.25 / (1.0 - p);
    const double q = w0 / (w0 + w1);
    const PairMeasure expected = iid_coin(q);
    CHECK((s.optimizer->entries() - expected.entries()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(s.residual <= 1e-10);
  }
  SUBCASE("no common cycle for order in (0,1)") {
    const MarkovVarSolution s = solve_markov_variational(Alpha(0.5), self_loop(), two_cycle());
    CHECK(s.value.is_pos_inf());
    CHECK_FALSE(s.optimizer);
  }
  SUBCASE("infinite value for order above one") {
    const MarkovVarSolution s = solve_markov_variational(Alpha(2.0), iid_coin(0.5), two_cycle());
    CHECK(s.value.is_pos_inf());
    REQUIRE(s.optimizer);
    CHECK(markov_objective(Alpha(2.0), *s.optimizer, iid_coin(0.5), two_cycle()).is_pos_inf());
  }
  SUBCASE("self-loop top class degenerates to a point mass") {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(3, 3);
    m << 0.5, 0, 0, 0, 0.25, 0.25, 0, 0.25, 0.25;
    const PairMeasure nu(m);
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(3, 3);
    t << 0.1, 0, 0, 0, 0.1, 0.4, 0, 0.4, 0.0;
    const PairMeasure th(t);
    const MarkovVarSolution s = solve_markov_variational(Alpha(0.5), nu, th);
    REQUIRE(s.optimizer);
    CHECK(s.class_used == std::vector<int>{0});
    CHECK((*s.optimizer)(0, 0) == doctest::Approx(1.0));
    CHECK(close(s.value.value(), renyi_rate(Alpha(0.5), nu, th).value(), 1e-10));
  }
}

TEST_CASE("markov attainment and one-sidedness on random inputs") {
  for (int t = 0; t < 12; ++t) {
    auto rng = oracles::trial_rng(21, t);
    const int d = 2 + t % 4;
    const PairMeasure nu = oracles::random_full_pair(d, rng);
    const PairMeasure th = oracles::random_full_pair(d, rng);
    std::vector<std::vector<bool>> all(d, std::vector<bool>(d, true));
    for (double a : kGrid) {
      const Alpha alpha(a);
      const MarkovVarSolution s = solve_markov_variational(alpha, nu, th);
      CHECK(close(s.value.value(), renyi_rate(alpha, nu, th).value(), 1e-8));
      CHECK(s.residual <= 1e-8);
      CHECK(s.optimizer->balance_error() <= 1e-10);
      CHECK(certify_markov_inequality(alpha, *s.optimizer, nu, th).slack ==
            doctest::Approx(0.0).epsilon(1e-8));
      for (int k = 0; k < 5; ++k) {
        const auto mu = oracles::random_pair_on(all, rng);
        CHECK(certify_markov_inequality(alpha, *mu, nu, th).pass);
      }
    }
  }
}

TEST_CASE("varadhan formula") {
  const PairMeasure fair = iid_coin(0.5);
  CHECK(std::abs(varadhan_growth(EdgeFn::constant(2, 0.0), fair).value()) < 1e-12);
  CHECK(close(varadhan_growth(EdgeFn::constant(2, 0.7), fair).value(), 0.7, 1e-12));
  CHECK(close(varadhan_growth(diag_g(1.0), fair).value(), std::log((std::exp(1.0) + 1.0) / 2.0),
              1e-12));

  const MarkovVarSolution z = varadhan_solve(EdgeFn::constant(2, 0.0), fair);
  CHECK(std::abs(z.value.value()) < 1e-12);
  CHECK((z.optimizer->entries() - fair.entries()).cwiseAbs().maxCoeff() < 1e-12);
  const MarkovVarSolution c = varadhan_solve(EdgeFn::constant(2, 1.5), fair);
  CHECK(close(c.value.value(), 1.5, 1e-12));
  CHECK((c.optimizer->entries().array() > 0.0).all());

  const EdgeFn g(mat2(0.3, -1.2, 0.8, 0.1));
  const MarkovVarSolution s = varadhan_solve(g, fair);
  CHECK(s.residual <= 1e-10);
  CHECK(varadhan_certify(g, fair, *s.optimizer).slack == doctest::Approx(0.0).epsilon(1e-10));
  auto rng = oracles::trial_rng(4, 0);
  for (int k = 0; k < 30; ++k) {
    CHECK(varadhan_certify(g, fair, oracles::random_full_pair(2, rng)).pass);
  }
  CHECK(varadhan_certify(g, self_loop(), fair).slack == std::numeric_limits<double>::infinity());
}

TEST_CASE("markov acd formulas") {
  const PairMeasure fair = iid_coin(0.5);
  SUBCASE("constant functions") {
    const MarkovVarSolution z = markov_acd_sup(Alpha(2.0), EdgeFn::constant(2, 0.0), fair);
    CHECK(std::abs(z.value.value()) < 1e-12);
    CHECK((z.optimizer->entries() - fair.entries()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(close(markov_acd_sup(Alpha(0.5), EdgeFn::constant(2, 0.9), fair).value.value(), 0.9,
                1e-12));
    const MarkovVarSolution zi = markov_acd_inf(Alpha(2.0), EdgeFn::constant(2, 0.0), fair);
    CHECK(std::abs(zi.value.value()) < 1e-12);
    CHECK(close(markov_acd_inf(Alpha(-1.0), EdgeFn::constant(2, 0.9), fair).value.value(), 0.9,
                1e-12));
  }
  SUBCASE("two-state closed forms") {
    const double a = 2.0;
    const MarkovVarSolution s = markov_acd_sup(Alpha(a), diag_g(1.0), fair);
    CHECK(close(s.value.value(), std::log((std::exp(a) + 1.0) / 2.0) / a, 1e-12));
    CHECK(s.residual <= 1e-10);
    const RhoIdentityReport r = rho_identities_check(Alpha(a), diag_g(1.0), fair);
    CHECK(close(r.rho_n, std::log((std::exp(a) + 1.0) / 2.0), 1e-12));
    CHECK(close(r.rho_m, std::log((std::exp(1.0) + 1.0) / 2.0), 1e-12));
    CHECK(r.pass);
  }
  SUBCASE("identities under constant shifts") {
    const RhoIdentityReport z = rho_identities_check(Alpha(3.0), EdgeFn::constant(2, 0.0), fair);
    CHECK(z.pass);
    CHECK(std::abs(z.rho_n) < 1e-12);
    CHECK(std::abs(z.rho_tilted) < 1e-12);
    const RhoIdentityReport c = rho_identities_check(Alpha(3.0), EdgeFn::constant(2, 0.5), fair);
    CHECK(close(c.rho_n, 1.5, 1e-12));
    CHECK(c.pass);
  }
  SUBCASE("duality round trip") {
    const EdgeFn g(mat2(0.3, -1.2, 0.8, 0.1));
    const PairMeasure nu(mat2(0.1, 0.2, 0.2, 0.5));
    const Alpha alpha(0.5);
    const MarkovVarSolution inf = markov_acd_inf(alpha, g, nu);
    const MarkovVarSolution sup = markov_acd_sup(alpha.dual(), g.scaled(-1.0), nu);
    CHECK(close(inf.value.value(), -sup.value.value(), 1e-12));
    CHECK(inf.residual <= 1e-10);
  }
  SUBCASE("attainment and certification") {
    auto rng = oracles::trial_rng(8, 0);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (double a : kGrid) {
      Eigen::MatrixXd gv(3, 3);
      for (int i = 0; i < 9; ++i) gv.data()[i] = u(rng);
      const EdgeFn g(gv);
      const PairMeasure th = oracles::random_full_pair(3, rng);
      const MarkovVarSolution s = markov_acd_sup(Alpha(a), g, th);
      CHECK(s.residual <= 1e-8);
      CHECK(certify_markov_acd(Alpha(a), g, *s.optimizer, th).slack ==
            doctest::Approx(0.0).epsilon(1e-8));
      CHECK(rho_identities_check(Alpha(a), g, th).pass);
      for (int k = 0; k < 10; ++k) {
        CHECK(certify_markov_acd(Alpha(a), g, oracles::random_full_pair(3, rng), th).pass);
      }
    }
  }
  SUBCASE("cycle-disjoint supports pass trivially") {
    CHECK(certify_markov_acd(Alpha(0.5), diag_g(1.0), self_loop(), two_cycle()).pass);
  }
}
