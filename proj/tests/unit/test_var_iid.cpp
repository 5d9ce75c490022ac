#include <cmath>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "renyivar/errors.hpp"
#include "renyivar/var_iid.hpp"

using namespace renyivar;
using testing::close;
using testing::coin;

namespace {

Dist random_full(std::mt19937_64& rng, int d) {
  std::exponential_distribution<double> e(1.0);
  Eigen::VectorXd w(d);
  for (int i = 0; i < d; ++i) w(i) = e(rng);
  return Dist(std::move(w));
}

const double kGrid[] = {-3.0, -1.0, -0.25, 0.25, 0.5, 0.9, 1.1, 2.0, 5.0};

}  // namespace

TEST_CASE("objective at simple points") {
  const Dist nu = coin(0.5);
  const Dist th = coin(0.25);
  CHECK(objective(Alpha(2.0), nu, nu, nu).value() == 0.0);
  CHECK(close(objective(Alpha(3.0), nu, nu, th).value(), rel_entropy(nu, th).value() / 3.0, 1e-15));
  CHECK(close(objective(Alpha(2.0), nu, nu, th).value(), 0.25 * std::log(4.0 / 3.0), 1e-15));
  // mu charges a point nu misses while alpha > 1: first term +inf, second -inf
  CHECK_THROWS_AS(objective(Alpha(2.0), coin(0.5), coin(1.0), coin(0.0)), IndeterminateForm);
}

TEST_CASE("solve_variational examples") {
  SUBCASE("identical inputs") {
    const Dist nu(std::vector<double>{0.2, 0.3, 0.5});
    const VarSolution s = solve_variational(Alpha(2.0), nu, nu);
    CHECK(close(s.value.value(), 0.0, 1e-15));
    CHECK((s.optimizer->weights() - nu.weights()).cwiseAbs().maxCoeff() < 1e-15);
  }
  SUBCASE("infinite value with point-mass witness") {
    const VarSolution s = solve_variational(Alpha(2.0), coin(0.5), coin(1.0));
    CHECK(s.value.is_pos_inf());
    REQUIRE(s.optimizer);
    CHECK((*s.optimizer)[1] == 1.0);
    CHECK(s.residual == 0.0);
  }
  SUBCASE("negative order witness comes from theta") {
    const VarSolution s = solve_variational(Alpha(-1.0), coin(1.0), coin(0.5));
    CHECK(s.value.is_pos_inf());
    CHECK((*s.optimizer)[1] == 1.0);
    CHECK(s.regime == Regime::alpha_lt_0);
  }
  SUBCASE("order one half") {
    const double expected = -4.0 * std::log(std::sqrt(0.5 * 0.25) + std::sqrt(0.5 * 0.75));
    const VarSolution s = solve_variational(Alpha(0.5), coin(0.5), coin(0.25));
    CHECK(close(s.value.value(), expected, 1e-14));
    CHECK(close(s.value.value(), renyi_div(Alpha(0.5), coin(0.5), coin(0.25)).value(), 1e-14));
    const double w0 = std::sqrt(0.5 * 0.25);
    const double w1 = std::sqrt(0.5 * 0.75);
    CHECK(close((*s.optimizer)[0], w0 / (w0 + w1), 1e-15));
  }
  SUBCASE("disjoint supports for order in (0,1)") {
    const VarSolution s = solve_variational(Alpha(0.5), coin(1.0), coin(0.0));
    CHECK(s.value.is_pos_inf());
    CHECK_FALSE(s.optimizer);
  }
}

TEST_CASE("attainment and one-sidedness on random inputs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const int d = 2 + trial % 5;
    const Dist nu = random_full(rng, d);
    const Dist th = random_full(rng, d);
    for (double a : kGrid) {
      const Alpha alpha(a);
      const VarSolution s = solve_variational(alpha, nu, th);
      CHECK(close(s.value.value(), renyi_div(alpha, nu, th).value(), 1e-9));
      CHECK(s.residual <= 1e-9);
      CHECK(s.regime == regime_of(alpha));
      CHECK(certify_inequality(alpha, *s.optimizer, nu, th).slack == doctest::Approx(0.0).epsilon(1e-9));
      for (int k = 0; k < 10; ++k) {
        const CertResult c = certify_inequality(alpha, random_full(rng, d), nu, th);
        CHECK(c.pass);
      }
    }
  }
}

TEST_CASE("certify_inequality at mu = nu equals R - D/alpha") {
  const Dist nu(std::vector<double>{0.2, 0.5, 0.3});
  const Dist th(std::vector<double>{0.6, 0.1, 0.3});
  const CertResult c = certify_inequality(Alpha(2.0), nu, nu, th);
  CHECK(close(c.slack, renyi_div(Alpha(2.0), nu, th).value() - rel_entropy(nu, th).value() / 2.0,
              1e-14));
  CHECK(c.slack >= 0.0);
}

TEST_CASE("certify_inequality rejects points outside the feasible set") {
  const Dist nu(std::vector<double>{0.5, 0.5, 0.0});
  const Dist th(std::vector<double>{0.2, 0.3, 0.5});
  CHECK_THROWS_AS(certify_inequality(Alpha(2.0), Dist::uniform(3), nu, th), Infeasible);
  CHECK_THROWS_AS(certify_inequality(Alpha(0.5), Dist::uniform(3), nu, th), Infeasible);
  CHECK_NOTHROW(certify_inequality(Alpha(-1.0), Dist::uniform(3), nu, th));
}

TEST_CASE("truncated optimizer family") {
  const Dist nu(std::vector<double>{0.1, 0.2, 0.3, 0.4});
  const Dist th(std::vector<double>{0.4, 0.3, 0.2, 0.1});
  const Alpha alpha(3.0);
  const double r = renyi_div(alpha, nu, th).value();
  const std::vector<double> grid = truncation_grid(alpha, nu, th);
  REQUIRE(grid.size() >= 2);
  double prev = -1e300;
  for (double lk : grid) {
    const TruncatedPoint p = truncated_optimizer(alpha, nu, th, lk);
    CHECK(close(p.objective.value(), p.log_z / (3.0 * 2.0), 1e-10));
    CHECK(p.objective.value() >= prev - 1e-12);
    prev = p.objective.value();
  }
  CHECK(close(prev, r, 1e-10));
  CHECK_THROWS_AS(truncated_optimizer(Alpha(0.5), nu, th, 0.0), InvalidArgument);
  CHECK_THROWS_AS(truncated_optimizer(alpha, coin(0.5), coin(1.0), 0.0), Infeasible);
}

TEST_CASE("exponential integral and its variational formula") {
  CHECK(close(log_exp_integral(BoundedFn::constant(3, 1.7), Dist::uniform(3)), 1.7, 1e-15));
  const BoundedFn g(std::vector<double>{0.0, std::log(2.0)});
  CHECK(close(log_exp_integral(g, coin(0.5)), std::log(1.5), 1e-15));
  const BoundedFn big(std::vector<double>{500.0, -500.0, 499.0});
  CHECK(std::isfinite(log_exp_integral(big, Dist::uniform(3))));

  const VarSolution zero = dv_solve(BoundedFn::constant(2, 0.0), coin(0.3));
  CHECK(zero.value.value() == doctest::Approx(0.0));
  CHECK(close((*zero.optimizer)[0], 0.3, 1e-15));
  const VarSolution shift = dv_solve(BoundedFn::constant(2, 2.5), coin(0.3));
  CHECK(close(shift.value.value(), 2.5, 1e-15));
  CHECK(close((*shift.optimizer)[0], 0.3, 1e-15));
  const VarSolution s = dv_solve(g, coin(0.5));
  CHECK(close(s.value.value(), std::log(1.5), 1e-15));
  CHECK(close((*s.optimizer)[0], 1.0 / 3.0, 1e-15));
  CHECK(s.residual <= 1e-12);

  std::mt19937_64 rng(3);
  for (int k = 0; k < 50; ++k) CHECK(dv_certify(g, coin(0.5), random_full(rng, 2)).pass);
  CHECK(dv_certify(g, coin(1.0), coin(0.5)).slack == std::numeric_limits<double>::infinity());
}

TEST_CASE("acd formulas") {
  const BoundedFn zero = BoundedFn::constant(2, 0.0);
  const BoundedFn c = BoundedFn::constant(2, 1.3);
  const Dist th = coin(0.5);
  SUBCASE("constant functions") {
    const VarSolution s0 = acd_sup(Alpha(2.0), zero, th);
    CHECK(s0.value.value() == doctest::Approx(0.0));
    CHECK(close((*s0.optimizer)[0], 0.5, 1e-15));
    CHECK(renyi_div(Alpha(2.0), *s0.optimizer, th).value() == doctest::Approx(0.0));
    CHECK(close(acd_sup(Alpha(0.5), c, th).value.value(), 1.3, 1e-14));
    CHECK(acd_inf(Alpha(2.0), zero, th).value.value() == doctest::Approx(0.0));
    CHECK(close((*acd_inf(Alpha(2.0), zero, coin(0.3)).optimizer)[0], 0.3, 1e-15));
    CHECK(close(acd_inf(Alpha(-2.0), c, th).value.value(), 1.3, 1e-14));
  }
  SUBCASE("worked example") {
    const BoundedFn g(std::vector<double>{0.0, std::log(2.0)});
    const VarSolution s = acd_sup(Alpha(2.0), g, th);
    CHECK(close(s.value.value(), 0.5 * std::log(2.5), 1e-15));
    CHECK(close((*s.optimizer)[0], 1.0 / 3.0, 1e-15));
    CHECK(s.residual <= 1e-12);
    CHECK(acd_certify(Alpha(2.0), g, *s.optimizer, th).slack == doctest::Approx(0.0));
  }
  SUBCASE("duality round trip") {
    const BoundedFn g(std::vector<double>{1.0, 0.0});
    const Dist nu(std::vector<double>{1.0 / 3.0, 2.0 / 3.0});
    const Alpha alpha(0.5);
    const VarSolution inf = acd_inf(alpha, g, nu);
    const VarSolution sup = acd_sup(alpha.dual(), g.scaled(-1.0), nu);
    CHECK(close(inf.value.value(), -sup.value.value(), 1e-12));
    CHECK(((*inf.optimizer).weights() - (*sup.optimizer).weights()).cwiseAbs().maxCoeff() == 0.0);
    CHECK(inf.residual <= 1e-12);
  }
  SUBCASE("disjoint supports pass trivially") {
    const BoundedFn g(std::vector<double>{1.0, -2.0});
    CHECK(acd_certify(Alpha(0.5), g, coin(1.0), coin(0.0)).pass);
  }
  SUBCASE("order near one approaches the exponential integral") {
    const BoundedFn g(std::vector<double>{0.4, -1.1, 2.0});
    const Dist q(std::vector<double>{0.2, 0.5, 0.3});
    for (double a : {1.0 - 1e-6, 1.0 + 1e-6}) {
      CHECK(close(acd_sup(Alpha(a), g, q).value.value(), log_exp_integral(g, q), 1e-4));
    }
  }
  SUBCASE("random one-sidedness") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    for (int k = 0; k < 100; ++k) {
      const int d = 3;
      Eigen::VectorXd gv(d);
      for (int i = 0; i < d; ++i) gv(i) = u(rng);
      const double a = kGrid[k % 9];
      CHECK(acd_certify(Alpha(a), BoundedFn(gv), random_full(rng, d), random_full(rng, d)).pass);
    }
  }
}
