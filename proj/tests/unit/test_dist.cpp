#include <cmath>
#include <limits>

#include "doctest.h"
#include "helpers.hpp"
#include "renyivar/dist.hpp"
#include "renyivar/errors.hpp"
#include "renyivar/ext_real.hpp"
#include "renyivar/logspace.hpp"

using namespace renyivar;
using testing::close;
using testing::coin;

TEST_CASE("extended reals never hold NaN") {
  const ExtReal inf = ExtReal::pos_inf();
  CHECK((inf + ExtReal::finite(3.0)).is_pos_inf());
  CHECK_THROWS_AS(inf + ExtReal::neg_inf(), IndeterminateForm);
  CHECK_THROWS_AS(0.0 * inf, IndeterminateForm);
  CHECK((-2.0 * inf).is_neg_inf());
  CHECK_THROWS_AS(ExtReal::from_double(std::nan("")), InvalidArgument);
  CHECK(ExtReal::finite(1.0) < inf);
  CHECK(inf.to_string() == "inf");
  CHECK(ExtReal::neg_inf().to_string() == "-inf");
  CHECK(ext_distance(inf, inf) == 0.0);
  CHECK(std::isinf(ext_distance(inf, ExtReal::finite(0.0))));
}

TEST_CASE("log-sum-exp skips empty mass and resists overflow") {
  const std::vector<double> none{kNegInf, kNegInf};
  CHECK(log_sum_exp(none) == kNegInf);
  const std::vector<double> big{1000.0, 1000.0};
  CHECK(close(log_sum_exp(big), 1000.0 + std::log(2.0), 1e-12));
}

TEST_CASE("distributions normalize and validate") {
  const Dist d(std::vector<double>{1.0, 3.0});
  CHECK(close(d[0], 0.25, 1e-15));
  CHECK_THROWS_AS(Dist(std::vector<double>{-0.1, 1.1}), InvalidArgument);
  CHECK_THROWS_AS(Dist(std::vector<double>{0.0, 0.0}), InvalidArgument);
  CHECK_THROWS_AS(Dist(std::vector<double>{std::nan(""), 1.0}), InvalidArgument);
  CHECK(Dist::point_mass(3, 1).support() == std::vector<Eigen::Index>{1});
}

TEST_CASE("orders 0 and 1 are rejected") {
  CHECK_THROWS_AS(Alpha(0.0), InvalidArgument);
  CHECK_THROWS_AS(Alpha(1.0), InvalidArgument);
  CHECK_THROWS_AS(Alpha(2e6), InvalidArgument);
  CHECK(regime_of(Alpha(2.0)) == Regime::alpha_gt_1);
  CHECK(regime_of(Alpha(0.5)) == Regime::alpha_in_01);
  CHECK(regime_of(Alpha(-1.0)) == Regime::alpha_lt_0);
  CHECK(close(Alpha(-1.0).dual().value(), 2.0, 0.0));
}

TEST_CASE("absolute continuity") {
  CHECK(abs_cont(coin(0.5), coin(0.5)));
  CHECK_FALSE(abs_cont(coin(0.5), coin(1.0)));
  CHECK(abs_cont(coin(1.0), coin(0.5)));
}

TEST_CASE("relative entropy") {
  CHECK(rel_entropy(coin(0.3), coin(0.3)).value() == 0.0);
  CHECK(rel_entropy(coin(0.5), coin(1.0)).is_pos_inf());
  CHECK(close(rel_entropy(coin(0.5), coin(0.25)).value(), 0.5 * std::log(4.0 / 3.0), 1e-15));
  CHECK(close(0.5 * std::log(4.0 / 3.0), 0.14384, 1e-5));
}

TEST_CASE("renyi divergence") {
  for (double a : {-3.0, -0.25, 0.5, 2.0, 5.0}) {
    CHECK(renyi_div(Alpha(a), coin(0.3), coin(0.3)).value() == doctest::Approx(0.0));
  }
  CHECK(close(renyi_div(Alpha(2.0), coin(0.5), coin(0.25)).value(), 0.5 * std::log(4.0 / 3.0),
              1e-15));
  CHECK(renyi_div(Alpha(0.5), coin(1.0), coin(0.0)).is_pos_inf());
  CHECK(renyi_div(Alpha(2.0), coin(0.5), coin(1.0)).is_pos_inf());
  // alpha < 0 with theta not << nu
  CHECK(renyi_div(Alpha(-1.0), coin(1.0), coin(0.5)).is_pos_inf());
  CHECK(renyi_div(Alpha(-1.0), coin(0.5), coin(1.0)).is_finite());
}

TEST_CASE("renyi divergence skew symmetry and sign") {
  const Dist nu(std::vector<double>{0.2, 0.5, 0.3});
  const Dist th(std::vector<double>{0.6, 0.1, 0.3});
  for (double a : {-3.0, -1.0, -0.25, 0.25, 0.5, 0.9, 1.1, 2.0, 5.0}) {
    const double r = renyi_div(Alpha(a), nu, th).value();
    CHECK(r >= -1e-12);
    CHECK(close(r, renyi_div(Alpha(1.0 - a), th, nu).value(), 1e-10));
  }
}

TEST_CASE("renyi divergence through a reference measure") {
  const Dist nu = coin(0.5);
  const Dist th = coin(0.25);
  const double direct = renyi_div(Alpha(2.0), nu, th).value();
  CHECK(close(renyi_via_reference(Alpha(2.0), nu, th, coin(0.5)).value(), direct, 1e-12));
  const Dist mid(Eigen::VectorXd(0.5 * (nu.weights() + th.weights())));
  for (double a : {-1.0, 0.5, 3.0}) {
    CHECK(close(renyi_via_reference(Alpha(a), nu, th, mid).value(),
                renyi_via_reference(Alpha(a), nu, th, Dist::uniform(2)).value(), 1e-10));
  }
  // eta = nu when theta << nu
  const Dist p(std::vector<double>{0.5, 0.3, 0.2});
  const Dist q(std::vector<double>{0.0, 0.6, 0.4});
  CHECK(close(renyi_via_reference(Alpha(0.5), p, q, p).value(), renyi_div(Alpha(0.5), p, q).value(),
              1e-12));
  CHECK_THROWS_AS(renyi_via_reference(Alpha(0.5), p, q, q), Infeasible);
}

TEST_CASE("renyi divergence approaches relative entropy near order one") {
  const Dist nu(std::vector<double>{0.2, 0.5, 0.3});
  const Dist th(std::vector<double>{0.6, 0.1, 0.3});
  const double kl = rel_entropy(nu, th).value();
  for (double a : {1.0 - 1e-6, 1.0 + 1e-6}) {
    const double r = renyi_div(Alpha(a), nu, th).value();
    CHECK(close(a * r, kl, 1e-4));
    CHECK(std::abs(a * (a - 1.0) * r) < 1e-4);
  }
}

TEST_CASE("large orders stay finite") {
  const Dist nu(std::vector<double>{1e-8, 1.0 - 1e-8});
  const Dist th(std::vector<double>{0.999, 0.001});
  CHECK(renyi_div(Alpha(100.0), nu, th).is_finite());
  CHECK(renyi_div(Alpha(-100.0), nu, th).is_finite());
}
