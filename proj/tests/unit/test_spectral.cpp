#include <cmath>
#include <limits>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "renyivar/errors.hpp"
#include "renyivar/markov.hpp"
#include "renyivar/spectral.hpp"

using namespace renyivar;
using testing::close;
using testing::mat2;

namespace {

NonnegMatrix m1(double x) { return NonnegMatrix(Eigen::MatrixXd::Constant(1, 1, x)); }

}  // namespace

TEST_CASE("matrix validation") {
  CHECK_THROWS_AS(NonnegMatrix(mat2(1, -1, 0, 1)), InvalidArgument);
  CHECK_THROWS_AS(NonnegMatrix(mat2(1, std::nan(""), 0, 1)), InvalidArgument);
  CHECK_THROWS_AS(NonnegMatrix(Eigen::MatrixXd::Zero(2, 3)), InvalidArgument);
}

TEST_CASE("cycles") {
  CHECK_FALSE(has_cycle(NonnegMatrix(mat2(0, 1, 0, 0))));
  CHECK(has_cycle(NonnegMatrix(mat2(0, 1, 1, 0))));
  CHECK(has_cycle(NonnegMatrix(mat2(0, 0, 0, 0.5))));
}

TEST_CASE("class decomposition") {
  const ClassDecomposition a = classes(NonnegMatrix(mat2(1, 1, 0, 1)));
  REQUIRE(a.classes.size() == 2);
  CHECK(a.cyclic[0]);
  CHECK(a.cyclic[1]);
  CHECK(a.class_of[0] != a.class_of[1]);

  const ClassDecomposition b = classes(NonnegMatrix(mat2(0, 1, 1, 0)));
  REQUIRE(b.classes.size() == 1);
  CHECK(b.classes[0] == std::vector<int>{0, 1});

  const ClassDecomposition c = classes(NonnegMatrix(mat2(0, 1, 0, 0)));
  REQUIRE(c.classes.size() == 2);
  CHECK_FALSE(c.cyclic[0]);
  CHECK_FALSE(c.cyclic[1]);
  CHECK(c.cyclic_classes().empty());

  // restriction to a subset of states
  Eigen::MatrixXd m(3, 3);
  m << 0, 1, 0, 1, 0, 1, 0, 1, 0;
  const ClassDecomposition r = classes(NonnegMatrix(m), {0, 1});
  REQUIRE(r.classes.size() == 1);
  CHECK(r.classes[0] == std::vector<int>{0, 1});
  CHECK_FALSE(r.class_of[2].has_value());
}

TEST_CASE("Perron data") {
  const PerronData p1 = perron(m1(2.0), {0});
  CHECK(close(p1.lambda(), 2.0, 1e-14));

  const PerronData p2 = perron(NonnegMatrix(mat2(0, 1, 1, 0)), {0, 1});
  CHECK(close(p2.lambda(), 1.0, 1e-12));
  CHECK(close(p2.right(0), 0.5, 1e-12));
  CHECK(close(p2.right(1), 0.5, 1e-12));
  CHECK(close(p2.left.dot(p2.right), 1.0, 1e-12));
  CHECK(close(p2.left(0), 1.0, 1e-12));

  const PerronData p3 = perron(NonnegMatrix(mat2(1, 1, 1, 1)), {0, 1});
  CHECK(close(p3.lambda(), 2.0, 1e-12));

  // 3-cycle, period 3
  Eigen::MatrixXd c3 = Eigen::MatrixXd::Zero(3, 3);
  c3(0, 1) = 2.0;
  c3(1, 2) = 1.0;
  c3(2, 0) = 4.0;
  const NonnegMatrix m3(c3);
  const PerronData p4 = perron(m3, {0, 1, 2});
  CHECK(close(p4.lambda(), 2.0, 1e-12));
  const PerronResidual r = perron_residual(m3, p4);
  CHECK(r.left <= 1e-10);
  CHECK(r.right <= 1e-10);
}

TEST_CASE("Perron root far below the largest entry") {
  // the largest entry sits off the diagonal and the root is ~1e-8 of it
  const double a = 1.3668093736117553e-08, b = 5.8034950799562598e-18, d = 1.4666068265560358e-19;
  const NonnegMatrix m(mat2(a, b, 1.0, d));
  const double tr = a + d, det = a * d - b;
  const double lam = 0.5 * (tr + std::sqrt(tr * tr - 4.0 * det));
  const PerronData p = perron(m, {0, 1});
  CHECK(close(p.lambda(), lam, 1e-10 * lam));
  const PerronResidual r = perron_residual(m, p);
  CHECK(r.right <= 1e-10);
  // left . right = 1 forces left(0) ~ 1 / lambda, so one ulp of (left M) is
  // already ~1e-8 relative to lambda
  const double ulp_floor = 4.0 * std::numeric_limits<double>::epsilon() *
                           p.left.cwiseAbs().maxCoeff() / p.lambda();
  CHECK(r.left <= 10.0 * ulp_floor);

  // nearly bipartite: second eigenvalue close to -lambda
  const NonnegMatrix nb(mat2(1e-6, 1.0, 1.0, 1e-6));
  CHECK(close(perron(nb, {0, 1}).lambda(), 1.0 + 1e-6, 1e-12));
}

TEST_CASE("growth rate") {
  CHECK(growth_rate(NonnegMatrix(mat2(0, 1, 0, 0))).is_neg_inf());
  CHECK(close(growth_rate(m1(2.0)).value(), std::log(2.0), 1e-14));
  CHECK(close(growth_rate(NonnegMatrix(mat2(1, 1, 1, 1))).value(), std::log(2.0), 1e-12));
  CHECK(close(growth_rate_bruteforce(m1(2.0), 10).value(), std::log(2.0), 1e-15));
  CHECK(growth_rate_bruteforce(NonnegMatrix(mat2(0, 1, 0, 0)), 2).is_neg_inf());
  // largest class wins
  CHECK(close(growth_rate(NonnegMatrix(mat2(3, 1, 0, 0.5))).value(), std::log(3.0), 1e-12));
}

TEST_CASE("growth rate against brute force on a positive matrix") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 2.0);
  Eigen::MatrixXd m(4, 4);
  for (int i = 0; i < 16; ++i) m.data()[i] = u(rng) + 0.01;
  const NonnegMatrix nm(m);
  const std::vector<double> lm = log_total_mass(nm, 201);
  CHECK(close(lm[200] - lm[199], growth_rate(nm).value(), 1e-8));
}

TEST_CASE("extreme log entries do not overflow") {
  Eigen::MatrixXd l(2, 2);
  l << 800.0, 790.0, 795.0, 805.0;
  const NonnegMatrix m = NonnegMatrix::from_log(l);
  const ExtReal r = growth_rate(m);
  CHECK(r.is_finite());
  CHECK(r.value() > 805.0);
  CHECK(r.value() < 806.0);
}

TEST_CASE("ties go to the smallest state") {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(3, 3);
  m(2, 2) = 1.0;
  m(0, 0) = 1.0;
  const auto top = top_class(NonnegMatrix(m));
  REQUIRE(top);
  CHECK(top->states == std::vector<int>{0});
}

TEST_CASE("compatibility") {
  const PairMeasure mu(mat2(0.25, 0.25, 0.25, 0.25));
  CHECK(compatible(NonnegMatrix(mu.entries()), mu));
  const PairMeasure cyc(mat2(0, 0.5, 0.5, 0));
  CHECK_FALSE(compatible(NonnegMatrix(mat2(0.1, 0.5, 0.5, 0)), cyc));
  CHECK_FALSE(compatible(NonnegMatrix(mat2(0, 0.5, 0, 0)), cyc));
}

TEST_CASE("maximal absolutely continuous element") {
  CHECK_FALSE(maximal_abs_cont(NonnegMatrix(mat2(0, 1, 0, 0))));
  const auto full = maximal_abs_cont(NonnegMatrix(mat2(1, 1, 1, 1)));
  REQUIRE(full);
  CHECK((full->entries().array() > 0.0).all());
  const auto tri = maximal_abs_cont(NonnegMatrix(mat2(1, 1, 0, 1)));
  REQUIRE(tri);
  CHECK((*tri)(0, 0) > 0.0);
  CHECK((*tri)(1, 1) > 0.0);
  CHECK((*tri)(0, 1) == 0.0);
  CHECK(tri->balance_error() <= 1e-15);
}

TEST_CASE("restriction to the maximal element keeps the growth rate") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0.0, 2.0);
  std::bernoulli_distribution keep(0.35);
  for (int t = 0; t < 30; ++t) {
    const int d = 2 + t % 5;
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
    for (int i = 0; i < d * d; ++i) {
      if (keep(rng)) m.data()[i] = u(rng);
    }
    const NonnegMatrix nm(m);
    const auto tau = maximal_abs_cont(nm);
    if (!tau) {
      CHECK(growth_rate(nm).is_neg_inf());
      continue;
    }
    std::vector<std::vector<bool>> support(d, std::vector<bool>(d));
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) support[i][j] = (*tau)(i, j) > 0.0;
    }
    CHECK(growth_rate(nm.masked(support)) == growth_rate(nm));
  }
}
