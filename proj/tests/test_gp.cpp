#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "lcgp/errors.hpp"
#include "lcgp/gp.hpp"
#include "lcgp/kernel_expr.hpp"
#include "lcgp/ore.hpp"

namespace lcgp {
namespace {

CompiledKernel se1(double lengthscale = 1.0, double variance = 1.0) {
  MatrixKernel k(1, 1, KernelExpr(1));
  k(0, 0) = se_kernel(1, Rational(lengthscale), Rational(variance));
  return CompiledKernel(k);
}

GPModel exact_model(CompiledKernel k) {
  GPModel m;
  m.kernel = std::move(k);
  m.noise_variance = 0.0;
  m.jitter = 0.0;
  return m;
}

TEST(Gram, SquaredExponentialEntries) {
  GPModel m = exact_model(se1());
  Dataset d{{{0.0}, 0, 1.0}, {{1.0}, 0, 2.0}};
  Eigen::MatrixXd g = gram(m, d);
  EXPECT_DOUBLE_EQ(g(0, 0), 1.0);
  EXPECT_NEAR(g(0, 1), std::exp(-0.5), 1e-15);
  EXPECT_EQ(g(0, 1), g(1, 0));
  m.noise_variance = 0.25;
  EXPECT_DOUBLE_EQ(gram(m, d, 0.5)(1, 1), 1.75);
}

TEST(Gram, ControlKernel) {
  auto b = ore::parse_skew_matrix("1\n(1)/(t^3)*dt");
  GPModel m = exact_model(CompiledKernel(pushforward_covariance(b, {se_kernel(1, 1, 1)})));
  Dataset d{{{1.0}, 0, 0.0}, {{2.0}, 1, 0.0}};
  Eigen::MatrixXd g = gram(m, d);
  EXPECT_DOUBLE_EQ(g(0, 0), 1.0);
  EXPECT_NEAR(g(0, 1), -0.125 * std::exp(-0.5), 1e-15);
  // (1/t^3)(1/t'^3) d/dt d/dt' k at t = t' = 2
  EXPECT_NEAR(g(1, 1), 1.0 / 64.0, 1e-15);
}

TEST(LogMarginalLikelihood, SinglePoint) {
  GPModel m = exact_model(se1());
  const double half_log_2pi = 0.5 * std::log(2 * std::numbers::pi);
  EXPECT_NEAR(log_marginal_likelihood(m, {{{0.0}, 0, 0.0}}), -half_log_2pi, 1e-14);
  EXPECT_NEAR(log_marginal_likelihood(m, {{{0.0}, 0, 1.0}}), -0.5 - half_log_2pi, 1e-14);
  EXPECT_EQ(log_marginal_likelihood(m, {}), 0.0);
}

TEST(LogMarginalLikelihood, NoiseSanity) {
  // one point, variance v + s: -y^2 / (2(v + s)) - log(v + s) / 2 - log(2 pi) / 2
  GPModel m = exact_model(se1());
  m.noise_variance = 1.0;
  double expect = -1.0 / 4.0 - 0.5 * std::log(2.0) - 0.5 * std::log(2 * std::numbers::pi);
  EXPECT_NEAR(log_marginal_likelihood(m, {{{0.3}, 0, 1.0}}), expect, 1e-14);
}

TEST(Posterior, InterpolatesAndReducesVariance) {
  GPModel m = exact_model(se1());
  Dataset d{{{-1.0}, 0, 0.5}, {{0.0}, 0, -1.0}, {{1.5}, 0, 2.0}};
  std::vector<Query> q;
  for (double x = -3; x <= 3; x += 0.25) q.push_back({{x}, 0});
  Prediction p = posterior(m, d, q);
  for (std::size_t i = 0; i < q.size(); ++i) {
    EXPECT_LE(p.covariance(i, i), 1.0 + 1e-12);
    EXPECT_GE(p.covariance(i, i), -1e-12);
  }
  Prediction at = posterior(m, d, {{{-1.0}, 0}, {{0.0}, 0}, {{1.5}, 0}});
  for (std::size_t i = 0; i < d.size(); ++i) {
    EXPECT_NEAR(at.mean(i), d[i].value, 1e-12);
    EXPECT_NEAR(at.covariance(i, i), 0.0, 1e-12);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(p.covariance);
  EXPECT_GE(es.eigenvalues().minCoeff(), -1e-9);
}

TEST(Posterior, DuplicateObservationsWithNoise) {
  GPModel m = exact_model(se1());
  m.noise_variance = 0.1;
  m.jitter.reset();
  Dataset twice{{{0.0}, 0, 1.0}, {{0.0}, 0, 1.0}};
  ConditionedGP gp(m, twice);
  // two noisy copies act like one observation with half the noise
  GPModel half = m;
  half.noise_variance = 0.05;
  ConditionedGP once(half, {{{0.0}, 0, 1.0}});
  EXPECT_NEAR(gp.mean({0.7}, 0), once.mean({0.7}, 0), 1e-6);
  EXPECT_GT(gp.jitter(), 0.0);
}

TEST(Posterior, DuplicateObservationsWithoutNoiseNeedJitter) {
  GPModel m = exact_model(se1());
  m.jitter.reset();
  ConditionedGP gp(m, {{{0.0}, 0, 1.0}, {{0.0}, 0, 1.0}});
  EXPECT_NEAR(gp.mean({0.0}, 0), 1.0, 1e-6);
}

TEST(Posterior, FactorizationErrorCarriesPivot) {
  MatrixKernel bad(1, 1, KernelExpr(1));
  bad(0, 0) = parse_kernel("x1*x2 - 2", kernel_variable_names({"x"}));
  GPModel m;
  m.kernel = CompiledKernel(bad);
  m.noise_variance = 0.0;
  try {
    ConditionedGP gp(m, {{{0.0}, 0, 1.0}, {{1.0}, 0, 0.0}});
    FAIL() << "expected FactorizationError";
  } catch (const FactorizationError& e) {
    EXPECT_LT(e.min_pivot(), 0.0);
  }
  m.jitter = -1.0;
  EXPECT_THROW(ConditionedGP(m, {{{0.0}, 0, 1.0}}), std::invalid_argument);
}

TEST(Fit, GridOrderAndTies) {
  auto grid = make_grid({1, 2}, {3}, {0.1, 0.2});
  ASSERT_EQ(grid.size(), 4u);
  EXPECT_EQ(grid[1].lengthscale, 1);
  EXPECT_EQ(grid[1].noise_variance, 0.2);
  EXPECT_EQ(grid[2].lengthscale, 2);
  KernelFamily family = [](const Hyperparameters& h) { return se1(h.lengthscale, h.variance); };
  GPModel only = fit_hyperparameters(family, {{{0.0}, 0, 1.0}}, make_grid({0.5}, {2}, {0.01}));
  EXPECT_EQ(only.hyperparameters.lengthscale, 0.5);
  EXPECT_EQ(only.hyperparameters.variance, 2);
  EXPECT_EQ(only.noise_variance, 0.01);
  // without data every candidate scores 0: the first one wins
  GPModel first = fit_hyperparameters(family, {}, grid);
  EXPECT_EQ(first.hyperparameters.lengthscale, 1);
  EXPECT_EQ(first.noise_variance, 0.1);
}

TEST(Fit, RecoversLengthscaleFromSamples) {
  const std::vector<double> lengthscales{0.25, 0.5, 1, 2, 4};
  KernelFamily family = [](const Hyperparameters& h) { return se1(h.lengthscale, h.variance); };
  std::vector<double> chosen;
  for (unsigned seed = 0; seed < 20; ++seed) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> normal;
    std::uniform_real_distribution<double> u(-5, 5);
    Dataset d;
    for (int i = 0; i < 30; ++i) d.push_back({{u(rng)}, 0, 0.0});
    GPModel truth = exact_model(se1());
    truth.noise_variance = 1e-2;
    Eigen::MatrixXd g = gram(truth, d, 1e-10);
    Eigen::MatrixXd l = g.llt().matrixL();
    Eigen::VectorXd z(d.size());
    for (auto& v : z) v = normal(rng);
    Eigen::VectorXd y = l * z;
    for (std::size_t i = 0; i < d.size(); ++i) d[i].value = y(i);
    GPModel fit = fit_hyperparameters(family, d, make_grid(lengthscales, {1}, {1e-2}));
    chosen.push_back(fit.hyperparameters.lengthscale);
  }
  std::nth_element(chosen.begin(), chosen.begin() + 10, chosen.end());
  EXPECT_GE(chosen[10], 0.5);
  EXPECT_LE(chosen[10], 2.0);
}

TEST(Csv, Format) {
  Prediction p{Eigen::VectorXd::Constant(1, 0.5), Eigen::MatrixXd::Constant(1, 1, 0.25)};
  std::ostringstream os;
  write_csv(os, {"x", "y"}, {{{1.0, -2.0}, 1}}, p);
  EXPECT_EQ(os.str(), "x,y,component,mean,std\n1,-2,1,0.5,0.5\n");
}

}  // namespace
}  // namespace lcgp
