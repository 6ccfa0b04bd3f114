#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <vector>

#include <Eigen/Cholesky>
#include <Eigen/Core>

#include "lcgp/kernel_expr.hpp"

namespace lcgp {

/// A single observed output component at a point.
struct Observation {
  std::vector<double> point;
  std::size_t component = 0;
  double value = 0.0;
  friend bool operator==(const Observation&, const Observation&) = default;
};

using Dataset = std::vector<Observation>;

struct Query {
  std::vector<double> point;
  std::size_t component = 0;
  friend bool operator==(const Query&, const Query&) = default;
};

struct Hyperparameters {
  double lengthscale = 1.0;
  double variance = 1.0;
};

struct GPModel {
  CompiledKernel kernel;
  double noise_variance = 1e-6;
  /// Absolute diagonal jitter; unset means 1e-8 times the mean Gram diagonal.
  std::optional<double> jitter;
  int max_jitter_retries = 8;
  Hyperparameters hyperparameters;
};

/// K(p_a, p_b)_{c_a, c_b} + (noise + jitter) on the diagonal.
Eigen::MatrixXd gram(const GPModel& model, const Dataset& data, double jitter = 0.0);

/// Cross covariance k(queries, data) without noise.
Eigen::MatrixXd cross_covariance(const GPModel& model, const std::vector<Query>& queries,
                                 const Dataset& data);

struct Prediction {
  Eigen::VectorXd mean;
  Eigen::MatrixXd covariance;
};

/// A model conditioned on data. The Gram matrix is factorized once at
/// construction; all queries are const and may run concurrently.
class ConditionedGP {
 public:
  ConditionedGP(GPModel model, Dataset data);

  const GPModel& model() const { return model_; }
  const Dataset& data() const { return data_; }
  /// Diagonal jitter actually used for the successful factorization.
  double jitter() const { return jitter_; }

  double log_marginal_likelihood() const;
  Eigen::VectorXd mean(const std::vector<Query>& queries) const;
  double mean(const std::vector<double>& point, std::size_t component) const;
  Prediction predict(const std::vector<Query>& queries) const;

 private:
  GPModel model_;
  Dataset data_;
  double jitter_ = 0.0;
  Eigen::LLT<Eigen::MatrixXd> llt_;
  Eigen::VectorXd alpha_;
};

Prediction posterior(const GPModel& model, const Dataset& data, const std::vector<Query>& queries);
double log_marginal_likelihood(const GPModel& model, const Dataset& data);

struct GridCandidate {
  double lengthscale;
  double variance;
  double noise_variance;
};

/// Cartesian product, lengthscale varying slowest.
std::vector<GridCandidate> make_grid(const std::vector<double>& lengthscales,
                                     const std::vector<double>& variances,
                                     const std::vector<double>& noise_variances);

/// Builds the compiled kernel for given hyperparameters.
using KernelFamily = std::function<CompiledKernel(const Hyperparameters&)>;

/// Returns the candidate model with the largest log marginal likelihood;
/// ties keep the earlier candidate. Candidates whose Gram matrix cannot be
/// factorized are skipped.
GPModel fit_hyperparameters(const KernelFamily& family, const Dataset& data,
                            const std::vector<GridCandidate>& grid, const GPModel& base = {});

/// CSV with columns x_1..x_d, component, mean, std.
void write_csv(std::ostream& os, const std::vector<std::string>& coordinates,
               const std::vector<Query>& queries, const Prediction& prediction);

}  // namespace lcgp
