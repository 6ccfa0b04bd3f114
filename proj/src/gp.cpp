#include "lcgp/gp.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>

#include "lcgp/errors.hpp"

namespace lcgp {

namespace {

void check_point(const GPModel& model, const std::vector<double>& p, std::size_t component) {
  if (p.size() != model.kernel.dim()) throw DimensionError("point has the wrong dimension");
  if (component >= model.kernel.outputs()) throw DimensionError("component out of range");
}

}  // namespace

Eigen::MatrixXd gram(const GPModel& model, const Dataset& data, double jitter) {
  const auto n = static_cast<Eigen::Index>(data.size());
  Eigen::MatrixXd g(n, n);
  for (Eigen::Index a = 0; a < n; ++a) {
    const auto& oa = data[static_cast<std::size_t>(a)];
    check_point(model, oa.point, oa.component);
    if (!std::isfinite(oa.value)) throw std::invalid_argument("observation value is not finite");
    for (Eigen::Index b = 0; b <= a; ++b) {
      const auto& ob = data[static_cast<std::size_t>(b)];
      // K(x, x')_ij == K(x', x)_ji, so the lower triangle suffices.
      g(a, b) = g(b, a) = model.kernel(oa.point, oa.component, ob.point, ob.component);
    }
    g(a, a) += model.noise_variance + jitter;
  }
  return g;
}

Eigen::MatrixXd cross_covariance(const GPModel& model, const std::vector<Query>& queries,
                                 const Dataset& data) {
  Eigen::MatrixXd k(static_cast<Eigen::Index>(queries.size()), static_cast<Eigen::Index>(data.size()));
  for (std::size_t q = 0; q < queries.size(); ++q) {
    check_point(model, queries[q].point, queries[q].component);
    for (std::size_t a = 0; a < data.size(); ++a)
      k(static_cast<Eigen::Index>(q), static_cast<Eigen::Index>(a)) =
          model.kernel(queries[q].point, queries[q].component, data[a].point, data[a].component);
  }
  return k;
}

ConditionedGP::ConditionedGP(GPModel model, Dataset data)
    : model_(std::move(model)), data_(std::move(data)) {
  if (model_.noise_variance < 0) throw std::invalid_argument("noise variance must be nonnegative");
  const Eigen::MatrixXd g0 = gram(model_, data_);
  const auto n = g0.rows();
  if (model_.jitter) {
    if (*model_.jitter < 0) throw std::invalid_argument("jitter must be nonnegative");
    jitter_ = *model_.jitter;
  } else {
    jitter_ = n == 0 ? 0.0 : 1e-8 * g0.diagonal().mean();
  }
  Eigen::MatrixXd g = g0;
  for (int attempt = 0;; ++attempt) {
    g.diagonal() = g0.diagonal().array() + jitter_;
    llt_.compute(g);
    if (llt_.info() == Eigen::Success) break;
    if (attempt >= model_.max_jitter_retries) {
      const double pivot = n == 0 ? 0.0 : Eigen::LDLT<Eigen::MatrixXd>(g).vectorD().minCoeff();
      throw FactorizationError("Gram matrix is not positive definite (minimum pivot " +
                                   std::to_string(pivot) + ")",
                               pivot);
    }
    jitter_ = jitter_ > 0 ? 2 * jitter_ : 1e-8 * std::max(1.0, g0.diagonal().cwiseAbs().mean());
  }
  Eigen::VectorXd y(n);
  for (Eigen::Index a = 0; a < n; ++a) y(a) = data_[static_cast<std::size_t>(a)].value;
  alpha_ = llt_.solve(y);
}

double ConditionedGP::log_marginal_likelihood() const {
  const auto n = static_cast<double>(data_.size());
  if (data_.empty()) return 0.0;
  Eigen::VectorXd y(alpha_.size());
  for (Eigen::Index a = 0; a < y.size(); ++a) y(a) = data_[static_cast<std::size_t>(a)].value;
  const double log_det = 2.0 * llt_.matrixL().toDenseMatrix().diagonal().array().log().sum();
  return -0.5 * y.dot(alpha_) - 0.5 * log_det - 0.5 * n * std::log(2.0 * std::numbers::pi);
}

Eigen::VectorXd ConditionedGP::mean(const std::vector<Query>& queries) const {
  if (data_.empty()) return Eigen::VectorXd::Zero(static_cast<Eigen::Index>(queries.size()));
  return cross_covariance(model_, queries, data_) * alpha_;
}

double ConditionedGP::mean(const std::vector<double>& point, std::size_t component) const {
  return mean(std::vector<Query>{{point, component}})(0);
}

Prediction ConditionedGP::predict(const std::vector<Query>& queries) const {
  const auto m = static_cast<Eigen::Index>(queries.size());
  Eigen::MatrixXd prior(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const auto& qi = queries[static_cast<std::size_t>(i)];
    check_point(model_, qi.point, qi.component);
    for (Eigen::Index j = 0; j <= i; ++j) {
      const auto& qj = queries[static_cast<std::size_t>(j)];
      prior(i, j) = prior(j, i) = model_.kernel(qi.point, qi.component, qj.point, qj.component);
    }
  }
  if (data_.empty()) return {Eigen::VectorXd::Zero(m), prior};
  const Eigen::MatrixXd ks = cross_covariance(model_, queries, data_);
  const Eigen::MatrixXd v = llt_.matrixL().solve(ks.transpose());
  Prediction p;
  p.mean = ks * alpha_;
  p.covariance = prior - v.transpose() * v;
  p.covariance = 0.5 * (p.covariance + p.covariance.transpose()).eval();
  return p;
}

Prediction posterior(const GPModel& model, const Dataset& data, const std::vector<Query>& queries) {
  return ConditionedGP(model, data).predict(queries);
}

double log_marginal_likelihood(const GPModel& model, const Dataset& data) {
  return ConditionedGP(model, data).log_marginal_likelihood();
}

std::vector<GridCandidate> make_grid(const std::vector<double>& lengthscales,
                                     const std::vector<double>& variances,
                                     const std::vector<double>& noise_variances) {
  std::vector<GridCandidate> grid;
  for (double l : lengthscales)
    for (double v : variances)
      for (double n : noise_variances) grid.push_back({l, v, n});
  return grid;
}

GPModel fit_hyperparameters(const KernelFamily& family, const Dataset& data,
                            const std::vector<GridCandidate>& grid, const GPModel& base) {
  if (grid.empty()) throw std::invalid_argument("empty hyperparameter grid");
  std::optional<GPModel> best;
  double best_lml = -std::numeric_limits<double>::infinity();
  for (const auto& c : grid) {
    GPModel m = base;
    m.hyperparameters = {c.lengthscale, c.variance};
    m.noise_variance = c.noise_variance;
    m.kernel = family(m.hyperparameters);
    double lml;
    try {
      lml = log_marginal_likelihood(m, data);
    } catch (const FactorizationError&) {
      continue;
    }
    if (!best || lml > best_lml) {
      best = std::move(m);
      best_lml = lml;
    }
  }
  if (!best) throw FactorizationError("no grid candidate could be factorized", 0.0);
  return *best;
}

void write_csv(std::ostream& os, const std::vector<std::string>& coordinates,
               const std::vector<Query>& queries, const Prediction& prediction) {
  for (const auto& c : coordinates) os << c << ',';
  os << "component,mean,std\n";
  const auto old_precision = os.precision(12);
  for (std::size_t q = 0; q < queries.size(); ++q) {
    const auto i = static_cast<Eigen::Index>(q);
    for (double x : queries[q].point) os << x << ',';
    os << queries[q].component << ',' << prediction.mean(i) << ','
       << std::sqrt(std::max(0.0, prediction.covariance(i, i))) << '\n';
  }
  os.precision(old_precision);
}

}  // namespace lcgp
