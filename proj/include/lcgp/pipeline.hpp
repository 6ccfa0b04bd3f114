#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lcgp/gp.hpp"
#include "lcgp/kernel_expr.hpp"
#include "lcgp/parametrization.hpp"
#include "lcgp/problem.hpp"

namespace lcgp {

/// Parametrization stage of a problem, for either ring kind.
struct Analysis {
  RingKind kind = RingKind::Commutative;
  ParametrizationReport report;   // commutative problems
  ore::OreReport ore_report;      // Ore problems
  bool parametrizable() const;
  /// Number of latent processes (columns of B).
  std::size_t latent_count() const;
};

Analysis analyze(const ProblemSpec& spec, const KernelOptions& options = {});

/// Names of the kernel variables: each coordinate with suffix 1 and 2.
std::vector<std::string> kernel_names(const ProblemSpec& spec);

/// Latent covariances from the [kernel] section, or uniformly `uniform`.
std::vector<KernelExpr> latent_kernels(const ProblemSpec& spec, const Analysis& analysis,
                                       const std::optional<Hyperparameters>& uniform = {});

MatrixKernel pushforward(const ProblemSpec& spec, const Analysis& analysis,
                         const std::optional<Hyperparameters>& uniform = {});

/// Constraint check of the pushforward against A.
bool annihilates(const ProblemSpec& spec, const MatrixKernel& k);

/// Uniform hyperparameters for every latent process.
KernelFamily kernel_family(const ProblemSpec& spec, const Analysis& analysis);

/// Model with the spec's kernel, noise and jitter.
GPModel make_model(const ProblemSpec& spec, const Analysis& analysis);

struct ReportMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::string text;  // one line per row, comma separated
  friend bool operator==(const ReportMatrix&, const ReportMatrix&) = default;
};

struct Report {
  bool parametrizable = false;
  ReportMatrix parametrization;
  ReportMatrix controllable;
  std::optional<ReportMatrix> certificates;
  friend bool operator==(const Report&, const Report&) = default;
};

inline constexpr std::string_view report_header = "# lcgp report 1";

Report make_report(const ProblemSpec& spec, const Analysis& analysis);
std::string format_report(const Report& report);
Report parse_report(std::string_view text);

}  // namespace lcgp
