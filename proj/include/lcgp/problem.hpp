#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lcgp/gp.hpp"
#include "lcgp/operator_matrix.hpp"
#include "lcgp/ore.hpp"
#include "lcgp/rational.hpp"

namespace lcgp {

enum class RingKind { Commutative, Ore };

/// Squared exponential covariance of one latent component.
struct LatentKernel {
  Rational lengthscale = 1;
  Rational variance = 1;
  friend bool operator==(const LatentKernel&, const LatentKernel&) = default;
};

struct FitGrid {
  std::vector<double> lengthscales;
  std::vector<double> variances;
  std::vector<double> noise_variances;
  friend bool operator==(const FitGrid&, const FitGrid&) = default;
};

/// One axis of a query grid: `count` evenly spaced values in [lo, hi].
struct Axis {
  double lo = 0.0;
  double hi = 0.0;
  std::size_t count = 1;
  friend bool operator==(const Axis&, const Axis&) = default;
};

/// Cartesian product of the axes, each point queried for every component.
struct QueryBlock {
  std::vector<Axis> axes;
  std::vector<std::size_t> components;
  friend bool operator==(const QueryBlock&, const QueryBlock&) = default;
};

/// A complete problem file.
///
///     [ring]
///     kind = commutative            # or: ore
///     coordinates = x, y, z
///     generators = d1, d2, d3
///     action d1 = diff x            # diff | mul | shift
///     shift_step = 1
///     [matrix]
///     d1, d2, d3
///     [kernel]
///     lengthscale = 1               # defaults for every latent component
///     variance = 1
///     latent 2 = 1/2, 1             # per-component override
///     noise = 1e-6
///     jitter = auto
///     [fit]
///     lengthscales = 0.5, 1, 2
///     variances = 1
///     noises = 1e-6
///     [data]
///     0, 0, 0 | 1 | 0.5             # point | component | value
///     [query]
///     -1:1:5, 0, 0 | 0, 1           # lo:hi:count axes | components
///
/// Ore problems use one coordinate and one generator (e.g. t and dt).
/// Data values and coordinates may be rational expressions such as 1/(1.1^4 + 1).
struct ProblemSpec {
  RingKind kind = RingKind::Commutative;
  std::vector<std::string> coordinates;
  std::vector<std::string> generators;
  std::vector<Action> actions;
  Rational shift_step = 1;

  OperatorMatrix matrix;     // commutative problems
  ore::SkewMatrix skew;      // Ore problems

  LatentKernel kernel;
  std::vector<std::pair<std::size_t, LatentKernel>> latent_overrides;
  double noise_variance = 1e-6;
  std::optional<double> jitter;

  std::optional<FitGrid> fit;
  Dataset data;
  std::vector<QueryBlock> queries;

  std::size_t outputs() const;
  std::size_t dimension() const { return coordinates.size(); }

  friend bool operator==(const ProblemSpec&, const ProblemSpec&) = default;
};

ProblemSpec parse_problem(std::string_view text);
/// Canonical text; parse_problem(to_string(s)) == s.
std::string to_string(const ProblemSpec& spec);

std::vector<Query> expand_queries(const ProblemSpec& spec);

}  // namespace lcgp
