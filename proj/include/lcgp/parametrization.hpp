#pragma once

#include <vector>

#include "lcgp/groebner.hpp"
#include "lcgp/operator_matrix.hpp"

namespace lcgp {

struct KernelOptions {
  BaseOrder base = BaseOrder::DegRevLex;
  GroebnerOptions groebner;
};

/// Columns generate {m in R^cols : A m = 0}. Zero-module kernels give a
/// cols x 0 matrix.
OperatorMatrix right_kernel(const OperatorMatrix& a, const KernelOptions& options = {});

/// Rows generate {m in R^(1 x rows) : m B = 0}; the right kernel of the
/// transpose, which is valid because R is commutative.
OperatorMatrix left_kernel(const OperatorMatrix& b, const KernelOptions& options = {});

struct ParametrizationReport {
  OperatorMatrix parametrization;  ///< B = rker(A)
  OperatorMatrix controllable;     ///< A' = lker(B)
  bool parametrizable = false;
  /// When parametrizable: row i of A' equals sum_j certificates[i][j] * row j of A.
  std::vector<std::vector<Polynomial>> certificates;
};

/// Decides whether sol(A) admits a parametrization: computes B and A' and
/// tests whether every row of A' lies in the row module of A. The reverse
/// inclusion always holds since A B = 0.
ParametrizationReport check_parametrizable(const OperatorMatrix& a,
                                           const KernelOptions& options = {});

/// A' = lker(rker(A)); sol(A') is the largest parametrizable subset of sol(A).
OperatorMatrix controllable_part(const OperatorMatrix& a, const KernelOptions& options = {});

bool same_row_module(const OperatorMatrix& a, const OperatorMatrix& b,
                     const KernelOptions& options = {});
bool same_column_module(const OperatorMatrix& a, const OperatorMatrix& b,
                        const KernelOptions& options = {});

}  // namespace lcgp
