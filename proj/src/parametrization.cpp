#include "lcgp/parametrization.hpp"

namespace lcgp {

OperatorMatrix right_kernel(const OperatorMatrix& a, const KernelOptions& options) {
  Submodule columns(a.column_elements(), a.rows(), a.nvars(), options.base, options.groebner);
  return OperatorMatrix::from_columns(a.ring(), columns.syzygies(), a.cols());
}

OperatorMatrix left_kernel(const OperatorMatrix& b, const KernelOptions& options) {
  return transpose(right_kernel(transpose(b), options));
}

ParametrizationReport check_parametrizable(const OperatorMatrix& a, const KernelOptions& options) {
  ParametrizationReport report;
  report.parametrization = right_kernel(a, options);
  report.controllable = left_kernel(report.parametrization, options);

  Submodule rows(a.row_elements(), a.cols(), a.nvars(), options.base, options.groebner);
  report.parametrizable = true;
  for (const auto& row : report.controllable.row_elements()) {
    Membership m = rows.membership(row);
    if (!m.member) {
      report.parametrizable = false;
      report.certificates.clear();
      break;
    }
    report.certificates.push_back(std::move(m.cofactors));
  }
  return report;
}

OperatorMatrix controllable_part(const OperatorMatrix& a, const KernelOptions& options) {
  return left_kernel(right_kernel(a, options), options);
}

bool same_row_module(const OperatorMatrix& a, const OperatorMatrix& b, const KernelOptions& options) {
  if (a.cols() != b.cols()) return false;
  MonomialOrder order(options.base, ModuleExtension::TermOverPosition);
  return module_equal(a.row_elements(), b.row_elements(), a.cols(), a.nvars(), order,
                      options.groebner);
}

bool same_column_module(const OperatorMatrix& a, const OperatorMatrix& b,
                        const KernelOptions& options) {
  if (a.rows() != b.rows()) return false;
  MonomialOrder order(options.base, ModuleExtension::TermOverPosition);
  return module_equal(a.column_elements(), b.column_elements(), a.rows(), a.nvars(), order,
                      options.groebner);
}

}  // namespace lcgp
