#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lcgp/module_element.hpp"
#include "lcgp/poly_io.hpp"
#include "lcgp/ring.hpp"

namespace lcgp {

/// Matrix over a commutative operator ring, together with that ring.
class OperatorMatrix {
 public:
  OperatorMatrix() = default;
  OperatorMatrix(Ring ring, PolyMatrix entries);
  OperatorMatrix(Ring ring, std::size_t rows, std::size_t cols);

  static OperatorMatrix identity(const Ring& ring, std::size_t n);
  /// Columns given as elements of R^rows.
  static OperatorMatrix from_columns(const Ring& ring, const std::vector<ModuleElement>& cols,
                                     std::size_t rows);
  /// Rows given as elements of R^cols.
  static OperatorMatrix from_rows(const Ring& ring, const std::vector<ModuleElement>& rows,
                                  std::size_t cols);
  /// Parses rows in the polynomial grammar, one per line, comma separated.
  static OperatorMatrix parse(const Ring& ring, std::string_view text);

  const Ring& ring() const { return ring_; }
  const PolyMatrix& entries() const { return entries_; }
  std::size_t rows() const { return entries_.rows(); }
  std::size_t cols() const { return entries_.cols(); }
  std::size_t nvars() const { return ring_.nvars(); }
  const Polynomial& operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }
  Polynomial& operator()(std::size_t i, std::size_t j) { return entries_(i, j); }

  std::vector<ModuleElement> column_elements() const;
  std::vector<ModuleElement> row_elements() const;

  bool is_zero() const { return lcgp::is_zero(entries_); }
  std::string to_string() const { return lcgp::to_string(entries_, ring_.generators()); }

  friend bool operator==(const OperatorMatrix&, const OperatorMatrix&) = default;

 private:
  Ring ring_;
  PolyMatrix entries_;
};

OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b);
OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b);
OperatorMatrix transpose(const OperatorMatrix& a);

}  // namespace lcgp
