#include "lcgp/operator_matrix.hpp"

#include "lcgp/errors.hpp"

namespace lcgp {

OperatorMatrix::OperatorMatrix(Ring ring, PolyMatrix entries)
    : ring_(std::move(ring)), entries_(std::move(entries)) {
  if (entries_.zero().nvars() != ring_.nvars())
    throw DimensionError("matrix entries do not belong to the ring");
  for (std::size_t i = 0; i < entries_.rows(); ++i)
    for (std::size_t j = 0; j < entries_.cols(); ++j)
      if (entries_(i, j).nvars() != ring_.nvars())
        throw DimensionError("entry (" + std::to_string(i) + ", " + std::to_string(j) +
                             ") has the wrong generator count");
}

OperatorMatrix::OperatorMatrix(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), entries_(rows, cols, Polynomial(ring_.nvars())) {}

OperatorMatrix OperatorMatrix::identity(const Ring& ring, std::size_t n) {
  return {ring, PolyMatrix::identity(n, Polynomial(ring.nvars()), Polynomial(ring.nvars(), 1))};
}

OperatorMatrix OperatorMatrix::from_columns(const Ring& ring, const std::vector<ModuleElement>& cols,
                                            std::size_t rows) {
  OperatorMatrix m(ring, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].rank() != rows) throw DimensionError("column has the wrong length");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

OperatorMatrix OperatorMatrix::from_rows(const Ring& ring, const std::vector<ModuleElement>& rows,
                                         std::size_t cols) {
  OperatorMatrix m(ring, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].rank() != cols) throw DimensionError("row has the wrong length");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

OperatorMatrix OperatorMatrix::parse(const Ring& ring, std::string_view text) {
  return {ring, parse_poly_matrix(text, ring.generators())};
}

std::vector<ModuleElement> OperatorMatrix::column_elements() const {
  std::vector<ModuleElement> out;
  for (std::size_t j = 0; j < cols(); ++j) out.emplace_back(entries_.col(j), nvars());
  return out;
}

std::vector<ModuleElement> OperatorMatrix::row_elements() const {
  std::vector<ModuleElement> out;
  for (std::size_t i = 0; i < rows(); ++i) out.emplace_back(entries_.row(i), nvars());
  return out;
}

OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (!(a.ring() == b.ring())) throw DimensionError("matrices over different rings");
  return {a.ring(), a.entries() * b.entries()};
}

OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (!(a.ring() == b.ring())) throw DimensionError("matrices over different rings");
  return {a.ring(), a.entries() + b.entries()};
}

OperatorMatrix transpose(const OperatorMatrix& a) { return {a.ring(), transpose(a.entries())}; }

}  // namespace lcgp
