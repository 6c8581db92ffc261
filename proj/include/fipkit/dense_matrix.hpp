#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "fipkit/field.hpp"

namespace fipkit {

/// Row-major matrix over an exact field.
class DenseMatrix {
 public:
  DenseMatrix(Field field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}

  static DenseMatrix identity(Field field, std::size_t n);
  /// Builds a matrix from small integer literals, reduced into the field.
  static DenseMatrix from_rows(Field field, std::size_t rows, std::size_t cols,
                               std::initializer_list<long> values);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  const Scalar& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  /// Stores v, which must already be canonical for the field.
  void set(std::size_t i, std::size_t j, Scalar v) { data_[i * cols_ + j] = std::move(v); }

  std::vector<Scalar> column(std::size_t j) const;
  DenseMatrix transpose() const;
  /// Submatrix on the given row and column indices, in the given order.
  DenseMatrix select(std::span<const std::size_t> row_idx,
                     std::span<const std::size_t> col_idx) const;
  bool is_zero() const;

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b);
std::vector<Scalar> apply(const DenseMatrix& a, std::span<const Scalar> x);
/// [a | b]; both need the same row count.
DenseMatrix hstack(const DenseMatrix& a, const DenseMatrix& b);
/// [a ; b]; both need the same column count.
DenseMatrix vstack(const DenseMatrix& a, const DenseMatrix& b);

struct EchelonForm {
  DenseMatrix reduced;                    // reduced row echelon form
  std::vector<std::size_t> pivot_columns;  // one per nonzero row, ascending
};

/// Gauss-Jordan elimination with first-nonzero pivoting.
EchelonForm row_reduce(const DenseMatrix& a);

std::size_t rank(const DenseMatrix& a);

/// Returns some x with a*x == b, or nullopt when the system is inconsistent.
/// Free variables are set to zero.
std::optional<std::vector<Scalar>> solve(const DenseMatrix& a, std::span<const Scalar> b);

}  // namespace fipkit
