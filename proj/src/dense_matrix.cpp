#include "fipkit/dense_matrix.hpp"

#include <cstdint>

#include "fipkit/errors.hpp"

namespace fipkit {

namespace {

// Elimination runs on a field-specific element type: machine words for F_p,
// GMP rationals for Q. Results are converted back to canonical Scalars.
struct PrimeArith {
  using Elem = std::uint64_t;
  std::uint64_t p;

  Elem load(const Scalar& s) const { return s.get_num().get_ui(); }
  Scalar store(Elem e) const { return Scalar(static_cast<unsigned long>(e)); }
  static bool is_zero(Elem e) { return e == 0; }

  Elem inv(Elem a) const {
    Elem result = 1;
    Elem base = a % p;
    for (std::uint64_t e = p - 2; e > 0; e >>= 1) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
    }
    return result;
  }
  void scale(Elem* row, Elem f, std::size_t from, std::size_t to) const {
    for (std::size_t k = from; k < to; ++k) row[k] = row[k] * f % p;
  }
  // dst -= f * src
  void subtract_multiple(Elem* dst, const Elem* src, Elem f, std::size_t from,
                         std::size_t to) const {
    const Elem g = p - f;
    for (std::size_t k = from; k < to; ++k) {
      if (src[k] != 0) dst[k] = (dst[k] + g * src[k]) % p;
    }
  }
};

struct RationalArith {
  using Elem = mpq_class;

  Elem load(const Scalar& s) const { return s; }
  Scalar store(const Elem& e) const { return e; }
  static bool is_zero(const Elem& e) { return sgn(e) == 0; }

  Elem inv(const Elem& a) const { return 1 / a; }
  void scale(Elem* row, const Elem& f, std::size_t from, std::size_t to) const {
    for (std::size_t k = from; k < to; ++k) row[k] *= f;
  }
  void subtract_multiple(Elem* dst, const Elem* src, const Elem& f, std::size_t from,
                         std::size_t to) const {
    for (std::size_t k = from; k < to; ++k) {
      if (sgn(src[k]) != 0) dst[k] -= f * src[k];
    }
  }
};

// In-place Gauss-Jordan on a row-major grid. Returns the pivot columns.
template <typename Arith>
std::vector<std::size_t> gauss_jordan(const Arith& ar, std::vector<typename Arith::Elem>& m,
                                      std::size_t rows, std::size_t cols) {
  using Elem = typename Arith::Elem;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pr = r;
    while (pr < rows && Arith::is_zero(m[pr * cols + c])) ++pr;
    if (pr == rows) continue;
    if (pr != r) {
      for (std::size_t k = c; k < cols; ++k) std::swap(m[pr * cols + k], m[r * cols + k]);
    }
    Elem* prow = &m[r * cols];
    ar.scale(prow, ar.inv(prow[c]), c, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || Arith::is_zero(m[i * cols + c])) continue;
      const Elem f = m[i * cols + c];
      ar.subtract_multiple(&m[i * cols], prow, f, c, cols);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <typename Arith>
EchelonForm reduce_with(const Arith& ar, const DenseMatrix& a) {
  std::vector<typename Arith::Elem> grid;
  grid.reserve(a.rows() * a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) grid.push_back(ar.load(a.at(i, j)));
  }
  auto pivots = gauss_jordan(ar, grid, a.rows(), a.cols());
  DenseMatrix out(a.field(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out.set(i, j, ar.store(grid[i * a.cols() + j]));
    }
  }
  return {std::move(out), std::move(pivots)};
}

}  // namespace

DenseMatrix DenseMatrix::identity(Field field, std::size_t n) {
  DenseMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, field.one());
  return m;
}

DenseMatrix DenseMatrix::from_rows(Field field, std::size_t rows, std::size_t cols,
                                   std::initializer_list<long> values) {
  if (values.size() != rows * cols) throw DimensionMismatch("from_rows: wrong entry count");
  DenseMatrix m(field, rows, cols);
  std::size_t k = 0;
  for (long v : values) {
    m.data_[k++] = field.from_int(v);
  }
  return m;
}

std::vector<Scalar> DenseMatrix::column(std::size_t j) const {
  if (j >= cols_) throw std::out_of_range("column index out of range");
  std::vector<Scalar> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(at(i, j));
  return out;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
  }
  return t;
}

DenseMatrix DenseMatrix::select(std::span<const std::size_t> row_idx,
                                std::span<const std::size_t> col_idx) const {
  DenseMatrix s(field_, row_idx.size(), col_idx.size());
  for (std::size_t i = 0; i < row_idx.size(); ++i) {
    for (std::size_t j = 0; j < col_idx.size(); ++j) s.set(i, j, at(row_idx[i], col_idx[j]));
  }
  return s;
}

bool DenseMatrix::is_zero() const {
  for (const auto& v : data_) {
    if (sgn(v) != 0) return false;
  }
  return true;
}

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows() || !(a.field() == b.field())) {
    throw DimensionMismatch("multiply: incompatible operands");
  }
  const Field& f = a.field();
  DenseMatrix c(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Scalar acc = f.zero();
      for (std::size_t k = 0; k < a.cols(); ++k) {
        if (sgn(a.at(i, k)) == 0 || sgn(b.at(k, j)) == 0) continue;
        acc = f.add(acc, f.mul(a.at(i, k), b.at(k, j)));
      }
      c.set(i, j, std::move(acc));
    }
  }
  return c;
}

std::vector<Scalar> apply(const DenseMatrix& a, std::span<const Scalar> x) {
  if (x.size() != a.cols()) throw DimensionMismatch("apply: vector length mismatch");
  const Field& f = a.field();
  std::vector<Scalar> y(a.rows(), f.zero());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      y[i] = f.add(y[i], f.mul(a.at(i, k), x[k]));
    }
  }
  return y;
}

DenseMatrix hstack(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows()) throw DimensionMismatch("hstack: row count mismatch");
  DenseMatrix c(a.field(), a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c.set(i, j, a.at(i, j));
    for (std::size_t j = 0; j < b.cols(); ++j) c.set(i, a.cols() + j, b.at(i, j));
  }
  return c;
}

DenseMatrix vstack(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.cols()) throw DimensionMismatch("vstack: column count mismatch");
  DenseMatrix c(a.field(), a.rows() + b.rows(), a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) c.set(i, j, a.at(i, j));
    for (std::size_t i = 0; i < b.rows(); ++i) c.set(a.rows() + i, j, b.at(i, j));
  }
  return c;
}

EchelonForm row_reduce(const DenseMatrix& a) {
  if (a.field().is_prime()) {
    return reduce_with(PrimeArith{static_cast<std::uint64_t>(a.field().characteristic())}, a);
  }
  return reduce_with(RationalArith{}, a);
}

std::size_t rank(const DenseMatrix& a) { return row_reduce(a).pivot_columns.size(); }

std::optional<std::vector<Scalar>> solve(const DenseMatrix& a, std::span<const Scalar> b) {
  if (b.size() != a.rows()) throw DimensionMismatch("solve: right-hand side length mismatch");
  DenseMatrix rhs(a.field(), a.rows(), 1);
  for (std::size_t i = 0; i < b.size(); ++i) rhs.set(i, 0, b[i]);
  const EchelonForm ef = row_reduce(hstack(a, rhs));
  const std::size_t n = a.cols();
  if (!ef.pivot_columns.empty() && ef.pivot_columns.back() == n) return std::nullopt;
  std::vector<Scalar> x(n, a.field().zero());
  for (std::size_t r = 0; r < ef.pivot_columns.size(); ++r) {
    x[ef.pivot_columns[r]] = ef.reduced.at(r, n);
  }
  return x;
}

}  // namespace fipkit
