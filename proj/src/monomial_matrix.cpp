#include "fipkit/monomial_matrix.hpp"

#include <algorithm>
#include <numeric>

#include "fipkit/errors.hpp"

namespace fipkit {

namespace {

std::vector<std::size_t> iota_vec(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), std::size_t{0});
  return v;
}

std::vector<std::size_t> sorted_order(const std::vector<Degree>& labels) {
  auto order = iota_vec(labels.size());
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return labels[x] < labels[y]; });
  return order;
}

std::vector<Degree> permuted(const std::vector<Degree>& labels,
                             const std::vector<std::size_t>& order) {
  std::vector<Degree> out;
  out.reserve(order.size());
  for (std::size_t k : order) out.push_back(labels[k]);
  return out;
}

}  // namespace

MonomialMatrix::MonomialMatrix(Field f, std::size_t vars, std::vector<Degree> rows,
                               std::vector<Degree> cols, DenseMatrix values)
    : field(f),
      n(vars),
      row_degrees(std::move(rows)),
      col_degrees(std::move(cols)),
      entries(std::move(values)) {
  if (entries.rows() != row_degrees.size() || entries.cols() != col_degrees.size()) {
    throw DimensionMismatch("monomial matrix: entry grid does not match label counts");
  }
  if (!(entries.field() == field)) throw DimensionMismatch("monomial matrix: field mismatch");
  for (const auto* labels : {&row_degrees, &col_degrees}) {
    for (const auto& d : *labels) {
      if (d.size() != n) throw DimensionMismatch("monomial matrix: degree " + to_string(d) +
                                                 " is not in Z^" + std::to_string(n));
    }
  }
}

MonomialMatrix::MonomialMatrix(Field f, std::size_t vars, std::vector<Degree> rows,
                               std::vector<Degree> cols)
    : MonomialMatrix(f, vars, rows, cols, DenseMatrix(f, rows.size(), cols.size())) {}

std::vector<std::pair<std::size_t, std::size_t>> support_violations(const MonomialMatrix& a) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (sgn(a.entries.at(i, j)) != 0 && !leq(a.col_degrees[j], a.row_degrees[i])) {
        out.emplace_back(i, j);
      }
    }
  }
  return out;
}

void require_valid(const MonomialMatrix& a) {
  const auto bad = support_violations(a);
  if (!bad.empty()) {
    const auto [i, j] = bad.front();
    throw ValidationError("support condition violated at entry (" + std::to_string(i) + "," +
                          std::to_string(j) + "): column degree " + to_string(a.col_degrees[j]) +
                          " is not <= row degree " + to_string(a.row_degrees[i]));
  }
}

MonomialMatrix matlis_dual(const MonomialMatrix& a) {
  std::vector<Degree> rows;
  std::vector<Degree> cols;
  for (const auto& b : a.col_degrees) rows.push_back(negate(b));
  for (const auto& al : a.row_degrees) cols.push_back(negate(al));
  return MonomialMatrix(a.field, a.n, std::move(rows), std::move(cols), a.entries.transpose());
}

Truncation trunc(const MonomialMatrix& a, std::size_t j0) {
  if (j0 >= a.cols()) throw std::out_of_range("trunc: column index out of range");
  const Degree& top = a.col_degrees[j0];
  std::vector<std::size_t> cols;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (j != j0 && leq(a.col_degrees[j], top)) cols.push_back(j);
  }
  DenseMatrix m(a.field, a.rows(), cols.size());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (!leq(top, a.row_degrees[i])) continue;
    for (std::size_t k = 0; k < cols.size(); ++k) m.set(i, k, a.entries.at(i, cols[k]));
  }
  return {std::move(m), std::move(cols)};
}

MonomialMatrix remove_column(const MonomialMatrix& a, std::size_t j) {
  if (j >= a.cols()) throw std::out_of_range("remove_column: index out of range");
  std::vector<std::size_t> keep;
  for (std::size_t k = 0; k < a.cols(); ++k) {
    if (k != j) keep.push_back(k);
  }
  const auto all_rows = iota_vec(a.rows());
  return MonomialMatrix(a.field, a.n, a.row_degrees, permuted(a.col_degrees, keep),
                        a.entries.select(all_rows, keep));
}

std::vector<std::size_t> rows_above(const MonomialMatrix& a, const Degree& g) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (leq(g, a.row_degrees[i])) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> cols_below(const MonomialMatrix& a, const Degree& g) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (leq(a.col_degrees[j], g)) out.push_back(j);
  }
  return out;
}

std::size_t image_dim(const MonomialMatrix& a, const Degree& g) {
  const auto rows = rows_above(a, g);
  const auto cols = cols_below(a, g);
  if (rows.empty() || cols.empty()) return 0;
  return rank(a.entries.select(rows, cols));
}

std::optional<Box> default_box(const MonomialMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return std::nullopt;
  Degree lo = a.col_degrees.front();
  for (const auto& b : a.col_degrees) lo = meet(lo, b);
  Degree hi = a.row_degrees.front();
  for (const auto& al : a.row_degrees) hi = join(hi, al);
  return Box{lo, hi};
}

GradedModule image_module(const MonomialMatrix& a, const Box& box) {
  if (box.dimension() != a.n) throw DimensionMismatch("image_module: box has wrong dimension");
  // The image is supported on the union of the intervals [beta_j, alpha_i]
  // over nonzero entries, so it fits in the box iff every such interval does.
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (sgn(a.entries.at(i, j)) == 0) continue;
      if (!box.contains(a.col_degrees[j]) || !box.contains(a.row_degrees[i])) {
        throw ValidationError("image_module: box [" + to_string(box.lo) + "," + to_string(box.hi) +
                              "] misses part of the image (entry " + std::to_string(i) + "," +
                              std::to_string(j) + ")");
      }
    }
  }

  struct Component {
    std::vector<std::size_t> rows;   // ambient coordinates: row indices of a
    DenseMatrix basis;               // dim x |rows|, reduced row echelon
    std::vector<std::size_t> pivots; // pivot position of each basis row
  };
  std::map<Degree, Component> parts;
  GradedModule m(a.field, a.n);
  box.for_each([&](const Degree& g) {
    auto rows = rows_above(a, g);
    const auto cols = cols_below(a, g);
    if (rows.empty() || cols.empty()) return;
    EchelonForm ef = row_reduce(a.entries.select(rows, cols).transpose());
    const std::size_t d = ef.pivot_columns.size();
    if (d == 0) return;
    std::vector<std::size_t> first_rows(d);
    std::iota(first_rows.begin(), first_rows.end(), std::size_t{0});
    const auto all_cols = iota_vec(rows.size());
    DenseMatrix basis = ef.reduced.select(first_rows, all_cols);
    m.components.emplace(g, d);
    parts.emplace(g, Component{std::move(rows), std::move(basis), std::move(ef.pivot_columns)});
  });

  for (const auto& [g, src] : parts) {
    for (std::size_t axis = 0; axis < a.n; ++axis) {
      auto it = parts.find(add(g, Degree::unit(a.n, axis)));
      if (it == parts.end()) continue;
      const Component& dst = it->second;
      // Position of each target ambient row inside the source ambient rows.
      std::vector<std::size_t> pos;
      for (std::size_t r : dst.rows) {
        pos.push_back(static_cast<std::size_t>(
            std::lower_bound(src.rows.begin(), src.rows.end(), r) - src.rows.begin()));
      }
      // Projecting a source basis vector onto the target rows lands in the
      // target column space; in a reduced echelon basis its coordinates are
      // its values at the pivot positions.
      DenseMatrix map(a.field, dst.basis.rows(), src.basis.rows());
      for (std::size_t k = 0; k < src.basis.rows(); ++k) {
        for (std::size_t l = 0; l < dst.basis.rows(); ++l) {
          map.set(l, k, src.basis.at(k, pos[dst.pivots[l]]));
        }
      }
      m.maps.emplace(MapKey{g, axis}, std::move(map));
    }
  }
  return m;
}

std::optional<ColumnRelation> find_column_relation(const MonomialMatrix& a, std::size_t j0,
                                                   std::span<const bool> active) {
  if (j0 >= a.cols()) throw std::out_of_range("find_column_relation: index out of range");
  if (!active.empty() && active.size() != a.cols()) {
    throw DimensionMismatch("find_column_relation: mask length mismatch");
  }
  const Degree& top = a.col_degrees[j0];
  const auto rows = rows_above(a, top);
  std::vector<std::size_t> cols;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (j == j0 || (!active.empty() && !active[j])) continue;
    if (leq(a.col_degrees[j], top)) cols.push_back(j);
  }
  const std::size_t target[] = {j0};
  const DenseMatrix rhs = a.entries.select(rows, target);
  auto x = solve(a.entries.select(rows, cols), rhs.column(0));
  if (!x) return std::nullopt;
  return ColumnRelation{std::move(cols), std::move(*x)};
}

bool is_generator_minimal(const MonomialMatrix& a) {
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (find_column_relation(a, j)) return false;
  }
  return true;
}

bool is_minimal(const MonomialMatrix& a) {
  return is_generator_minimal(a) && is_generator_minimal(matlis_dual(a));
}

MonomialMatrix canonicalize(const MonomialMatrix& a) {
  const auto row_order = sorted_order(a.row_degrees);
  const auto col_order = sorted_order(a.col_degrees);
  return MonomialMatrix(a.field, a.n, permuted(a.row_degrees, row_order),
                        permuted(a.col_degrees, col_order),
                        a.entries.select(row_order, col_order));
}

bool equivalent(const MonomialMatrix& a, const MonomialMatrix& b) {
  if (!(a.field == b.field) || a.n != b.n) return false;
  return canonicalize(a) == canonicalize(b);
}

}  // namespace fipkit
