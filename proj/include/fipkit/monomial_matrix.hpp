#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "fipkit/dense_matrix.hpp"
#include "fipkit/graded_module.hpp"
#include "fipkit/grading.hpp"

namespace fipkit {

/// A degree-0 homomorphism  (+)_j S^{beta_j} R  ->  (+)_i S^{alpha_i} R^v
/// written as a k-matrix with cogenerator degrees alpha_i on the rows and
/// generator degrees beta_j on the columns.
///
/// Support condition: a_ij = 0 unless beta_j <= alpha_i. The constructor
/// checks only shapes; use `support_violations` for the support condition.
struct MonomialMatrix {
  Field field;
  std::size_t n;
  std::vector<Degree> row_degrees;
  std::vector<Degree> col_degrees;
  DenseMatrix entries;

  MonomialMatrix(Field f, std::size_t vars, std::vector<Degree> rows, std::vector<Degree> cols,
                 DenseMatrix values);
  /// All-zero matrix with the given labels.
  MonomialMatrix(Field f, std::size_t vars, std::vector<Degree> rows, std::vector<Degree> cols);

  std::size_t rows() const noexcept { return row_degrees.size(); }
  std::size_t cols() const noexcept { return col_degrees.size(); }

  /// Exact equality: same labels in the same order and the same entries.
  friend bool operator==(const MonomialMatrix&, const MonomialMatrix&) = default;
};

/// Entries (i, j) that are nonzero although beta_j <= alpha_i fails.
std::vector<std::pair<std::size_t, std::size_t>> support_violations(const MonomialMatrix& a);
inline bool is_valid(const MonomialMatrix& a) { return support_violations(a).empty(); }
/// Throws ValidationError listing the first violation.
void require_valid(const MonomialMatrix& a);

/// Transpose with negated labels: the presentation of the Matlis dual.
MonomialMatrix matlis_dual(const MonomialMatrix& a);

struct Truncation {
  DenseMatrix matrix;                // rows x |columns|
  std::vector<std::size_t> columns;  // J' in ascending order
};

/// The columns j != j0 with beta_j <= beta_{j0}, each multiplied by
/// X^{beta_{j0} - beta_j}. Under the R-action on R^v that multiplication
/// kills every row whose degree does not dominate beta_{j0}.
Truncation trunc(const MonomialMatrix& a, std::size_t j0);

MonomialMatrix remove_column(const MonomialMatrix& a, std::size_t j);

/// Rows i with g <= alpha_i.
std::vector<std::size_t> rows_above(const MonomialMatrix& a, const Degree& g);
/// Columns j with beta_j <= g.
std::vector<std::size_t> cols_below(const MonomialMatrix& a, const Degree& g);

/// dim_k of the degree-g component of the image.
std::size_t image_dim(const MonomialMatrix& a, const Degree& g);

/// (componentwise min of column degrees, componentwise max of row degrees),
/// or nullopt when the matrix has no rows or no columns. The image vanishes
/// outside this box.
std::optional<Box> default_box(const MonomialMatrix& a);

/// The image as a graded module over `box`. Each component is given in the
/// basis formed by the reduced column echelon form of its column space.
/// Throws ValidationError when the image is nonzero somewhere outside box.
GradedModule image_module(const MonomialMatrix& a, const Box& box);

/// A relation  A_{j0} = sum_k coefficients[k] * X^{beta_{j0} - beta_{columns[k]}} A_{columns[k]}.
struct ColumnRelation {
  std::vector<std::size_t> columns;
  std::vector<Scalar> coefficients;
};

/// Solves the truncated system for column j0, considering only columns j
/// with active[j] set (all columns when `active` is empty). Rows that do not
/// dominate beta_{j0} are dropped rather than zeroed.
std::optional<ColumnRelation> find_column_relation(const MonomialMatrix& a, std::size_t j0,
                                                   std::span<const bool> active = {});

bool is_generator_minimal(const MonomialMatrix& a);
/// Generator-minimal and cogenerator-minimal.
bool is_minimal(const MonomialMatrix& a);

/// Rows and columns stably sorted by degree (lex).
MonomialMatrix canonicalize(const MonomialMatrix& a);
/// Equality up to reindexing: exact equality after canonicalize.
bool equivalent(const MonomialMatrix& a, const MonomialMatrix& b);

}  // namespace fipkit
