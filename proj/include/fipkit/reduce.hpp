#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "fipkit/monomial_matrix.hpp"

namespace fipkit {

/// One summand  coefficient * X^exponent * (column `index`)  of a witness.
struct WitnessTerm {
  std::size_t index;
  Scalar coefficient;
  Degree exponent;
};

/// A removed generator (or cogenerator) and the relation that made it
/// redundant. Indices refer to the matrix the pass started from; they stay
/// valid throughout the pass because removal never renumbers survivors
/// there.
struct Removal {
  std::size_t index;
  Degree degree;
  std::vector<WitnessTerm> witness;
};

struct ReductionReport {
  std::pair<std::size_t, std::size_t> initial_shape{0, 0};
  std::pair<std::size_t, std::size_t> final_shape{0, 0};
  /// Column indices and witnesses relative to the input matrix.
  std::vector<Removal> removed_columns;
  /// Row indices relative to the input matrix. Witnesses are relations among
  /// columns of the Matlis dual of the generator pass result; degree is the
  /// (un-negated) row degree.
  std::vector<Removal> removed_rows;
};

struct Reduction {
  MonomialMatrix matrix;
  ReductionReport report;
};

enum class ColumnOrder { ascending, descending };

/// Drops every column that is an R-combination of the other columns of no
/// larger degree. Columns are visited in (degree lex, index) order, or the
/// reverse; each test runs against the matrix with earlier removals applied.
/// Survivors keep their relative order.
Reduction reduce_generators(const MonomialMatrix& a, ColumnOrder order = ColumnOrder::ascending);

/// Generator pass, then the same pass on the Matlis dual to drop redundant
/// cogenerators. The result is minimal.
Reduction reduce(const MonomialMatrix& a);

/// One line per removal:
///   removed col <idx> deg <d...> via: <c> * X^(e,...) * col <j> + ...
std::string format_report(const ReductionReport& report, const Field& field);

}  // namespace fipkit
