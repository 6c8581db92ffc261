#include "fipkit/reduce.hpp"

#include <algorithm>
#include <memory>
#include <numeric>
#include <sstream>

#include "fipkit/errors.hpp"

namespace fipkit {

Reduction reduce_generators(const MonomialMatrix& a, ColumnOrder order) {
  require_valid(a);
  std::vector<std::size_t> visit(a.cols());
  std::iota(visit.begin(), visit.end(), std::size_t{0});
  std::stable_sort(visit.begin(), visit.end(), [&](std::size_t x, std::size_t y) {
    return a.col_degrees[x] < a.col_degrees[y];
  });
  if (order == ColumnOrder::descending) std::reverse(visit.begin(), visit.end());

  ReductionReport report;
  report.initial_shape = {a.rows(), a.cols()};
  // std::vector<bool> is not contiguous, so it cannot back a span.
  auto mask = std::make_unique<bool[]>(a.cols());
  std::fill(mask.get(), mask.get() + a.cols(), true);

  for (std::size_t j0 : visit) {
    auto rel = find_column_relation(a, j0, std::span<const bool>(mask.get(), a.cols()));
    if (!rel) continue;
    Removal removal{j0, a.col_degrees[j0], {}};
    for (std::size_t k = 0; k < rel->columns.size(); ++k) {
      if (sgn(rel->coefficients[k]) == 0) continue;
      const std::size_t j = rel->columns[k];
      removal.witness.push_back(
          {j, rel->coefficients[k], sub(a.col_degrees[j0], a.col_degrees[j])});
    }
    report.removed_columns.push_back(std::move(removal));
    mask[j0] = false;
  }

  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (mask[j]) keep.push_back(j);
  }
  std::vector<std::size_t> all_rows(a.rows());
  std::iota(all_rows.begin(), all_rows.end(), std::size_t{0});
  std::vector<Degree> cols;
  for (std::size_t j : keep) cols.push_back(a.col_degrees[j]);
  MonomialMatrix out(a.field, a.n, a.row_degrees, std::move(cols),
                     a.entries.select(all_rows, keep));
  report.final_shape = {out.rows(), out.cols()};
  return {std::move(out), std::move(report)};
}

Reduction reduce(const MonomialMatrix& a) {
  Reduction gens = reduce_generators(a);
  // The dual pass walks the dual columns from the top down, so among equal
  // cogenerator degrees the later row is the one tested first.
  Reduction cogens = reduce_generators(matlis_dual(gens.matrix), ColumnOrder::descending);

  ReductionReport report = std::move(gens.report);
  for (auto& r : cogens.report.removed_columns) {
    r.degree = negate(r.degree);
    report.removed_rows.push_back(std::move(r));
  }
  MonomialMatrix out = matlis_dual(cogens.matrix);
  report.final_shape = {out.rows(), out.cols()};
  return {std::move(out), std::move(report)};
}

std::string format_report(const ReductionReport& report, const Field& field) {
  auto exponent = [](const Degree& d) {
    std::string s = "X^(";
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(d[i]);
    }
    return s + ")";
  };
  std::ostringstream out;
  out << "shape " << report.initial_shape.first << "x" << report.initial_shape.second << " -> "
      << report.final_shape.first << "x" << report.final_shape.second << "\n";
  auto emit = [&](const Removal& r, const char* kind) {
    out << "removed " << kind << " " << r.index << " deg";
    for (auto c : r.degree.coords()) out << " " << c;
    out << " via: ";
    if (r.witness.empty()) out << "0";
    for (std::size_t k = 0; k < r.witness.size(); ++k) {
      const auto& t = r.witness[k];
      if (k) out << " + ";
      out << field.format(t.coefficient) << " * " << exponent(t.exponent) << " * " << kind << " "
          << t.index;
    }
    out << "\n";
  };
  for (const auto& r : report.removed_columns) emit(r, "col");
  for (const auto& r : report.removed_rows) emit(r, "row");
  return out.str();
}

}  // namespace fipkit
