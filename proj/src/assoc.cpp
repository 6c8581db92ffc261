#include "fipkit/assoc.hpp"

#include <vector>

namespace fipkit {

DenseMatrix monomial_action(const GradedModule& m, const Degree& source, const Degree& target,
                            AxisOrder order) {
  const std::size_t rows = m.dim(target);
  const std::size_t cols = m.dim(source);
  if (rows == 0 || cols == 0 || !leq(source, target)) return DenseMatrix(m.field, rows, cols);

  DenseMatrix acc = DenseMatrix::identity(m.field, cols);
  Degree cur = source;
  for (std::size_t step = 0; step < m.n; ++step) {
    const std::size_t axis = order == AxisOrder::ascending ? step : m.n - 1 - step;
    const Degree unit = Degree::unit(m.n, axis);
    for (auto k = source[axis]; k < target[axis]; ++k) {
      const DenseMatrix* x = m.structure_map(cur, axis);
      if (x == nullptr) return DenseMatrix(m.field, rows, cols);
      acc = multiply(*x, acc);
      cur = add(cur, unit);
    }
  }
  return acc;
}

MonomialMatrix assoc_presentation(const GradedModule& m) {
  require_valid(m);
  // std::map iteration is already lex order on degrees.
  std::vector<Degree> labels;
  std::vector<std::size_t> offset;
  for (const auto& [g, d] : m.components) {
    offset.push_back(labels.size());
    for (std::size_t mu = 0; mu < d; ++mu) labels.push_back(g);
  }

  DenseMatrix entries(m.field, labels.size(), labels.size());
  std::size_t hi = 0;
  for (const auto& [h, dh] : m.components) {
    std::size_t gi = 0;
    for (const auto& [g, dg] : m.components) {
      if (leq(h, g)) {
        const DenseMatrix block = monomial_action(m, h, g);
        for (std::size_t mu = 0; mu < dg; ++mu) {
          for (std::size_t nu = 0; nu < dh; ++nu) {
            entries.set(offset[gi] + mu, offset[hi] + nu, block.at(mu, nu));
          }
        }
      }
      ++gi;
    }
    ++hi;
  }
  return MonomialMatrix(m.field, m.n, labels, labels, std::move(entries));
}

}  // namespace fipkit
