#include "fipkit/graded_module.hpp"

#include <stdexcept>

#include "fipkit/errors.hpp"

namespace fipkit {

namespace {

std::string axis_name(std::size_t axis) { return "X" + std::to_string(axis + 1); }

// X_second X_first on M_g, routed through g + e_first. Empty when some
// component along the way vanishes.
std::optional<DenseMatrix> two_step(const GradedModule& m, const Degree& g, std::size_t first,
                                    std::size_t second) {
  const DenseMatrix* a = m.structure_map(g, first);
  if (a == nullptr) return std::nullopt;
  const DenseMatrix* b = m.structure_map(add(g, Degree::unit(m.n, first)), second);
  if (b == nullptr) return std::nullopt;
  return multiply(*b, *a);
}

std::optional<ModuleDiagnostic> shape_error(std::string msg) {
  return ModuleDiagnostic{ModuleDiagnostic::Kind::shape, std::move(msg), {}, 0, 0};
}

}  // namespace

std::size_t GradedModule::dim(const Degree& g) const {
  auto it = components.find(g);
  return it == components.end() ? 0 : it->second;
}

const DenseMatrix* GradedModule::structure_map(const Degree& source, std::size_t axis) const {
  auto it = maps.find(MapKey{source, axis});
  return it == maps.end() ? nullptr : &it->second;
}

std::optional<ModuleDiagnostic> validate(const GradedModule& m) {
  for (const auto& [g, d] : m.components) {
    if (g.size() != m.n) return shape_error("component degree " + to_string(g) + " has wrong length");
    if (d == 0) return shape_error("component " + to_string(g) + " has dimension 0");
  }
  for (const auto& [key, mat] : m.maps) {
    const auto where = axis_name(key.axis) + " at " + to_string(key.source);
    if (key.source.size() != m.n || key.axis >= m.n) return shape_error("bad map key " + where);
    if (!(mat.field() == m.field)) return shape_error("map " + where + " over wrong field");
    const std::size_t src = m.dim(key.source);
    const std::size_t dst = m.dim(add(key.source, Degree::unit(m.n, key.axis)));
    if (src == 0 || dst == 0) return shape_error("map " + where + " touches a zero component");
    if (mat.rows() != dst || mat.cols() != src) {
      return shape_error("map " + where + " has shape " + std::to_string(mat.rows()) + "x" +
                         std::to_string(mat.cols()) + ", expected " + std::to_string(dst) + "x" +
                         std::to_string(src));
    }
  }
  for (const auto& [g, d] : m.components) {
    for (std::size_t i = 0; i < m.n; ++i) {
      if (m.dim(add(g, Degree::unit(m.n, i))) > 0 && m.structure_map(g, i) == nullptr) {
        return shape_error("missing map " + axis_name(i) + " at " + to_string(g));
      }
    }
  }
  for (const auto& [g, d] : m.components) {
    for (std::size_t i = 0; i < m.n; ++i) {
      for (std::size_t j = i + 1; j < m.n; ++j) {
        const Degree top = add(add(g, Degree::unit(m.n, i)), Degree::unit(m.n, j));
        const std::size_t top_dim = m.dim(top);
        if (top_dim == 0) continue;
        const DenseMatrix zero(m.field, top_dim, d);
        const auto via_i = two_step(m, g, i, j);
        const auto via_j = two_step(m, g, j, i);
        if (via_i.value_or(zero) != via_j.value_or(zero)) {
          return ModuleDiagnostic{ModuleDiagnostic::Kind::commutativity,
                                  "structure maps do not commute at " + to_string(g) + " for " +
                                      axis_name(i) + "," + axis_name(j),
                                  g, i, j};
        }
      }
    }
  }
  return std::nullopt;
}

void require_valid(const GradedModule& m) {
  if (auto diag = validate(m)) throw ValidationError(diag->message);
}

std::size_t hilbert(const GradedModule& m, const Degree& g) { return m.dim(g); }

std::map<Degree, std::size_t> betti0(const GradedModule& m) {
  std::map<Degree, std::size_t> out;
  for (const auto& [g, d] : m.components) {
    // Columns of all incoming maps span (mM)_g.
    DenseMatrix incoming(m.field, d, 0);
    for (std::size_t i = 0; i < m.n; ++i) {
      if (const auto* a = m.structure_map(sub(g, Degree::unit(m.n, i)), i)) {
        incoming = hstack(incoming, *a);
      }
    }
    const std::size_t count = d - rank(incoming);
    if (count > 0) out.emplace(g, count);
  }
  return out;
}

std::map<Degree, std::size_t> socle(const GradedModule& m) {
  std::map<Degree, std::size_t> out;
  for (const auto& [g, d] : m.components) {
    // Kernel of the stacked outgoing maps.
    DenseMatrix outgoing(m.field, 0, d);
    for (std::size_t i = 0; i < m.n; ++i) {
      if (const auto* a = m.structure_map(g, i)) outgoing = vstack(outgoing, *a);
    }
    const std::size_t count = d - rank(outgoing);
    if (count > 0) out.emplace(g, count);
  }
  return out;
}

Box hull(const GradedModule& m) {
  if (m.components.empty()) throw std::domain_error("hull of the zero module");
  Degree lo = m.components.begin()->first;
  Degree hi = lo;
  for (const auto& [g, d] : m.components) {
    lo = meet(lo, g);
    hi = join(hi, g);
  }
  return {lo, hi};
}

}  // namespace fipkit
