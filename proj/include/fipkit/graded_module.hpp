#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>

#include "fipkit/dense_matrix.hpp"
#include "fipkit/grading.hpp"

namespace fipkit {

/// Key of a one-step structure map X_axis : M_source -> M_{source + e_axis}.
/// Axes are 0-based here; the text format writes them 1-based.
struct MapKey {
  Degree source;
  std::size_t axis = 0;

  friend bool operator==(const MapKey&, const MapKey&) = default;
  friend auto operator<=>(const MapKey&, const MapKey&) = default;
};

/// A finitely supported Z^n-graded k[X_1..X_n]-module, given by the
/// dimensions of its graded components and its one-step structure maps.
///
/// Only components of positive dimension are stored. A structure map is
/// present exactly when both its source and target components are nonzero;
/// every other multiplication map is the zero map.
struct GradedModule {
  Field field;
  std::size_t n = 0;
  std::map<Degree, std::size_t> components;
  std::map<MapKey, DenseMatrix> maps;

  GradedModule(Field f, std::size_t vars) : field(f), n(vars) {}

  std::size_t dim(const Degree& g) const;
  /// Nullptr when the map is zero because source or target vanishes.
  const DenseMatrix* structure_map(const Degree& source, std::size_t axis) const;
  bool is_zero() const { return components.empty(); }
};

struct ModuleDiagnostic {
  enum class Kind { shape, commutativity };
  Kind kind;
  std::string message;
  /// For commutativity failures: the square at `degree` spanned by the two
  /// (0-based) axes first < second.
  Degree degree;
  std::size_t first_axis = 0;
  std::size_t second_axis = 0;
};

/// Checks shapes and the module axioms X_i X_j = X_j X_i. Squares are
/// scanned in lex order of their base degree, then by axis pair; a path
/// through a vanishing component counts as the zero map.
std::optional<ModuleDiagnostic> validate(const GradedModule& m);
/// Throws ValidationError carrying the diagnostic message.
void require_valid(const GradedModule& m);

/// dim_k M_g.
std::size_t hilbert(const GradedModule& m, const Degree& g);

/// Graded dimensions of M / mM: the minimal generator count per degree.
std::map<Degree, std::size_t> betti0(const GradedModule& m);

/// Graded dimensions of the socle {x : X_i x = 0 for all i}.
std::map<Degree, std::size_t> socle(const GradedModule& m);

/// Componentwise min and max of the support. Throws std::domain_error for
/// the zero module.
Box hull(const GradedModule& m);

}  // namespace fipkit
