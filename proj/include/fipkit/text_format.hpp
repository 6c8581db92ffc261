#pragma once

#include <string>
#include <string_view>

#include "fipkit/graded_module.hpp"
#include "fipkit/monomial_matrix.hpp"

namespace fipkit {

// Line-oriented text formats. `#` starts a comment; blank lines are ignored.
// The first two records are always `field F2|F<p>|Q` and `vars <n>`.
//
// Module files:
//   component <d1> ... <dn> <dim>
//   map <d1> ... <dn> <axis 1..n> <dim(g+e_axis) x dim(g) scalars, row-major>
//
// Matrix files:
//   rows <r>
//   cols <s>
//   rowdeg <d1> ... <dn>          (exactly r, in order)
//   coldeg <d1> ... <dn>          (exactly s, in order)
//   entry <i> <j> <scalar>        (0-based; omitted entries are zero)
//
// Parsers throw ParseError with the offending line number. The module
// parser checks syntax and map shapes only; call validate() for the axioms.

GradedModule parse_module(std::string_view text);
std::string serialize(const GradedModule& m);

enum class SupportCheck { enforce, defer };

/// With SupportCheck::enforce, an entry outside the support condition is a
/// parse error. SupportCheck::defer leaves it to support_violations().
MonomialMatrix parse_matrix(std::string_view text, SupportCheck check = SupportCheck::enforce);
std::string serialize(const MonomialMatrix& a);

enum class FileKind { module, matrix };

/// A file is a matrix file iff it uses any matrix-only keyword.
FileKind detect_kind(std::string_view text);

}  // namespace fipkit
