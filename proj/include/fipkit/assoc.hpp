#pragma once

#include "fipkit/dense_matrix.hpp"
#include "fipkit/graded_module.hpp"
#include "fipkit/monomial_matrix.hpp"

namespace fipkit {

enum class AxisOrder { ascending, descending };

/// The k-linear map X^{target - source} : M_source -> M_target, composed from
/// one-step structure maps along the monotone lattice path that exhausts the
/// axes in `order`. Zero if source is not <= target or the path leaves the
/// support. Shape dim(target) x dim(source).
DenseMatrix monomial_action(const GradedModule& m, const Degree& source, const Degree& target,
                            AxisOrder order = AxisOrder::ascending);

/// Monomial matrix of the associated free-cofree presentation F_M -> E_M.
///
/// Rows and columns are both indexed by pairs (g, mu) with g in supp M and
/// 1 <= mu <= dim M_g, ordered by degree and then basis index. The column
/// (h, nu) holds the coordinates of X^{g-h} e_{(h,nu)} in each M_g.
/// Throws ValidationError if `m` is not a valid module.
MonomialMatrix assoc_presentation(const GradedModule& m);

}  // namespace fipkit
