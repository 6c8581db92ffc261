#pragma once

#include "fipkit/graded_module.hpp"
#include "fipkit/monomial_matrix.hpp"

namespace fipkit::testing {

/// The indecomposable k[X1,X2]-module on [(0,0),(2,1)] over F2:
///
///   k   --(0 1)^T-->  k^2 --(1 1)--> k        (row X2 = 1)
///   ^                  ^(1 0)^T      ^1
///   0        -->       k   --1-->    k        (row X2 = 0)
GradedModule two_parameter_example();

/// k[X1]-module k^2 --(1 1)--> k in degrees 0 and 1, over F2.
GradedModule one_parameter_example();

// Monomial matrices of the two-parameter example, with
// labels in their reference order.
MonomialMatrix reference_presentation();        // A, 6x6
MonomialMatrix reference_generator_minimal();   // A-hat, 6x2
MonomialMatrix reference_dual();                // (A-hat)^v, 2x6
MonomialMatrix reference_minimal();             // A-tilde, 2x2

}  // namespace fipkit::testing
