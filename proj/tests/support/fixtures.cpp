#include "support/fixtures.hpp"

namespace fipkit::testing {

namespace {

const Field kF2 = Field::prime(2);

void put(GradedModule& m, Degree g, std::size_t axis, std::size_t rows, std::size_t cols,
         std::initializer_list<long> values) {
  m.maps.emplace(MapKey{std::move(g), axis}, DenseMatrix::from_rows(m.field, rows, cols, values));
}

}  // namespace

GradedModule two_parameter_example() {
  GradedModule m(kF2, 2);
  m.components = {{{1, 0}, 1}, {{0, 1}, 1}, {{2, 0}, 1}, {{1, 1}, 2}, {{2, 1}, 1}};
  put(m, {0, 1}, 0, 2, 1, {0, 1});
  put(m, {1, 1}, 0, 1, 2, {1, 1});
  put(m, {1, 0}, 1, 2, 1, {1, 0});
  put(m, {1, 0}, 0, 1, 1, {1});
  put(m, {2, 0}, 1, 1, 1, {1});
  return m;
}

GradedModule one_parameter_example() {
  GradedModule m(kF2, 1);
  m.components = {{{0}, 2}, {{1}, 1}};
  put(m, {0}, 0, 1, 2, {1, 1});
  return m;
}

MonomialMatrix reference_presentation() {
  // X1, X2, X1^2, X1X2, X1X2, X1^2X2
  const std::vector<Degree> labels = {{1, 0}, {0, 1}, {2, 0}, {1, 1}, {1, 1}, {2, 1}};
  return MonomialMatrix(kF2, 2, labels, labels,
                        DenseMatrix::from_rows(kF2, 6, 6,
                                               {1, 0, 0, 0, 0, 0,  //
                                                0, 1, 0, 0, 0, 0,  //
                                                1, 0, 1, 0, 0, 0,  //
                                                1, 0, 0, 1, 0, 0,  //
                                                0, 1, 0, 0, 1, 0,  //
                                                1, 1, 1, 1, 1, 1}));
}

MonomialMatrix reference_generator_minimal() {
  return MonomialMatrix(kF2, 2, {{1, 0}, {0, 1}, {2, 0}, {1, 1}, {1, 1}, {2, 1}}, {{1, 0}, {0, 1}},
                        DenseMatrix::from_rows(kF2, 6, 2,
                                               {1, 0,  //
                                                0, 1,  //
                                                1, 0,  //
                                                1, 0,  //
                                                0, 1,  //
                                                1, 1}));
}

MonomialMatrix reference_dual() {
  return MonomialMatrix(kF2, 2, {{-1, 0}, {0, -1}},
                        {{-1, 0}, {0, -1}, {-2, 0}, {-1, -1}, {-1, -1}, {-2, -1}},
                        DenseMatrix::from_rows(kF2, 2, 6,
                                               {1, 0, 1, 1, 0, 1,  //
                                                0, 1, 0, 0, 1, 1}));
}

MonomialMatrix reference_minimal() {
  return MonomialMatrix(kF2, 2, {{1, 1}, {2, 1}}, {{1, 0}, {0, 1}},
                        DenseMatrix::from_rows(kF2, 2, 2,
                                               {1, 0,  //
                                                1, 1}));
}

}  // namespace fipkit::testing
