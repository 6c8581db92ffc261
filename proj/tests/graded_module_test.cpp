#include <gtest/gtest.h>

#include "fipkit/errors.hpp"
#include "fipkit/graded_module.hpp"
#include "support/fixtures.hpp"
#include "support/random_modules.hpp"

namespace fipkit {
namespace {

using testing::one_parameter_example;
using testing::two_parameter_example;
using Counts = std::map<Degree, std::size_t>;

const Field kF2 = Field::prime(2);

GradedModule single_k(Degree g) {
  GradedModule m(kF2, g.size());
  m.components.emplace(std::move(g), 1);
  return m;
}

TEST(ModuleValidate, AcceptsTheTwoParameterExample) {
  EXPECT_FALSE(validate(two_parameter_example()).has_value());
  EXPECT_FALSE(validate(one_parameter_example()).has_value());
}

TEST(ModuleValidate, AcceptsTheZeroModule) {
  EXPECT_FALSE(validate(GradedModule(kF2, 2)).has_value());
}

TEST(ModuleValidate, SwappedBasisVectorStillCommutesOverF2) {
  // Replacing X2 at (1,0) by (0 1)^T keeps both composites (1,0) -> (2,1)
  // equal to 1: (1 1)(0 1)^T = 1 = 1 * 1.
  GradedModule m = two_parameter_example();
  m.maps.at(MapKey{{1, 0}, 1}) = DenseMatrix::from_rows(kF2, 2, 1, {0, 1});
  EXPECT_FALSE(validate(m).has_value());
}

TEST(ModuleValidate, ReportsTheFirstNonCommutingSquare) {
  GradedModule m = two_parameter_example();
  m.maps.at(MapKey{{2, 0}, 1}) = DenseMatrix::from_rows(kF2, 1, 1, {0});
  const auto diag = validate(m);
  ASSERT_TRUE(diag.has_value());
  EXPECT_EQ(diag->kind, ModuleDiagnostic::Kind::commutativity);
  EXPECT_EQ(diag->degree, Degree({1, 0}));
  EXPECT_EQ(diag->first_axis, 0u);
  EXPECT_EQ(diag->second_axis, 1u);
  EXPECT_THROW(require_valid(m), ValidationError);
}

TEST(ModuleValidate, PathThroughAVanishingCornerCountsAsZero) {
  // k at (0,0), (1,0), (1,1); (0,1) is zero, so X1 X2 = 0 on M_(0,0)
  // while the path through (1,0) is the identity.
  GradedModule m(kF2, 2);
  m.components = {{{0, 0}, 1}, {{1, 0}, 1}, {{1, 1}, 1}};
  m.maps.emplace(MapKey{{0, 0}, 0}, DenseMatrix::from_rows(kF2, 1, 1, {1}));
  m.maps.emplace(MapKey{{1, 0}, 1}, DenseMatrix::from_rows(kF2, 1, 1, {1}));
  const auto diag = validate(m);
  ASSERT_TRUE(diag.has_value());
  EXPECT_EQ(diag->kind, ModuleDiagnostic::Kind::commutativity);
  EXPECT_EQ(diag->degree, Degree({0, 0}));
}

TEST(ModuleValidate, ShapeErrors) {
  GradedModule missing = two_parameter_example();
  missing.maps.erase(MapKey{{1, 0}, 0});
  ASSERT_TRUE(validate(missing).has_value());
  EXPECT_EQ(validate(missing)->kind, ModuleDiagnostic::Kind::shape);

  GradedModule wrong = two_parameter_example();
  wrong.maps.at(MapKey{{1, 1}, 0}) = DenseMatrix::from_rows(kF2, 2, 1, {1, 1});
  EXPECT_TRUE(validate(wrong).has_value());

  GradedModule stray = two_parameter_example();
  stray.maps.emplace(MapKey{{2, 1}, 0}, DenseMatrix(kF2, 0, 1));
  EXPECT_TRUE(validate(stray).has_value());

  GradedModule zero_dim = two_parameter_example();
  zero_dim.components[{5, 5}] = 0;
  EXPECT_TRUE(validate(zero_dim).has_value());

  GradedModule bad_len = single_k({0, 0, 0});
  bad_len.n = 2;
  EXPECT_TRUE(validate(bad_len).has_value());
}

TEST(Hilbert, Examples) {
  const GradedModule m = two_parameter_example();
  EXPECT_EQ(hilbert(m, {1, 1}), 2u);
  EXPECT_EQ(hilbert(m, {2, 1}), 1u);
  EXPECT_EQ(hilbert(m, {0, 0}), 0u);
  EXPECT_EQ(hilbert(m, {7, -3}), 0u);
}

TEST(Betti0, Examples) {
  EXPECT_EQ(betti0(two_parameter_example()), (Counts{{{1, 0}, 1}, {{0, 1}, 1}}));
  EXPECT_EQ(betti0(single_k({0, 0})), (Counts{{{0, 0}, 1}}));
  EXPECT_EQ(betti0(one_parameter_example()), (Counts{{{0}, 2}}));
  EXPECT_TRUE(betti0(GradedModule(kF2, 2)).empty());
}

TEST(Socle, Examples) {
  EXPECT_EQ(socle(two_parameter_example()), (Counts{{{1, 1}, 1}, {{2, 1}, 1}}));
  EXPECT_EQ(socle(single_k({0, 0})), (Counts{{{0, 0}, 1}}));
  EXPECT_EQ(socle(one_parameter_example()), (Counts{{{0}, 1}, {{1}, 1}}));
  EXPECT_TRUE(socle(GradedModule(kF2, 3)).empty());
}

TEST(Hull, Examples) {
  const Box b = hull(two_parameter_example());
  EXPECT_EQ(b.lo, Degree({0, 0}));
  EXPECT_EQ(b.hi, Degree({2, 1}));
  const Box s = hull(single_k({3, 5}));
  EXPECT_EQ(s.lo, Degree({3, 5}));
  EXPECT_EQ(s.hi, Degree({3, 5}));
  EXPECT_THROW(hull(GradedModule(kF2, 2)), std::domain_error);
}

class ModuleCorpus : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    corpus_ = new std::vector<GradedModule>(
        testing::random_corpus(testing::corpus_seed(), {.count = 60}));
  }
  static void TearDownTestSuite() { delete corpus_; }
  static std::vector<GradedModule>* corpus_;
};
std::vector<GradedModule>* ModuleCorpus::corpus_ = nullptr;

TEST_F(ModuleCorpus, GeneratedModulesValidate) {
  for (const auto& m : *corpus_) EXPECT_FALSE(validate(m).has_value());
}

TEST_F(ModuleCorpus, GeneratorCountBoundedByTotalDimension) {
  for (const auto& m : *corpus_) {
    std::size_t gens = 0;
    std::size_t total = 0;
    for (const auto& [g, c] : betti0(m)) gens += c;
    for (const auto& [g, d] : m.components) total += d;
    bool all_zero = true;
    for (const auto& [key, x] : m.maps) all_zero = all_zero && x.is_zero();
    EXPECT_LE(gens, total);
    EXPECT_EQ(gens == total, all_zero);
  }
}

TEST_F(ModuleCorpus, Betti0AndSocleAreExchangedByDualization) {
  for (const auto& m : *corpus_) {
    const GradedModule d = testing::dual_module(m);
    ASSERT_FALSE(validate(d).has_value());
    Counts negated_socle;
    for (const auto& [g, c] : socle(d)) negated_socle.emplace(negate(g), c);
    EXPECT_EQ(betti0(m), negated_socle);
    Counts negated_betti;
    for (const auto& [g, c] : betti0(d)) negated_betti.emplace(negate(g), c);
    EXPECT_EQ(socle(m), negated_betti);
  }
}

}  // namespace
}  // namespace fipkit
