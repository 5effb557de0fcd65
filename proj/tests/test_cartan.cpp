#include <gtest/gtest.h>

#include "qsuper/calculus.hpp"
#include "qsuper/cartan.hpp"
#include "qsuper/format.hpp"
#include "qsuper/random.hpp"

using namespace qsuper;

namespace {

const ParamConfig kC0(1, 1, {1, 2});
const ParamConfig kC1(2, 2, {1, 2, 3, -1});

}  // namespace

TEST(MaurerCartan, FirstGenerator) {
  AlgebraPtr a = SuperspaceAlgebra::create(kC0);
  EXPECT_EQ(mc_form(a, 1), dgen(a, 1) * gen(a, 1, -1));
  EXPECT_EQ(mc_form_closed(a, 1), mc_form(a, 1));
}

TEST(MaurerCartan, SecondGenerator) {
  AlgebraPtr a = SuperspaceAlgebra::create(kC0);
  Element expected = dgen(a, 2) * gen(a, 1, -2) - Coeff(2) * (dgen(a, 1) * gen(a, 1, -1) * gen(a, 2) * gen(a, 1, -2));
  EXPECT_EQ(mc_form(a, 2), expected);
}

TEST(MaurerCartan, PipelineMatchesClosedForm) {
  for (const auto& cfg : {kC0, kC1}) {
    AlgebraPtr a = SuperspaceAlgebra::create(cfg);
    for (int i = 1; i <= cfg.size(); ++i) EXPECT_EQ(mc_form(a, i), mc_form_closed(a, i)) << i;
  }
}

TEST(MaurerCartan, GeneratorCommutation) {
  AlgebraPtr a = SuperspaceAlgebra::create(kC0);
  Element w = mc_form_closed(a, 2);
  EXPECT_EQ(gen(a, 2) * w, Coeff::p(2, 2) * (w * gen(a, 2)));
  EXPECT_EQ(gen(a, 1) * w, Coeff::p(2) * (w * gen(a, 1)));
}

TEST(MaurerCartan, FirstFormAnticommutesWithOddFunctions) {
  AlgebraPtr a = SuperspaceAlgebra::create(kC1);
  Element w = mc_form_closed(a, 1);
  EXPECT_EQ(gen(a, 3) * w, -(w * gen(a, 3)));
  EXPECT_EQ(gen(a, 2) * w, w * gen(a, 2));
}

TEST(MaurerCartan, VerifierPasses) {
  VerifyOptions opt{60, 3, 3};
  for (const auto& cfg : standard_configs(8)) {
    Report r = verify_mc_relations(cfg, opt);
    EXPECT_TRUE(r.passed()) << r.summary();
  }
}

TEST(VectorFields, Examples) {
  AlgebraPtr a = SuperspaceAlgebra::create(kC0);
  EXPECT_EQ(vector_field_apply(1, gen(a, 1, 2) * gen(a, 2)), Coeff(4) * (gen(a, 1, 2) * gen(a, 2)));
  EXPECT_EQ(vector_field_apply(2, gen(a, 2)), gen(a, 1, 2));
  EXPECT_EQ(vector_field_apply(2, gen(a, 1) * gen(a, 2)), Coeff::p(2) * gen(a, 1, 3));
  EXPECT_TRUE(vector_field_apply(2, gen(a, 1, 5)).is_zero());
}

TEST(VectorFields, Commute) {
  AlgebraPtr a = SuperspaceAlgebra::create(kC0);
  Element t12 = vector_field_apply(1, vector_field_apply(2, gen(a, 2)));
  Element t21 = vector_field_apply(2, vector_field_apply(1, gen(a, 2)));
  EXPECT_EQ(t12, Coeff(2) * gen(a, 1, 2));
  EXPECT_EQ(t21, t12);
}

TEST(VectorFields, DecomposeDifferential) {
  AlgebraPtr a = SuperspaceAlgebra::create(kC0);
  Element f = gen(a, 2);
  Element sum = mc_form_closed(a, 1) * vector_field_apply(1, f) + mc_form_closed(a, 2) * vector_field_apply(2, f);
  EXPECT_EQ(sum, dgen(a, 2));
}

TEST(VectorFields, GrouplikeScalesByDegree) {
  AlgebraPtr a = SuperspaceAlgebra::create(kC1);
  Element f = gen(a, 1) * gen(a, 3);
  EXPECT_EQ(grouplike_field_apply(2, 1, f), Coeff::p(2, 4) * f);
  EXPECT_EQ(grouplike_field_apply(2, -1, grouplike_field_apply(2, 1, f)), f);
}

TEST(VectorFields, HopfVerifierPasses) {
  VerifyOptions opt{25, 2, 4};
  for (const auto& cfg : standard_configs(6)) {
    Report r = verify_T_hopf(cfg, opt);
    EXPECT_TRUE(r.passed()) << r.summary();
  }
}

TEST(VectorFields, RejectsBadIndex) {
  AlgebraPtr a = SuperspaceAlgebra::create(kC0);
  EXPECT_THROW(vector_field_apply(3, gen(a, 1)), DomainError);
  EXPECT_THROW(mc_form(a, 0), DomainError);
}
