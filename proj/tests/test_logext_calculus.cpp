#include <gtest/gtest.h>

#include "qsuper/calculus.hpp"
#include "qsuper/format.hpp"
#include "qsuper/hopf.hpp"
#include "qsuper/logext_calculus.hpp"
#include "qsuper/random.hpp"
#include "qsuper/superalgebra.hpp"

using namespace qsuper;

namespace {

AlgebraPtr m0() { return LogAlgebra::create(ParamConfig(1, 1, {1, 2})); }
AlgebraPtr m1() { return LogAlgebra::create(ParamConfig(2, 2, {1, 2, 3, -1})); }

Element h(const AlgebraPtr& m, int i) { return Element::scalar(m, Coeff::h(i)); }

}  // namespace

TEST(MForms, X1PastDifferential) {
  auto m = m0();
  Element lhs = gen(m, 1) * dgen(m, 2);
  EXPECT_EQ(lhs, dgen(m, 2) * gen(m, 1) + h(m, 2) * dgen(m, 2));
  EXPECT_EQ(form_normal_form(m, {{Sym::Diff, 2, 1}, {Sym::Gen, 1, 1}}), gen(m, 1) * dgen(m, 2) - h(m, 2) * dgen(m, 2));
}

TEST(MForms, EvenDifferentialSquaresToZero) {
  auto m = m1();
  EXPECT_TRUE((dgen(m, 2) * dgen(m, 2)).is_zero());
  EXPECT_FALSE((dgen(m, 3) * dgen(m, 3)).is_zero());
}

TEST(MForms, OddGeneratorPastOwnDifferential) {
  auto m = m0();
  EXPECT_EQ(gen(m, 2) * dgen(m, 2), form_normal_form(m, {{Sym::Diff, 2, 1}, {Sym::Gen, 2, 1}}));
}

TEST(MPartial, Examples) {
  auto m = m0();
  EXPECT_EQ(partial_closed(2, gen(m, 1) * gen(m, 2)), gen(m, 1) + h(m, 2));
  EXPECT_EQ(partial_oracle(2, gen(m, 1) * gen(m, 2)), gen(m, 1) + h(m, 2));
  EXPECT_EQ(partial_closed(1, gen(m, 1, 2)), Coeff(2) * gen(m, 1));
  EXPECT_EQ(partial_closed(1, grouplike(m, 3)), Coeff(3) * grouplike(m, 3));
  EXPECT_EQ(partial_closed(2, grouplike(m, 2) * gen(m, 2)), Coeff::p(2, 2) * grouplike(m, 2));
}

TEST(MPartial, OddDerivativeSquaresToZero) {
  auto m = m0();
  Element f = gen(m, 1) * gen(m, 2) + grouplike(m, -1) * gen(m, 2);
  EXPECT_TRUE(partial_closed(2, partial_closed(2, f)).is_zero());
}

TEST(MExteriorD, Nilpotent) {
  auto m = m0();
  Element f = gen(m, 1) * gen(m, 2);
  EXPECT_TRUE(exterior_d(exterior_d(f)).is_zero());
  EXPECT_EQ(exterior_d(grouplike(m, 1)), dgen(m, 1) * grouplike(m, 1));
}

TEST(MCoactions, DisplayedLeftCoactionIdentity) {
  auto m = m0();
  Tensor lhs = delta_L_form(gen(m, 1) * dgen(m, 2));
  Tensor rhs = delta_L_form(dgen(m, 2)) * coproduct(gen(m, 1)) + Coeff::h(2) * delta_L_form(dgen(m, 2));
  EXPECT_EQ(lhs, rhs);
}

TEST(MCoactions, RightCoactionOnDifferential) {
  auto m = m0();
  Tensor expected = Tensor::pure({grouplike(m, 1) * dgen(m, 1), gen(m, 2)}) + Tensor::pure({dgen(m, 2), grouplike(m, 1)});
  EXPECT_EQ(delta_R_form(dgen(m, 2)), expected);
}

TEST(MCalculus, VerifierPasses) {
  VerifyOptions opt{25, 2, 6};
  for (const auto& cfg : standard_configs(5)) {
    Report r = verify_m_calculus(cfg, opt);
    EXPECT_TRUE(r.passed()) << r.summary();
  }
}

TEST(Theta, Examples) {
  auto m = m0();
  EXPECT_EQ(theta_form(m, 1), dgen(m, 1));
  Element w2 = theta_form_closed(m, 2);
  EXPECT_EQ(theta_form(m, 2), w2);
  EXPECT_EQ(gen(m, 2) * w2, Coeff::p(2) * (w2 * gen(m, 2)));
  EXPECT_EQ(theta_form(m, 1) * w2, w2 * theta_form(m, 1));
}

TEST(Theta, PipelineMatchesClosedForm) {
  for (const auto& cfg : standard_configs(8)) {
    auto m = LogAlgebra::create(cfg);
    for (int i = 1; i <= cfg.size(); ++i) EXPECT_EQ(theta_form(m, i), theta_form_closed(m, i)) << cfg.describe() << i;
  }
}

TEST(Theta, VerifierPasses) {
  VerifyOptions opt{30, 2, 8};
  for (const auto& cfg : standard_configs(6)) {
    Report r = verify_theta(cfg, opt);
    EXPECT_TRUE(r.passed()) << r.summary();
  }
}

TEST(MVectorFields, Examples) {
  auto m = m0();
  EXPECT_EQ(m_vector_field_apply(1, gen(m, 1)), Element::scalar(m, Coeff(1)));
  EXPECT_EQ(m_vector_field_apply(2, gen(m, 2)), grouplike(m, 1));
  Element x2 = gen(m, 2);
  Element sum = theta_form_closed(m, 1) * m_vector_field_apply(1, x2) + theta_form_closed(m, 2) * m_vector_field_apply(2, x2);
  EXPECT_EQ(sum, dgen(m, 2));
}

TEST(MVectorFields, CoordinateCommutationUsesOwnExponent) {
  auto m = m1();
  auto la = std::dynamic_pointer_cast<const LogAlgebra>(m);
  Element f = gen(m, 2) + grouplike(m, 1) * gen(m, 1) * gen(m, 2);
  Element t2f = m_vector_field_apply(2, f);
  Element lhs = m_vector_field_apply(2, gen(m, 3) * f);
  EXPECT_EQ(lhs, (la->eta(3, 2) * Coeff::p(3, 1)) * (gen(m, 3) * t2f));
  EXPECT_NE(lhs, (la->eta(3, 2) * Coeff::p(3, 2)) * (gen(m, 3) * t2f));
}

TEST(MVectorFields, VerifierPasses) {
  VerifyOptions opt{30, 2, 10};
  for (const auto& cfg : standard_configs(6)) {
    Report r = verify_m_vf(cfg, opt);
    EXPECT_TRUE(r.passed()) << r.summary();
  }
}

TEST(LogSeriesTruncation, SmallOrders) {
  auto a = SuperspaceAlgebra::create(ParamConfig(1, 1, {1, 2}));
  EXPECT_TRUE(log_series_truncation_check(1).passed());
  EXPECT_TRUE(log_series_truncation_check(2).passed());
  Element u = gen(a, 1) - Element::scalar(a, Coeff(1));
  Element series = u - Coeff(mpq_class(1, 2)) * (u * u);
  EXPECT_EQ(partial_closed(1, series), Element::scalar(a, Coeff(2)) - gen(a, 1));
}

TEST(LogSeriesTruncation, AllOrdersUpToEight) {
  for (int n = 1; n <= 8; ++n) {
    Report r = log_series_truncation_check(n, ParamConfig(2, 2, {1, 2, 3, -1}));
    EXPECT_TRUE(r.passed()) << r.summary();
  }
}

TEST(LogSeriesTruncation, RejectsOrderZero) { EXPECT_THROW(log_series_truncation_check(0), ConfigError); }
