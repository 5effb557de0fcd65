#include <gtest/gtest.h>

#include "qsuper/format.hpp"
#include "qsuper/logext_algebra.hpp"
#include "qsuper/random.hpp"
#include "qsuper/superalgebra.hpp"

using namespace qsuper;

namespace {

LogAlgebraPtr m0() { return LogAlgebra::create(ParamConfig(1, 1, {1, 2})); }
LogAlgebraPtr m1() { return LogAlgebra::create(ParamConfig(2, 2, {1, 2, 3, -1})); }

Element x(const AlgebraPtr& m, int i) { return gen(m, i); }

}  // namespace

TEST(LogExtension, X1IsNotHomogeneous) {
  auto m = m1();
  EXPECT_EQ(x(m, 2) * x(m, 1), x(m, 1) * x(m, 2) - Coeff::h(2) * x(m, 2));
  EXPECT_EQ(to_string(x(m, 2) * x(m, 1)), "x1*x2 - h2 * x2");
}

TEST(LogExtension, GrouplikeCommutation) {
  auto m = m1();
  EXPECT_EQ(grouplike(m) * x(m, 3), Coeff::p(3) * (x(m, 3) * grouplike(m)));
  EXPECT_EQ(grouplike(m) * x(m, 1), x(m, 1) * grouplike(m));
  EXPECT_EQ(grouplike(m) * grouplike(m, -1), Element::scalar(m, Coeff(1)));
  EXPECT_EQ(grouplike(m) * dgen(m, 2), Coeff::p(2) * (dgen(m, 2) * grouplike(m)));
}

TEST(LogExtension, EtaCommutation) {
  auto m = m1();
  // x_i x_j = (-1)^{ij} eta(i,j) x_j x_i
  EXPECT_EQ(x(m, 2) * x(m, 3), m->eta(2, 3) * (x(m, 3) * x(m, 2)));
  EXPECT_EQ(x(m, 3) * x(m, 4), -(m->eta(3, 4) * (x(m, 4) * x(m, 3))));
  EXPECT_TRUE((x(m, 4) * x(m, 4)).is_zero());
  EXPECT_EQ(m->eta(2, 3), Coeff::p(2, -2) * Coeff::p(3, 1));
}

TEST(LogExtension, CanonicalPrinting) {
  auto m = m0();
  Element u = x(m, 1) * x(m, 1) * x(m, 2);
  EXPECT_EQ(to_string(u), "x1^2*x2");
  EXPECT_EQ(to_string(grouplike(m, -2) * x(m, 2)), "g^-2*x2");
}

TEST(LogExtension, PowersOfX1ThroughX2) {
  auto m = m0();
  // x2 x1^2 = (x1 - h2)^2 x2
  Element lhs = x(m, 2) * x(m, 1) * x(m, 1);
  Element rhs = x(m, 1) * x(m, 1) * x(m, 2) - Coeff(2) * Coeff::h(2) * (x(m, 1) * x(m, 2)) +
                Coeff::h(2, 2) * x(m, 2);
  EXPECT_EQ(lhs, rhs);
}

TEST(LogExtension, DefiningRelationsVanish) {
  for (const auto& cfg : standard_configs(6)) {
    auto m = LogAlgebra::create(cfg);
    for (const auto& r : m->relations()) {
      EXPECT_TRUE(normal_form(AlgebraPtr(m), r.expr).is_zero()) << cfg.describe() << " " << r.name;
      EXPECT_TRUE(rewrite_normal_form(m, r.expr, RewriteStrategy::RightmostFirst).is_zero()) << r.name;
    }
  }
}

TEST(LogExtensionProperty, FoldAndRewritingAgree) {
  for (const auto& cfg : standard_configs(8)) {
    auto m = LogAlgebra::create(cfg);
    Sampler s(m, 17);
    for (int t = 0; t < 40; ++t) {
      Word w = s.word(s.uniform(0, 6), true);
      WordSum ws{{s.coeff(), w}};
      Element fold = normal_form(AlgebraPtr(m), ws);
      EXPECT_EQ(fold, rewrite_normal_form(m, ws, RewriteStrategy::LeftmostFirst)) << cfg.describe();
      EXPECT_EQ(fold, rewrite_normal_form(m, ws, RewriteStrategy::RightmostFirst)) << cfg.describe();
    }
  }
}

TEST(LogExtensionProperty, Associativity) {
  for (const auto& cfg : standard_configs(8)) {
    auto m = LogAlgebra::create(cfg);
    Sampler s(m, 9);
    for (int t = 0; t < 30; ++t) {
      Element a = s.element(3, 2, 1), b = s.element(3, 2, 1), c = s.element(3, 2, 1);
      EXPECT_EQ((a * b) * c, a * (b * c)) << cfg.describe();
    }
  }
}

// g -> a_1, x_i -> a_1^{-1} a_i maps the x_1-free relations into relations of A.
TEST(LogExtension, EmbedsIntoSuperspaceAwayFromX1) {
  for (const auto& cfg : standard_configs(6)) {
    auto m = LogAlgebra::create(cfg);
    auto a = SuperspaceAlgebra::create(cfg);
    auto image = [&](const Letter& l) {
      if (l.sym == Sym::Exp) return gen(a, 1, l.power);
      return (gen(a, 1, -1) * gen(a, l.index)).pow(l.power);
    };
    for (const auto& r : m->relations()) {
      bool x1_free = true;
      for (const auto& t : r.expr)
        for (const auto& l : t.word)
          if (l.sym == Sym::Diff || (l.sym == Sym::Gen && l.index == 1)) x1_free = false;
      if (!x1_free) continue;
      Element sum(a);
      for (const auto& t : r.expr) {
        Element w = Element::scalar(a, t.coeff);
        for (const auto& l : t.word) w = w * image(l);
        sum += w;
      }
      EXPECT_TRUE(sum.is_zero()) << cfg.describe() << " " << r.name << ": " << to_string(sum);
    }
  }
}

TEST(LogExtensionProperty, GrouplikeConjugation) {
  auto m = m1();
  Sampler s(m, 4);
  for (int t = 0; t < 40; ++t) {
    int sp = s.uniform(-4, 4), i = s.uniform(2, 4);
    EXPECT_EQ(grouplike(m, sp) * x(m, i) * grouplike(m, -sp), Coeff::p(i, sp) * x(m, i)) << sp << " " << i;
  }
}

TEST(LogExtensionProperty, ClassicalLimitIsSupercommutative) {
  for (const auto& cfg : standard_configs(6)) {
    auto m = LogAlgebra::create(cfg);
    Sampler s(m, 12);
    for (int t = 0; t < 30; ++t) {
      Element u = Element::monomial(m, s.monomial(3, 1));
      Element v = Element::monomial(m, s.monomial(3, 1));
      int sign = (*u.parity() * *v.parity()) % 2 ? -1 : 1;
      EXPECT_TRUE(classical_limit(u * v - Coeff(sign) * (v * u)).is_zero()) << u << " " << v;
    }
  }
}
