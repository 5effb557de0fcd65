#include <gtest/gtest.h>

#include "qsuper/classical.hpp"
#include "qsuper/format.hpp"
#include "qsuper/hopf.hpp"
#include "qsuper/logext_algebra.hpp"
#include "qsuper/random.hpp"
#include "qsuper/superalgebra.hpp"

using namespace qsuper;

TEST(Classical, TensorLimit) {
  AlgebraPtr a = SuperspaceAlgebra::create(ParamConfig(1, 1, {1, 2}));
  Tensor t = coproduct(gen(a, 2) * gen(a, 1));
  Tensor u = coproduct(gen(a, 1) * gen(a, 2));
  EXPECT_NE(t, u);
  EXPECT_EQ(classical_limit(t), classical_limit(u));
}

TEST(Classical, NonhomogeneousRelationCollapses) {
  AlgebraPtr m = LogAlgebra::create(ParamConfig(1, 1, {1, 2}));
  Element c = gen(m, 2) * gen(m, 1) - gen(m, 1) * gen(m, 2);
  EXPECT_FALSE(c.is_zero());
  EXPECT_TRUE(classical_limit(c).is_zero());
}

TEST(Classical, VerifierPasses) {
  VerifyOptions opt{40, 3, 11};
  for (const auto& cfg : standard_configs(8)) {
    Report r = verify_classical(cfg, opt);
    EXPECT_TRUE(r.passed()) << r.summary();
  }
}
