#pragma once

// Hopf structure maps, extended from the generator values supplied by the
// algebra: the coproduct and counit as homomorphisms, the antipode as a
// graded anti-homomorphism S(uv) = (-1)^{|u||v|} S(v) S(u).

#include <optional>
#include <string>
#include <vector>

#include "qsuper/algebra.hpp"
#include "qsuper/report.hpp"

namespace qsuper {

Tensor coproduct(const Element& u, TensorMode mode = TensorMode::SignOnly);
Coeff counit(const Element& u);
Element antipode(const Element& u);

// The same maps applied letter by letter to unnormalized words. Applying them
// to a defining relation tests that the map is well defined on the quotient.
Tensor coproduct(const AlgebraPtr& alg, const WordSum& words, TensorMode mode = TensorMode::SignOnly);
Coeff counit(const AlgebraPtr& alg, const WordSum& words);
Element antipode(const AlgebraPtr& alg, const WordSum& words);

/// (Delta (x) id) Delta and (id (x) Delta) Delta.
Tensor coproduct_left_twice(const Element& u);
Tensor coproduct_right_twice(const Element& u);

/// Coassociativity, counit and antipode identities, homomorphism properties
/// and relation preservation on the generators and on random elements.
Report verify_hopf(const AlgebraPtr& alg, const VerifyOptions& opt);
Report verify_hopf(const ParamConfig& cfg, const VerifyOptions& opt);
Report verify_hopf_m(const ParamConfig& cfg, const VerifyOptions& opt);

struct RelationResidual {
  std::string relation;
  Tensor residual;
};

/// Coproduct images of every degree-zero defining relation of A that fail to
/// vanish when the tensor product uses `mode`.
std::vector<RelationResidual> relation_residuals(const ParamConfig& cfg, TensorMode mode);
/// First failing relation, if any.
std::optional<RelationResidual> first_broken_relation(const ParamConfig& cfg, TensorMode mode);

}  // namespace qsuper
