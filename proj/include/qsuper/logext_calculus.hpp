#pragma once

// Calculus on the logarithmic extension M: derivative identities, the
// covariant coactions on forms, Maurer-Cartan forms and vector fields.
//
// Partial derivatives, d and the coactions are the generic ones from
// calculus.hpp applied to a LogAlgebra.

#include "qsuper/algebra.hpp"
#include "qsuper/logext_algebra.hpp"
#include "qsuper/report.hpp"

namespace qsuper {

/// omega_{x_i} = [dx_i + (1 - z_i) dx_1 x_i] g^{1 - z_i}.
Element theta_form_closed(const AlgebraPtr& alg, int i);
/// omega_{x_i} = mu((d (x) S) Delta(x_i)).
Element theta_form(const AlgebraPtr& alg, int i);

/// T_{x_1} = partial_1 + sum_{i>=2} (z_i - 1) x_i partial_i, T_{x_i} = g^{z_i - 1} partial_i.
Element m_vector_field_apply(int i, const Element& u);

/// Derivative commutation rules as action identities, agreement with the
/// rewriting oracle, well-definedness on relations, d, the coactions and the
/// total coproduct on forms.
Report verify_m_calculus(const ParamConfig& cfg, const VerifyOptions& opt);
/// Maurer-Cartan forms: both constructions, commutation with functions and
/// among themselves, the primitive Hopf structure.
Report verify_theta(const ParamConfig& cfg, const VerifyOptions& opt);
/// Vector fields: decomposition of d, mutual commutation, commutation with coordinates.
Report verify_m_vf(const ParamConfig& cfg, const VerifyOptions& opt);

/// In the superspace: partial_{a_1} of the order-N logarithm series equals
/// the order N-1 geometric series for a_1^{-1}. Throws ConfigError for N < 1.
Report log_series_truncation_check(int order, const ParamConfig& cfg = ParamConfig(1, 1, {1, 2}));

}  // namespace qsuper
