#pragma once

// Right-invariant Maurer-Cartan forms and the dual vector fields on the
// superspace. The quantum supergroup structure of the vector fields is
// checked through its action on functions.

#include "qsuper/algebra.hpp"
#include "qsuper/report.hpp"
#include "qsuper/superalgebra.hpp"

namespace qsuper {

/// omega_f = mu((d (x) S) Delta(f)) for a degree-zero element f.
Element maurer_cartan(const Element& f);
/// omega_{a_i} through the Hopf pipeline.
Element mc_form(const AlgebraPtr& alg, int i);
/// omega_{a_1} = da_1 a_1^{-1}, omega_{a_i} = da_i a_1^{-z_i} - z_i da_1 a_1^{-1} a_i a_1^{-z_i}.
Element mc_form_closed(const AlgebraPtr& alg, int i);

/// T_{a_1} = sum_l z_l a_l partial_l and T_{a_i} = a_1^{z_i} partial_i.
Element vector_field_apply(int i, const Element& u);
/// p_i^{e T_{a_1}}: multiplies each monomial by p_i^{e deg_z}.
Element grouplike_field_apply(int i, int e, const Element& u);

Report verify_mc_relations(const ParamConfig& cfg, const VerifyOptions& opt);
Report verify_T_hopf(const ParamConfig& cfg, const VerifyOptions& opt);

}  // namespace qsuper
