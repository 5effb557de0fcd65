#pragma once

// Specialization p_i -> 1, h_i -> 0 of every structure: the deformed
// identities must collapse to the undeformed supercommutative ones.

#include "qsuper/algebra.hpp"
#include "qsuper/report.hpp"

namespace qsuper {

Tensor classical_limit(const Tensor& t);

/// Both algebras, their Hopf maps, derivatives, forms, Maurer-Cartan forms
/// and vector fields at the classical point, on random samples.
Report verify_classical(const ParamConfig& cfg, const VerifyOptions& opt);

}  // namespace qsuper
