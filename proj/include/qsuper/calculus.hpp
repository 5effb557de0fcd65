#pragma once

// Differential forms, partial derivatives and the covariant coactions on
// forms. The routines here work for any algebra that supplies partial(),
// partial_rule() and coproduct_letter(); the superspace-specific suites are
// verify_weyl and verify_bicovariance.

#include "qsuper/algebra.hpp"
#include "qsuper/random.hpp"
#include "qsuper/report.hpp"

namespace qsuper {

/// Normal form of a word mixing generators and differentials.
Element form_normal_form(const AlgebraPtr& alg, const Word& word);

/// Exterior derivative: d f = sum_k d(x_k) partial_k(f) on functions and
/// d(f w) = d(f) w when w is a product of differentials.
Element exterior_d(const Element& w);
/// The same derivative applied through the graded Leibniz rule letter by
/// letter to unnormalized words.
Element exterior_d(const AlgebraPtr& alg, const WordSum& words);

/// Closed-form partial derivative (degree-zero input).
Element partial_closed(int i, const Element& u);
/// Partial derivative by rewriting the operator word partial_i * u with the
/// commutation rules until the operator reaches the right end.
Element partial_oracle(int i, const Element& u);
Element partial_oracle(int i, const AlgebraPtr& alg, const WordSum& words);

/// Right and left coactions on forms: letters map by Delta, differentials by
/// (d (x) id) Delta and (id (x) d) Delta; extended multiplicatively.
Tensor delta_R_form(const Element& w);
Tensor delta_L_form(const Element& w);
Tensor delta_R_form(const AlgebraPtr& alg, const WordSum& words);
Tensor delta_L_form(const AlgebraPtr& alg, const WordSum& words);
/// Coproduct of the whole differential algebra: Delta on letters,
/// Delta_R + Delta_L on differentials, extended multiplicatively.
Tensor hat_coproduct(const Element& w);
Tensor hat_coproduct(const AlgebraPtr& alg, const WordSum& words);

/// Monomials of total degree at most `bound` (all signs for invertible letters).
std::vector<Monomial> small_monomials(const Algebra& alg, int bound);

// Checks shared by the superspace and log-extension suites.
void check_partials_agree(Report& rep, const AlgebraPtr& alg, Sampler& s, const VerifyOptions& opt);
void check_exterior_derivative(Report& rep, const AlgebraPtr& alg, Sampler& s, const VerifyOptions& opt);
void check_bicovariance(Report& rep, const AlgebraPtr& alg, Sampler& s, const VerifyOptions& opt);

/// Commutation of partial derivatives, closed form against the oracle and
/// consistency of d (d^2 = 0, graded Leibniz, relations mapped into relations).
Report verify_weyl(const ParamConfig& cfg, const VerifyOptions& opt);
/// Covariant bimodule axioms for the coactions on forms.
Report verify_bicovariance(const ParamConfig& cfg, const VerifyOptions& opt);

}  // namespace qsuper
