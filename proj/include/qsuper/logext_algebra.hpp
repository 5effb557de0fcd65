#pragma once

// Logarithmic extension M of the superspace: x_1 = ln a_1, x_i = a_1^{-1} a_i,
// g = e^{x_1} (invertible, grouplike), h_i = ln p_i, with
//   [x_1, x_i] = h_i x_i,   x_i x_j = (-1)^{ij} eta(i,j) x_j x_i,   g x_i = p_i x_i g,
//   eta(i,j) = p_i^{1-z_j} p_j^{z_i-1},
// and the differential relations
//   [x_1, dx_1] = 0,  [x_1, dx_i] = h_i dx_i,  x_i dx_j = (-1)^{i(j+1)} eta(i,j) dx_j x_i,
//   g dx_i = p_i dx_i g,  dx_i dx_j = (-1)^{(i+1)(j+1)} eta(i,j) dx_j dx_i.
// Canonical order: g^s x_1^{k_1} x_2^{k_2} ... x_{m+n}^{k_{m+n}} dx_1^{w_1} ... dx_{m+n}^{w_{m+n}}.
//
// Everything except x_1 q-commutes through a color grading (g has degree e_1,
// x_i and dx_i have degree e_i - e_1). x_1 is the only nonhomogeneous
// generator: Y x_1 = (x_1 - H(Y)) Y where H is additive with H(x_i) = H(dx_i) = h_i.

#include <memory>

#include "qsuper/algebra.hpp"
#include "qsuper/color.hpp"

namespace qsuper {

class LogAlgebra final : public Algebra {
 public:
  static std::shared_ptr<const LogAlgebra> create(const ParamConfig& cfg);
  explicit LogAlgebra(const ParamConfig& cfg);

  AlgebraKind kind() const override { return AlgebraKind::LogExtension; }
  std::string tag() const override { return "M"; }

  MonoTerms multiply(const Monomial& u, const Monomial& v) const override;
  int parity(const Monomial& u) const override;
  int letter_parity(const Letter& l) const override;
  void validate(const Letter& l) const override;
  Monomial letter_monomial(const Letter& l) const override;
  Word to_word(const Monomial& u) const override;
  int letter_rank(const Letter& l) const override;
  WordSum swap_adjacent(const Letter& left, const Letter& right) const override;
  std::vector<Relation> relations() const override;
  std::string letter_name(Sym sym, int index) const override;

  Tensor coproduct_letter(const Letter& l) const override;
  Coeff counit_letter(const Letter& l) const override;
  Element antipode_letter(const Letter& l) const override;

  Element partial(int i, const Monomial& u) const override;
  PartialRule partial_rule(int i, const Letter& l) const override;
  bool is_invertible(Sym sym, int) const override { return sym == Sym::Exp; }

  /// eta(i, j) = p_i^{1-z_j} p_j^{z_i-1}.
  Coeff eta(int i, int j) const;
  /// H-weight sum_{i>=2} h_i (k_i + w_i).
  Coeff h_weight(const Monomial& u) const;

 private:
  int slot_of(const Letter& l) const;
  ColorGrading color_;
};

using LogAlgebraPtr = std::shared_ptr<const LogAlgebra>;

/// g^power as an element.
Element grouplike(const AlgebraPtr& alg, int power = 1);

}  // namespace qsuper
