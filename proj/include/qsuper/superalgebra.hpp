#pragma once

// The quantum superspace A with generators a_1 (invertible, even), a_2..a_m
// (even) and a_{m+1}..a_{m+n} (odd, nilpotent), together with its algebra of
// differential forms:
//   a_i a_j        = (-1)^{ij} p_j^{z_i} p_i^{-z_j} a_j a_i
//   a_i da_j       = (-1)^{i(j+1)} p_j^{z_i} p_i^{-z_j} da_j a_i
//   da_i da_j      = (-1)^{(i+1)(j+1)} p_j^{z_i} p_i^{-z_j} da_j da_i
// (parities in the exponents). Canonical order: a_1 < ... < a_{m+n} < da_1 < ... < da_{m+n}.

#include <memory>
#include <utility>
#include <vector>

#include "qsuper/algebra.hpp"
#include "qsuper/color.hpp"

namespace qsuper {

class SuperspaceAlgebra final : public Algebra {
 public:
  static std::shared_ptr<const SuperspaceAlgebra> create(const ParamConfig& cfg);

  AlgebraKind kind() const override { return AlgebraKind::Superspace; }
  std::string tag() const override { return "A"; }

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
  bool is_invertible(Sym sym, int index) const override { return sym == Sym::Gen && index == 1; }

  /// p_j^{z_i} p_i^{-z_j}, the deformation factor of the pair (i, j).
  Coeff q(int i, int j) const;
  /// z-weighted degree sum_l z_l k_l of a monomial.
  long z_degree(const Monomial& u) const;

  explicit SuperspaceAlgebra(const ParamConfig& cfg);

 private:
  int slot_of(const Letter& l) const;
  ColorGrading color_;
};

using SuperspacePtr = std::shared_ptr<const SuperspaceAlgebra>;

/// The generator a_i^power as an element.
Element gen(const AlgebraPtr& alg, int i, int power = 1);
/// The differential d(generator i) as an element.
Element dgen(const AlgebraPtr& alg, int i);

/// Normal form of a word given as (generator index, power) pairs with a coefficient.
Element normal_form(const SuperspacePtr& alg, const std::vector<std::pair<int, int>>& word,
                    const Coeff& coeff = Coeff(1));

/// Both sides of (sum c_k a_1^k) a_j = a_j sum c_k (p_j a_1)^k, normal ordered.
std::pair<Element, Element> commute_series(const SuperspacePtr& alg, const std::vector<mpq_class>& coeffs, int j);

/// Specializes every coefficient at p_i = 1, h_i = 0.
Element classical_limit(const Element& u);

}  // namespace qsuper
