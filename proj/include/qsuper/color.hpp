#pragma once

// Commutation factors for generators that pairwise q-commute:
//   X_a X_b = (-1)^{pi_a pi_b} alpha(D_a, D_b) X_b X_a,
// alpha(D, E) = prod_l p_l^{(z.D) E_l - (z.E) D_l}, an antisymmetric bicharacter
// on Z^{m+n}. Both A (and its forms) and the x1-free part of M are of this type.

#include <vector>

#include "qsuper/coeff.hpp"

namespace qsuper {

class ColorGrading {
 public:
  struct Factor {
    int sign = 1;
    ExpArray p{};
  };

  explicit ColorGrading(const ParamConfig& cfg) : cfg_(cfg) {}

  /// Registers a slot with a Z^{m+n} degree (index l -> generator l+1) and parity.
  int add_slot(const std::vector<int>& degree, int parity);
  int slot_count() const { return static_cast<int>(slots_.size()); }
  int parity(int slot) const { return slots_[static_cast<std::size_t>(slot)].parity; }

  /// Factor chi(a, b) with X_a X_b = chi(a, b) X_b X_a.
  const Factor& chi(int a, int b) const { return table_[static_cast<std::size_t>(a * slot_count() + b)]; }
  /// chi(a, b)^e (sign ^ e, exponents * e).
  Factor chi_pow(int a, int b, long e) const;

  /// Reorders (u)(v) into canonical order. Returns false when the product
  /// vanishes because an odd slot would be squared. Exponents are per slot.
  bool merge(const int* u, const int* v, int* out, Factor& f) const;

 private:
  void rebuild();

  ParamConfig cfg_;
  struct Slot {
    std::vector<int> degree;
    int parity;
  };
  std::vector<Slot> slots_;
  std::vector<Factor> table_;
};

}  // namespace qsuper
