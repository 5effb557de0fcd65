#include "qsuper/superalgebra.hpp"

namespace qsuper {

namespace {

std::vector<int> unit_degree(int size, int i) {
  std::vector<int> d(static_cast<std::size_t>(size), 0);
  d[static_cast<std::size_t>(i - 1)] = 1;
  return d;
}

int sign_of(int exponent) { return exponent % 2 ? -1 : 1; }

}  // namespace

SuperspaceAlgebra::SuperspaceAlgebra(const ParamConfig& cfg) : Algebra(cfg), color_(cfg) {
  const int n = cfg.size();
  for (int i = 1; i <= n; ++i) color_.add_slot(unit_degree(n, i), cfg.parity(i));
  for (int i = 1; i <= n; ++i) color_.add_slot(unit_degree(n, i), (cfg.parity(i) + 1) % 2);
}

std::shared_ptr<const SuperspaceAlgebra> SuperspaceAlgebra::create(const ParamConfig& cfg) {
  return std::make_shared<const SuperspaceAlgebra>(cfg);
}

MonoTerms SuperspaceAlgebra::multiply(const Monomial& u, const Monomial& v) const {
  const int n = size();
  std::array<int, 2 * kMaxGenerators> us{}, vs{}, out{};
  for (int i = 0; i < n; ++i) {
    us[i] = u.k[i];
    us[n + i] = u.w[i];
    vs[i] = v.k[i];
    vs[n + i] = v.w[i];
  }
  ColorGrading::Factor f;
  if (!color_.merge(us.data(), vs.data(), out.data(), f)) return {};
  Monomial r;
  for (int i = 0; i < n; ++i) {
    r.k[i] = static_cast<int16_t>(out[i]);
    r.w[i] = static_cast<int16_t>(out[n + i]);
  }
  return {{r, Coeff::monomial(f.sign, f.p)}};
}

int SuperspaceAlgebra::parity(const Monomial& u) const {
  int p = 0;
  const auto& cfg = config();
  for (int i = 1; i <= cfg.size(); ++i) {
    p += cfg.parity(i) * u.k[i - 1];
    p += ((cfg.parity(i) + 1) % 2) * u.w[i - 1];
  }
  return ((p % 2) + 2) % 2;
}

int SuperspaceAlgebra::letter_parity(const Letter& l) const {
  int base = config().parity(l.index);
  int p = l.sym == Sym::Diff ? (base + 1) % 2 : base;
  return (p * l.power % 2 + 2) % 2;
}

void SuperspaceAlgebra::validate(const Letter& l) const {
  if (l.sym == Sym::Exp) throw DomainError("the exponential generator g belongs to the logarithmic extension");
  if (l.index < 1 || l.index > size())
    throw DomainError("generator index " + std::to_string(l.index) + " out of range 1.." + std::to_string(size()));
  if (l.power < 0 && !(l.sym == Sym::Gen && l.index == 1))
    throw DomainError("negative power of non-invertible " + letter_name(l.sym, l.index));
}

Monomial SuperspaceAlgebra::letter_monomial(const Letter& l) const {
  validate(l);
  Monomial m;
  if (l.sym == Sym::Gen) {
    m.k[l.index - 1] = static_cast<int16_t>(l.power);
  } else {
    m.w[l.index - 1] = static_cast<int16_t>(l.power);
  }
  return m;
}

Word SuperspaceAlgebra::to_word(const Monomial& u) const {
  Word w;
  for (int i = 1; i <= size(); ++i)
    if (u.k[i - 1] != 0) w.push_back({Sym::Gen, i, u.k[i - 1]});
  for (int i = 1; i <= size(); ++i)
    if (u.w[i - 1] != 0) w.push_back({Sym::Diff, i, u.w[i - 1]});
  return w;
}

int SuperspaceAlgebra::slot_of(const Letter& l) const {
  return l.sym == Sym::Gen ? l.index - 1 : size() + l.index - 1;
}

int SuperspaceAlgebra::letter_rank(const Letter& l) const { return slot_of(l); }

WordSum SuperspaceAlgebra::swap_adjacent(const Letter& left, const Letter& right) const {
  auto f = color_.chi_pow(slot_of(left), slot_of(right), static_cast<long>(left.power) * right.power);
  return {{Coeff::monomial(f.sign, f.p), Word{right, left}}};
}

Coeff SuperspaceAlgebra::q(int i, int j) const {
  const auto& cfg = config();
  return Coeff::p(j, cfg.z(i)) * Coeff::p(i, -cfg.z(j));
}

long SuperspaceAlgebra::z_degree(const Monomial& u) const {
  long d = 0;
  for (int i = 1; i <= size(); ++i) d += static_cast<long>(config().z(i)) * u.k[i - 1];
  return d;
}

std::vector<Relation> SuperspaceAlgebra::relations() const {
  const auto& cfg = config();
  const int n = size();
  std::vector<Relation> out;
  auto name = [&](Sym a, int i, Sym b, int j) { return letter_name(a, i) + "*" + letter_name(b, j); };
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      int pi = cfg.parity(i), pj = cfg.parity(j);
      if (i < j) {
        out.push_back({name(Sym::Gen, i, Sym::Gen, j),
                       {{Coeff(1), {{Sym::Gen, i, 1}, {Sym::Gen, j, 1}}},
                        {-(sign_of(pi * pj) * q(i, j)), {{Sym::Gen, j, 1}, {Sym::Gen, i, 1}}}}});
        out.push_back({name(Sym::Diff, i, Sym::Diff, j),
                       {{Coeff(1), {{Sym::Diff, i, 1}, {Sym::Diff, j, 1}}},
                        {-(sign_of((pi + 1) * (pj + 1)) * q(i, j)), {{Sym::Diff, j, 1}, {Sym::Diff, i, 1}}}}});
      }
      out.push_back({name(Sym::Gen, i, Sym::Diff, j),
                     {{Coeff(1), {{Sym::Gen, i, 1}, {Sym::Diff, j, 1}}},
                      {-(sign_of(pi * (pj + 1)) * q(i, j)), {{Sym::Diff, j, 1}, {Sym::Gen, i, 1}}}}});
    }
    if (cfg.parity(i) == 1) {
      out.push_back({name(Sym::Gen, i, Sym::Gen, i), {{Coeff(1), {{Sym::Gen, i, 1}, {Sym::Gen, i, 1}}}}});
    } else {
      out.push_back({name(Sym::Diff, i, Sym::Diff, i), {{Coeff(1), {{Sym::Diff, i, 1}, {Sym::Diff, i, 1}}}}});
    }
  }
  out.push_back({"a1*a1^-1", {{Coeff(1), {{Sym::Gen, 1, 1}, {Sym::Gen, 1, -1}}}, {Coeff(-1), {}}}});
  out.push_back({"a1^-1*a1", {{Coeff(1), {{Sym::Gen, 1, -1}, {Sym::Gen, 1, 1}}}, {Coeff(-1), {}}}});
  return out;
}

std::string SuperspaceAlgebra::letter_name(Sym sym, int index) const {
  if (sym == Sym::Diff) return "d(a" + std::to_string(index) + ")";
  return "a" + std::to_string(index);
}

Tensor SuperspaceAlgebra::coproduct_letter(const Letter& l) const {
  validate(l);
  if (l.sym != Sym::Gen) throw DomainError("the coproduct is defined on algebra generators only");
  auto self_ptr = self();
  if (l.index == 1) return Tensor::pure({gen(self_ptr, 1, l.power), gen(self_ptr, 1, l.power)});
  int zi = config().z(l.index);
  Tensor d = Tensor::pure({gen(self_ptr, 1, zi), gen(self_ptr, l.index)}) +
             Tensor::pure({gen(self_ptr, l.index), gen(self_ptr, 1, zi)});
  return d.pow(l.power);
}

Coeff SuperspaceAlgebra::counit_letter(const Letter& l) const {
  validate(l);
  if (l.sym != Sym::Gen) throw DomainError("the counit is defined on algebra generators only");
  if (l.index == 1 || l.power == 0) return Coeff(1);
  return Coeff();
}

Element SuperspaceAlgebra::antipode_letter(const Letter& l) const {
  validate(l);
  if (l.sym != Sym::Gen) throw DomainError("the antipode is defined on algebra generators only");
  auto self_ptr = self();
  if (l.index == 1) return gen(self_ptr, 1, -l.power);
  int zi = config().z(l.index);
  Element s = -(gen(self_ptr, 1, -zi) * gen(self_ptr, l.index) * gen(self_ptr, 1, -zi));
  return s.pow(l.power);
}

Element SuperspaceAlgebra::partial(int i, const Monomial& u) const {
  if (i < 1 || i > size()) throw DomainError("derivative index out of range");
  if (u.form_degree() != 0) throw DomainError("partial derivatives act on degree-zero elements");
  const auto& cfg = config();
  Element r(self());
  int ki = u.k[i - 1];
  if (ki == 0) return r;
  long prefix_parity = 0;
  long zsum = 0;
  ExpArray p{};
  for (int l = 1; l < i; ++l) {
    prefix_parity += cfg.parity(l) * u.k[l - 1];
    zsum += static_cast<long>(cfg.z(l)) * u.k[l - 1];
    p[l - 1] = static_cast<int16_t>(p[l - 1] - u.k[l - 1] * cfg.z(i));
  }
  p[i - 1] = static_cast<int16_t>(p[i - 1] + zsum);
  int sign = sign_of(static_cast<int>(cfg.parity(i) * prefix_parity % 2));
  Monomial m = u;
  m.k[i - 1] = static_cast<int16_t>(ki - 1);
  r.add_term(m, Coeff(ki) * Coeff::monomial(sign, p));
  return r;
}

Algebra::PartialRule SuperspaceAlgebra::partial_rule(int i, const Letter& l) const {
  const auto& cfg = config();
  PartialRule rule;
  if (l.sym != Sym::Gen) throw DomainError("partial derivatives act on degree-zero words");
  const int j = l.index;
  if (l.power == 1) {
    Coeff c = sign_of(cfg.parity(i) * cfg.parity(j)) * (Coeff::p(j, -cfg.z(i)) * Coeff::p(i, cfg.z(j)));
    rule.passing.push_back({c, {l}});
    if (i == j) rule.terminating.push_back({Coeff(1), {}});
    return rule;
  }
  if (l.power == -1 && j == 1) {
    // Inverse of the a_1 rule: d_1 a_1^{-1} = -a_1^{-2} + a_1^{-1} d_1,
    // d_i a_1^{-1} = p_i^{-1} a_1^{-1} d_i for i >= 2.
    if (i == 1) {
      rule.passing.push_back({Coeff(1), {l}});
      rule.terminating.push_back({Coeff(-1), {{Sym::Gen, 1, -2}}});
    } else {
      rule.passing.push_back({Coeff::p(i, -cfg.z(1)) * Coeff::p(1, cfg.z(i)), {l}});
    }
    return rule;
  }
  throw DomainError("partial_rule expects a unit letter");
}

Element gen(const AlgebraPtr& alg, int i, int power) {
  return Element::letter(alg, Letter{Sym::Gen, i, power});
}

Element dgen(const AlgebraPtr& alg, int i) { return Element::letter(alg, Letter{Sym::Diff, i, 1}); }

Element normal_form(const SuperspacePtr& alg, const std::vector<std::pair<int, int>>& word, const Coeff& coeff) {
  Word w;
  for (const auto& [i, pw] : word) w.push_back({Sym::Gen, i, pw});
  return coeff * normal_form(AlgebraPtr(alg), w);
}

std::pair<Element, Element> commute_series(const SuperspacePtr& alg, const std::vector<mpq_class>& coeffs, int j) {
  if (j < 2 || j > alg->size()) throw DomainError("series commutation needs a generator index 2..m+n");
  AlgebraPtr a = alg;
  Element series(a);
  Element shifted(a);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    int kk = static_cast<int>(k);
    series += Coeff(coeffs[k]) * gen(a, 1, kk);
    shifted += (Coeff(coeffs[k]) * Coeff::p(j, kk)) * gen(a, 1, kk);
  }
  return {series * gen(a, j), gen(a, j) * shifted};
}

Element classical_limit(const Element& u) {
  return u.map_coeffs([](const Coeff& c) { return Coeff(c.classical_limit()); });
}

}  // namespace qsuper
