#include "qsuper/logext_algebra.hpp"

#include "qsuper/superalgebra.hpp"

namespace qsuper {

namespace {

int sign_of(int exponent) { return exponent % 2 ? -1 : 1; }

mpz_class binomial(int n, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace

LogAlgebra::LogAlgebra(const ParamConfig& cfg) : Algebra(cfg), color_(cfg) {
  const int n = cfg.size();
  auto deg = [n](int i) {
    std::vector<int> d(static_cast<std::size_t>(n), 0);
    d[static_cast<std::size_t>(i - 1)] += 1;
    d[0] -= 1;
    return d;
  };
  std::vector<int> g_deg(static_cast<std::size_t>(n), 0);
  g_deg[0] = 1;
  color_.add_slot(g_deg, 0);
  for (int i = 2; i <= n; ++i) color_.add_slot(deg(i), cfg.parity(i));
  for (int i = 1; i <= n; ++i) color_.add_slot(deg(i), (cfg.parity(i) + 1) % 2);
}

std::shared_ptr<const LogAlgebra> LogAlgebra::create(const ParamConfig& cfg) {
  return std::make_shared<const LogAlgebra>(cfg);
}

Coeff LogAlgebra::eta(int i, int j) const {
  const auto& cfg = config();
  return Coeff::p(i, 1 - cfg.z(j)) * Coeff::p(j, cfg.z(i) - 1);
}

Coeff LogAlgebra::h_weight(const Monomial& u) const {
  Coeff h;
  for (int i = 2; i <= size(); ++i) {
    int c = u.k[i - 1] + u.w[i - 1];
    if (c) h += Coeff(c) * Coeff::h(i);
  }
  return h;
}

MonoTerms LogAlgebra::multiply(const Monomial& u, const Monomial& v) const {
  const int n = size();
  std::array<int, 2 * kMaxGenerators> us{}, vs{}, out{};
  us[0] = u.g;
  vs[0] = v.g;
  for (int i = 1; i < n; ++i) {
    us[i] = u.k[i];
    vs[i] = v.k[i];
  }
  for (int i = 0; i < n; ++i) {
    us[n + i] = u.w[i];
    vs[n + i] = v.w[i];
  }
  ColorGrading::Factor f;
  if (!color_.merge(us.data(), vs.data(), out.data(), f)) return {};
  Monomial base;
  base.g = out[0];
  for (int i = 1; i < n; ++i) base.k[i] = static_cast<int16_t>(out[i]);
  for (int i = 0; i < n; ++i) base.w[i] = static_cast<int16_t>(out[n + i]);
  Coeff factor = Coeff::monomial(f.sign, f.p);

  const int a = u.k[0];
  const int b = v.k[0];
  MonoTerms result;
  if (b == 0) {
    base.k[0] = static_cast<int16_t>(a);
    result.emplace_back(base, factor);
    return result;
  }
  // x_1^a (x_1 - H(u))^b
  Coeff minus_h = -h_weight(u);
  if (minus_h.is_zero()) {
    base.k[0] = static_cast<int16_t>(a + b);
    result.emplace_back(base, factor);
    return result;
  }
  Coeff hp(1);
  for (int c = b; c >= 0; --c) {
    // term x_1^{a+c} with coefficient C(b,c) (-H)^{b-c}
    Monomial m = base;
    m.k[0] = static_cast<int16_t>(a + c);
    result.emplace_back(m, factor * (Coeff(mpq_class(binomial(b, c))) * hp));
    hp *= minus_h;
  }
  return result;
}

int LogAlgebra::parity(const Monomial& u) const {
  int p = 0;
  const auto& cfg = config();
  for (int i = 1; i <= cfg.size(); ++i) {
    p += cfg.parity(i) * u.k[i - 1];
    p += ((cfg.parity(i) + 1) % 2) * u.w[i - 1];
  }
  return ((p % 2) + 2) % 2;
}

int LogAlgebra::letter_parity(const Letter& l) const {
  if (l.sym == Sym::Exp) return 0;
  int base = config().parity(l.index);
  int p = l.sym == Sym::Diff ? (base + 1) % 2 : base;
  return (p * l.power % 2 + 2) % 2;
}

void LogAlgebra::validate(const Letter& l) const {
  if (l.sym == Sym::Exp) return;
  if (l.index < 1 || l.index > size())
    throw DomainError("generator index " + std::to_string(l.index) + " out of range 1.." + std::to_string(size()));
  if (l.power < 0) throw DomainError("negative power of non-invertible " + letter_name(l.sym, l.index));
}

Monomial LogAlgebra::letter_monomial(const Letter& l) const {
  validate(l);
  Monomial m;
  switch (l.sym) {
    case Sym::Exp:
      m.g = l.power;
      break;
    case Sym::Gen:
      m.k[l.index - 1] = static_cast<int16_t>(l.power);
      break;
    case Sym::Diff:
      m.w[l.index - 1] = static_cast<int16_t>(l.power);
      break;
  }
  return m;
}

Word LogAlgebra::to_word(const Monomial& u) const {
  Word w;
  if (u.g != 0) w.push_back({Sym::Exp, 1, u.g});
  for (int i = 1; i <= size(); ++i)
    if (u.k[i - 1] != 0) w.push_back({Sym::Gen, i, u.k[i - 1]});
  for (int i = 1; i <= size(); ++i)
    if (u.w[i - 1] != 0) w.push_back({Sym::Diff, i, u.w[i - 1]});
  return w;
}

int LogAlgebra::slot_of(const Letter& l) const {
  switch (l.sym) {
    case Sym::Exp:
      return 0;
    case Sym::Gen:
      return l.index - 1;  // x_1 has no slot; callers handle it first
    case Sym::Diff:
      return size() + l.index - 1;
  }
  return 0;
}

int LogAlgebra::letter_rank(const Letter& l) const {
  switch (l.sym) {
    case Sym::Exp:
      return 0;
    case Sym::Gen:
      return l.index;
    case Sym::Diff:
      return size() + l.index;
  }
  return 0;
}

WordSum LogAlgebra::swap_adjacent(const Letter& left, const Letter& right) const {
  const bool right_x1 = right.sym == Sym::Gen && right.index == 1;
  const bool left_x1 = left.sym == Sym::Gen && left.index == 1;
  if (left_x1 && right.sym == Sym::Exp) return {{Coeff(1), Word{right, left}}};
  if (right_x1) {
    // Y^q x_1^b = sum_c C(b,c) (-q h_Y)^{b-c} x_1^c Y^q
    Coeff hy = (left.sym == Sym::Exp) ? Coeff() : Coeff(left.power) * Coeff::h(left.index);
    WordSum out;
    Coeff hp(1);
    for (int c = right.power; c >= 0; --c) {
      Coeff coeff = Coeff(mpq_class(binomial(right.power, c))) * hp;
      out.push_back({coeff, Word{Letter{Sym::Gen, 1, c}, left}});
      hp *= -hy;
      if (hp.is_zero()) break;
    }
    return out;
  }
  auto f = color_.chi_pow(slot_of(left), slot_of(right), static_cast<long>(left.power) * right.power);
  return {{Coeff::monomial(f.sign, f.p), Word{right, left}}};
}

std::vector<Relation> LogAlgebra::relations() const {
  const auto& cfg = config();
  const int n = size();
  std::vector<Relation> out;
  const Letter x1{Sym::Gen, 1, 1};
  const Letter dx1{Sym::Diff, 1, 1};
  const Letter g{Sym::Exp, 1, 1};
  const Letter ginv{Sym::Exp, 1, -1};
  auto x = [](int i) { return Letter{Sym::Gen, i, 1}; };
  auto dx = [](int i) { return Letter{Sym::Diff, i, 1}; };
  auto nm = [&](const Letter& a, const Letter& b) {
    return letter_name(a.sym, a.index) + "*" + letter_name(b.sym, b.index);
  };

  out.push_back({"g*g^-1", {{Coeff(1), {g, ginv}}, {Coeff(-1), {}}}});
  out.push_back({"g^-1*g", {{Coeff(1), {ginv, g}}, {Coeff(-1), {}}}});
  out.push_back({nm(g, x1), {{Coeff(1), {g, x1}}, {Coeff(-1), {x1, g}}}});
  out.push_back({nm(x1, dx1), {{Coeff(1), {x1, dx1}}, {Coeff(-1), {dx1, x1}}}});
  out.push_back({nm(dx1, dx1), {{Coeff(1), {dx1, dx1}}}});
  out.push_back({nm(g, dx1), {{Coeff(1), {g, dx1}}, {Coeff(-1), {dx1, g}}}});
  for (int i = 2; i <= n; ++i) {
    const int pi = cfg.parity(i);
    out.push_back({nm(x1, x(i)), {{Coeff(1), {x1, x(i)}}, {Coeff(-1), {x(i), x1}}, {-Coeff::h(i), {x(i)}}}});
    out.push_back({nm(g, x(i)), {{Coeff(1), {g, x(i)}}, {-Coeff::p(i), {x(i), g}}}});
    out.push_back({nm(x1, dx(i)), {{Coeff(1), {x1, dx(i)}}, {Coeff(-1), {dx(i), x1}}, {-Coeff::h(i), {dx(i)}}}});
    out.push_back({nm(g, dx(i)), {{Coeff(1), {g, dx(i)}}, {-Coeff::p(i), {dx(i), g}}}});
    for (int j = 1; j <= n; ++j) {
      const int pj = cfg.parity(j);
      out.push_back({nm(x(i), dx(j)),
                     {{Coeff(1), {x(i), dx(j)}}, {-(sign_of(pi * (pj + 1)) * eta(i, j)), {dx(j), x(i)}}}});
    }
    for (int j = i + 1; j <= n; ++j) {
      const int pj = cfg.parity(j);
      out.push_back({nm(x(i), x(j)), {{Coeff(1), {x(i), x(j)}}, {-(sign_of(pi * pj) * eta(i, j)), {x(j), x(i)}}}});
    }
    if (pi == 1) out.push_back({nm(x(i), x(i)), {{Coeff(1), {x(i), x(i)}}}});
  }
  for (int i = 1; i <= n; ++i) {
    const int pi = cfg.parity(i);
    for (int j = i + 1; j <= n; ++j) {
      const int pj = cfg.parity(j);
      out.push_back({nm(dx(i), dx(j)),
                     {{Coeff(1), {dx(i), dx(j)}}, {-(sign_of((pi + 1) * (pj + 1)) * eta(i, j)), {dx(j), dx(i)}}}});
    }
    if (i > 1 && pi == 0) out.push_back({nm(dx(i), dx(i)), {{Coeff(1), {dx(i), dx(i)}}}});
  }
  return out;
}

std::string LogAlgebra::letter_name(Sym sym, int index) const {
  switch (sym) {
    case Sym::Exp:
      return "g";
    case Sym::Gen:
      return "x" + std::to_string(index);
    case Sym::Diff:
      return "d(x" + std::to_string(index) + ")";
  }
  return "?";
}

Element grouplike(const AlgebraPtr& alg, int power) {
  return Element::letter(alg, Letter{Sym::Exp, 1, power});
}

Tensor LogAlgebra::coproduct_letter(const Letter& l) const {
  validate(l);
  auto me = self();
  if (l.sym == Sym::Exp) return Tensor::pure({grouplike(me, l.power), grouplike(me, l.power)});
  if (l.sym != Sym::Gen) throw DomainError("the coproduct is defined on algebra generators only");
  int c = config().z(l.index) - 1;
  Tensor d = Tensor::pure({grouplike(me, c), gen(me, l.index)}) + Tensor::pure({gen(me, l.index), grouplike(me, c)});
  return d.pow(l.power);
}

Coeff LogAlgebra::counit_letter(const Letter& l) const {
  validate(l);
  if (l.sym == Sym::Exp || l.power == 0) return Coeff(1);
  if (l.sym != Sym::Gen) throw DomainError("the counit is defined on algebra generators only");
  return Coeff();
}

Element LogAlgebra::antipode_letter(const Letter& l) const {
  validate(l);
  auto me = self();
  if (l.sym == Sym::Exp) return grouplike(me, -l.power);
  if (l.sym != Sym::Gen) throw DomainError("the antipode is defined on algebra generators only");
  int c = config().z(l.index) - 1;
  Element s = -(grouplike(me, -c) * gen(me, l.index) * grouplike(me, -c));
  return s.pow(l.power);
}

Element LogAlgebra::partial(int i, const Monomial& u) const {
  if (i < 1 || i > size()) throw DomainError("derivative index out of range");
  if (u.form_degree() != 0) throw DomainError("partial derivatives act on degree-zero elements");
  const auto& cfg = config();
  Element r(self());
  if (i == 1) {
    if (u.g != 0) r.add_term(u, Coeff(u.g));
    if (u.k[0] > 0) {
      Monomial m = u;
      m.k[0] = static_cast<int16_t>(u.k[0] - 1);
      r.add_term(m, Coeff(u.k[0]));
    }
    return r;
  }
  const int ki = u.k[i - 1];
  if (ki == 0) return r;
  long prefix_parity = 0;
  Coeff c = Coeff(ki) * Coeff::p(i, u.g);
  for (int j = 2; j < i; ++j) {
    prefix_parity += cfg.parity(j) * u.k[j - 1];
    if (u.k[j - 1]) c *= eta(j, i).pow(u.k[j - 1]);
  }
  if (cfg.parity(i) * prefix_parity % 2) c = -c;
  Monomial m = u;
  m.k[i - 1] = static_cast<int16_t>(ki - 1);
  // (x_1 + h_i)^{k_1}
  const int k1 = u.k[0];
  Coeff hp(1);
  for (int e = k1; e >= 0; --e) {
    Monomial t = m;
    t.k[0] = static_cast<int16_t>(e);
    r.add_term(t, c * Coeff(mpq_class(binomial(k1, e))) * hp);
    hp *= Coeff::h(i);
  }
  return r;
}

Algebra::PartialRule LogAlgebra::partial_rule(int i, const Letter& l) const {
  const auto& cfg = config();
  PartialRule rule;
  if (l.power != 1 && !(l.sym == Sym::Exp && l.power == -1)) throw DomainError("partial_rule expects a unit letter");
  switch (l.sym) {
    case Sym::Exp:
      if (i == 1) {
        rule.passing.push_back({Coeff(1), {l}});
        rule.terminating.push_back({Coeff(l.power), {l}});
      } else {
        rule.passing.push_back({Coeff::p(i, l.power), {l}});
      }
      return rule;
    case Sym::Gen:
      if (l.index == 1) {
        rule.passing.push_back({Coeff(1), {l}});
        if (i == 1) {
          rule.terminating.push_back({Coeff(1), {}});
        } else {
          rule.passing.push_back({Coeff::h(i), {}});
        }
        return rule;
      }
      rule.passing.push_back({sign_of(cfg.parity(i) * cfg.parity(l.index)) * eta(l.index, i), {l}});
      if (i == l.index) rule.terminating.push_back({Coeff(1), {}});
      return rule;
    case Sym::Diff:
      break;
  }
  throw DomainError("partial derivatives act on degree-zero words");
}

}  // namespace qsuper
