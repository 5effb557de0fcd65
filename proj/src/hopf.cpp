#include "qsuper/hopf.hpp"

#include "qsuper/format.hpp"
#include "qsuper/logext_algebra.hpp"
#include "qsuper/random.hpp"
#include "qsuper/superalgebra.hpp"

namespace qsuper {

namespace {

void require_degree_zero(const Monomial& u) {
  if (u.form_degree() != 0) throw DomainError("Hopf maps are defined on degree-zero elements");
}

// Delta of a letter with arbitrary power, built from the unit letter in the given mode.
Tensor coproduct_letter_power(const Algebra& alg, const Letter& l, TensorMode mode) {
  alg.validate(l);
  if (l.power == 0) return Tensor::unit(alg.self(), 2, mode);
  int unit = l.power > 0 ? 1 : -1;
  Tensor base = alg.coproduct_letter({l.sym, l.index, unit}).with_mode(mode);
  return base.pow(l.power * unit);
}

Tensor coproduct_word(const AlgebraPtr& alg, const Word& w, TensorMode mode) {
  Tensor r = Tensor::unit(alg, 2, mode);
  for (const auto& l : w) r = r * coproduct_letter_power(*alg, l, mode);
  return r;
}

Coeff counit_word(const Algebra& alg, const Word& w) {
  Coeff r(1);
  for (const auto& l : w) {
    r *= alg.counit_letter(l);
    if (r.is_zero()) break;
  }
  return r;
}

Element antipode_word(const AlgebraPtr& alg, const Word& w) {
  int swaps = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!alg->letter_parity(w[i])) continue;
    for (std::size_t j = i + 1; j < w.size(); ++j) swaps += alg->letter_parity(w[j]);
  }
  Element r = Element::scalar(alg, Coeff(swaps % 2 ? -1 : 1));
  for (auto it = w.rbegin(); it != w.rend(); ++it) r = r * alg->antipode_letter(*it);
  return r;
}

Tensor coproduct_monomial(const AlgebraPtr& alg, const Monomial& u, TensorMode mode) {
  require_degree_zero(u);
  return coproduct_word(alg, alg->to_word(u), mode);
}

Coeff counit_monomial(const Algebra& alg, const Monomial& u) {
  require_degree_zero(u);
  return counit_word(alg, alg.to_word(u));
}

Element antipode_monomial(const AlgebraPtr& alg, const Monomial& u) {
  require_degree_zero(u);
  return antipode_word(alg, alg->to_word(u));
}

bool has_differential(const WordSum& ws) {
  for (const auto& t : ws)
    for (const auto& l : t.word)
      if (l.sym == Sym::Diff) return true;
  return false;
}

std::vector<Letter> unit_letters(const Algebra& alg) {
  std::vector<Letter> out;
  if (alg.kind() == AlgebraKind::LogExtension) {
    out.push_back({Sym::Exp, 1, 1});
    out.push_back({Sym::Exp, 1, -1});
  }
  for (int i = 1; i <= alg.size(); ++i) {
    out.push_back({Sym::Gen, i, 1});
    if (alg.is_invertible(Sym::Gen, i)) out.push_back({Sym::Gen, i, -1});
  }
  return out;
}

}  // namespace

Tensor coproduct(const Element& u, TensorMode mode) {
  const auto& alg = u.algebra();
  Tensor r(alg, 2, mode);
  for (const auto& [m, c] : u.terms()) r += c * coproduct_monomial(alg, m, mode);
  return r;
}

Coeff counit(const Element& u) {
  Coeff r;
  for (const auto& [m, c] : u.terms()) r += c * counit_monomial(*u.algebra(), m);
  return r;
}

Element antipode(const Element& u) {
  Element r(u.algebra());
  for (const auto& [m, c] : u.terms()) r += c * antipode_monomial(u.algebra(), m);
  return r;
}

Tensor coproduct(const AlgebraPtr& alg, const WordSum& words, TensorMode mode) {
  Tensor r(alg, 2, mode);
  for (const auto& t : words) r += t.coeff * coproduct_word(alg, t.word, mode);
  return r;
}

Coeff counit(const AlgebraPtr& alg, const WordSum& words) {
  Coeff r;
  for (const auto& t : words) r += t.coeff * counit_word(*alg, t.word);
  return r;
}

Element antipode(const AlgebraPtr& alg, const WordSum& words) {
  Element r(alg);
  for (const auto& t : words) r += t.coeff * antipode_word(alg, t.word);
  return r;
}

Tensor coproduct_left_twice(const Element& u) {
  const auto& alg = u.algebra();
  return expand_slot(coproduct(u), 0, [&](const Monomial& m) { return coproduct_monomial(alg, m, TensorMode::SignOnly); });
}

Tensor coproduct_right_twice(const Element& u) {
  const auto& alg = u.algebra();
  return expand_slot(coproduct(u), 1, [&](const Monomial& m) { return coproduct_monomial(alg, m, TensorMode::SignOnly); });
}

Report verify_hopf(const AlgebraPtr& alg, const VerifyOptions& opt) {
  Report rep(alg->kind() == AlgebraKind::Superspace ? "hopf" : "hopf-M", alg->config().describe());
  auto eps = [&](const Monomial& m) { return counit_monomial(*alg, m); };
  auto s = [&](const Monomial& m) { return antipode_monomial(alg, m); };

  std::vector<Element> samples;
  for (const auto& l : unit_letters(*alg)) samples.push_back(Element::letter(alg, l));
  Sampler sampler(alg, opt.seed);
  for (int t = 0; t < opt.samples; ++t) samples.push_back(sampler.element(opt.degree_bound, 3));

  for (const auto& u : samples) {
    auto show = [&] { return "u = " + to_string(u); };
    Tensor du = coproduct(u);
    rep.expect(coproduct_left_twice(u) == coproduct_right_twice(u), "coassociativity", show);
    rep.expect(contract_slot(du, 0, eps) == as_tensor(u), "(eps (x) id) Delta = id", show);
    rep.expect(contract_slot(du, 1, eps) == as_tensor(u), "(id (x) eps) Delta = id", show);
    Element unit = Element::scalar(alg, counit(u));
    rep.expect(multiply_all(map_slot(du, 0, s, 0)) == unit, "mu (S (x) id) Delta = eta eps", show);
    rep.expect(multiply_all(map_slot(du, 1, s, 0)) == unit, "mu (id (x) S) Delta = eta eps", show);
    rep.expect(antipode(antipode(u)) == u, "S S = id", show);
  }

  for (int t = 0; t < opt.samples; ++t) {
    Element u = Element::monomial(alg, sampler.monomial(opt.degree_bound), sampler.coeff());
    Element v = Element::monomial(alg, sampler.monomial(opt.degree_bound), sampler.coeff());
    auto show = [&] { return "u = " + to_string(u) + ", v = " + to_string(v); };
    Element uv = u * v;
    rep.expect(coproduct(uv) == coproduct(u) * coproduct(v), "Delta(uv) = Delta(u) Delta(v)", show);
    rep.expect(counit(uv) == counit(u) * counit(v), "eps(uv) = eps(u) eps(v)", show);
    int sign = (u.parity().value_or(0) * v.parity().value_or(0)) % 2 ? -1 : 1;
    rep.expect(antipode(uv) == Coeff(sign) * (antipode(v) * antipode(u)), "S(uv) = +-S(v) S(u)", show);
  }

  for (const auto& r : alg->relations()) {
    if (has_differential(r.expr)) continue;
    Tensor dr = coproduct(alg, r.expr);
    rep.expect(dr.is_zero(), "Delta preserves " + r.name, [&] { return to_string(dr); });
    Coeff er = counit(alg, r.expr);
    rep.expect(er.is_zero(), "eps preserves " + r.name, [&] { return er.to_string(); });
    Element sr = antipode(alg, r.expr);
    rep.expect(sr.is_zero(), "S preserves " + r.name, [&] { return to_string(sr); });
  }
  return rep;
}

Report verify_hopf(const ParamConfig& cfg, const VerifyOptions& opt) {
  return verify_hopf(SuperspaceAlgebra::create(cfg), opt);
}

Report verify_hopf_m(const ParamConfig& cfg, const VerifyOptions& opt) {
  return verify_hopf(LogAlgebra::create(cfg), opt);
}

std::vector<RelationResidual> relation_residuals(const ParamConfig& cfg, TensorMode mode) {
  auto alg = SuperspaceAlgebra::create(cfg);
  std::vector<RelationResidual> out;
  for (const auto& r : alg->relations()) {
    if (has_differential(r.expr)) continue;
    Tensor res = coproduct(alg, r.expr, mode);
    if (!res.is_zero()) out.push_back({r.name, res});
  }
  return out;
}

std::optional<RelationResidual> first_broken_relation(const ParamConfig& cfg, TensorMode mode) {
  auto all = relation_residuals(cfg, mode);
  if (all.empty()) return std::nullopt;
  return all.front();
}

}  // namespace qsuper
