#include "qsuper/calculus.hpp"

#include <algorithm>
#include <functional>

#include "qsuper/format.hpp"
#include "qsuper/hopf.hpp"
#include "qsuper/superalgebra.hpp"

namespace qsuper {

namespace {

Word expand_units(const Word& w) {
  Word out;
  for (const auto& l : w) {
    int unit = l.power > 0 ? 1 : -1;
    for (int c = 0; c < l.power * unit; ++c) out.push_back({l.sym, l.index, unit});
  }
  return out;
}

Element word_element(const AlgebraPtr& alg, Word::const_iterator first, Word::const_iterator last) {
  return normal_form(alg, Word(first, last));
}

// d of a single unit letter.
Element d_letter(const AlgebraPtr& alg, const Letter& l) {
  if (l.sym == Sym::Diff) return Element(alg);
  Letter up{l.sym, l.index, 1};
  Element dl = l.sym == Sym::Exp ? Element::letter(alg, {Sym::Diff, 1, 1}) * Element::letter(alg, up)
                                 : Element::letter(alg, {Sym::Diff, l.index, 1});
  if (l.power == 1) return dl;
  Element inv = Element::letter(alg, l);
  return -(inv * dl * inv);
}

Element d_monomial(const AlgebraPtr& alg, const Monomial& u) {
  Monomial a = u;
  a.w = ExpArray{};
  Monomial w;
  w.w = u.w;
  if (a.is_scalar()) return Element(alg);
  Element da(alg);
  for (int k = 1; k <= alg->size(); ++k) {
    Element pk = alg->partial(k, a);
    if (!pk.is_zero()) da += Element::letter(alg, {Sym::Diff, k, 1}) * pk;
  }
  return da * Element::monomial(alg, w);
}

Tensor coaction_letter(const AlgebraPtr& alg, const Letter& l, int slot) {
  if (l.sym != Sym::Diff) return alg->coproduct_letter(l);
  Tensor base = alg->coproduct_letter({Sym::Gen, l.index, 1});
  return map_slot(base, slot, [&](const Monomial& m) { return d_monomial(alg, m); }, 1);
}

Tensor coaction_word(const AlgebraPtr& alg, const Word& w, int slot) {
  Tensor r = Tensor::unit(alg, 2);
  for (const auto& l : expand_units(w)) r = r * coaction_letter(alg, l, slot);
  return r;
}

Tensor hat_letter(const AlgebraPtr& alg, const Letter& l) {
  if (l.sym != Sym::Diff) return alg->coproduct_letter(l);
  return coaction_letter(alg, l, 0) + coaction_letter(alg, l, 1);
}

Tensor hat_word(const AlgebraPtr& alg, const Word& w) {
  Tensor r = Tensor::unit(alg, 2);
  for (const auto& l : expand_units(w)) r = r * hat_letter(alg, l);
  return r;
}

Tensor coaction(const Element& u, int slot) {
  const auto& alg = u.algebra();
  Tensor r(alg, 2);
  for (const auto& [m, c] : u.terms()) r += c * coaction_word(alg, alg->to_word(m), slot);
  return r;
}

Tensor coaction(const AlgebraPtr& alg, const WordSum& words, int slot) {
  Tensor r(alg, 2);
  for (const auto& t : words) r += t.coeff * coaction_word(alg, t.word, slot);
  return r;
}

int sign_of(int e) { return e % 2 ? -1 : 1; }

}  // namespace

Element form_normal_form(const AlgebraPtr& alg, const Word& word) { return normal_form(alg, word); }

Element exterior_d(const Element& w) {
  const auto& alg = w.algebra();
  Element r(alg);
  for (const auto& [u, c] : w.terms()) r += c * d_monomial(alg, u);
  return r;
}

Element exterior_d(const AlgebraPtr& alg, const WordSum& words) {
  Element r(alg);
  for (const auto& t : words) {
    Word w = expand_units(t.word);
    int left_parity = 0;
    for (std::size_t j = 0; j < w.size(); ++j) {
      Element dl = d_letter(alg, w[j]);
      if (!dl.is_zero()) {
        Coeff c = sign_of(left_parity) * t.coeff;
        r += c * (word_element(alg, w.begin(), w.begin() + static_cast<long>(j)) * dl *
                  word_element(alg, w.begin() + static_cast<long>(j) + 1, w.end()));
      }
      left_parity += alg->letter_parity(w[j]);
    }
  }
  return r;
}

Element partial_closed(int i, const Element& u) {
  Element r(u.algebra());
  for (const auto& [m, c] : u.terms()) r += c * u.algebra()->partial(i, m);
  return r;
}

Element partial_oracle(int i, const AlgebraPtr& alg, const WordSum& words) {
  if (i < 1 || i > alg->size()) throw DomainError("derivative index out of range");
  struct State {
    Coeff coeff;
    Word done;
    std::size_t pos;
  };
  WordSum out;
  for (const auto& t : words) {
    Word w = expand_units(t.word);
    std::vector<State> stack{{t.coeff, {}, 0}};
    while (!stack.empty()) {
      State s = std::move(stack.back());
      stack.pop_back();
      if (s.pos == w.size()) continue;  // the operator annihilates 1
      auto rule = alg->partial_rule(i, w[s.pos]);
      for (const auto& p : rule.passing) {
        Word done = s.done;
        done.insert(done.end(), p.word.begin(), p.word.end());
        stack.push_back({s.coeff * p.coeff, std::move(done), s.pos + 1});
      }
      for (const auto& p : rule.terminating) {
        Word full = s.done;
        full.insert(full.end(), p.word.begin(), p.word.end());
        full.insert(full.end(), w.begin() + static_cast<long>(s.pos) + 1, w.end());
        out.push_back({s.coeff * p.coeff, std::move(full)});
      }
    }
  }
  return normal_form(alg, out);
}

Element partial_oracle(int i, const Element& u) {
  const auto& alg = u.algebra();
  WordSum ws;
  for (const auto& [m, c] : u.terms()) {
    if (m.form_degree() != 0) throw DomainError("partial derivatives act on degree-zero elements");
    ws.push_back({c, alg->to_word(m)});
  }
  return partial_oracle(i, alg, ws);
}

Tensor delta_R_form(const Element& w) { return coaction(w, 0); }
Tensor delta_L_form(const Element& w) { return coaction(w, 1); }
Tensor delta_R_form(const AlgebraPtr& alg, const WordSum& words) { return coaction(alg, words, 0); }
Tensor delta_L_form(const AlgebraPtr& alg, const WordSum& words) { return coaction(alg, words, 1); }

Tensor hat_coproduct(const Element& w) {
  const auto& alg = w.algebra();
  Tensor r(alg, 2);
  for (const auto& [m, c] : w.terms()) r += c * hat_word(alg, alg->to_word(m));
  return r;
}

Tensor hat_coproduct(const AlgebraPtr& alg, const WordSum& words) {
  Tensor r(alg, 2);
  for (const auto& t : words) r += t.coeff * hat_word(alg, t.word);
  return r;
}

std::vector<Monomial> small_monomials(const Algebra& alg, int bound) {
  std::vector<Monomial> out;
  const int n = alg.size();
  Monomial cur;
  std::function<void(int, int)> rec = [&](int i, int rem) {
    if (i > n) {
      out.push_back(cur);
      return;
    }
    int lo = 0, hi = rem;
    if (alg.letter_parity({Sym::Gen, i, 1}) == 1) hi = std::min(1, rem);
    if (alg.is_invertible(Sym::Gen, i)) lo = -rem;
    for (int e = lo; e <= hi; ++e) {
      cur.k[i - 1] = static_cast<int16_t>(e);
      rec(i + 1, rem - (e < 0 ? -e : e));
    }
    cur.k[i - 1] = 0;
  };
  if (alg.kind() == AlgebraKind::LogExtension) {
    for (int g = -bound; g <= bound; ++g) {
      cur.g = g;
      rec(1, bound - (g < 0 ? -g : g));
    }
  } else {
    rec(1, bound);
  }
  return out;
}

void check_partials_agree(Report& rep, const AlgebraPtr& alg, Sampler& s, const VerifyOptions& opt) {
  const int n = alg->size();
  for (const auto& m : small_monomials(*alg, opt.degree_bound)) {
    Element u = Element::monomial(alg, m);
    for (int i = 1; i <= n; ++i) {
      rep.expect(partial_closed(i, u) == partial_oracle(i, u), "closed partial = rewriting oracle",
                 [&] { return "i = " + std::to_string(i) + ", u = " + to_string(u); });
    }
  }
  for (int t = 0; t < opt.samples; ++t) {
    Element u = s.element(opt.degree_bound + 2, 3);
    int i = s.uniform(1, n);
    rep.expect(partial_closed(i, u) == partial_oracle(i, u), "closed partial = rewriting oracle",
               [&] { return "i = " + std::to_string(i) + ", u = " + to_string(u); });
  }
}

void check_exterior_derivative(Report& rep, const AlgebraPtr& alg, Sampler& s, const VerifyOptions& opt) {
  rep.expect(exterior_d(Element::scalar(alg, Coeff(1))).is_zero(), "d(1) = 0");
  for (int t = 0; t < opt.samples; ++t) {
    Element u = s.element(opt.degree_bound, 3, 2);
    rep.expect(exterior_d(exterior_d(u)).is_zero(), "d^2 = 0", [&] { return "u = " + to_string(u); });

    Element f = Element::monomial(alg, s.monomial(opt.degree_bound, 1), s.coeff());
    Element g = s.element(opt.degree_bound, 2, 1);
    int fp = f.parity().value_or(0);
    Element lhs = exterior_d(f * g);
    Element rhs = exterior_d(f) * g + Coeff(sign_of(fp)) * (f * exterior_d(g));
    rep.expect(lhs == rhs, "graded Leibniz", [&] { return "u = " + to_string(f) + ", v = " + to_string(g); });

    Word w = s.word(s.uniform(1, opt.degree_bound + 1), s.coin());
    WordSum ws{{Coeff(1), w}};
    rep.expect(exterior_d(normal_form(alg, ws)) == exterior_d(alg, ws), "d on words = d on normal forms",
               [&] { return "word normal form " + to_string(normal_form(alg, ws)); });
  }
  for (const auto& r : alg->relations()) {
    Element dr = exterior_d(alg, r.expr);
    rep.expect(dr.is_zero(), "d maps relation " + r.name + " to zero", [&] { return to_string(dr); });
  }
}

void check_bicovariance(Report& rep, const AlgebraPtr& alg, Sampler& s, const VerifyOptions& opt) {
  auto d_mono = [&](const Monomial& m) { return d_monomial(alg, m); };
  auto delta = [&](const Monomial& m) { return coproduct(Element::monomial(alg, m)); };
  auto delta_r = [&](const Monomial& m) { return delta_R_form(Element::monomial(alg, m)); };
  auto delta_l = [&](const Monomial& m) { return delta_L_form(Element::monomial(alg, m)); };
  auto eps = [&](const Monomial& m) { return counit(Element::monomial(alg, m)); };

  for (const auto& r : alg->relations()) {
    Tensor tr = delta_R_form(alg, r.expr);
    rep.expect(tr.is_zero(), "Delta_R well defined on " + r.name, [&] { return to_string(tr); });
    Tensor tl = delta_L_form(alg, r.expr);
    rep.expect(tl.is_zero(), "Delta_L well defined on " + r.name, [&] { return to_string(tl); });
  }

  std::vector<Element> forms;
  for (int i = 1; i <= alg->size(); ++i) forms.push_back(Element::letter(alg, {Sym::Diff, i, 1}));
  for (int t = 0; t < opt.samples; ++t) {
    Element f = s.element(opt.degree_bound, 2);
    Element w = Element::monomial(alg, s.monomial(opt.degree_bound), s.coeff()) *
                Element::letter(alg, {Sym::Diff, s.uniform(1, alg->size()), 1});
    forms.push_back(w + f * exterior_d(f));
  }

  for (const auto& w : forms) {
    auto show = [&] { return "w = " + to_string(w); };
    Tensor r = delta_R_form(w);
    Tensor l = delta_L_form(w);
    rep.expect(expand_slot(r, 0, delta_r) == expand_slot(r, 1, delta), "(Delta_R (x) id) Delta_R = (id (x) Delta) Delta_R", show);
    rep.expect(contract_slot(r, 1, eps) == as_tensor(w), "mu (id (x) eps) Delta_R = id", show);
    rep.expect(expand_slot(l, 1, delta_l) == expand_slot(l, 0, delta), "(id (x) Delta_L) Delta_L = (Delta (x) id) Delta_L", show);
    rep.expect(contract_slot(l, 0, eps) == as_tensor(w), "mu (eps (x) id) Delta_L = id", show);
    rep.expect(expand_slot(l, 1, delta_r) == expand_slot(r, 0, delta_l), "(id (x) Delta_R) Delta_L = (Delta_L (x) id) Delta_R", show);
  }

  for (int t = 0; t < opt.samples; ++t) {
    Element f = s.element(opt.degree_bound, 2);
    Element a = Element::monomial(alg, s.monomial(opt.degree_bound), s.coeff());
    Element w = s.element(opt.degree_bound, 2, 1);
    auto show = [&] { return "a = " + to_string(a) + ", f = " + to_string(f) + ", w = " + to_string(w); };
    Tensor df = coproduct(f);
    rep.expect(delta_R_form(exterior_d(f)) == map_slot(df, 0, d_mono, 1), "Delta_R d = (d (x) id) Delta", show);
    rep.expect(delta_L_form(exterior_d(f)) == map_slot(df, 1, d_mono, 1), "Delta_L d = (id (x) d) Delta", show);
    Tensor da = coproduct(a);
    rep.expect(delta_R_form(a * w) == da * delta_R_form(w), "Delta_R(a w) = Delta(a) Delta_R(w)", show);
    rep.expect(delta_R_form(w * a) == delta_R_form(w) * da, "Delta_R(w a) = Delta_R(w) Delta(a)", show);
    rep.expect(delta_L_form(a * w) == da * delta_L_form(w), "Delta_L(a w) = Delta(a) Delta_L(w)", show);
    rep.expect(delta_L_form(w * a) == delta_L_form(w) * da, "Delta_L(w a) = Delta_L(w) Delta(a)", show);
  }
}

Report verify_weyl(const ParamConfig& cfg, const VerifyOptions& opt) {
  auto a = SuperspaceAlgebra::create(cfg);
  AlgebraPtr alg = a;
  Report rep("weyl", cfg.describe());
  Sampler s(alg, opt.seed);
  const int n = cfg.size();
  for (int t = 0; t < opt.samples; ++t) {
    Element f = s.element(opt.degree_bound + 1, 3);
    int i = s.uniform(1, n), j = s.uniform(1, n);
    auto show = [&] { return "i = " + std::to_string(i) + ", j = " + std::to_string(j) + ", f = " + to_string(f); };
    Element lhs = partial_closed(i, partial_closed(j, f));
    Element rhs = Coeff(sign_of(cfg.parity(i) * cfg.parity(j))) * a->q(i, j) * partial_closed(j, partial_closed(i, f));
    rep.expect(lhs == rhs, "partial_i partial_j = +-q partial_j partial_i", show);

    Element ajf = gen(alg, j) * f;
    Element expect = Coeff(sign_of(cfg.parity(i) * cfg.parity(j))) * Coeff::p(j, -cfg.z(i)) * Coeff::p(i, cfg.z(j)) *
                     (gen(alg, j) * partial_closed(i, f));
    if (i == j) expect += f;
    rep.expect(partial_closed(i, ajf) == expect, "partial_i a_j = delta_ij + q a_j partial_i", show);
  }
  check_partials_agree(rep, alg, s, opt);
  check_exterior_derivative(rep, alg, s, opt);
  return rep;
}

Report verify_bicovariance(const ParamConfig& cfg, const VerifyOptions& opt) {
  AlgebraPtr alg = SuperspaceAlgebra::create(cfg);
  Report rep("bicovariance", cfg.describe());
  Sampler s(alg, opt.seed);
  check_bicovariance(rep, alg, s, opt);
  return rep;
}

}  // namespace qsuper
