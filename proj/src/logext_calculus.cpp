#include "qsuper/logext_calculus.hpp"

#include "qsuper/calculus.hpp"
#include "qsuper/cartan.hpp"
#include "qsuper/format.hpp"
#include "qsuper/hopf.hpp"
#include "qsuper/random.hpp"
#include "qsuper/superalgebra.hpp"

namespace qsuper {

namespace {

int sign_of(long e) { return e % 2 ? -1 : 1; }

const LogAlgebra& log_algebra(const AlgebraPtr& alg) {
  const auto* a = dynamic_cast<const LogAlgebra*>(alg.get());
  if (!a) throw DomainError("this operation is defined on the logarithmic extension only");
  return *a;
}

void check_index(const Algebra& alg, int i) {
  if (i < 1 || i > alg.size()) throw DomainError("generator index " + std::to_string(i) + " out of range");
}

Element one(const AlgebraPtr& alg) { return Element::scalar(alg, Coeff(1)); }

std::string idx(int i) { return std::to_string(i); }

Coeff form_counit(const AlgebraPtr& alg, const Monomial& m) {
  if (m.form_degree() != 0) return Coeff();
  return counit(Element::monomial(alg, m));
}

Tensor d_tensor(const Tensor& t) {
  const auto& alg = t.algebra();
  auto d = [&](const Monomial& m) { return exterior_d(Element::monomial(alg, m)); };
  return map_slot(t, 0, d, 1) + map_slot(t, 1, d, 1);
}

// Relations in degree zero (no differentials).
std::vector<Relation> function_relations(const Algebra& alg) {
  std::vector<Relation> out;
  for (const auto& r : alg.relations()) {
    bool has_diff = false;
    for (const auto& t : r.expr)
      for (const auto& l : t.word) has_diff = has_diff || l.sym == Sym::Diff;
    if (!has_diff) out.push_back(r);
  }
  return out;
}

WordSum sandwich(const Word& u, const WordSum& r, const Word& v) {
  WordSum out;
  for (const auto& t : r) {
    Word w = u;
    w.insert(w.end(), t.word.begin(), t.word.end());
    w.insert(w.end(), v.begin(), v.end());
    out.push_back({t.coeff, w});
  }
  return out;
}

void check_derivative_rules(Report& rep, const LogAlgebra& a, const AlgebraPtr& alg, Sampler& s,
                            const VerifyOptions& opt) {
  const auto& cfg = a.config();
  const int n = cfg.size();
  Element x1 = gen(alg, 1);
  for (int t = 0; t < opt.samples; ++t) {
    Element f = s.element(opt.degree_bound, 3);
    int sp = s.uniform(-2, 2);
    Element gs = grouplike(alg, sp);
    int i = s.uniform(1, n), j = s.uniform(1, n);
    auto show = [&] { return "i = " + idx(i) + ", j = " + idx(j) + ", f = " + to_string(f); };
    Element di_f = partial_closed(i, f);

    if (i == 1) {
      rep.expect(partial_closed(1, x1 * f) == f + x1 * di_f, "[partial_1, x_1] = 1", show);
      rep.expect(partial_closed(1, gs * f) == Coeff(sp) * (gs * f) + gs * di_f, "partial_1 g^s = s g^s + g^s partial_1",
                 show);
    } else {
      rep.expect(partial_closed(i, x1 * f) == (x1 + Element::scalar(alg, Coeff::h(i))) * di_f,
                 "[partial_i, x_1] = h_i partial_i", show);
      rep.expect(partial_closed(i, gs * f) == Coeff::p(i, sp) * (gs * di_f), "partial_i g^s = p_i^s g^s partial_i",
                 show);
    }
    if (j >= 2) {
      Element expect = Coeff(sign_of(cfg.parity(i) * cfg.parity(j))) * a.eta(j, i) * (gen(alg, j) * di_f);
      if (i == j) expect += f;
      rep.expect(partial_closed(i, gen(alg, j) * f) == expect, "[partial_i, x_j]_eta(j,i) = delta_ij", show);
    }
    Element lhs = partial_closed(i, partial_closed(j, f));
    Element rhs = Coeff(sign_of(cfg.parity(i) * cfg.parity(j))) * a.eta(i, j) * partial_closed(j, di_f);
    rep.expect(lhs == rhs, "[partial_i, partial_j]_eta(i,j) = 0", show);
  }
}

void check_well_defined(Report& rep, const AlgebraPtr& alg, Sampler& s, const VerifyOptions& opt) {
  auto rels = function_relations(*alg);
  for (const auto& r : rels) {
    for (int t = 0; t < std::max(1, opt.samples / 10); ++t) {
      Word u = s.word(s.uniform(0, 2)), v = s.word(s.uniform(0, 2));
      WordSum ws = sandwich(u, r.expr, v);
      for (int i = 1; i <= alg->size(); ++i) {
        Element res = partial_oracle(i, alg, ws);
        rep.expect(res.is_zero(), "partial_" + idx(i) + " well defined on " + r.name, [&] { return to_string(res); });
      }
    }
  }
}

void check_coaction_formulas(Report& rep, const LogAlgebra& a, const AlgebraPtr& alg) {
  const auto& cfg = a.config();
  Element x1 = gen(alg, 1);
  for (int i = 1; i <= cfg.size(); ++i) {
    int c = cfg.z(i) - 1;
    Element gc = grouplike(alg, c);
    Element dx1 = dgen(alg, 1), dxi = dgen(alg, i), xi = gen(alg, i);
    Tensor r = Coeff(c) * Tensor::pure({gc * dx1, xi}) + Tensor::pure({dxi, gc});
    Tensor l = Tensor::pure({gc, dxi}) + Coeff(sign_of(cfg.parity(i)) * c) * Tensor::pure({xi, gc * dx1});
    rep.expect(delta_R_form(dxi) == r, "Delta_R(dx_i) closed form", [&] { return "i = " + idx(i); });
    rep.expect(delta_L_form(dxi) == l, "Delta_L(dx_i) closed form", [&] { return "i = " + idx(i); });
    if (i >= 2) {
      Tensor lhs = delta_L_form(x1 * dxi);
      Tensor rhs = delta_L_form(dxi) * coproduct(x1) + Coeff::h(i) * delta_L_form(dxi);
      rep.expect(lhs == rhs, "Delta_L(x_1 dx_j) = Delta_L(dx_j) Delta(x_1) + h_j Delta_L(dx_j)",
                 [&] { return "j = " + idx(i) + ": " + to_string(lhs - rhs); });
    }
  }
}

void check_total_coproduct(Report& rep, const AlgebraPtr& alg, Sampler& s, const VerifyOptions& opt) {
  for (const auto& r : alg->relations()) {
    Tensor t = hat_coproduct(alg, r.expr);
    rep.expect(t.is_zero(), "total coproduct well defined on " + r.name, [&] { return to_string(t); });
  }
  auto hat = [&](const Monomial& m) { return hat_coproduct(Element::monomial(alg, m)); };
  auto eps = [&](const Monomial& m) { return form_counit(alg, m); };
  for (int t = 0; t < opt.samples; ++t) {
    Element w = s.element(opt.degree_bound, 2, 2);
    Element v = s.element(opt.degree_bound, 2, 1);
    auto show = [&] { return "w = " + to_string(w) + ", v = " + to_string(v); };
    Tensor h = hat_coproduct(w);
    rep.expect(expand_slot(h, 0, hat) == expand_slot(h, 1, hat), "total coproduct coassociative", show);
    rep.expect(contract_slot(h, 0, eps) == as_tensor(w), "total coproduct left counit", show);
    rep.expect(contract_slot(h, 1, eps) == as_tensor(w), "total coproduct right counit", show);
    rep.expect(hat_coproduct(exterior_d(w)) == d_tensor(h), "total coproduct commutes with d", show);
    rep.expect(hat_coproduct(w * v) == h * hat_coproduct(v), "total coproduct multiplicative", show);
  }
}

// Words in the Maurer-Cartan forms.
using ThetaWord = std::vector<int>;

Element theta_eval(const AlgebraPtr& alg, const ThetaWord& w) {
  Element r = one(alg);
  for (int i : w) r = r * theta_form_closed(alg, i);
  return r;
}

int theta_parity(const ParamConfig& cfg, int i) { return (cfg.parity(i) + 1) % 2; }

// Koszul sign of listing the letters of w in the order given by perm.
int koszul(const ParamConfig& cfg, const ThetaWord& w, const std::vector<int>& perm) {
  long e = 0;
  for (std::size_t a = 0; a < perm.size(); ++a)
    for (std::size_t b = a + 1; b < perm.size(); ++b)
      if (perm[a] > perm[b])
        e += theta_parity(cfg, w[static_cast<std::size_t>(perm[a])]) * theta_parity(cfg, w[static_cast<std::size_t>(perm[b])]);
  return sign_of(e);
}

struct ThetaSplit {
  int sign;
  ThetaWord left, right;
};

// Coproduct of a word of primitive forms: sum over splittings into two subwords.
std::vector<ThetaSplit> theta_coproduct(const ParamConfig& cfg, const ThetaWord& w) {
  std::vector<ThetaSplit> out;
  const std::size_t len = w.size();
  for (unsigned mask = 0; mask < (1u << len); ++mask) {
    std::vector<int> perm;
    ThetaSplit sp{1, {}, {}};
    for (std::size_t k = 0; k < len; ++k)
      if (mask >> k & 1u) {
        perm.push_back(static_cast<int>(k));
        sp.left.push_back(w[k]);
      }
    for (std::size_t k = 0; k < len; ++k)
      if (!(mask >> k & 1u)) {
        perm.push_back(static_cast<int>(k));
        sp.right.push_back(w[k]);
      }
    sp.sign = koszul(cfg, w, perm);
    out.push_back(sp);
  }
  return out;
}

// S(w_1 ... w_k) = (-1)^k (Koszul sign) w_k ... w_1.
Element theta_antipode(const AlgebraPtr& alg, const ThetaWord& w) {
  std::vector<int> perm;
  for (int k = static_cast<int>(w.size()) - 1; k >= 0; --k) perm.push_back(k);
  ThetaWord rev(w.rbegin(), w.rend());
  return Coeff(sign_of(static_cast<long>(w.size())) * koszul(alg->config(), w, perm)) * theta_eval(alg, rev);
}

}  // namespace

Element theta_form_closed(const AlgebraPtr& alg, int i) {
  log_algebra(alg);
  check_index(*alg, i);
  int c = 1 - alg->config().z(i);
  return (dgen(alg, i) + Coeff(c) * (dgen(alg, 1) * gen(alg, i))) * grouplike(alg, c);
}

Element theta_form(const AlgebraPtr& alg, int i) {
  log_algebra(alg);
  check_index(*alg, i);
  return maurer_cartan(gen(alg, i));
}

Element m_vector_field_apply(int i, const Element& u) {
  const auto& alg = u.algebra();
  const auto& a = log_algebra(alg);
  check_index(a, i);
  if (i == 1) {
    Element r = partial_closed(1, u);
    for (int k = 2; k <= a.size(); ++k) {
      int c = a.config().z(k) - 1;
      if (c) r += Coeff(c) * (gen(alg, k) * partial_closed(k, u));
    }
    return r;
  }
  return grouplike(alg, a.config().z(i) - 1) * partial_closed(i, u);
}

Report verify_m_calculus(const ParamConfig& cfg, const VerifyOptions& opt) {
  auto la = LogAlgebra::create(cfg);
  AlgebraPtr alg = la;
  Report rep("m-calculus", cfg.describe());
  Sampler s(alg, opt.seed);
  check_derivative_rules(rep, *la, alg, s, opt);
  check_partials_agree(rep, alg, s, opt);
  check_well_defined(rep, alg, s, opt);
  check_exterior_derivative(rep, alg, s, opt);
  check_coaction_formulas(rep, *la, alg);
  check_bicovariance(rep, alg, s, opt);
  check_total_coproduct(rep, alg, s, opt);
  return rep;
}

Report verify_theta(const ParamConfig& cfg, const VerifyOptions& opt) {
  auto la = LogAlgebra::create(cfg);
  AlgebraPtr alg = la;
  Report rep("theta", cfg.describe());
  const int n = cfg.size();
  Element x1 = gen(alg, 1);

  for (int i = 1; i <= n; ++i) {
    Element w = theta_form_closed(alg, i);
    rep.expect(theta_form(alg, i) == w, "pipeline omega_x = closed omega_x",
               [&] { return "i = " + idx(i) + ": " + to_string(theta_form(alg, i)); });
    Element comm = x1 * w - w * x1;
    Element expect = i == 1 ? Element(alg) : Coeff::h(i) * w;
    rep.expect(comm == expect, "[x_1, omega_i] = h_i omega_i", [&] { return "i = " + idx(i) + ": " + to_string(comm); });
    for (int j = 2; j <= n; ++j) {
      Coeff c = sign_of(cfg.parity(j) * (cfg.parity(i) + 1)) * la->eta(j, i) * Coeff::p(j, cfg.z(i) - 1);
      rep.expect(gen(alg, j) * w == c * (w * gen(alg, j)), "x_i omega_j = +-eta(i,j) p_i^{z_j-1} omega_j x_i",
                 [&] { return "i = " + idx(j) + ", j = " + idx(i); });
    }
    for (int j = 1; j <= n; ++j) {
      Element wj = theta_form_closed(alg, j);
      Element gc = w * wj - Coeff(sign_of(theta_parity(cfg, i) * theta_parity(cfg, j))) * (wj * w);
      rep.expect(gc.is_zero(), "[omega_i, omega_j] = 0",
                 [&] { return "i = " + idx(i) + ", j = " + idx(j) + ": " + to_string(gc); });
    }
  }

  // Primitive Hopf structure on words in the forms, evaluated in the form algebra.
  Sampler s(alg, opt.seed);
  std::vector<ThetaWord> words;
  for (int i = 1; i <= n; ++i) words.push_back({i});
  for (int t = 0; t < opt.samples; ++t) {
    ThetaWord w;
    int len = s.uniform(1, 3);
    for (int k = 0; k < len; ++k) w.push_back(s.uniform(1, n));
    words.push_back(w);
  }
  for (const auto& w : words) {
    auto show = [&] {
      std::string r = "omega word";
      for (int i : w) r += " " + idx(i);
      return r;
    };
    Element value = theta_eval(alg, w);
    Element left_counit(alg), right_counit(alg), left_anti(alg), right_anti(alg);
    for (const auto& sp : theta_coproduct(cfg, w)) {
      if (sp.left.empty()) left_counit += Coeff(sp.sign) * theta_eval(alg, sp.right);
      if (sp.right.empty()) right_counit += Coeff(sp.sign) * theta_eval(alg, sp.left);
      left_anti += Coeff(sp.sign) * (theta_antipode(alg, sp.left) * theta_eval(alg, sp.right));
      right_anti += Coeff(sp.sign) * (theta_eval(alg, sp.left) * theta_antipode(alg, sp.right));
    }
    rep.expect(left_counit == value, "(eps (x) id) Delta_Theta = id", show);
    rep.expect(right_counit == value, "(id (x) eps) Delta_Theta = id", show);
    rep.expect(left_anti.is_zero(), "mu (S (x) id) Delta_Theta = eps", show);
    rep.expect(right_anti.is_zero(), "mu (id (x) S) Delta_Theta = eps", show);

    // Delta_Theta respects the relations among the forms: the image of the
    // word agrees with the image of any reordering allowed by them.
    if (w.size() >= 2) {
      ThetaWord swapped = w;
      std::swap(swapped[0], swapped[1]);
      int sign = sign_of(theta_parity(cfg, w[0]) * theta_parity(cfg, w[1]));
      Tensor a(alg, 2), b(alg, 2);
      for (const auto& sp : theta_coproduct(cfg, w))
        a += Coeff(sp.sign) * Tensor::pure({theta_eval(alg, sp.left), theta_eval(alg, sp.right)});
      for (const auto& sp : theta_coproduct(cfg, swapped))
        b += Coeff(sign * sp.sign) * Tensor::pure({theta_eval(alg, sp.left), theta_eval(alg, sp.right)});
      rep.expect(a == b, "Delta_Theta respects [omega_i, omega_j] = 0", show);
    }
  }

  bool invariant = true;
  for (int i = 1; i <= n; ++i) {
    Element w = theta_form_closed(alg, i);
    if (delta_R_form(w) + delta_L_form(w) != Tensor::pure({w, one(alg)}) + Tensor::pure({one(alg), w})) invariant = false;
  }
  rep.note(invariant ? "Delta_R + Delta_L restricts to the primitive coproduct on the forms"
                     : "the primitive coproduct on the forms is an abstract structure; Delta_R + Delta_L differs from it");
  return rep;
}

Report verify_m_vf(const ParamConfig& cfg, const VerifyOptions& opt) {
  auto la = LogAlgebra::create(cfg);
  AlgebraPtr alg = la;
  Report rep("m-vf", cfg.describe());
  Sampler s(alg, opt.seed);
  const int n = cfg.size();
  Element x1 = gen(alg, 1);
  bool literal_reading_holds = true;
  for (int t = 0; t < opt.samples; ++t) {
    Element f = s.element(opt.degree_bound, 3);
    auto show = [&] { return "f = " + to_string(f); };

    Element decomposed(alg);
    for (int k = 1; k <= n; ++k) decomposed += theta_form_closed(alg, k) * m_vector_field_apply(k, f);
    rep.expect(decomposed == exterior_d(f), "sum omega_i T_i = d", show);

    int i = s.uniform(1, n), j = s.uniform(1, n);
    auto show_ij = [&] { return "i = " + idx(i) + ", j = " + idx(j) + ", f = " + to_string(f); };
    Element tij = m_vector_field_apply(i, m_vector_field_apply(j, f));
    Element tji = m_vector_field_apply(j, m_vector_field_apply(i, f));
    rep.expect(tij == Coeff(sign_of(cfg.parity(i) * cfg.parity(j))) * tji, "[T_i, T_j] = 0", show_ij);

    Element ti_f = m_vector_field_apply(i, f);
    Element comm = m_vector_field_apply(i, x1 * f) - x1 * ti_f;
    rep.expect(comm == (i == 1 ? f : Coeff::h(i) * ti_f), "[T_i, x_1] = h_i T_i (= 1 for i = 1)", show_ij);
    if (i >= 2 && j >= 2) {
      Coeff base = sign_of(cfg.parity(i) * cfg.parity(j)) * la->eta(j, i);
      Element lhs = m_vector_field_apply(i, gen(alg, j) * f);
      Element rhs = i == j ? grouplike(alg, cfg.z(i) - 1) * f : Element(alg);
      rep.expect(lhs - (base * Coeff::p(j, cfg.z(i) - 1)) * (gen(alg, j) * ti_f) == rhs,
                 "[T_i, x_j]_{eta(j,i) p_j^{z_i-1}} = delta_ij g^{z_i-1}", show_ij);
      if (lhs - (base * Coeff::p(j, cfg.z(j) - 1)) * (gen(alg, j) * ti_f) != rhs) literal_reading_holds = false;
    }
  }
  rep.note(literal_reading_holds ? "the constant eta(j,i) p_j^{z_j-1} was not refuted by the samples"
                                 : "[T_i, x_j] deforms by eta(j,i) p_j^{z_i-1}; the reading eta(j,i) p_j^{z_j-1} fails");
  return rep;
}

Report log_series_truncation_check(int order, const ParamConfig& cfg) {
  if (order < 1) throw ConfigError("truncation order must be at least 1");
  auto sa = SuperspaceAlgebra::create(cfg);
  AlgebraPtr alg = sa;
  Report rep("log-series", cfg.describe() + " N=" + idx(order));
  Element u = gen(alg, 1) - one(alg);
  Element series(alg), geometric(alg);
  Element power = one(alg);
  for (int k = 1; k <= order; ++k) {
    geometric += Coeff(sign_of(k - 1)) * power;
    power = power * u;
    series += Coeff(mpq_class(sign_of(k + 1)) / k) * power;
  }
  Element d = partial_closed(1, series);
  rep.expect(d == geometric, "partial_a1 of the log series = geometric series",
             [&] { return to_string(d) + " vs " + to_string(geometric); });
  rep.expect(partial_oracle(1, series) == d, "log series derivative by rewriting oracle");

  std::vector<mpq_class> coeffs(static_cast<std::size_t>(order) + 1);
  for (const auto& [m, c] : series.terms()) coeffs[static_cast<std::size_t>(m.k[0])] = c.classical_limit();
  for (int j = 2; j <= cfg.size(); ++j) {
    auto [lhs, rhs] = commute_series(sa, coeffs, j);
    rep.expect(lhs == rhs, "log series commutes with a_j as p_j-scaled series", [&] { return "j = " + idx(j); });
  }
  return rep;
}

}  // namespace qsuper
