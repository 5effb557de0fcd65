#include "qsuper/classical.hpp"

#include "qsuper/calculus.hpp"
#include "qsuper/cartan.hpp"
#include "qsuper/format.hpp"
#include "qsuper/hopf.hpp"
#include "qsuper/logext_algebra.hpp"
#include "qsuper/logext_calculus.hpp"
#include "qsuper/random.hpp"
#include "qsuper/superalgebra.hpp"

namespace qsuper {

namespace {

int sign_of(long e) { return e % 2 ? -1 : 1; }

Coeff limit_coeff(const Coeff& c) { return Coeff(c.classical_limit()); }

Element lim(const Element& u) { return classical_limit(u); }

std::string idx(int i) { return std::to_string(i); }

using FieldFn = Element (*)(int, const Element&);

struct Family {
  const char* tag;
  AlgebraPtr alg;
  FieldFn field;
  Element (*mc)(const AlgebraPtr&, int);
};

void check_family(Report& rep, const Family& fam, const VerifyOptions& opt) {
  const auto& alg = fam.alg;
  const auto& cfg = alg->config();
  const int n = cfg.size();
  const std::string t = fam.tag;
  const bool log_ext = alg->kind() == AlgebraKind::LogExtension;
  Sampler s(alg, opt.seed);

  for (int k = 0; k < opt.samples; ++k) {
    Element u = Element::monomial(alg, s.monomial(opt.degree_bound, 1));
    Element v = Element::monomial(alg, s.monomial(opt.degree_bound, 1));
    int sign = sign_of(*u.parity() * *v.parity());
    auto show = [&] { return "u = " + to_string(u) + ", v = " + to_string(v); };
    rep.expect(lim(u * v) == Coeff(sign) * lim(v * u), t + ": supercommutative", show);

    Element fu = Element::monomial(alg, s.monomial(opt.degree_bound));
    Element fv = Element::monomial(alg, s.monomial(opt.degree_bound));
    int fsign = sign_of(*fu.parity() * *fv.parity());
    Tensor a = coproduct(fu) * coproduct(fv);
    Tensor b = coproduct(fv) * coproduct(fu);
    rep.expect(classical_limit(a) == classical_limit(Coeff(fsign) * b), t + ": coproduct image supercommutative",
               [&] { return "u = " + to_string(fu) + ", v = " + to_string(fv); });
    rep.expect(lim(antipode(fu * fv)) == lim(antipode(fu) * antipode(fv)),
               t + ": antipode is a supercommutative algebra map", [&] { return "u = " + to_string(fu); });

    Element f = s.element(opt.degree_bound, 3);
    int i = s.uniform(1, n), j = s.uniform(1, n);
    int ij = sign_of(cfg.parity(i) * cfg.parity(j));
    auto show_ij = [&] { return "i = " + idx(i) + ", j = " + idx(j) + ", f = " + to_string(f); };
    rep.expect(lim(partial_closed(i, partial_closed(j, f))) == Coeff(ij) * lim(partial_closed(j, partial_closed(i, f))),
               t + ": partial derivatives supercommute", show_ij);
    if (!log_ext || j >= 2) {
      Element expect = Coeff(ij) * lim(gen(alg, j) * partial_closed(i, f));
      if (i == j) expect += lim(f);
      rep.expect(lim(partial_closed(i, gen(alg, j) * f)) == expect, t + ": [partial_i, x_j] = delta_ij", show_ij);
    } else if (i >= 2) {
      rep.expect(lim(partial_closed(i, gen(alg, 1) * f)) == lim(gen(alg, 1) * partial_closed(i, f)),
                 t + ": [partial_i, x_1] = 0", show_ij);
    }

    Element w = fam.mc(alg, j);
    int wsign = sign_of(cfg.parity(i) * (cfg.parity(j) + 1));
    if (!log_ext || i >= 2) {
      rep.expect(lim(gen(alg, i) * w) == Coeff(wsign) * lim(w * gen(alg, i)),
                 t + ": generators supercommute with Maurer-Cartan forms", show_ij);
    } else {
      rep.expect(lim(gen(alg, 1) * w) == lim(w * gen(alg, 1)), t + ": x_1 commutes with Maurer-Cartan forms", show_ij);
    }
    Element wi = fam.mc(alg, i);
    int wwsign = sign_of((cfg.parity(i) + 1) * (cfg.parity(j) + 1));
    rep.expect(lim(wi * w) == Coeff(wwsign) * lim(w * wi), t + ": Maurer-Cartan forms supercommute", show_ij);

    Element g = s.element(opt.degree_bound, 2);
    int fg = sign_of(*fu.parity() * cfg.parity(i));
    Element lhs = lim(fam.field(i, fu * g));
    Element rhs = lim(fam.field(i, fu) * g) + Coeff(fg) * lim(fu * fam.field(i, g));
    rep.expect(lhs == rhs, t + ": vector fields are superderivations",
               [&] { return "i = " + idx(i) + ", f = " + to_string(fu) + ", g = " + to_string(g); });
    rep.expect(lim(fam.field(i, fam.field(j, f))) == Coeff(ij) * lim(fam.field(j, fam.field(i, f))),
               t + ": vector fields supercommute", show_ij);
  }
}

Element a_field(int i, const Element& u) { return vector_field_apply(i, u); }
Element m_field(int i, const Element& u) { return m_vector_field_apply(i, u); }

}  // namespace

Tensor classical_limit(const Tensor& t) { return t.map_coeffs(limit_coeff); }

Report verify_classical(const ParamConfig& cfg, const VerifyOptions& opt) {
  Report rep("classical", cfg.describe());
  check_family(rep, {"A", SuperspaceAlgebra::create(cfg), a_field, mc_form_closed}, opt);
  check_family(rep, {"M", LogAlgebra::create(cfg), m_field, theta_form_closed}, opt);
  for (auto mode : {TensorMode::Bicharacter, TensorMode::SignOnly}) {
    for (const auto& r : relation_residuals(cfg, mode)) {
      rep.expect(classical_limit(r.residual).is_zero(), "coproduct residual of " + r.relation + " vanishes classically",
                 [&] { return to_string(r.residual); });
    }
  }
  return rep;
}

}  // namespace qsuper
