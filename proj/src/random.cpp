#include "qsuper/random.hpp"

namespace qsuper {

int Sampler::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

Coeff Sampler::coeff() {
  const int n = alg_->size();
  auto term = [&] {
    int c = uniform(1, 3) * (coin() ? 1 : -1);
    Coeff r(c);
    if (n >= 2) r *= Coeff::p(uniform(2, n), uniform(-2, 2));
    return r;
  };
  Coeff r = term();
  if (uniform(0, 3) == 0) r += term();
  if (alg_->kind() == AlgebraKind::LogExtension && n >= 2 && uniform(0, 3) == 0)
    r += Coeff(uniform(-2, 2)) * Coeff::h(uniform(2, n));
  if (r.is_zero()) r = Coeff(1);
  return r;
}

Letter Sampler::unit_letter() {
  const int n = alg_->size();
  bool log = alg_->kind() == AlgebraKind::LogExtension;
  if (log && uniform(0, n) == 0) return {Sym::Exp, 1, coin() ? 1 : -1};
  int i = uniform(1, n);
  int power = alg_->is_invertible(Sym::Gen, i) && uniform(0, 2) == 0 ? -1 : 1;
  return {Sym::Gen, i, power};
}

Monomial Sampler::monomial(int degree, int form_degree) {
  const int n = alg_->size();
  Monomial m;
  if (alg_->kind() == AlgebraKind::LogExtension) m.g = uniform(-2, 2);
  int steps = uniform(0, degree);
  for (int s = 0; s < steps; ++s) {
    int i = uniform(1, n);
    auto& k = m.k[i - 1];
    if (alg_->letter_parity({Sym::Gen, i, 1}) == 1) {
      k = 1;
    } else if (alg_->is_invertible(Sym::Gen, i) && uniform(0, 2) == 0) {
      --k;
    } else {
      ++k;
    }
  }
  int forms = uniform(0, form_degree);
  for (int s = 0; s < forms; ++s) {
    int i = uniform(1, n);
    auto& w = m.w[i - 1];
    if (alg_->letter_parity({Sym::Diff, i, 1}) == 1) {
      w = 1;
    } else {
      ++w;
    }
  }
  return m;
}

Element Sampler::element(int degree, int max_terms, int form_degree) {
  Element e(alg_);
  int terms = uniform(1, max_terms);
  for (int t = 0; t < terms; ++t) e.add_term(monomial(degree, form_degree), coeff());
  return e;
}

Element Sampler::homogeneous(int degree, int max_terms, int form_degree, int parity) {
  Element e(alg_);
  int terms = uniform(1, max_terms);
  for (int t = 0, tries = 0; t < terms && tries < 50 * max_terms; ++tries) {
    Monomial u = monomial(degree, form_degree);
    if (u.form_degree() != form_degree || alg_->parity(u) != parity) continue;
    e.add_term(u, coeff());
    ++t;
  }
  return e;
}

Word Sampler::word(int length, bool with_differentials) {
  Word w;
  const int n = alg_->size();
  for (int s = 0; s < length; ++s) {
    if (with_differentials && uniform(0, 2) == 0) {
      w.push_back({Sym::Diff, uniform(1, n), 1});
    } else {
      w.push_back(unit_letter());
    }
  }
  return w;
}

ParamConfig random_config(std::mt19937_64& rng, int max_size, int zmax) {
  auto uni = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  int size = uni(2, max_size);
  int m = uni(1, size);
  std::vector<int> z{1};
  for (int i = 2; i <= size; ++i) z.push_back(uni(-zmax, zmax));
  return ParamConfig(m, size - m, z);
}

std::vector<ParamConfig> standard_configs(int random_count, uint64_t seed) {
  std::vector<ParamConfig> out{ParamConfig(1, 1, {1, 2}), ParamConfig(2, 2, {1, 2, 3, -1})};
  std::mt19937_64 rng(seed);
  for (int i = 0; i < random_count; ++i) out.push_back(random_config(rng));
  return out;
}

}  // namespace qsuper
