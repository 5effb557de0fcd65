#include "qsuper/algebra.hpp"

#include <algorithm>
#include <deque>

namespace qsuper {

int Monomial::form_degree() const {
  int d = 0;
  for (auto e : w) d += e;
  return d;
}

void require_same(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a == b) return;
  if (!a || !b || a->kind() != b->kind() || !(a->config() == b->config()))
    throw ConfigError("operands belong to different algebras or configurations");
}

// ---------------------------------------------------------------------------
// Element

Element Element::monomial(AlgebraPtr alg, const Monomial& u, const Coeff& c) {
  Element e(std::move(alg));
  e.add_term(u, c);
  return e;
}

Element Element::scalar(AlgebraPtr alg, const Coeff& c) { return monomial(std::move(alg), Monomial{}, c); }

Element Element::letter(AlgebraPtr alg, const Letter& l) {
  alg->validate(l);
  return normal_form(alg, Word{l});
}

void Element::add_term(const Monomial& u, const Coeff& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(u, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Element::add_terms(const MonoTerms& terms, const Coeff& scale) {
  for (const auto& [u, c] : terms) add_term(u, scale.is_one() ? c : scale * c);
}

Element& Element::operator+=(const Element& o) {
  require_same(alg_, o.alg_);
  for (const auto& [u, c] : o.terms_) add_term(u, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  require_same(alg_, o.alg_);
  for (const auto& [u, c] : o.terms_) add_term(u, -c);
  return *this;
}

Element Element::operator-() const {
  Element r(alg_);
  for (const auto& [u, c] : terms_) r.terms_.emplace(u, -c);
  return r;
}

Element operator*(const Element& a, const Element& b) {
  require_same(a.alg_, b.alg_);
  Element r(a.alg_);
  for (const auto& [u, cu] : a.terms_) {
    for (const auto& [v, cv] : b.terms_) {
      r.add_terms(a.alg_->multiply(u, v), cu * cv);
    }
  }
  return r;
}

Element operator*(const Coeff& c, const Element& a) {
  Element r(a.alg_);
  if (c.is_zero()) return r;
  for (const auto& [u, cu] : a.terms_) r.add_term(u, c * cu);
  return r;
}

bool Element::operator==(const Element& o) const {
  require_same(alg_, o.alg_);
  return terms_ == o.terms_;
}

Element Element::pow(int e) const {
  if (e < 0) {
    if (terms_.size() != 1 || !terms_.begin()->second.is_laurent_monomial())
      throw DomainError("negative power of a non-monomial element");
    const auto& [u, c] = *terms_.begin();
    Word inv;
    Word w = alg_->to_word(u);
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      Letter l = *it;
      if (!alg_->is_invertible(l.sym, l.index))
        throw DomainError("negative power of a non-invertible element");
      l.power = -l.power;
      inv.push_back(l);
    }
    Element base = c.pow(-1) * normal_form(alg_, inv);
    return base.pow(-e);
  }
  Element r = scalar(alg_, 1);
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

std::optional<int> Element::parity() const {
  std::optional<int> p;
  for (const auto& [u, c] : terms_) {
    int q = alg_->parity(u);
    if (p && *p != q) return std::nullopt;
    p = q;
  }
  return p;
}

int Element::form_degree() const {
  int d = 0;
  for (const auto& [u, c] : terms_) d = std::max(d, u.form_degree());
  return d;
}

Element Element::map_coeffs(const std::function<Coeff(const Coeff&)>& f) const {
  Element r(alg_);
  for (const auto& [u, c] : terms_) r.add_term(u, f(c));
  return r;
}

// ---------------------------------------------------------------------------
// Words

Element normal_form(const AlgebraPtr& alg, const Word& word) {
  Element acc = Element::scalar(alg, 1);
  for (const auto& l : word) {
    alg->validate(l);
    if (l.power == 0) continue;
    Element next(alg);
    Monomial lm = alg->letter_monomial(l);
    bool odd_square = alg->letter_parity(Letter{l.sym, l.index, 1}) == 1 && l.power > 1;
    if (odd_square) return Element(alg);
    for (const auto& [u, c] : acc.terms()) next.add_terms(alg->multiply(u, lm), c);
    acc = std::move(next);
    if (acc.is_zero()) break;
  }
  return acc;
}

Element normal_form(const AlgebraPtr& alg, const WordSum& words) {
  Element r(alg);
  for (const auto& t : words) r += t.coeff * normal_form(alg, t.word);
  return r;
}

namespace {

// Merges equal neighbours; returns false when the word vanishes.
bool merge_at(const Algebra& alg, Word& w, std::size_t i) {
  Letter& a = w[i];
  const Letter& b = w[i + 1];
  a.power += b.power;
  w.erase(w.begin() + static_cast<std::ptrdiff_t>(i) + 1);
  if (a.power == 0) {
    w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
    return true;
  }
  return !(alg.letter_parity(Letter{a.sym, a.index, 1}) == 1 && (a.power > 1 || a.power < 0));
}

}  // namespace

Element rewrite_normal_form(const AlgebraPtr& alg, const WordSum& words, RewriteStrategy strategy) {
  Element result(alg);
  std::deque<WordTerm> work;
  for (const auto& t : words) {
    Word w;
    for (const auto& l : t.word) {
      alg->validate(l);
      if (l.power != 0) w.push_back(l);
    }
    work.push_back({t.coeff, std::move(w)});
  }
  while (!work.empty()) {
    WordTerm t = std::move(work.front());
    work.pop_front();
    if (t.coeff.is_zero()) continue;
    bool vanished = false;
    for (const auto& l : t.word) {
      if (alg->letter_parity(Letter{l.sym, l.index, 1}) == 1 && l.power > 1) vanished = true;
    }
    if (vanished) continue;
    // Locate an adjacent pair that is out of order or mergeable.
    std::optional<std::size_t> pos;
    const std::size_t n = t.word.size();
    for (std::size_t step = 0; step + 1 < n; ++step) {
      std::size_t i = strategy == RewriteStrategy::LeftmostFirst ? step : n - 2 - step;
      int ra = alg->letter_rank(t.word[i]);
      int rb = alg->letter_rank(t.word[i + 1]);
      if (ra >= rb) {
        pos = i;
        break;
      }
    }
    if (!pos) {
      Monomial u;
      for (const auto& l : t.word) {
        // Sorted, distinct letters: the canonical monomial is read off directly.
        Monomial lm = alg->letter_monomial(l);
        u.g += lm.g;
        for (int j = 0; j < kMaxGenerators; ++j) {
          u.k[j] = static_cast<int16_t>(u.k[j] + lm.k[j]);
          u.w[j] = static_cast<int16_t>(u.w[j] + lm.w[j]);
        }
      }
      result.add_term(u, t.coeff);
      continue;
    }
    std::size_t i = *pos;
    if (alg->letter_rank(t.word[i]) == alg->letter_rank(t.word[i + 1])) {
      if (merge_at(*alg, t.word, i)) work.push_back(std::move(t));
      continue;
    }
    WordSum repl = alg->swap_adjacent(t.word[i], t.word[i + 1]);
    for (auto& r : repl) {
      Word w(t.word.begin(), t.word.begin() + static_cast<std::ptrdiff_t>(i));
      for (const auto& l : r.word)
        if (l.power != 0) w.push_back(l);
      w.insert(w.end(), t.word.begin() + static_cast<std::ptrdiff_t>(i) + 2, t.word.end());
      work.push_back({t.coeff * r.coeff, std::move(w)});
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// Tensor

namespace {

// Z^N degree of a degree-zero superspace monomial.
ExpArray z_degree_vector(const Monomial& u) { return u.k; }

// Bicharacter alpha(D, E) including the Koszul sign.
Coeff bicharacter(const Algebra& alg, const Monomial& u, const Monomial& v) {
  if (alg.kind() != AlgebraKind::Superspace || u.form_degree() != 0 || v.form_degree() != 0)
    throw DomainError("bicharacter tensor mode is only defined on the superspace algebra");
  const auto& cfg = alg.config();
  ExpArray d = z_degree_vector(u);
  ExpArray e = z_degree_vector(v);
  long zd = 0, ze = 0;
  for (int l = 0; l < cfg.size(); ++l) {
    zd += static_cast<long>(cfg.z(l + 1)) * d[l];
    ze += static_cast<long>(cfg.z(l + 1)) * e[l];
  }
  ExpArray p{};
  for (int l = 0; l < cfg.size(); ++l) p[l] = static_cast<int16_t>(zd * e[l] - ze * d[l]);
  int sign = (alg.parity(u) * alg.parity(v)) % 2 ? -1 : 1;
  return Coeff::monomial(sign, p);
}

}  // namespace

void Tensor::add_term(const Key& k, const Coeff& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Tensor Tensor::pure(const std::vector<Element>& factors, TensorMode mode) {
  if (factors.empty()) throw DomainError("empty tensor product");
  Tensor t(factors.front().algebra(), 1, mode);
  for (const auto& [u, c] : factors.front().terms()) t.add_term({u}, c);
  for (std::size_t i = 1; i < factors.size(); ++i) t = tensor_concat(t, as_tensor(factors[i]));
  return t;
}

Tensor Tensor::unit(AlgebraPtr alg, int arity, TensorMode mode) {
  Tensor t(std::move(alg), arity, mode);
  t.add_term(Key(static_cast<std::size_t>(arity)), Coeff(1));
  return t;
}

Tensor& Tensor::operator+=(const Tensor& o) {
  require_same(alg_, o.alg_);
  if (arity_ != o.arity_) throw DomainError("adding tensors of different arity");
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
  require_same(alg_, o.alg_);
  if (arity_ != o.arity_) throw DomainError("subtracting tensors of different arity");
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

Tensor operator*(const Coeff& c, const Tensor& t) {
  Tensor r(t.alg_, t.arity_, t.mode_);
  if (c.is_zero()) return r;
  for (const auto& [k, v] : t.terms_) r.add_term(k, c * v);
  return r;
}

Tensor operator*(const Tensor& a, const Tensor& b) {
  require_same(a.alg_, b.alg_);
  if (a.arity_ != b.arity_) throw DomainError("multiplying tensors of different arity");
  const Algebra& alg = *a.alg_;
  Tensor r(a.alg_, a.arity_, a.mode_);
  const auto n = static_cast<std::size_t>(a.arity_);
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      Coeff c = ca * cb;
      // Slot i of the left factor moves past slot j < i of the right factor.
      if (a.mode_ == TensorMode::SignOnly) {
        int sign = 0;
        for (std::size_t i = 1; i < n; ++i) {
          int pa = alg.parity(ka[i]);
          if (!pa) continue;
          for (std::size_t j = 0; j < i; ++j) sign += alg.parity(kb[j]);
        }
        if (sign % 2) c = -c;
      } else {
        for (std::size_t i = 1; i < n; ++i)
          for (std::size_t j = 0; j < i; ++j) c *= bicharacter(alg, ka[i], kb[j]);
      }
      // Multiply slotwise and distribute.
      std::vector<std::pair<Tensor::Key, Coeff>> partial{{Tensor::Key{}, c}};
      for (std::size_t i = 0; i < n; ++i) {
        MonoTerms prod = alg.multiply(ka[i], kb[i]);
        std::vector<std::pair<Tensor::Key, Coeff>> next;
        next.reserve(partial.size() * prod.size());
        for (const auto& [key, pc] : partial) {
          for (const auto& [m, mc] : prod) {
            Tensor::Key nk = key;
            nk.push_back(m);
            next.emplace_back(std::move(nk), pc * mc);
          }
        }
        partial = std::move(next);
        if (partial.empty()) break;
      }
      for (const auto& [key, pc] : partial) r.add_term(key, pc);
    }
  }
  return r;
}

bool Tensor::operator==(const Tensor& o) const {
  require_same(alg_, o.alg_);
  return arity_ == o.arity_ && terms_ == o.terms_;
}

Tensor Tensor::pow(int e) const {
  if (e < 0) throw DomainError("negative tensor power");
  Tensor r = unit(alg_, arity_, mode_);
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

Tensor Tensor::with_mode(TensorMode mode) const {
  Tensor r = *this;
  r.mode_ = mode;
  return r;
}

Tensor Tensor::map_coeffs(const std::function<Coeff(const Coeff&)>& f) const {
  Tensor r(alg_, arity_, mode_);
  for (const auto& [k, c] : terms_) r.add_term(k, f(c));
  return r;
}

Tensor tensor_concat(const Tensor& a, const Tensor& b) {
  require_same(a.algebra(), b.algebra());
  Tensor r(a.algebra(), a.arity() + b.arity(), a.mode());
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      Tensor::Key k = ka;
      k.insert(k.end(), kb.begin(), kb.end());
      r.add_term(k, ca * cb);
    }
  }
  return r;
}

Tensor as_tensor(const Element& e) {
  Tensor t(e.algebra(), 1);
  for (const auto& [u, c] : e.terms()) t.add_term({u}, c);
  return t;
}

Tensor map_slot(const Tensor& t, int slot, const std::function<Element(const Monomial&)>& f, int map_parity) {
  const Algebra& alg = *t.algebra();
  Tensor r(t.algebra(), t.arity(), t.mode());
  for (const auto& [k, c] : t.terms()) {
    int left = 0;
    if (map_parity) {
      for (int j = 0; j < slot; ++j) left += alg.parity(k[static_cast<std::size_t>(j)]);
    }
    Coeff sc = (left % 2) ? -c : c;
    Element img = f(k[static_cast<std::size_t>(slot)]);
    for (const auto& [u, cu] : img.terms()) {
      Tensor::Key nk = k;
      nk[static_cast<std::size_t>(slot)] = u;
      r.add_term(nk, sc * cu);
    }
  }
  return r;
}

Tensor expand_slot(const Tensor& t, int slot, const std::function<Tensor(const Monomial&)>& f) {
  std::optional<Tensor> r;
  for (const auto& [k, c] : t.terms()) {
    Tensor img = f(k[static_cast<std::size_t>(slot)]);
    if (!r) r.emplace(t.algebra(), t.arity() - 1 + img.arity(), t.mode());
    for (const auto& [ik, ic] : img.terms()) {
      Tensor::Key nk(k.begin(), k.begin() + slot);
      nk.insert(nk.end(), ik.begin(), ik.end());
      nk.insert(nk.end(), k.begin() + slot + 1, k.end());
      r->add_term(nk, c * ic);
    }
  }
  if (!r) {
    // Zero input: arity follows from the image of the unit monomial.
    return Tensor(t.algebra(), t.arity() - 1 + f(Monomial{}).arity(), t.mode());
  }
  return *r;
}

Tensor multiply_slots(const Tensor& t, int slot) {
  const Algebra& alg = *t.algebra();
  Tensor r(t.algebra(), t.arity() - 1, t.mode());
  for (const auto& [k, c] : t.terms()) {
    auto s = static_cast<std::size_t>(slot);
    for (const auto& [u, cu] : alg.multiply(k[s], k[s + 1])) {
      Tensor::Key nk(k.begin(), k.begin() + slot);
      nk.push_back(u);
      nk.insert(nk.end(), k.begin() + slot + 2, k.end());
      r.add_term(nk, c * cu);
    }
  }
  return r;
}

Element multiply_all(const Tensor& t) {
  Element r(t.algebra());
  for (const auto& [k, c] : t.terms()) {
    Element acc = Element::scalar(t.algebra(), c);
    for (const auto& u : k) acc = acc * Element::monomial(t.algebra(), u);
    r += acc;
  }
  return r;
}

Tensor contract_slot(const Tensor& t, int slot, const std::function<Coeff(const Monomial&)>& f) {
  Tensor r(t.algebra(), t.arity() - 1, t.mode());
  for (const auto& [k, c] : t.terms()) {
    Coeff v = f(k[static_cast<std::size_t>(slot)]);
    if (v.is_zero()) continue;
    Tensor::Key nk = k;
    nk.erase(nk.begin() + slot);
    r.add_term(nk, c * v);
  }
  return r;
}

}  // namespace qsuper
