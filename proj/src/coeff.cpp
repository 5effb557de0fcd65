#include "qsuper/coeff.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace qsuper {

ParamConfig::ParamConfig(int m, int n, std::vector<int> z) : m_(m), n_(n), z_(std::move(z)) {
  if (m < 1) throw ConfigError("m must be at least 1");
  if (n < 0) throw ConfigError("n must be non-negative");
  if (m + n > kMaxGenerators)
    throw ConfigError("m+n exceeds the supported maximum of " + std::to_string(kMaxGenerators));
  if (static_cast<int>(z_.size()) != m + n)
    throw ConfigError("z must have exactly m+n = " + std::to_string(m + n) + " entries");
  if (z_[0] != 1) throw ConfigError("z_1 must equal 1");
}

std::string ParamConfig::describe() const {
  std::ostringstream os;
  os << "m=" << m_ << " n=" << n_ << " z=(";
  for (std::size_t i = 0; i < z_.size(); ++i) os << (i ? "," : "") << z_[i];
  os << ")";
  return os.str();
}

Assignment Assignment::classical(int size) {
  Assignment a;
  for (int i = 1; i <= size; ++i) {
    a.p[i] = 1;
    a.h[i] = 0;
  }
  return a;
}

Coeff::Coeff(long v) {
  if (v != 0) terms_.emplace_back(CoeffKey{}, mpq_class(v));
}

Coeff::Coeff(const mpq_class& v) {
  if (sgn(v) != 0) terms_.emplace_back(CoeffKey{}, v);
}

Coeff Coeff::p(int i, int e) {
  if (i < 1 || i > kMaxGenerators) throw DomainError("parameter index out of range");
  Coeff c(1);
  if (i > 1) c.terms_[0].first.p[i - 1] = static_cast<int16_t>(e);
  return c;
}

Coeff Coeff::h(int i, int f) {
  if (i < 1 || i > kMaxGenerators) throw DomainError("parameter index out of range");
  if (f < 0) throw DomainError("negative power of h_i is not in the ring");
  if (i == 1) return f == 0 ? Coeff(1) : Coeff();
  Coeff c(1);
  c.terms_[0].first.h[i - 1] = static_cast<int16_t>(f);
  return c;
}

Coeff Coeff::monomial(int sign, const ExpArray& p_exps) {
  Coeff c(sign);
  c.terms_[0].first.p = p_exps;
  c.terms_[0].first.p[0] = 0;
  return c;
}

bool Coeff::is_one() const {
  return terms_.size() == 1 && terms_[0].first == CoeffKey{} && terms_[0].second == 1;
}

bool Coeff::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == CoeffKey{});
}

bool Coeff::is_laurent_monomial() const {
  if (terms_.size() != 1) return false;
  const auto& h = terms_[0].first.h;
  return std::all_of(h.begin(), h.end(), [](int16_t f) { return f == 0; });
}

void Coeff::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
    } else {
      if (!out.empty() && sgn(out.back().second) == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && sgn(out.back().second) == 0) out.pop_back();
  terms_ = std::move(out);
}

Coeff& Coeff::operator+=(const Coeff& o) {
  if (o.terms_.empty()) return *this;
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  normalize();
  return *this;
}

Coeff& Coeff::operator-=(const Coeff& o) {
  if (o.terms_.empty()) return *this;
  for (const auto& t : o.terms_) terms_.emplace_back(t.first, -t.second);
  normalize();
  return *this;
}

Coeff operator*(const Coeff& a, const Coeff& b) {
  Coeff r;
  if (a.terms_.empty() || b.terms_.empty()) return r;
  r.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ka, va] : a.terms_) {
    for (const auto& [kb, vb] : b.terms_) {
      CoeffKey k;
      for (int l = 0; l < kMaxGenerators; ++l) {
        k.p[l] = static_cast<int16_t>(ka.p[l] + kb.p[l]);
        k.h[l] = static_cast<int16_t>(ka.h[l] + kb.h[l]);
      }
      r.terms_.emplace_back(k, va * vb);
    }
  }
  if (a.terms_.size() > 1 || b.terms_.size() > 1) r.normalize();
  return r;
}

Coeff& Coeff::operator*=(const Coeff& o) { return *this = *this * o; }

Coeff Coeff::operator-() const {
  Coeff r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

bool Coeff::operator==(const Coeff& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].first != o.terms_[i].first || terms_[i].second != o.terms_[i].second) return false;
  }
  return true;
}

Coeff Coeff::pow(int e) const {
  if (e < 0) {
    if (!is_laurent_monomial()) throw DomainError("negative power of a non-monomial coefficient");
    Coeff r;
    CoeffKey k;
    for (int l = 0; l < kMaxGenerators; ++l) k.p[l] = static_cast<int16_t>(terms_[0].first.p[l] * e);
    mpq_class v = 1 / terms_[0].second;
    mpq_class acc = 1;
    for (int i = 0; i < -e; ++i) acc *= v;
    r.terms_.emplace_back(k, acc);
    return r;
  }
  Coeff r(1);
  Coeff base = *this;
  while (e > 0) {
    if (e & 1) r *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return r;
}

namespace {

mpq_class power(const mpq_class& base, int e) {
  mpq_class r = 1;
  mpq_class b = e < 0 ? mpq_class(1 / base) : base;
  for (int i = 0; i < (e < 0 ? -e : e); ++i) r *= b;
  return r;
}

}  // namespace

mpq_class Coeff::specialize(const Assignment& a) const {
  mpq_class total = 0;
  for (const auto& [k, v] : terms_) {
    mpq_class term = v;
    for (int l = 1; l < kMaxGenerators; ++l) {
      if (k.p[l] != 0) {
        const auto& val = a.p[l + 1];
        if (!val) throw DomainError("no value assigned to p" + std::to_string(l + 1));
        if (sgn(*val) == 0) throw DomainError("p" + std::to_string(l + 1) + " must be nonzero");
        term *= power(*val, k.p[l]);
      }
      if (k.h[l] != 0) {
        const auto& val = a.h[l + 1];
        if (!val) throw DomainError("no value assigned to h" + std::to_string(l + 1));
        term *= power(*val, k.h[l]);
      }
    }
    total += term;
  }
  return total;
}

mpq_class Coeff::classical_limit() const {
  mpq_class total = 0;
  for (const auto& [k, v] : terms_) {
    bool has_h = std::any_of(k.h.begin(), k.h.end(), [](int16_t f) { return f != 0; });
    if (!has_h) total += v;
  }
  return total;
}

std::string rational_to_string(const mpq_class& q) {
  return q.get_str();
}

namespace {

std::string symbols_to_string(const CoeffKey& k) {
  std::string out;
  auto emit = [&](char sym, int idx, int e) {
    if (e == 0) return;
    if (!out.empty()) out += '*';
    out += sym;
    out += std::to_string(idx);
    if (e != 1) out += "^" + std::to_string(e);
  };
  for (int l = 1; l < kMaxGenerators; ++l) emit('p', l + 1, k.p[l]);
  for (int l = 1; l < kMaxGenerators; ++l) emit('h', l + 1, k.h[l]);
  return out;
}

}  // namespace

std::string Coeff::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, v] = *it;
    mpq_class mag = abs(v);
    std::string syms = symbols_to_string(k);
    std::string body;
    if (syms.empty()) {
      body = rational_to_string(mag);
    } else if (mag == 1) {
      body = syms;
    } else {
      body = rational_to_string(mag) + "*" + syms;
    }
    if (first) {
      out = (sgn(v) < 0 ? "-" : "") + body;
    } else {
      out += (sgn(v) < 0 ? " - " : " + ") + body;
    }
    first = false;
  }
  return out;
}

}  // namespace qsuper
