#pragma once

// Exact coefficient ring: Q-linear combinations of prod p_i^{e_i} prod h_i^{f_i}
// with e_i in Z and f_i in N. p_1 = 1 and h_1 = 0 are normalized away.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace qsuper {

inline constexpr int kMaxGenerators = 8;

using ExpArray = std::array<int16_t, kMaxGenerators>;

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Shape of the superspace: m even generators, n odd generators and the integer
/// weights z_1..z_{m+n} (z_1 = 1). Generator indices are 1-based throughout.
class ParamConfig {
 public:
  ParamConfig() = default;
  ParamConfig(int m, int n, std::vector<int> z);

  int m() const { return m_; }
  int n() const { return n_; }
  int size() const { return m_ + n_; }
  int z(int i) const { return z_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<int>& z_vector() const { return z_; }
  /// 0 for even generators (i <= m), 1 for odd ones.
  int parity(int i) const { return i > m_ ? 1 : 0; }

  std::string describe() const;

  bool operator==(const ParamConfig&) const = default;

 private:
  int m_ = 1;
  int n_ = 0;
  std::vector<int> z_{1};
};

struct CoeffKey {
  ExpArray p{};
  ExpArray h{};
  auto operator<=>(const CoeffKey&) const = default;
};

/// Values for p_i and h_i used by Coeff::specialize. Index 0 is unused.
struct Assignment {
  std::array<std::optional<mpq_class>, kMaxGenerators + 1> p;
  std::array<std::optional<mpq_class>, kMaxGenerators + 1> h;

  static Assignment classical(int size);
};

class Coeff {
 public:
  using Term = std::pair<CoeffKey, mpq_class>;

  Coeff() = default;
  Coeff(long v);  // NOLINT(google-explicit-constructor)
  Coeff(const mpq_class& v);  // NOLINT(google-explicit-constructor)

  /// p_i^e; p_1 is the ring unit.
  static Coeff p(int i, int e = 1);
  /// h_i^f (f >= 0); h_1 is zero.
  static Coeff h(int i, int f = 1);
  /// sign * prod p_l^{exps[l]}.
  static Coeff monomial(int sign, const ExpArray& p_exps);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  /// True when the coefficient is a single rational constant.
  bool is_constant() const;
  /// Single term of the form c * p^e (no h factors).
  bool is_laurent_monomial() const;
  const std::vector<Term>& terms() const { return terms_; }

  Coeff& operator+=(const Coeff& o);
  Coeff& operator-=(const Coeff& o);
  Coeff& operator*=(const Coeff& o);
  friend Coeff operator+(Coeff a, const Coeff& b) { return a += b; }
  friend Coeff operator-(Coeff a, const Coeff& b) { return a -= b; }
  friend Coeff operator*(const Coeff& a, const Coeff& b);
  Coeff operator-() const;
  bool operator==(const Coeff& o) const;

  /// Integer power. Negative exponents are only defined for Laurent monomials.
  Coeff pow(int e) const;

  /// Exact evaluation. Throws DomainError on missing symbols or p_i = 0.
  mpq_class specialize(const Assignment& a) const;
  /// Evaluation at p_i = 1, h_i = 0.
  mpq_class classical_limit() const;

  std::string to_string() const;

 private:
  void normalize();
  std::vector<Term> terms_;  // sorted by key, no zero values
};

std::string rational_to_string(const mpq_class& q);

}  // namespace qsuper
