#pragma once

// Core data model shared by the superspace A and its logarithmic extension M.
//
// Every element lives in the algebra of differential forms over its base
// algebra; plain algebra elements are the forms of degree zero. A Monomial is
// the canonical ordered product "grouplike power, generator powers,
// differential powers". Concrete algebras supply the multiplication of two
// canonical monomials and the letter-level structure maps.

#include <compare>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qsuper/coeff.hpp"

namespace qsuper {

struct Monomial {
  int32_t g = 0;  // power of the grouplike exponential (M only)
  ExpArray k{};   // generator exponents, k[0] is generator 1
  ExpArray w{};   // differential exponents
  auto operator<=>(const Monomial&) const = default;

  int form_degree() const;
  bool is_scalar() const { return *this == Monomial{}; }
};

enum class Sym : uint8_t { Exp = 0, Gen = 1, Diff = 2 };

/// A generator raised to an integer power inside an unnormalized word.
struct Letter {
  Sym sym = Sym::Gen;
  int index = 1;
  int power = 1;
  bool operator==(const Letter&) const = default;
};

using Word = std::vector<Letter>;

struct WordTerm {
  Coeff coeff;
  Word word;
};

using WordSum = std::vector<WordTerm>;

/// A defining relation written as a single word sum that must vanish.
struct Relation {
  std::string name;
  WordSum expr;
};

enum class AlgebraKind { Superspace, LogExtension };

class Element;
class Tensor;
class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

using MonoTerms = std::vector<std::pair<Monomial, Coeff>>;

class Algebra : public std::enable_shared_from_this<Algebra> {
 public:
  explicit Algebra(ParamConfig cfg) : cfg_(std::move(cfg)) {}
  virtual ~Algebra() = default;
  Algebra(const Algebra&) = delete;
  Algebra& operator=(const Algebra&) = delete;

  const ParamConfig& config() const { return cfg_; }
  int size() const { return cfg_.size(); }
  AlgebraPtr self() const { return shared_from_this(); }

  virtual AlgebraKind kind() const = 0;
  /// Short namespace tag: "A" or "M".
  virtual std::string tag() const = 0;

  /// Product of two canonical monomials, as canonical terms.
  virtual MonoTerms multiply(const Monomial& u, const Monomial& v) const = 0;
  /// Total Z2 parity (generators plus differentials).
  virtual int parity(const Monomial& u) const = 0;
  virtual int letter_parity(const Letter& l) const = 0;

  /// Throws DomainError for illegal letters (bad index, illegal negative power).
  virtual void validate(const Letter& l) const = 0;
  virtual Monomial letter_monomial(const Letter& l) const = 0;
  virtual Word to_word(const Monomial& u) const = 0;

  /// Position of a letter in the canonical order.
  virtual int letter_rank(const Letter& l) const = 0;
  /// Rewrites the out-of-order pair (left, right), rank(left) > rank(right).
  virtual WordSum swap_adjacent(const Letter& left, const Letter& right) const = 0;

  /// Defining relations of the form algebra, built from the commutation
  /// rules as stated (not from the multiplication table).
  virtual std::vector<Relation> relations() const = 0;

  virtual std::string letter_name(Sym sym, int index) const = 0;

  // Hopf structure on degree-zero letters.
  virtual Tensor coproduct_letter(const Letter& l) const = 0;
  virtual Coeff counit_letter(const Letter& l) const = 0;
  virtual Element antipode_letter(const Letter& l) const = 0;

  /// Closed-form partial derivative of a degree-zero monomial.
  virtual Element partial(int i, const Monomial& u) const = 0;
  /// Operator rewrite rule: d_i * l = sum(coeff * word * d_i) + sum(coeff * word).
  struct PartialRule {
    WordSum passing;      // terms where the derivative keeps acting to the right
    WordSum terminating;  // terms where it has been absorbed
  };
  virtual PartialRule partial_rule(int i, const Letter& l) const = 0;

  /// Random-element helpers use this to respect nilpotency and invertibility.
  virtual bool is_invertible(Sym sym, int index) const = 0;

 private:
  ParamConfig cfg_;
};

void require_same(const AlgebraPtr& a, const AlgebraPtr& b);

class Element {
 public:
  using Terms = std::map<Monomial, Coeff>;

  explicit Element(AlgebraPtr alg) : alg_(std::move(alg)) {}
  static Element monomial(AlgebraPtr alg, const Monomial& u, const Coeff& c = Coeff(1));
  static Element scalar(AlgebraPtr alg, const Coeff& c);
  static Element letter(AlgebraPtr alg, const Letter& l);

  const AlgebraPtr& algebra() const { return alg_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Monomial& u, const Coeff& c);
  void add_terms(const MonoTerms& terms, const Coeff& scale);

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  Element operator-() const;
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator*(const Coeff& c, const Element& a);
  bool operator==(const Element& o) const;

  Element pow(int e) const;

  /// Parity if every term has the same parity; nullopt for mixed (or zero).
  std::optional<int> parity() const;
  /// Maximum form degree over the terms (0 for zero).
  int form_degree() const;
  /// Coefficientwise map.
  Element map_coeffs(const std::function<Coeff(const Coeff&)>& f) const;

 private:
  AlgebraPtr alg_;
  Terms terms_;
};

/// Product of a word, folding letters left to right.
Element normal_form(const AlgebraPtr& alg, const Word& word);
Element normal_form(const AlgebraPtr& alg, const WordSum& words);

enum class RewriteStrategy { LeftmostFirst, RightmostFirst };

/// Independent normal ordering by repeated adjacent-pair rewriting.
Element rewrite_normal_form(const AlgebraPtr& alg, const WordSum& words, RewriteStrategy strategy);

enum class TensorMode { SignOnly, Bicharacter };

/// Finite sum of pure tensors f_1 (x) ... (x) f_r of canonical monomials.
class Tensor {
 public:
  using Key = std::vector<Monomial>;
  using Terms = std::map<Key, Coeff>;

  Tensor(AlgebraPtr alg, int arity, TensorMode mode = TensorMode::SignOnly)
      : alg_(std::move(alg)), arity_(arity), mode_(mode) {}

  static Tensor pure(const std::vector<Element>& factors, TensorMode mode = TensorMode::SignOnly);
  /// The unit 1 (x) ... (x) 1.
  static Tensor unit(AlgebraPtr alg, int arity, TensorMode mode = TensorMode::SignOnly);

  const AlgebraPtr& algebra() const { return alg_; }
  int arity() const { return arity_; }
  TensorMode mode() const { return mode_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Key& k, const Coeff& c);

  Tensor& operator+=(const Tensor& o);
  Tensor& operator-=(const Tensor& o);
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(const Coeff& c, const Tensor& t);
  /// Graded product; the mode of the left operand decides the sign rule.
  friend Tensor operator*(const Tensor& a, const Tensor& b);
  bool operator==(const Tensor& o) const;

  Tensor pow(int e) const;
  Tensor with_mode(TensorMode mode) const;

  /// Coefficientwise map.
  Tensor map_coeffs(const std::function<Coeff(const Coeff&)>& f) const;

 private:
  AlgebraPtr alg_;
  int arity_;
  TensorMode mode_;
  Terms terms_;
};

/// (f_1 (x) ... ) (x) (g_1 (x) ...): concatenation of tensor factors.
Tensor tensor_concat(const Tensor& a, const Tensor& b);
Tensor as_tensor(const Element& e);

/// Applies a linear map of the given parity to one slot, with the Koszul sign
/// (-1)^{parity(map) * (parities of the slots to its left)}.
Tensor map_slot(const Tensor& t, int slot, const std::function<Element(const Monomial&)>& f, int map_parity);
/// Replaces one slot by the image of an even map into r-fold tensors.
Tensor expand_slot(const Tensor& t, int slot, const std::function<Tensor(const Monomial&)>& f);
/// Multiplies slots slot and slot+1 together.
Tensor multiply_slots(const Tensor& t, int slot);
/// Full multiplication of all slots.
Element multiply_all(const Tensor& t);
/// Applies a scalar-valued map to one slot and drops it.
Tensor contract_slot(const Tensor& t, int slot, const std::function<Coeff(const Monomial&)>& f);

}  // namespace qsuper
