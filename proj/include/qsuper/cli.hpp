#pragma once

// Expression language, evaluator and command dispatcher behind the qsuper tool.
//
// Grammar (whitespace insensitive):
//   expr    := tensor (('+' | '-') tensor)*
//   tensor  := term ('(x)' term)*
//   term    := unary ('*' unary)*
//   unary   := '-' unary | factor
//   factor  := atom ('^' ['-'] INT)?
//   atom    := INT ['/' INT] | symbol | call | '(' expr ')'
//   symbol  := a<i> | x<i> | g | p<i> | h<i>
//   call    := d(e) | partial(i, e) | T(i, e) | S(e) | Delta(e) | eps(e) | omega(i)

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "qsuper/algebra.hpp"

namespace qsuper::cli {

enum class AlgebraChoice { A, M };
enum class OutputFormat { Text, Json };

struct SessionConfig {
  int m = 1;
  int n = 1;
  std::vector<int> z{1, 2};
  AlgebraChoice algebra = AlgebraChoice::A;
  int order = 4;
  int samples = 100;
  uint64_t seed = 1;
  OutputFormat format = OutputFormat::Text;

  /// Validated parameter shape; throws ConfigError.
  ParamConfig params() const;
  AlgebraPtr make_algebra() const;
  nlohmann::json to_json() const;
};

/// Reads key=value lines (m, n, z, algebra, order, samples, seed, format); '#' starts a comment.
void apply_config_file(SessionConfig& cfg, const std::string& path);
void apply_setting(SessionConfig& cfg, const std::string& key, const std::string& value);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

struct Expr {
  enum class Kind { Number, Param, Generator, Grouplike, Call, Sum, Neg, Product, Tensor, Power };
  Kind kind = Kind::Number;
  mpq_class number;
  std::string name;  // parameter letter, generator letter or call name
  int index = 0;     // generator or parameter index; call index argument
  int exponent = 1;  // Power
  std::vector<Expr> args;
  int line = 1;
  int column = 1;
};

/// Throws ParseError on syntax errors, unknown symbols, indices out of range
/// and negative powers of non-invertible factors.
Expr parse(const std::string& input, const SessionConfig& cfg);

/// Result of evaluating an expression: an element (functions or forms) or a tensor.
struct Value {
  std::optional<Element> element;
  std::optional<Tensor> tensor;

  static Value of(Element e) { return Value{std::move(e), std::nullopt}; }
  static Value of(Tensor t) { return Value{std::nullopt, std::move(t)}; }
  bool is_tensor() const { return tensor.has_value(); }
  const Element& as_element(const char* context) const;
};

/// Throws DomainError when the expression mixes namespaces, tensors and
/// elements, or applies an operator outside its algebra.
Value evaluate(const Expr& e, const AlgebraPtr& alg);
Value evaluate(const std::string& input, const SessionConfig& cfg, const AlgebraPtr& alg);

std::string to_text(const Value& v);
/// {config, input, result, result_terms: [{coeff: {rational, p_exps, h_exps}, monomial, wedge}]};
/// tensor terms carry a "factors" list of {monomial, wedge} instead.
nlohmann::json to_json(const Value& v, const SessionConfig& cfg, const std::string& input);

/// Entry point of the tool. Returns 0 on success, 1 on a verification
/// failure and 2 on usage or configuration errors.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qsuper::cli
