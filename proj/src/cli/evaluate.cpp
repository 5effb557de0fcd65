#include <cstdlib>

#include "qsuper/calculus.hpp"
#include "qsuper/cartan.hpp"
#include "qsuper/cli.hpp"
#include "qsuper/format.hpp"
#include "qsuper/hopf.hpp"
#include "qsuper/logext_algebra.hpp"
#include "qsuper/logext_calculus.hpp"
#include "qsuper/superalgebra.hpp"

namespace qsuper::cli {

const Element& Value::as_element(const char* context) const {
  if (!element) throw DomainError(std::string(context) + " expects an element, not a tensor");
  return *element;
}

namespace {

bool is_scalar(const Element& e) { return e.is_zero() || (e.size() == 1 && e.terms().begin()->first.is_scalar()); }

Coeff scalar_value(const Element& e) { return e.is_zero() ? Coeff() : e.terms().begin()->second; }

bool log_ext(const AlgebraPtr& alg) { return alg->kind() == AlgebraKind::LogExtension; }

std::string where(const Expr& e) { return " at " + std::to_string(e.line) + ":" + std::to_string(e.column); }

Value add(const Value& a, const Value& b) {
  if (a.is_tensor() && b.is_tensor()) {
    if (a.tensor->arity() != b.tensor->arity()) throw DomainError("cannot add tensors of different arity");
    return Value::of(*a.tensor + *b.tensor);
  }
  if (!a.is_tensor() && !b.is_tensor()) return Value::of(*a.element + *b.element);
  throw DomainError("cannot add a tensor and an element");
}

Value multiply(const Value& a, const Value& b) {
  if (!a.is_tensor() && !b.is_tensor()) return Value::of(*a.element * *b.element);
  if (a.is_tensor() && b.is_tensor()) {
    if (a.tensor->arity() != b.tensor->arity()) throw DomainError("cannot multiply tensors of different arity");
    return Value::of(*a.tensor * *b.tensor);
  }
  const Element& e = a.is_tensor() ? *b.element : *a.element;
  const Tensor& t = a.is_tensor() ? *a.tensor : *b.tensor;
  if (!is_scalar(e)) throw DomainError("only scalars multiply tensors");
  return Value::of(scalar_value(e) * t);
}

Element letter_power(const AlgebraPtr& alg, Sym sym, int index, int power) {
  if (power == 0) return Element::scalar(alg, Coeff(1));
  return Element::letter(alg, Letter{sym, index, power < 0 ? -1 : 1}).pow(std::abs(power));
}

Value eval(const Expr& e, const AlgebraPtr& alg);

Element eval_element(const Expr& e, const AlgebraPtr& alg, const char* context) {
  return eval(e, alg).as_element(context);
}

Value eval_call(const Expr& e, const AlgebraPtr& alg) {
  const std::string& f = e.name;
  if (f == "omega") return Value::of(log_ext(alg) ? theta_form(alg, e.index) : mc_form(alg, e.index));
  if (f == "d") return Value::of(exterior_d(eval_element(e.args[0], alg, "d")));
  if (f == "partial") return Value::of(partial_closed(e.index, eval_element(e.args[0], alg, "partial")));
  if (f == "T") {
    Element u = eval_element(e.args[0], alg, "T");
    return Value::of(log_ext(alg) ? m_vector_field_apply(e.index, u) : vector_field_apply(e.index, u));
  }
  Value arg = eval(e.args[0], alg);
  if (f == "S") {
    if (arg.is_tensor()) throw DomainError("S is applied to elements only");
    return Value::of(antipode(*arg.element));
  }
  if (f == "eps") {
    if (arg.is_tensor()) throw DomainError("eps is applied to elements only");
    return Value::of(Element::scalar(alg, counit(*arg.element)));
  }
  if (arg.is_tensor()) throw DomainError("Delta is applied to elements only");
  return Value::of(coproduct(*arg.element));
}

Value eval(const Expr& e, const AlgebraPtr& alg) {
  switch (e.kind) {
    case Expr::Kind::Number:
      return Value::of(Element::scalar(alg, Coeff(e.number)));
    case Expr::Kind::Param: {
      Coeff c = e.name == "p" ? Coeff::p(e.index, e.exponent) : Coeff::h(e.index, e.exponent);
      return Value::of(Element::scalar(alg, c));
    }
    case Expr::Kind::Generator: {
      bool wants_m = e.name == "x";
      if (wants_m != log_ext(alg))
        throw DomainError("generator " + e.name + std::to_string(e.index) + where(e) + " belongs to algebra " +
                          (wants_m ? "M" : "A"));
      return Value::of(letter_power(alg, Sym::Gen, e.index, e.exponent));
    }
    case Expr::Kind::Grouplike:
      if (!log_ext(alg)) throw DomainError("g" + where(e) + " belongs to algebra M");
      return Value::of(letter_power(alg, Sym::Exp, 1, e.exponent));
    case Expr::Kind::Call:
      return eval_call(e, alg);
    case Expr::Kind::Sum: {
      Value acc = eval(e.args[0], alg);
      for (std::size_t i = 1; i < e.args.size(); ++i) acc = add(acc, eval(e.args[i], alg));
      return acc;
    }
    case Expr::Kind::Neg: {
      Value v = eval(e.args[0], alg);
      return v.is_tensor() ? Value::of(Coeff(-1) * *v.tensor) : Value::of(-*v.element);
    }
    case Expr::Kind::Product: {
      Value acc = eval(e.args[0], alg);
      for (std::size_t i = 1; i < e.args.size(); ++i) acc = multiply(acc, eval(e.args[i], alg));
      return acc;
    }
    case Expr::Kind::Tensor: {
      Tensor acc = as_tensor(eval_element(e.args[0], alg, "(x)"));
      for (std::size_t i = 1; i < e.args.size(); ++i) {
        Value v = eval(e.args[i], alg);
        acc = tensor_concat(acc, v.is_tensor() ? *v.tensor : as_tensor(*v.element));
      }
      return Value::of(acc);
    }
    case Expr::Kind::Power: {
      Value base = eval(e.args[0], alg);
      if (base.is_tensor()) {
        if (e.exponent < 0) throw DomainError("negative power of a tensor");
        return Value::of(base.tensor->pow(e.exponent));
      }
      if (e.exponent < 0) {
        if (!is_scalar(*base.element) || base.element->is_zero())
          throw DomainError("negative power" + where(e) + " of a non-invertible element");
        Coeff c = scalar_value(*base.element);
        if (!c.is_laurent_monomial()) throw DomainError("negative power" + where(e) + " of a non-monomial coefficient");
        return Value::of(Element::scalar(alg, c.pow(e.exponent)));
      }
      return Value::of(base.element->pow(e.exponent));
    }
  }
  throw DomainError("malformed expression");
}

nlohmann::json exps(const ExpArray& a, int size) {
  auto out = nlohmann::json::array();
  for (int i = 0; i < size; ++i) out.push_back(a[static_cast<std::size_t>(i)]);
  return out;
}

nlohmann::json monomial_json(const Algebra& alg, const Monomial& u) {
  nlohmann::json m;
  if (alg.kind() == AlgebraKind::LogExtension) m["g"] = u.g;
  m["exps"] = exps(u.k, alg.size());
  return m;
}

nlohmann::json coeff_terms(const Coeff& c, int size) {
  auto out = nlohmann::json::array();
  for (auto it = c.terms().rbegin(); it != c.terms().rend(); ++it) {
    out.push_back({{"rational", it->second.get_str()}, {"p_exps", exps(it->first.p, size)}, {"h_exps", exps(it->first.h, size)}});
  }
  return out;
}

}  // namespace

Value evaluate(const Expr& e, const AlgebraPtr& alg) { return eval(e, alg); }

Value evaluate(const std::string& input, const SessionConfig& cfg, const AlgebraPtr& alg) {
  return eval(parse(input, cfg), alg);
}

std::string to_text(const Value& v) { return v.is_tensor() ? to_string(*v.tensor) : to_string(*v.element); }

nlohmann::json to_json(const Value& v, const SessionConfig& cfg, const std::string& input) {
  nlohmann::json doc;
  doc["config"] = cfg.to_json();
  doc["input"] = input;
  doc["result"] = to_text(v);
  auto terms = nlohmann::json::array();
  const int size = cfg.m + cfg.n;
  if (v.is_tensor()) {
    const Tensor& t = *v.tensor;
    for (auto it = t.terms().rbegin(); it != t.terms().rend(); ++it) {
      auto factors = nlohmann::json::array();
      for (const auto& u : it->first)
        factors.push_back({{"monomial", monomial_json(*t.algebra(), u)}, {"wedge", exps(u.w, size)}});
      for (auto& c : coeff_terms(it->second, size)) terms.push_back({{"coeff", c}, {"factors", factors}});
    }
  } else {
    const Element& e = *v.element;
    for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it) {
      nlohmann::json mono = monomial_json(*e.algebra(), it->first);
      nlohmann::json wedge = exps(it->first.w, size);
      for (auto& c : coeff_terms(it->second, size)) terms.push_back({{"coeff", c}, {"monomial", mono}, {"wedge", wedge}});
    }
  }
  doc["result_terms"] = terms;
  return doc;
}

}  // namespace qsuper::cli
