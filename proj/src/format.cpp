#include "qsuper/format.hpp"

namespace qsuper {

std::string monomial_to_string(const Algebra& alg, const Monomial& u) {
  std::string out;
  for (const auto& l : alg.to_word(u)) {
    if (!out.empty()) out += '*';
    out += alg.letter_name(l.sym, l.index);
    if (l.power != 1) out += "^" + std::to_string(l.power);
  }
  return out.empty() ? "1" : out;
}

namespace {

std::string coeff_prefix(const Coeff& c, bool has_body) {
  if (!has_body) return c.to_string();
  if (c.is_one()) return "";
  if (c == Coeff(-1)) return "-";
  if (c.terms().size() == 1) return c.to_string() + " * ";
  return "(" + c.to_string() + ") * ";
}

void append_term(std::string& out, const std::string& term) {
  if (out.empty()) {
    out = term;
  } else if (term.front() == '-') {
    out += " - " + term.substr(1);
  } else {
    out += " + " + term;
  }
}

}  // namespace

std::string to_string(const Element& e) {
  if (e.is_zero()) return "0";
  std::string out;
  for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it) {
    const auto& [u, c] = *it;
    bool body = !u.is_scalar();
    std::string term = coeff_prefix(c, body) + (body ? monomial_to_string(*e.algebra(), u) : "");
    append_term(out, term);
  }
  return out;
}

std::string to_string(const Tensor& t) {
  if (t.is_zero()) return "0";
  std::string out;
  for (auto it = t.terms().rbegin(); it != t.terms().rend(); ++it) {
    const auto& [k, c] = *it;
    std::string body;
    for (std::size_t i = 0; i < k.size(); ++i) {
      if (i) body += " (x) ";
      body += monomial_to_string(*t.algebra(), k[i]);
    }
    std::string term = coeff_prefix(c, true) + body;
    append_term(out, term);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Element& e) { return os << to_string(e); }
std::ostream& operator<<(std::ostream& os, const Tensor& t) { return os << to_string(t); }

}  // namespace qsuper
