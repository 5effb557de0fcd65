#pragma once

#include <ostream>
#include <string>

#include "qsuper/algebra.hpp"

namespace qsuper {

/// Canonical text form, e.g. "p2^-1 * a1*a2 + d(a1)". Parses back to the same element.
std::string to_string(const Element& e);
/// Pure tensor factors are joined with " (x) ".
std::string to_string(const Tensor& t);
std::string monomial_to_string(const Algebra& alg, const Monomial& u);

std::ostream& operator<<(std::ostream& os, const Element& e);
std::ostream& operator<<(std::ostream& os, const Tensor& t);

}  // namespace qsuper
