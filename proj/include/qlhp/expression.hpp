#pragma once

// Arithmetic expressions over a truncated ring, e.g. "(1/2*(h-psi))^3".
//
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*      division by nonzero constants only
//   unary  := '-' unary | power
//   power  := atom ('^' integer)?
//   atom   := integer | identifier | '(' expr ')'

#include "qlhp/graded_algebra.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace qlhp {

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Relations like "h^4,psi^2": one degree-1 generator per entry with the
/// given nilpotency order. Optional "name^n@d" sets the degree to d.
RingPtr parse_relations(std::string_view relations);

GradedClass evaluate_expression(std::string_view expression, const RingPtr& ring);

}  // namespace qlhp
