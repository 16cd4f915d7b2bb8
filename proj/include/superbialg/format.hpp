#pragma once

#include "superbialg/graded.hpp"

#include <string>

namespace superbialg {

// Text rendering: scalars as "p/q", sums in canonical basis order, "0" for zero.
std::string to_string(const Element& x);
std::string to_string(const Tensor2& t);
std::string to_string(const Tensor3& t);

/// Parses a linear combination such as "E23+E32", "-(E11+E33)" or "2*h - 1/2*x".
/// Labels are matched longest-first, so labels containing parentheses work.
Element parse_element(const GradedBasis& basis, const std::string& text);

}  // namespace superbialg
