#pragma once

#include <optional>

#include "mld/polynomial.hpp"

namespace mld {

/// a / b when b divides a exactly, empty otherwise. b must be nonzero.
std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b);

/// Monic greatest common divisor, computed by content/primitive-part
/// recursion over the highest variable with primitive pseudo-remainder
/// sequences. gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Product of the distinct irreducible factors of f, normalized monic.
/// Throws InvalidArgument for f = 0.
Polynomial squarefree_part(const Polynomial& f);

}  // namespace mld
