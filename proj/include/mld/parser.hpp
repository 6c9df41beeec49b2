#pragma once

#include <string_view>

#include "mld/polynomial.hpp"

namespace mld {

/// Parses text such as `z*(x*z - y^2)` over `ring`.
///
/// Grammar: integer or rational literals (`3`, `-2/7`), the ring's variable
/// names, `+ - * ^` and parentheses. Products need an explicit `*`; exponents
/// are non-negative integers. Throws ParseError carrying the byte offset.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

}  // namespace mld
