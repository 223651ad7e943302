#pragma once

// Line-oriented ring files:
//
//   # comment
//   coeff Z | coeff Zmod <p>
//   topdeg <D>
//   gen <name> <degree>
//   rel <element>
//   kunneth-safe
//
// `coeff`, `topdeg` and every `gen` must precede the first `rel`.

#include <string>
#include <string_view>

#include "tcbounds/algebra.hpp"

namespace tcb {

/// Throws ParseError (position = 1-based line) on syntax errors and
/// InvalidArgument on composite moduli or bad degrees.
Presentation parse_ring_file(std::string_view text);
Presentation load_ring_file(const std::string& path);
std::string render_ring_file(const Presentation& p);

}  // namespace tcb
