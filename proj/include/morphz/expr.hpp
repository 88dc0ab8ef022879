#pragma once

// Group expressions: the textual grammar `Z`, `Z^r`, `Z/n`, terms joined by
// `+`, plus `0` for the trivial group.  Parsing produces the isomorphism
// class; formatting emits the canonical form.

#include "morphz/abelian.hpp"
#include "morphz/errors.hpp"

#include <string>

namespace morphz {

// Throws ParseError on bad syntax, std::domain_error on bad values (Z/0).
FgAbGroup parse_group(const std::string& text);

std::string format_group(const FgAbGroup& g);

}  // namespace morphz
