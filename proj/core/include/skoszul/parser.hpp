#pragma once

#include <string>

#include "skoszul/superpoly.hpp"

namespace skoszul {

/// Parses the rendering grammar used throughout the CLI and fixtures:
///
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := primary ('^' uint)?
///   primary:= rational | variable | '(' expr ')'
///
/// Variables are the registry names (x1, th1, ch1, l1, dch1, dl1, y1, ...);
/// e1..em denote the Grassmann generators of the coefficient ring.
SuperPoly parse_poly(SuperPoly::Registry reg, const RingSpec& ring, const std::string& text);

/// Same grammar restricted to ring elements (rationals and e-generators).
Scalar parse_scalar(const RingSpec& ring, const std::string& text);

} // namespace skoszul
