#pragma once

#include "adc/complex.hpp"

#include <string>

namespace adc {

/// Graphviz text. Up to dimension 2 every degree-0 element is a node
/// (class "point"), every degree-1 element an edge (class "arrow") and every
/// degree-2 element a double edge (class "cell2"). From dimension 3 on the
/// output is labeled "schematic": two panels showing the closures of the
/// source and target 2-rows of the total cell, plus one "cell3" edge per
/// element of degree >= 3.
std::string emit_dot(const Complex& k);

/// TikZ picture with the same content; styles point, arrow, cell2, cell3.
std::string emit_tikz(const Complex& k);

} // namespace adc
