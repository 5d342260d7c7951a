#pragma once

#include <string>
#include <vector>

#include "coreflect/algebra.hpp"

namespace coreflect {

/// Two vertices 1, 2 with beta: 1 -> 2 and alpha: 2 -> 1, and the single
/// relation "beta*alpha" (the cycle at 1 vanishes). Dimension 5; e_2 Lambda
/// is the 3-dimensional projective of Loewy length 3.
AlgebraSpec glpSpec(const Field& f);
/// 1 -> 2 with arrow a; hereditary, dimension 3.
AlgebraSpec a2Spec(const Field& f);
/// Two vertices, no arrows: k x k.
AlgebraSpec semisimpleSpec(const Field& f);

/// Names accepted by builtinSpec: "glp", "a2", "semisimple".
std::vector<std::string> builtinNames();
/// Throws Error for an unknown name.
AlgebraSpec builtinSpec(const std::string& name, const Field& f);

}  // namespace coreflect
