#pragma once

#include <string>
#include <vector>

#include "coreflect/checks.hpp"

namespace coreflect {

struct Replay {
  bool confirmed = false;
  std::string message;
};

/// Replays the violated predicate of a witness from its serialized data.
/// Traces, canonical maps and membership tests are recomputed here from Hom
/// bases, direct sums, kernels and cokernels only, without the trace or
/// checks modules. `u` lists the members of the USet the witness refers to
/// (may be empty for the "all" and "zero" classes).
///
/// Predicates:
///   kernel-not-generated          morphisms {g}, sums {dom, cod}
///   subobject-not-generated       morphisms {mono}, sums {cod}
///   hom-to-kernel-quotient-nonzero objects {A}, member, variant tr|tr2
///   pres-candidate-not-member     objects {A}
///   induced-map-not-bijective     morphisms {g, h}, sums {dom g, dom h, cod h}, member
///   canonical-kernel-not-generated morphisms {h}, sums {dom h, cod h}
///   not-u-epi                     morphisms {q}, sums {dom q}, member
///   cokernel-not-presented        morphisms {hB, hC, f}, sums {dom hB, cod hB, dom hC, cod hC}
///   projective-not-member         objects {P}, member = vertex, variant = class
///   cokernel-of-p-mono-not-member morphisms {m}, variant = class
///   kernel-of-p-epi-not-member    morphisms {m}, variant = class
Replay verifyWitness(const Witness& w, const std::vector<Rep>& u);

}  // namespace coreflect
