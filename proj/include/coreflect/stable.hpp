#pragma once

#include <cstddef>
#include <vector>

#include "coreflect/projective.hpp"

namespace coreflect {

/// Hom(M, N) modulo the morphisms that factor through a projective.
struct StableHom {
  std::size_t totalDim = 0;
  std::size_t factoringDim = 0;
  /// Morphisms whose classes form a basis of the stable Hom space.
  std::vector<Mor> complement;

  std::size_t stableDim() const noexcept { return totalDim - factoringDim; }
};

/// A morphism factors through some projective iff it factors through the
/// projective cover of N, so the factoring subspace is the image of
/// Hom(M, P_N) under composition with the cover.
StableHom stableHom(const Rep& m, const Rep& n);
/// Whether f lies in the factoring subspace.
bool factorsThroughProjective(const Mor& f);

/// Kernel of the projective cover.
Rep syzygy(const Rep& m);
/// Omega^n(M).
Rep syzygy(const Rep& m, std::size_t n);
/// D Omega D, computed over the opposite algebra.
Rep cosyzygy(const Rep& m);

}  // namespace coreflect
