#pragma once

#include <cstddef>
#include <vector>

#include "coreflect/rep.hpp"

namespace coreflect {

/// e_i Lambda: at vertex j, the residue paths from i to j; an arrow acts by
/// extending paths on the right.
Rep projectiveModule(const AlgebraPtr& algebra, std::size_t vertex);
Rep simpleModule(const AlgebraPtr& algebra, std::size_t vertex);

/// The morphism e_i Lambda -> M sending e_i to x (a column in M_i).
Mor fromProjective(const Rep& projective, std::size_t vertex, const Rep& m, const Mat& x);

/// The least n with rad^n(M) = 0.
std::size_t loewyLength(const Rep& m);
/// M / rad M with its projection.
RepWithMor top(const Rep& m);

struct ProjectiveCover {
  Rep object;
  Mor cover;
  /// Multiplicity of e_i Lambda in the cover, per vertex.
  std::vector<std::size_t> multiplicities;
};

/// P = sum of e_i Lambda^(dim top(M)_i) with an epimorphism onto M whose
/// kernel lies in rad P. Both properties are verified.
ProjectiveCover projectiveCover(const Rep& m);

bool isProjective(const Rep& m);

/// e_i Lambda^(m_i) summed over all vertices, in vertex order.
DirectSum sumOfProjectives(const AlgebraPtr& algebra, const std::vector<std::size_t>& multiplicities);

}  // namespace coreflect
