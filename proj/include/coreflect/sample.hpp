#pragma once

#include <cstddef>
#include <cstdint>

#include "coreflect/projective.hpp"
#include "coreflect/random.hpp"

namespace coreflect {

struct SampleSpec {
  std::size_t count = 50;
  std::size_t maxMultiplicity = 3;
  std::size_t maxGenerators = 3;
  std::uint64_t seed = 1;
};

/// P / T where P sums each e_i Lambda with multiplicity uniform in
/// [0, maxMultiplicity] and T is generated by a uniform number in
/// [0, maxGenerators] of random elements, each at a uniformly chosen vertex.
Rep sampleRep(const AlgebraPtr& algebra, const SampleSpec& spec, Rng& rng);
/// The index-th sample of a seeded run.
Rep sampleRep(const AlgebraPtr& algebra, const SampleSpec& spec, std::size_t index);

/// Random quotient of m by the submodule generated by `generators` random elements.
RepWithMor randomQuotient(const Rep& m, std::size_t generators, Rng& rng);
/// Random submodule of m generated by `generators` random elements.
SubRep randomSubRep(const Rep& m, std::size_t generators, Rng& rng);

}  // namespace coreflect
