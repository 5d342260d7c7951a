#include "coreflect/sample.hpp"

namespace coreflect {

SubRep randomSubRep(const Rep& m, std::size_t generators, Rng& rng) {
  std::vector<std::size_t> nonzero;
  for (std::size_t v = 0; v < m.vertexCount(); ++v)
    if (m.dim(v) > 0) nonzero.push_back(v);
  std::vector<std::pair<std::size_t, Mat>> elements;
  if (!nonzero.empty())
    for (std::size_t g = 0; g < generators; ++g) {
      const auto v = nonzero[static_cast<std::size_t>(
          rng.uniform(0, static_cast<std::int64_t>(nonzero.size()) - 1))];
      elements.emplace_back(v, rng.matrix(m.field(), m.dim(v), 1));
    }
  return generatedSubRep(m, elements);
}

RepWithMor randomQuotient(const Rep& m, std::size_t generators, Rng& rng) {
  return quotient(randomSubRep(m, generators, rng));
}

Rep sampleRep(const AlgebraPtr& algebra, const SampleSpec& spec, Rng& rng) {
  std::vector<std::size_t> mult(algebra->vertexCount());
  for (auto& m : mult) m = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(spec.maxMultiplicity)));
  Rep p = sumOfProjectives(algebra, mult).object;
  const auto gens = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(spec.maxGenerators)));
  return randomQuotient(p, gens, rng).object;
}

Rep sampleRep(const AlgebraPtr& algebra, const SampleSpec& spec, std::size_t index) {
  Rng rng = Rng::derive(spec.seed, index);
  return sampleRep(algebra, spec, rng);
}

}  // namespace coreflect
