#pragma once

#include <cstdint>

#include "coreflect/field.hpp"
#include "coreflect/matrix.hpp"

namespace coreflect {

/// Seeded generator with a platform-independent output sequence
/// (splitmix64). Distributions are implemented here, not taken from <random>,
/// so that samples and reports are byte-reproducible across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  /// Independent stream for the index-th work item of a seeded run.
  static Rng derive(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next();
  /// Uniform in [lo, hi] (inclusive).
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  /// Uniform residue over F_p; over Q a uniform integer in [-rationalRange, rationalRange].
  Scalar scalar(const Field& f);
  /// Like scalar() but never zero.
  Scalar nonzeroScalar(const Field& f);
  Mat matrix(const Field& f, std::size_t rows, std::size_t cols);

  static constexpr std::int64_t rationalRange = 3;

 private:
  std::uint64_t state_;
};

}  // namespace coreflect
