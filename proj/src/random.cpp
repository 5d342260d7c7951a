#include "coreflect/random.hpp"

namespace coreflect {

Rng Rng::derive(std::uint64_t seed, std::uint64_t index) {
  Rng r(seed ^ (0xD1B54A32D192ED03ULL * (index + 1)));
  r.next();
  return Rng(r.next());
}

std::uint64_t Rng::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi <= lo) return lo;
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  // Rejection sampling removes modulo bias.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

Scalar Rng::scalar(const Field& f) {
  if (f.isRationals()) return Scalar::fromInt(f, uniform(-rationalRange, rationalRange));
  return Scalar::fromResidue(f, static_cast<std::uint32_t>(uniform(0, f.characteristic() - 1)));
}

Scalar Rng::nonzeroScalar(const Field& f) {
  for (;;) {
    Scalar s = scalar(f);
    if (!s.isZero()) return s;
  }
}

Mat Rng::matrix(const Field& f, std::size_t rows, std::size_t cols) {
  Mat m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, scalar(f));
  return m;
}

}  // namespace coreflect
