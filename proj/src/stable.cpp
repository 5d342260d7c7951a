#include "coreflect/stable.hpp"

#include "coreflect/linalg.hpp"

namespace coreflect {

namespace {

Mat factoringColumns(const Rep& m, const Rep& n, const HomSpace& hom) {
  auto cover = projectiveCover(n);
  return postComposeMatrix(homSpace(m, cover.object), hom, cover.cover);
}

}  // namespace

StableHom stableHom(const Rep& m, const Rep& n) {
  auto hom = homSpace(m, n);
  Mat fac = factoringColumns(m, n, hom);
  StableHom out;
  out.totalDim = hom.dim();
  out.factoringDim = rank(fac);
  // Pivots of [F | I] beyond F pick a complement from the Hom basis.
  auto red = rref(Mat::hstack(fac, Mat::identity(m.field(), hom.dim())));
  for (auto p : red.pivots)
    if (p >= fac.cols()) out.complement.push_back(hom[p - fac.cols()]);
  return out;
}

bool factorsThroughProjective(const Mor& f) {
  auto hom = homSpace(f.domain(), f.codomain());
  return solveAll(factoringColumns(f.domain(), f.codomain(), hom), hom.coordinates(f)).has_value();
}

Rep syzygy(const Rep& m) { return kernel(projectiveCover(m).cover).object; }

Rep syzygy(const Rep& m, std::size_t n) {
  Rep cur = m;
  for (std::size_t k = 0; k < n; ++k) cur = syzygy(cur);
  return cur;
}

Rep cosyzygy(const Rep& m) {
  auto op = oppositeAlgebra(m.algebra());
  auto omega = syzygy(dualize(m, op));
  return dualize(omega, m.algebra());
}

}  // namespace coreflect
