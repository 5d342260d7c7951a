#include "coreflect/projective.hpp"

#include "coreflect/error.hpp"

namespace coreflect {

Rep projectiveModule(const AlgebraPtr& algebra, std::size_t vertex) {
  if (vertex >= algebra->vertexCount()) throw Error("projectiveModule: no such vertex");
  const auto& basis = algebra->basis();
  const auto& q = algebra->quiver();
  const Field& f = algebra->field();
  const std::size_t nv = algebra->vertexCount();
  std::vector<std::vector<std::size_t>> at(nv);
  std::vector<std::size_t> position(basis.size(), 0);
  std::vector<std::size_t> dims(nv);
  for (std::size_t j = 0; j < nv; ++j) {
    at[j] = basis.between(vertex, j);
    for (std::size_t k = 0; k < at[j].size(); ++k) position[at[j][k]] = k;
    dims[j] = at[j].size();
  }
  std::vector<Mat> arrows;
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const auto& arr = q.arrows[a];
    Mat m(f, dims[arr.target], dims[arr.source]);
    for (std::size_t c = 0; c < at[arr.source].size(); ++c) {
      Path p = basis.elements()[at[arr.source][c]];
      p.arrows.push_back(a);
      p.target = arr.target;
      for (const auto& [idx, coef] : basis.normalForm(p)) m.set(position[idx], c, coef);
    }
    arrows.push_back(std::move(m));
  }
  return Rep(algebra, std::move(dims), std::move(arrows));
}

Rep simpleModule(const AlgebraPtr& algebra, std::size_t vertex) {
  if (vertex >= algebra->vertexCount()) throw Error("simpleModule: no such vertex");
  std::vector<std::size_t> dims(algebra->vertexCount(), 0);
  dims[vertex] = 1;
  std::vector<Mat> arrows;
  for (const auto& arr : algebra->quiver().arrows)
    arrows.emplace_back(algebra->field(), dims[arr.target], dims[arr.source]);
  return Rep(algebra, std::move(dims), std::move(arrows));
}

Mor fromProjective(const Rep& projective, std::size_t vertex, const Rep& m, const Mat& x) {
  if (x.rows() != m.dim(vertex) || x.cols() != 1)
    throw DimensionMismatch("fromProjective: generator image has wrong shape");
  const auto& alg = m.algebra();
  const auto& basis = alg->basis();
  std::vector<Mat> maps;
  for (std::size_t j = 0; j < alg->vertexCount(); ++j) {
    auto paths = basis.between(vertex, j);
    if (paths.size() != projective.dim(j))
      throw DimensionMismatch("fromProjective: domain is not the projective at this vertex");
    Mat g(m.field(), m.dim(j), paths.size());
    for (std::size_t c = 0; c < paths.size(); ++c)
      g.place(0, c, m.pathMatrix(basis.elements()[paths[c]]) * x);
    maps.push_back(std::move(g));
  }
  return Mor(projective, m, std::move(maps));
}

std::size_t loewyLength(const Rep& m) {
  std::size_t n = 0;
  Rep cur = m;
  while (!cur.isZero()) {
    cur = carrier(radicalSub(cur)).object;
    ++n;
  }
  return n;
}

RepWithMor top(const Rep& m) { return quotient(radicalSub(m)); }

DirectSum sumOfProjectives(const AlgebraPtr& algebra, const std::vector<std::size_t>& multiplicities) {
  std::vector<Rep> parts;
  for (std::size_t i = 0; i < multiplicities.size(); ++i) {
    if (multiplicities[i] == 0) continue;
    Rep p = projectiveModule(algebra, i);
    for (std::size_t k = 0; k < multiplicities[i]; ++k) parts.push_back(p);
  }
  return directSum(algebra, parts);
}

ProjectiveCover projectiveCover(const Rep& m) {
  const auto& alg = m.algebra();
  auto rad = radicalSub(m);
  ProjectiveCover out;
  out.multiplicities.assign(alg->vertexCount(), 0);
  std::vector<std::pair<std::size_t, Mat>> generators;
  for (std::size_t i = 0; i < alg->vertexCount(); ++i) {
    Mat lifts = rad.at(i).quotientSection();
    out.multiplicities[i] = lifts.cols();
    for (std::size_t c = 0; c < lifts.cols(); ++c)
      generators.emplace_back(i, lifts.block(0, c, lifts.rows(), 1));
  }
  auto sum = sumOfProjectives(alg, out.multiplicities);
  std::vector<Mor> components;
  for (std::size_t k = 0; k < generators.size(); ++k) {
    const auto& [i, x] = generators[k];
    components.push_back(fromProjective(sum.projections[k].codomain(), i, m, x));
  }
  out.object = sum.object;
  out.cover = fromSum(sum, components, m);
  if (!isEpi(out.cover)) throw InvariantViolation("projectiveCover: map is not onto");
  if (!radicalSub(out.object).contains(kernelSub(out.cover)))
    throw InvariantViolation("projectiveCover: kernel not in the radical");
  return out;
}

bool isProjective(const Rep& m) {
  return projectiveCover(m).object.totalDim() == m.totalDim();
}

}  // namespace coreflect
