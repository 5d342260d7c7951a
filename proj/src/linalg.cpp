#include "coreflect/linalg.hpp"

#include <algorithm>

namespace coreflect {

using detail::storage;
using detail::withOps;

namespace {

// In-place Gauss-Jordan on a rows x cols buffer, pivoting only in columns
// [0, colLimit). Returns pivot columns.
template <class Ops, class T>
std::vector<std::size_t> gaussJordan(const Ops& ops, std::vector<T>& a, std::size_t rows,
                                     std::size_t cols, std::size_t colLimit) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < colLimit && r < rows; ++c) {
    std::size_t sel = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (!ops.isZero(a[i * cols + c])) {
        sel = i;
        break;
      }
    if (sel == rows) continue;
    if (sel != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[sel * cols + j], a[r * cols + j]);
    const T invPivot = ops.inv(a[r * cols + c]);
    for (std::size_t j = c; j < cols; ++j)
      if (!ops.isZero(a[r * cols + j])) a[r * cols + j] = ops.mul(a[r * cols + j], invPivot);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || ops.isZero(a[i * cols + c])) continue;
      const T factor = a[i * cols + c];
      for (std::size_t j = c; j < cols; ++j)
        if (!ops.isZero(a[r * cols + j])) ops.subMul(a[i * cols + j], factor, a[r * cols + j]);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

struct Reduced {
  Mat mat;
  std::vector<std::size_t> pivots;
};

Reduced reduce(const Mat& m, std::size_t colLimit) {
  Reduced out{m, {}};
  withOps(m.field(), [&](const auto& ops) {
    out.pivots = gaussJordan(ops, storage(out.mat, ops), m.rows(), m.cols(), colLimit);
  });
  return out;
}

}  // namespace

RrefResult rref(const Mat& m) {
  auto red = reduce(m, m.cols());
  RrefResult out;
  out.rank = red.pivots.size();
  out.pivots = std::move(red.pivots);
  out.reduced = std::move(red.mat);
  return out;
}

std::size_t rank(const Mat& m) {
  // Eliminate on the shorter side.
  if (m.rows() > m.cols()) return reduce(m.transpose(), m.rows()).pivots.size();
  return reduce(m, m.cols()).pivots.size();
}

NullSpace nullSpace(const Mat& m) {
  auto red = reduce(m, m.cols());
  const std::size_t n = m.cols();
  std::vector<bool> isPivot(n, false);
  for (auto p : red.pivots) isPivot[p] = true;
  NullSpace out;
  for (std::size_t c = 0; c < n; ++c)
    if (!isPivot[c]) out.freeColumns.push_back(c);
  out.basis = Mat(m.field(), n, out.freeColumns.size());
  withOps(m.field(), [&](const auto& ops) {
    const auto& r = storage(red.mat, ops);
    auto& b = storage(out.basis, ops);
    const std::size_t k = out.freeColumns.size();
    for (std::size_t j = 0; j < k; ++j) {
      const std::size_t f = out.freeColumns[j];
      b[f * k + j] = ops.one();
      for (std::size_t i = 0; i < red.pivots.size(); ++i)
        b[red.pivots[i] * k + j] = ops.neg(r[i * n + f]);
    }
  });
  return out;
}

std::optional<Mat> solveAll(const Mat& a, const Mat& b) {
  requireSameField(a, b);
  if (a.rows() != b.rows())
    throw DimensionMismatch("solveAll: " + std::to_string(a.rows()) + " vs " +
                            std::to_string(b.rows()) + " rows");
  const std::size_t n = a.cols();
  const std::size_t k = b.cols();
  auto red = reduce(Mat::hstack(a, b), n);
  const std::size_t r = red.pivots.size();
  bool consistent = true;
  Mat x(a.field(), n, k);
  withOps(a.field(), [&](const auto& ops) {
    const auto& m = storage(red.mat, ops);
    const std::size_t w = n + k;
    for (std::size_t i = r; i < a.rows() && consistent; ++i)
      for (std::size_t j = 0; j < k; ++j)
        if (!ops.isZero(m[i * w + n + j])) {
          consistent = false;
          break;
        }
    auto& xs = storage(x, ops);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < k; ++j) xs[red.pivots[i] * k + j] = m[i * w + n + j];
  });
  if (!consistent) return std::nullopt;
  return x;
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  auto x = solveAll(m, Mat::identity(m.field(), m.rows()));
  if (!x) return std::nullopt;
  return x;
}

std::pair<Mat, Mat> splitIdempotent(const Mat& e) {
  if (e.rows() != e.cols()) throw NotIdempotent("splitIdempotent: matrix is not square");
  if (e * e != e) throw NotIdempotent("splitIdempotent: e*e != e");
  auto red = rref(e);
  Mat v = e.selectColumns(red.pivots);
  auto u = solveAll(v, e);
  if (!u) throw InvariantViolation("splitIdempotent: column space of e not spanned by its pivots");
  return {std::move(*u), std::move(v)};
}

Subspace::Subspace(const Field& f, std::size_t ambientDim) : basis_(f, 0, ambientDim) {}

Subspace Subspace::full(const Field& f, std::size_t n) {
  return spannedByRows(Mat::identity(f, n));
}

Subspace Subspace::spannedByRows(const Mat& rows) {
  auto red = reduce(rows, rows.cols());
  Subspace s;
  std::vector<std::size_t> keep(red.pivots.size());
  for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = i;
  s.basis_ = red.mat.selectRows(keep);
  s.pivots_ = std::move(red.pivots);
  return s;
}

Subspace Subspace::spannedByColumns(const Mat& cols) {
  return spannedByRows(cols.transpose());
}

std::vector<std::size_t> Subspace::nonPivots() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t c = 0; c < ambientDim(); ++c) {
    if (k < pivots_.size() && pivots_[k] == c) {
      ++k;
      continue;
    }
    out.push_back(c);
  }
  return out;
}

std::optional<Mat> Subspace::coordinates(const Mat& vectors) const {
  if (vectors.rows() != ambientDim())
    throw DimensionMismatch("Subspace::coordinates: ambient dimension mismatch");
  // Row basis is RREF, so coordinates are the pivot entries.
  Mat coords = vectors.selectRows(pivots_);
  if (inclusion() * coords != vectors) return std::nullopt;
  return coords;
}

bool Subspace::containsColumns(const Mat& vectors) const {
  return coordinates(vectors).has_value();
}

bool Subspace::isSubspaceOf(const Subspace& other) const {
  if (ambientDim() != other.ambientDim())
    throw DimensionMismatch("isSubspaceOf: ambient dimension mismatch");
  return other.containsColumns(inclusion());
}

Mat Subspace::quotientProjection() const {
  const auto free = nonPivots();
  const std::size_t n = ambientDim();
  Mat pi(field(), free.size(), n);
  withOps(field(), [&](const auto& ops) {
    const auto& b = storage(basis_, ops);
    auto& p = storage(pi, ops);
    for (std::size_t j = 0; j < free.size(); ++j) p[j * n + free[j]] = ops.one();
    for (std::size_t r = 0; r < pivots_.size(); ++r)
      for (std::size_t j = 0; j < free.size(); ++j)
        p[j * n + pivots_[r]] = ops.neg(b[r * n + free[j]]);
  });
  return pi;
}

Mat Subspace::quotientSection() const {
  const auto free = nonPivots();
  Mat s(field(), ambientDim(), free.size());
  for (std::size_t j = 0; j < free.size(); ++j) s.set(free[j], j, Scalar::one(field()));
  return s;
}

Subspace subspaceSum(const Subspace& a, const Subspace& b) {
  if (a.ambientDim() != b.ambientDim())
    throw DimensionMismatch("subspaceSum: ambient dimension mismatch");
  return Subspace::spannedByRows(Mat::vstack(a.basis(), b.basis()));
}

Subspace subspaceIntersect(const Subspace& a, const Subspace& b) {
  if (a.ambientDim() != b.ambientDim())
    throw DimensionMismatch("subspaceIntersect: ambient dimension mismatch");
  if (a.isZero() || b.isZero()) return Subspace(a.field(), a.ambientDim());
  // x*A = y*B  <=>  [A^T | -B^T] (x; y) = 0
  auto ns = nullSpace(Mat::hstack(a.inclusion(), -b.inclusion()));
  Mat x = ns.basis.block(0, 0, a.dim(), ns.basis.cols());
  return Subspace::spannedByColumns(a.inclusion() * x);
}

Subspace kernelBasis(const Mat& m) {
  return Subspace::spannedByColumns(nullSpace(m).basis);
}

Subspace imageSpace(const Mat& m) { return Subspace::spannedByColumns(m); }

Subspace preimage(const Mat& m, const Subspace& target) {
  if (m.rows() != target.ambientDim()) throw DimensionMismatch("preimage: codomain mismatch");
  return kernelBasis(target.quotientProjection() * m);
}

}  // namespace coreflect
