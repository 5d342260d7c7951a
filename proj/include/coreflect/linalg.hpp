#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "coreflect/matrix.hpp"

namespace coreflect {

struct RrefResult {
  Mat reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form. Pivots are normalized to 1 and chosen leftmost.
RrefResult rref(const Mat& m);
std::size_t rank(const Mat& m);

/// Null space of `m` as columns, together with the free columns of rref(m).
/// Basis vector k has a 1 in row freeColumns[k] and 0 in every other free
/// row, so the coordinates of any null vector are its free-row entries.
struct NullSpace {
  Mat basis;  // cols(m) x nullity
  std::vector<std::size_t> freeColumns;
};
NullSpace nullSpace(const Mat& m);

/// Some X with a * X = b, or nullopt when a column of b leaves the column
/// space of a. Free variables are set to zero.
std::optional<Mat> solveAll(const Mat& a, const Mat& b);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<Mat> inverse(const Mat& m);

/// For an idempotent e (n x n) of rank r, returns (u, v) with u: r x n,
/// v: n x r, u*v = 1_r and v*u = e. v's columns are the pivot columns of e.
/// Throws NotIdempotent when e*e != e.
std::pair<Mat, Mat> splitIdempotent(const Mat& e);

/// A linear subspace of k^n, held as the canonical RREF row basis.
class Subspace {
 public:
  Subspace() = default;
  Subspace(const Field& f, std::size_t ambientDim);

  static Subspace full(const Field& f, std::size_t n);
  static Subspace spannedByRows(const Mat& rows);
  static Subspace spannedByColumns(const Mat& cols);

  const Field& field() const noexcept { return basis_.field(); }
  std::size_t ambientDim() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  bool isZero() const noexcept { return dim() == 0; }
  bool isFull() const noexcept { return dim() == ambientDim(); }

  /// Rows in RREF.
  const Mat& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  std::vector<std::size_t> nonPivots() const;

  /// ambient x dim matrix whose columns are the basis vectors.
  Mat inclusion() const { return basis_.transpose(); }
  /// Coordinates (dim x k) of the columns of `vectors` in the row basis, or
  /// nullopt if some column is not in the subspace.
  std::optional<Mat> coordinates(const Mat& vectors) const;
  bool containsColumns(const Mat& vectors) const;
  bool isSubspaceOf(const Subspace& other) const;

  /// Surjection k^n -> k^(n - dim) with kernel exactly this subspace. The
  /// quotient is identified with the non-pivot coordinates.
  Mat quotientProjection() const;
  /// Section of quotientProjection: places a quotient vector on the
  /// non-pivot coordinates, zero elsewhere.
  Mat quotientSection() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.basis_ == b.basis_;
  }

 private:
  Mat basis_;
  std::vector<std::size_t> pivots_;
};

Subspace subspaceSum(const Subspace& a, const Subspace& b);
Subspace subspaceIntersect(const Subspace& a, const Subspace& b);

/// The kernel of m as a subspace of the domain k^cols(m).
Subspace kernelBasis(const Mat& m);
/// The column space of m as a subspace of k^rows(m).
Subspace imageSpace(const Mat& m);
/// Preimage under m of a subspace of its codomain.
Subspace preimage(const Mat& m, const Subspace& target);

}  // namespace coreflect
