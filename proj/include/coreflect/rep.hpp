#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "coreflect/algebra.hpp"
#include "coreflect/linalg.hpp"
#include "coreflect/matrix.hpp"

namespace coreflect {

class Rng;

/// A finite-dimensional representation: a vector space per vertex and, for
/// each arrow a: i -> j, a dims[j] x dims[i] matrix. Cheap to copy.
class Rep {
 public:
  Rep() = default;
  /// Checks shapes only; relation validity is reported by validate().
  Rep(AlgebraPtr algebra, std::vector<std::size_t> dims, std::vector<Mat> arrows);

  static Rep zero(AlgebraPtr algebra);

  const AlgebraPtr& algebra() const noexcept { return d_->algebra; }
  const Field& field() const noexcept { return d_->algebra->field(); }
  std::size_t vertexCount() const noexcept { return d_->dims.size(); }
  std::size_t dim(std::size_t vertex) const { return d_->dims.at(vertex); }
  const std::vector<std::size_t>& dims() const noexcept { return d_->dims; }
  std::size_t totalDim() const noexcept;
  const Mat& arrow(std::size_t a) const { return d_->arrows.at(a); }
  const std::vector<Mat>& arrows() const noexcept { return d_->arrows; }
  bool isZero() const noexcept { return totalDim() == 0; }

  /// M(p) for a path p = a1...ak, i.e. M(ak)...M(a1).
  Mat pathMatrix(const Path& p) const;

  /// Identical data (same algebra, dims, matrices).
  friend bool operator==(const Rep& a, const Rep& b);

 private:
  struct Data {
    AlgebraPtr algebra;
    std::vector<std::size_t> dims;
    std::vector<Mat> arrows;
  };
  std::shared_ptr<const Data> d_;
};

/// "(d1,d2,...)".
std::string dimVector(const Rep& m);

/// Relations whose evaluation on m is nonzero, as text. Empty means valid.
std::vector<std::string> validate(const Rep& m);

/// A morphism of representations given by one matrix per vertex.
class Mor {
 public:
  Mor() = default;
  /// Throws DimensionMismatch on shape errors and InvariantViolation when a
  /// naturality square fails.
  Mor(Rep domain, Rep codomain, std::vector<Mat> maps);

  static Mor zero(const Rep& domain, const Rep& codomain);
  static Mor identity(const Rep& m);

  const Rep& domain() const noexcept { return dom_; }
  const Rep& codomain() const noexcept { return cod_; }
  const Mat& at(std::size_t vertex) const { return maps_.at(vertex); }
  const std::vector<Mat>& maps() const noexcept { return maps_; }
  const Field& field() const noexcept { return dom_.field(); }
  bool isZero() const;

  /// g * f is "g after f".
  friend Mor operator*(const Mor& g, const Mor& f);
  friend Mor operator+(const Mor& f, const Mor& g);
  friend Mor operator-(const Mor& f, const Mor& g);
  Mor operator-() const;
  Mor scaled(const Scalar& s) const;

  friend bool operator==(const Mor& a, const Mor& b);

 private:
  struct Unchecked {};
  Mor(Unchecked, Rep domain, Rep codomain, std::vector<Mat> maps);
  friend Mor uncheckedMor(Rep, Rep, std::vector<Mat>);

  Rep dom_;
  Rep cod_;
  std::vector<Mat> maps_;
};

/// Skips the naturality check; only for morphisms natural by construction.
Mor uncheckedMor(Rep domain, Rep codomain, std::vector<Mat> maps);

/// An arrow-stable family of subspaces of a parent representation.
class SubRep {
 public:
  SubRep() = default;
  /// Throws InvariantViolation unless the family is arrow-stable.
  SubRep(Rep parent, std::vector<Subspace> spaces);

  static SubRep zero(const Rep& parent);
  static SubRep full(const Rep& parent);

  const Rep& parent() const noexcept { return parent_; }
  const Subspace& at(std::size_t vertex) const { return spaces_.at(vertex); }
  const std::vector<Subspace>& spaces() const noexcept { return spaces_; }
  std::size_t totalDim() const noexcept;
  bool isZero() const noexcept { return totalDim() == 0; }
  bool isFull() const noexcept { return totalDim() == parent_.totalDim(); }
  bool contains(const SubRep& other) const;

  friend bool operator==(const SubRep& a, const SubRep& b) { return a.spaces_ == b.spaces_; }

 private:
  Rep parent_;
  std::vector<Subspace> spaces_;
};

SubRep subSum(const SubRep& a, const SubRep& b);
SubRep subIntersect(const SubRep& a, const SubRep& b);

/// An object with a morphism to or from a fixed representation.
struct RepWithMor {
  Rep object;
  Mor map;
};

/// The representation carried by s, with the inclusion into the parent.
RepWithMor carrier(const SubRep& s);
/// parent / s with the canonical projection (non-pivot coordinates).
RepWithMor quotient(const SubRep& s);

/// The smallest subrepresentation containing the given elements. Each
/// element is (vertex, column vector in M_vertex).
SubRep generatedSubRep(const Rep& m, const std::vector<std::pair<std::size_t, Mat>>& elements);

SubRep kernelSub(const Mor& f);
SubRep imageSub(const Mor& f);
/// f(s) as a subobject of the codomain.
SubRep imageOfSub(const Mor& f, const SubRep& s);
/// f^{-1}(t) as a subobject of the domain.
SubRep preimageSub(const Mor& f, const SubRep& t);
/// The radical: the sum of the images of all arrow maps.
SubRep radicalSub(const Rep& m);

/// A basis of Hom(M, N), obtained from one kernel of the naturality system.
class HomSpace {
 public:
  HomSpace() = default;

  const Rep& domain() const noexcept { return dom_; }
  const Rep& codomain() const noexcept { return cod_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<Mor>& basis() const noexcept { return basis_; }
  const Mor& operator[](std::size_t k) const { return basis_.at(k); }

  /// Length of the vectorization of a morphism (sum of d_N(i) d_M(i)).
  std::size_t ambientDim() const noexcept { return offsets_.empty() ? 0 : offsets_.back(); }
  /// Stacked row-major entries of f as a column vector.
  Mat vectorize(const Mor& f) const;
  /// The columns are the vectorized basis morphisms.
  const Mat& basisMatrix() const noexcept { return matrix_; }
  /// Coordinates of a morphism M -> N over the basis.
  Mat coordinates(const Mor& f) const;
  /// sum_k c[k] * basis[k] for a column c.
  Mor combination(const Mat& c) const;

 private:
  friend HomSpace homSpace(const Rep& m, const Rep& n);

  Rep dom_;
  Rep cod_;
  std::vector<Mor> basis_;
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> freeRows_;
  Mat matrix_;
};

/// Throws AlgebraMismatch when M and N live over different algebras.
HomSpace homSpace(const Rep& m, const Rep& n);
std::vector<Mor> homBasis(const Rep& m, const Rep& n);

/// Matrix of Hom(X, f): Hom(X, dom f) -> Hom(X, cod f) in the given bases.
Mat postComposeMatrix(const HomSpace& from, const HomSpace& to, const Mor& f);
/// Matrix of Hom(f, Y): Hom(cod f, Y) -> Hom(dom f, Y) in the given bases.
Mat preComposeMatrix(const HomSpace& from, const HomSpace& to, const Mor& f);

/// Some s with f * s = t, or nullopt.
std::optional<Mor> factorThrough(const Mor& t, const Mor& f);
/// Some s with s * f = t, or nullopt.
std::optional<Mor> factorThroughSource(const Mor& t, const Mor& f);

RepWithMor kernel(const Mor& f);
RepWithMor cokernel(const Mor& f);

struct Image {
  Rep object;
  Mor epi;   // dom f -> I
  Mor mono;  // I -> cod f
};
Image image(const Mor& f);

struct DirectSum {
  Rep object;
  std::vector<Mor> injections;
  std::vector<Mor> projections;
};
/// Throws AlgebraMismatch; the empty sum needs the algebra.
DirectSum directSum(const AlgebraPtr& algebra, const std::vector<Rep>& summands);

/// The morphism sum_k f_k * p_k out of a direct sum: [f_1 ... f_n].
Mor fromSum(const DirectSum& s, const std::vector<Mor>& components, const Rep& codomain);
/// The morphism into a direct sum with components f_k: (f_1; ...; f_n).
Mor toSum(const DirectSum& s, const std::vector<Mor>& components, const Rep& domain);

struct Pullback {
  Rep object;
  Mor p1;  // to dom f
  Mor p2;  // to dom g
};
/// The pullback of f: A -> C and g: B -> C.
Pullback pullback(const Mor& f, const Mor& g);

struct Pushout {
  Rep object;
  Mor i1;  // from cod f
  Mor i2;  // from cod g
};
/// The pushout of f: C -> A and g: C -> B.
Pushout pushout(const Mor& f, const Mor& g);

/// Vector-space dual over the opposite algebra, arrows transposed.
Rep dualize(const Rep& m, const AlgebraPtr& opposite);
/// D f: D(cod f) -> D(dom f).
Mor dualize(const Mor& f, const Rep& dualDomain, const Rep& dualCodomain);

bool isIsomorphism(const Mor& f);
bool isEpi(const Mor& f);
bool isMono(const Mor& f);
/// Vertex-wise inverse of an isomorphism. Throws InvariantViolation otherwise.
Mor inverseMor(const Mor& f);

struct IsoSearch {
  enum class Status { Found, NotIsomorphic, Inconclusive };
  Status status = Status::Inconclusive;
  std::optional<Mor> iso;
};

/// Searches Hom(M, N) for an isomorphism. Negative answers are conclusive when
/// a Hom-dimension invariant differs or, over F_p, the Hom space is small
/// enough to enumerate; otherwise random combinations are tried within a
/// budget and the result may be Inconclusive.
IsoSearch findIso(const Rep& m, const Rep& n, std::uint64_t seed = 1);

/// A random linear combination of a Hom basis.
Mor sampleMor(const Rep& m, const Rep& n, Rng& rng);
Mor sampleMor(const HomSpace& hom, Rng& rng);

}  // namespace coreflect
