#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coreflect/field.hpp"

namespace coreflect {

struct Arrow {
  std::string name;
  std::size_t source = 0;
  std::size_t target = 0;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

struct Quiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  std::optional<std::size_t> vertexIndex(const std::string& name) const;
  std::optional<std::size_t> arrowIndex(const std::string& name) const;
  /// Throws Error on duplicate names or dangling endpoints.
  void validate() const;

  friend bool operator==(const Quiver&, const Quiver&) = default;
};

/// A path written left to right: arrows[0] is traversed first. A path of
/// length zero is the trivial path e_source.
struct Path {
  std::size_t source = 0;
  std::size_t target = 0;
  std::vector<std::size_t> arrows;

  std::size_t length() const noexcept { return arrows.size(); }
  static Path trivial(std::size_t vertex) { return {vertex, vertex, {}}; }

  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path&, const Path&) = default;
};

/// "Path a, then path b", or nullopt when they are not composable.
std::optional<Path> concatenate(const Path& a, const Path& b, const Quiver& q);
std::string pathName(const Path& p, const Quiver& q);

struct RelationTerm {
  Scalar coefficient;
  std::vector<std::size_t> arrows;

  friend bool operator==(const RelationTerm&, const RelationTerm&) = default;
};

/// A linear combination of parallel paths of length >= 2.
struct Relation {
  std::vector<RelationTerm> terms;
  std::size_t source = 0;
  std::size_t target = 0;

  /// Validates composability and parallelism; drops zero terms and merges
  /// repeated paths.
  static Relation make(const Quiver& q, std::vector<RelationTerm> terms);

  friend bool operator==(const Relation&, const Relation&) = default;
};

std::string relationText(const Relation& r, const Quiver& q);

struct AlgebraSpec {
  Quiver quiver;
  std::vector<Relation> relations;
  Field field;
  std::size_t nilBound = 2;

  /// Arrows reversed, relation paths reversed.
  AlgebraSpec opposite() const;

  friend bool operator==(const AlgebraSpec&, const AlgebraSpec&) = default;
};

/// Residue classes of paths forming a basis of kQ/I, with normal forms for
/// every path of length <= nilBound.
class PathBasis {
 public:
  using Sparse = std::vector<std::pair<std::size_t, Scalar>>;

  const std::vector<Path>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  std::optional<std::size_t> indexOf(const Path& p) const;

  /// Coordinates of the residue of p over the basis. Paths longer than the
  /// nil bound reduce to zero.
  Sparse normalForm(const Path& p) const;
  /// Structure constants: basis[i] * basis[j].
  Sparse multiply(std::size_t i, std::size_t j) const;
  /// Basis indices of residue paths from `source` to `target`, in basis order.
  std::vector<std::size_t> between(std::size_t source, std::size_t target) const;

 private:
  friend PathBasis pathBasis(const AlgebraSpec& spec);

  Quiver quiver_;
  Field field_;
  std::size_t nilBound_ = 0;
  std::vector<Path> elements_;
  std::map<Path, std::size_t> basisIndex_;
  std::map<Path, std::size_t> pathIndex_;
  std::vector<Sparse> normalForms_;
};

/// Enumerates paths by length up to the nil bound and eliminates the span of
/// all u*r*v. Throws NotFiniteDimensionalAtBound if a path of length nilBound
/// survives. Terms longer than the bound are discarded, which is exact for
/// homogeneous relations and for any ideal that is admissible at the bound.
PathBasis pathBasis(const AlgebraSpec& spec);

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

class Algebra {
 public:
  static AlgebraPtr create(AlgebraSpec spec);

  const AlgebraSpec& spec() const noexcept { return spec_; }
  const Quiver& quiver() const noexcept { return spec_.quiver; }
  const Field& field() const noexcept { return spec_.field; }
  std::size_t vertexCount() const noexcept { return spec_.quiver.vertices.size(); }
  std::size_t arrowCount() const noexcept { return spec_.quiver.arrows.size(); }
  const PathBasis& basis() const noexcept { return basis_; }
  std::size_t dimension() const noexcept { return basis_.size(); }

 private:
  explicit Algebra(AlgebraSpec spec);

  AlgebraSpec spec_;
  PathBasis basis_;
};

/// Same algebra: identical pointer, or identical quiver, relations, field and nil bound.
bool sameAlgebra(const AlgebraPtr& a, const AlgebraPtr& b);
AlgebraPtr oppositeAlgebra(const AlgebraPtr& a);

}  // namespace coreflect
