#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "coreflect/rep.hpp"

namespace coreflect {

class Rng;

/// A nonempty list of nonzero representations over one algebra. Hom spaces
/// between members are computed once, so that morphisms between finite sums
/// of members can be built block by block.
class USet {
 public:
  USet() = default;
  /// Throws Error if empty, if a member is zero, or on mixed algebras.
  explicit USet(std::vector<Rep> items);

  const std::vector<Rep>& items() const noexcept { return items_; }
  std::size_t size() const noexcept { return items_.size(); }
  const Rep& operator[](std::size_t k) const { return items_.at(k); }
  const AlgebraPtr& algebra() const noexcept { return items_.front().algebra(); }
  const Field& field() const noexcept { return items_.front().field(); }
  /// Hom(U_a, U_b).
  const HomSpace& hom(std::size_t a, std::size_t b) const { return homs_.at(a * size() + b); }

 private:
  std::vector<Rep> items_;
  std::vector<HomSpace> homs_;
};

/// A finite direct sum of members of a USet; `members[k]` is the index of
/// the k-th summand.
struct USum {
  DirectSum sum;
  std::vector<std::size_t> members;

  const Rep& object() const noexcept { return sum.object; }
};

/// U_0^(m_0) + U_1^(m_1) + ... in member order.
USum uSum(const USet& u, const std::vector<std::size_t>& multiplicities);
/// A random morphism between finite sums. Each block is, with equal
/// probability, a random combination of the cached Hom basis or a single
/// basis element times a nonzero scalar, so that degenerate maps are drawn
/// over Q as well as over small prime fields.
Mor sampleUSumMor(const USet& u, const USum& from, const USum& to, Rng& rng);

struct PrecoverData {
  enum class Kind { SumU, PresU };
  Kind kind = Kind::SumU;
  Mor morphism;
  /// Summands of the underlying sum of members, per member.
  std::vector<std::size_t> multiplicities;
};

/// The sum over all members U and all b in a basis of Hom(U, A) of Im(b).
SubRep traceSub(const USet& u, const Rep& a);
/// The preimage in A of the trace of A / tr(A).
SubRep trace2Sub(const USet& u, const Rep& a);
bool inGen(const USet& u, const Rep& a);
/// Every morphism from a member into cod f factors through f.
bool isUEpi(const USet& u, const Mor& f);

/// epsilon_A: the sum of U^(dim Hom(U, A)) over members, indexed by a Hom
/// basis, mapping each summand by its basis morphism. Its image is tr(A).
PrecoverData canonicalEps(const USet& u, const Rep& a);

/// A presentation P1 -> P0 -> A -> 0 with P0, P1 finite sums of members:
/// `presentation` has image exactly Ker `epi`, and `epi` is onto.
struct Presentation {
  Mor presentation;
  Mor epi;
};
/// Re-verifies exactness of a presentation from scratch.
bool checkPresentation(const Presentation& p);

struct PresPrecover {
  PrecoverData data;
  /// The domain is the cokernel of this map between finite sums of members.
  Presentation certificate;
};

/// The map U_A / tr(Ker eps_A) -> A induced by eps_A.
PresPrecover presPrecover(const USet& u, const Rep& a);

struct PresMembership {
  enum class Verdict { Member, NotGenerated, KernelNotGenerated };
  Verdict verdict = Verdict::NotGenerated;
  std::optional<Presentation> certificate;

  bool member() const noexcept { return verdict == Verdict::Member; }
};

/// The canonical test: A is generated and Ker eps_A is generated. Sufficient
/// for membership in Pres(U); a negative answer is labelled as the outcome of
/// this test, not as a proof of non-membership.
PresMembership inPresCanonical(const USet& u, const Rep& a);
std::string verdictName(PresMembership::Verdict v);

}  // namespace coreflect
