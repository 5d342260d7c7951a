#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "coreflect/trace.hpp"

namespace coreflect {

struct CoreflectionResult {
  enum class Method { Formula, Generic, Trace };
  Rep target;
  Mor counit;
  bool verified = false;
  Method method = Method::Formula;
};

std::string methodName(CoreflectionResult::Method m);

/// q(A) = U_A / tr^2(Ker eps_A) with the morphism to A induced by eps_A.
/// `verified` is the outcome of isCoreflection on the counit.
CoreflectionResult coreflectorCandidate(const USet& u, const Rep& a);

struct CoreflectionCheck {
  struct PerMember {
    std::size_t homIntoDomain = 0;
    std::size_t homIntoCodomain = 0;
    std::size_t rank = 0;
    bool bijective() const noexcept {
      return homIntoDomain == homIntoCodomain && rank == homIntoDomain;
    }
  };
  std::vector<PerMember> members;
  PresMembership domainMembership;
  bool ok = false;
};

/// Hom(U, p) is bijective for every member and dom p passes the canonical
/// Pres(U) test.
CoreflectionCheck isCoreflection(const USet& u, const Mor& p);

struct UniversalPropertyReport {
  bool ok = true;
  std::size_t tested = 0;
  std::optional<std::size_t> failingIndex;
  /// A nonzero s: B -> dom p with p * s = 0, or a t: B -> cod p that does not
  /// factor through p.
  std::optional<Mor> witness;
  std::string reason;
};

/// For each test object B: dim Hom(B, dom p) = dim Hom(B, cod p) and
/// composition with p is injective.
UniversalPropertyReport verifyUniversalProperty(const Mor& p, const std::vector<Rep>& testObjects);

/// tr(A) with its inclusion; verified when Hom(U, inclusion) is bijective for
/// all members.
CoreflectionResult genCoreflector(const USet& u, const Rep& a);

/// Outcome of running the idempotent-splitting construction step by step.
struct GenericConstruction {
  enum class Status { Ok, CokernelNotPresented, LiftFailed, NotIdempotent };
  Status status = Status::Ok;
  std::optional<CoreflectionResult> result;
  /// The Pres(U)-precover f: B -> A.
  Mor precover;
  /// c: B -> C, the cokernel of B' -> Ker f -> B.
  Mor cokernelMap;
  /// e = a * c on B (set once the lift exists).
  std::optional<Mor> idempotent;
  std::string detail;
};

/// f = presPrecover(A), k = ker f, g = presPrecover(Ker f), c = coker(k g),
/// h with h c = f, a with f a = h, e = a c split as e = v u; returns f v.
/// Each step is re-verified and a failure is returned as a status carrying
/// the offending data, not thrown.
GenericConstruction constructCoreflectionGeneric(const USet& u, const Rep& a);
std::string statusName(GenericConstruction::Status s);

/// The unique t: from.target -> to.target with to.counit * t = from.counit,
/// if it exists and is invertible.
std::optional<Mor> comparisonIso(const CoreflectionResult& from, const CoreflectionResult& to);

}  // namespace coreflect
