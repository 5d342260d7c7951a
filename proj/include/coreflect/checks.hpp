#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "coreflect/sample.hpp"
#include "coreflect/trace.hpp"

namespace coreflect {

enum class Verdict { Pass, Fail, Inconclusive };
std::string verdictName(Verdict v);

/// A counterexample: the data needed to replay one violated predicate.
/// Which fields are used depends on `predicate`; see verifyWitness.
struct Witness {
  std::string predicate;
  std::string condition;
  std::size_t sample = 0;
  std::vector<Rep> objects;
  std::vector<Mor> morphisms;
  /// Multiplicity vectors of the finite sums of members involved, in the
  /// order the predicate expects.
  std::vector<std::vector<std::size_t>> sums;
  std::optional<std::size_t> member;
  /// "tr" or "tr2" for quotient-by-trace predicates; the membership class
  /// for the (co)resolving predicates.
  std::string variant;
  std::string detail;
};

struct ConditionResult {
  std::string name;
  std::string statement;
  Verdict verdict = Verdict::Inconclusive;
  /// "sampled", "exhaustive-bounded", "proof:projective",
  /// "proof:indecomposable-projectives", "certificate" or "canonical-test".
  std::string label;
  std::size_t tested = 0;
  std::optional<std::size_t> witness;
};

struct CheckReport {
  std::string check;
  std::string statement;
  std::vector<ConditionResult> conditions;
  std::vector<Witness> witnesses;
  SampleSpec spec;
  /// Counts of sampled objects and morphisms, and of discarded candidates.
  std::vector<std::pair<std::string, std::size_t>> census;

  /// Fail if any condition fails, else Inconclusive if any is, else Pass.
  Verdict overall() const;
};

/// Draws the index-th ambient object of a run. The default draws quotients
/// of sums of indecomposable projectives with sampleRep.
using ObjectSampler = std::function<Rep(std::size_t index)>;

/// Pres(U) is coreflective: for every A, U_A / tr^2(Ker eps_A) passes the
/// canonical Pres(U) test and Hom(U, Ker eps_A / tr^2(Ker eps_A)) = 0.
CheckReport checkPresCoreflective(const USet& u, const SampleSpec& spec,
                                  const ObjectSampler& sampler = {});

/// Pres(U) is coreflective and abelian: Hom(U, Ker eps_A / tr(Ker eps_A)) = 0
/// for every A, and for every g: U~ -> B with B in Pres(U) the induced map
/// U~ / tr(Ker g) -> Im g is bijective under Hom(U, -).
CheckReport checkCoreflectiveAbelian(const USet& u, const SampleSpec& spec,
                                     const ObjectSampler& sampler = {});

/// Pres(U) is abelian exact: kernels of morphisms in Sum(U) are generated,
/// the vanishing of Hom(U, Ker eps_A / tr(Ker eps_A)), and Ker eps_B is
/// generated for every B in Pres(U).
CheckReport checkAbelianExact(const USet& u, const SampleSpec& spec,
                              const ObjectSampler& sampler = {});

enum class CheckMode { Exhaustive, Sampled };

/// Gen(U) is abelian: every subobject of a finite sum of members is
/// generated. Exhaustive mode enumerates all subobjects of the sums with
/// multiplicities up to spec.maxMultiplicity; it requires a prime field and
/// throws ExhaustiveBoundExceeded when some sum has p^dim > bound.
CheckReport checkGenAbelian(const USet& u, CheckMode mode, const SampleSpec& spec,
                            std::uint64_t bound = 4096);

/// Every epimorphism from a finite sum of members is a U-epimorphism.
/// Proven when every member is projective.
CheckReport checkSigmaQP(const USet& u, const SampleSpec& spec);

/// Pres(U) is closed under cokernels, judged by the canonical Pres(U) test.
CheckReport checkClosedUnderCokernels(const USet& u, const SampleSpec& spec);

/// A subcategory with a replayable membership test.
struct Membership {
  enum class Kind { All, Zero, Gen, Pres };
  Kind kind = Kind::All;
  /// Required for Gen and Pres (the canonical test).
  std::optional<USet> u;

  std::string name() const;
  bool contains(const Rep& m) const;
  static Membership parse(const std::string& name, std::optional<USet> u);
};

/// X contains the projectives and is closed under cokernels of
/// monomorphisms m: X -> Y between objects of X along which every map to a
/// projective extends. Samples m = (m0, h): X -> Y + Q with h the canonical
/// projective preenvelope of X.
CheckReport isWeaklyCoresolvingSample(const AlgebraPtr& algebra, const Membership& x,
                                      const SampleSpec& spec);
/// X contains the projectives and is closed under kernels of epimorphisms
/// between objects of X. Samples (f0, pi): X + P_Y -> Y with pi a projective
/// cover.
CheckReport isWeaklyResolvingSample(const AlgebraPtr& algebra, const Membership& x,
                                    const SampleSpec& spec);

/// Runs `check` for (B, V) through duality: the covariant check on
/// (B^op, D V), with ambient objects drawn over B by sampleRep and dualized.
using CovariantCheck =
    std::function<CheckReport(const USet&, const SampleSpec&, const ObjectSampler&)>;
CheckReport dualCheck(const CovariantCheck& check, const AlgebraPtr& b, const std::vector<Rep>& v,
                      const SampleSpec& spec);

/// A sampled object of Pres(U) with the presentation it was built from.
struct PresentedSample {
  std::vector<std::size_t> bottom;
  std::vector<std::size_t> top;
  /// U^bottom -> U^top.
  Mor presentation;
  RepWithMor cokernel;
  const Rep& object() const noexcept { return cokernel.object; }
};
PresentedSample samplePresented(const USet& u, const SampleSpec& spec, Rng& rng);
std::vector<std::size_t> sampleMultiplicities(const USet& u, const SampleSpec& spec, Rng& rng);

/// The canonical map X -> Q into a sum of indecomposable projectives indexed
/// by Hom bases; every map from X to a projective factors through it.
Mor projectivePreenvelope(const Rep& x);

/// Worker count: COREFLECT_THREADS if set and positive, else the hardware
/// concurrency.
std::size_t workerThreads();
/// Runs fn(i) for i in [0, n) on up to workerThreads() threads.
void parallelFor(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace coreflect
