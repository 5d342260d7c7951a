#include "doctest.h"

#include <cstdlib>

#include "coreflect/builtins.hpp"
#include "coreflect/checks.hpp"
#include "coreflect/error.hpp"
#include "coreflect/projective.hpp"
#include "coreflect/report.hpp"
#include "coreflect/witness.hpp"

using namespace coreflect;

namespace {

const Field F5 = Field::prime(5);
const Field F2 = Field::prime(2);
const Field Q = Field::rationals();

SampleSpec specWith(std::size_t count, std::uint64_t seed = 1) {
  SampleSpec s;
  s.count = count;
  s.seed = seed;
  return s;
}

bool refuted(const CheckReport& r) { return r.overall() == Verdict::Fail; }

const ConditionResult& condition(const CheckReport& r, const std::string& name) {
  for (const auto& c : r.conditions)
    if (c.name == name) return c;
  FAIL("no condition " << name);
  throw std::logic_error("unreachable");
}

void requireWitnessesReplay(const CheckReport& r, const USet& u) {
  for (const auto& w : r.witnesses) {
    auto replay = verifyWitness(w, u.items());
    INFO(w.predicate << ": " << replay.message);
    CHECK(replay.confirmed);
  }
}

std::vector<CheckReport> coreChecks(const USet& u, const SampleSpec& spec) {
  return {checkPresCoreflective(u, spec), checkCoreflectiveAbelian(u, spec),
          checkAbelianExact(u, spec), checkGenAbelian(u, CheckMode::Sampled, spec),
          checkSigmaQP(u, spec), checkClosedUnderCokernels(u, spec)};
}

struct ThreadsEnv {
  explicit ThreadsEnv(const char* n) { setenv("COREFLECT_THREADS", n, 1); }
  ~ThreadsEnv() { unsetenv("COREFLECT_THREADS"); }
};

}  // namespace

TEST_CASE("GLP with U = {e_2 Lambda}") {
  for (const Field& f : {F5, Q}) {
    auto alg = Algebra::create(glpSpec(f));
    USet u({projectiveModule(alg, 1)});
    auto spec = specWith(40);

    auto coreflective = checkPresCoreflective(u, spec);
    CHECK(coreflective.overall() == Verdict::Inconclusive);
    CHECK(condition(coreflective, "candidate-in-pres").tested == 40);
    CHECK(condition(coreflective, "candidate-in-pres").label == "sampled");
    CHECK_FALSE(refuted(checkCoreflectiveAbelian(u, spec)));

    auto exact = checkAbelianExact(u, spec);
    REQUIRE(refuted(exact));
    const auto& kernels = condition(exact, "sum-morphism-kernels-generated");
    CHECK(kernels.verdict == Verdict::Fail);
    CHECK(kernels.label == "certificate");
    REQUIRE(kernels.witness);
    const Witness& w = exact.witnesses[*kernels.witness];
    CHECK(w.predicate == "kernel-not-generated");
    CHECK(condition(exact, "hom-to-kernel-quotient-tr-vanishes").verdict != Verdict::Fail);
    requireWitnessesReplay(exact, u);

    auto gen = checkGenAbelian(u, CheckMode::Sampled, spec);
    CHECK(refuted(gen));
    requireWitnessesReplay(gen, u);

    auto sigma = checkSigmaQP(u, spec);
    CHECK(sigma.overall() == Verdict::Pass);
    CHECK(sigma.conditions.at(0).label == "proof:projective");
    CHECK_FALSE(refuted(checkClosedUnderCokernels(u, spec)));
  }
}

TEST_CASE("the endomorphism alpha*beta of e_2 Lambda is a replayable witness") {
  auto alg = Algebra::create(glpSpec(F5));
  Rep p = projectiveModule(alg, 1);
  USet u({p});
  auto end = homSpace(p, p);
  REQUIRE(end.dim() == 2);
  std::size_t nilpotent = 0;
  for (const auto& g : end.basis()) {
    if (isIsomorphism(g)) continue;
    ++nilpotent;
    CHECK((g * g).isZero());
    Witness w;
    w.predicate = "kernel-not-generated";
    w.morphisms = {g};
    w.sums = {{1}, {1}};
    auto replay = verifyWitness(w, u.items());
    INFO(replay.message);
    CHECK(replay.confirmed);
    // The kernel is rad P, isomorphic to e_1 Lambda with a one-dimensional trace.
    CHECK(kernel(g).object.dims() == std::vector<std::size_t>{1, 1});
    CHECK(traceSub(u, kernel(g).object).totalDim() == 1);
  }
  CHECK(nilpotent == 1);
  Witness identity;
  identity.predicate = "kernel-not-generated";
  identity.morphisms = {Mor::identity(p)};
  identity.sums = {{1}, {1}};
  CHECK_FALSE(verifyWitness(identity, u.items()).confirmed);
}

TEST_CASE("tampered witnesses are rejected") {
  auto alg = Algebra::create(glpSpec(F5));
  USet u({projectiveModule(alg, 1)});
  auto exact = checkAbelianExact(u, specWith(30));
  REQUIRE_FALSE(exact.witnesses.empty());
  Witness w = exact.witnesses.front();
  Witness wrongSums = w;
  wrongSums.sums[0].push_back(1);
  CHECK_FALSE(verifyWitness(wrongSums, u.items()).confirmed);
  Witness wrongPredicate = w;
  wrongPredicate.predicate = "no-such-predicate";
  CHECK_FALSE(verifyWitness(wrongPredicate, u.items()).confirmed);
  Witness zero = w;
  zero.morphisms = {Mor::zero(w.morphisms[0].domain(), w.morphisms[0].codomain())};
  CHECK_FALSE(verifyWitness(zero, u.items()).confirmed);
  CHECK_FALSE(verifyWitness(w, {}).confirmed);
}

TEST_CASE("A2 with all projectives") {
  auto alg = Algebra::create(a2Spec(Q));
  USet u({projectiveModule(alg, 0), projectiveModule(alg, 1)});
  for (const auto& r : coreChecks(u, specWith(30))) {
    INFO(r.check);
    CHECK_FALSE(refuted(r));
  }
}

TEST_CASE("A2 with U = {S2}") {
  // S2 is projective and simple, so every sum of copies is semisimple and
  // every subobject, kernel and trace quotient stays inside add(S2).
  auto alg = Algebra::create(a2Spec(F5));
  USet u({simpleModule(alg, 1)});
  auto reports = coreChecks(u, specWith(30));
  for (const auto& r : reports) {
    INFO(r.check);
    CHECK_FALSE(refuted(r));
  }
  CHECK(reports[4].overall() == Verdict::Pass);
}

TEST_CASE("A2 over F2 with U = {P1}: exhaustive Gen(U) check finds S2") {
  auto alg = Algebra::create(a2Spec(F2));
  USet u({projectiveModule(alg, 0)});
  SampleSpec spec = specWith(1);
  spec.maxMultiplicity = 2;
  auto r = checkGenAbelian(u, CheckMode::Exhaustive, spec);
  REQUIRE(refuted(r));
  const Witness& w = r.witnesses.at(0);
  CHECK(w.predicate == "subobject-not-generated");
  CHECK(w.morphisms.at(0).domain().dims() == std::vector<std::size_t>{0, 1});
  requireWitnessesReplay(r, u);

  // Gen of all projectives over A2 is the whole category.
  USet all({projectiveModule(alg, 0), projectiveModule(alg, 1)});
  auto ok = checkGenAbelian(all, CheckMode::Exhaustive, spec);
  CHECK(ok.overall() == Verdict::Inconclusive);
  CHECK(ok.conditions.at(0).label == "exhaustive-bounded");
  // Sums of up to two copies of each: 8 families.
  CHECK(ok.census.at(0).second == 8);
}

TEST_CASE("exhaustive mode limits") {
  auto glp = Algebra::create(glpSpec(F5));
  USet u({projectiveModule(glp, 1)});
  SampleSpec spec = specWith(1);
  spec.maxMultiplicity = 2;
  CHECK_THROWS_AS(checkGenAbelian(u, CheckMode::Exhaustive, spec), ExhaustiveBoundExceeded);
  spec.maxMultiplicity = 1;
  // P alone: 5^3 = 125 vectors; rad P is found.
  auto r = checkGenAbelian(u, CheckMode::Exhaustive, spec);
  CHECK(refuted(r));
  requireWitnessesReplay(r, u);
  auto q = Algebra::create(glpSpec(Q));
  CHECK_THROWS_AS(checkGenAbelian(USet({projectiveModule(q, 1)}), CheckMode::Exhaustive, spec),
                  Error);
}

TEST_CASE("subobject lattice of a small module is enumerated completely") {
  auto alg = Algebra::create(a2Spec(F2));
  USet u({projectiveModule(alg, 0), projectiveModule(alg, 1)});
  SampleSpec spec = specWith(1);
  spec.maxMultiplicity = 1;
  auto r = checkGenAbelian(u, CheckMode::Exhaustive, spec);
  // P2 has 2 subobjects and P1 has 3 (0, S2, P1). In P1 + P2, with dims
  // (1, 2), a subobject is a vertex-2 subspace W (5 choices) plus optionally
  // the vertex-1 line, allowed when W contains its image (2 choices of W).
  CHECK(r.census.at(1).second == 2 + 3 + 7);
}

TEST_CASE("semisimple algebra: every U passes") {
  auto alg = Algebra::create(semisimpleSpec(F5));
  Rep s1 = simpleModule(alg, 0);
  Rep s2 = simpleModule(alg, 1);
  for (const auto& items : {std::vector<Rep>{s1}, std::vector<Rep>{s2}, std::vector<Rep>{s1, s2},
                            std::vector<Rep>{directSum(alg, {s1, s2}).object}}) {
    USet u(items);
    for (const auto& r : coreChecks(u, specWith(20))) {
      INFO(r.check);
      CHECK_FALSE(refuted(r));
    }
  }
}

TEST_CASE("weakly coresolving and resolving samples") {
  auto alg = Algebra::create(glpSpec(F5));
  auto spec = specWith(30);
  auto all = isWeaklyCoresolvingSample(alg, Membership::parse("all", std::nullopt), spec);
  CHECK(all.conditions.at(0).verdict == Verdict::Pass);
  CHECK_FALSE(refuted(all));
  CHECK_FALSE(refuted(isWeaklyResolvingSample(alg, Membership::parse("all", std::nullopt), spec)));

  auto zero = isWeaklyCoresolvingSample(alg, Membership::parse("zero", std::nullopt), spec);
  REQUIRE(refuted(zero));
  CHECK(zero.witnesses.at(0).predicate == "projective-not-member");
  requireWitnessesReplay(zero, USet({projectiveModule(alg, 0)}));

  // Pres(e_2 Lambda) misses e_1 Lambda, whose trace is only its socle.
  USet u({projectiveModule(alg, 1)});
  auto pres = isWeaklyCoresolvingSample(alg, Membership::parse("pres", u), spec);
  REQUIRE(refuted(pres));
  const Witness& w = pres.witnesses.at(*condition(pres, "contains-projectives").witness);
  CHECK(w.member == std::size_t{0});
  CHECK(w.variant == "pres");
  requireWitnessesReplay(pres, u);
  CHECK_THROWS_AS(Membership::parse("gen", std::nullopt), Error);
  CHECK_THROWS_AS(Membership::parse("other", u), Error);
}

TEST_CASE("coresolving closure failures replay") {
  // Over A2, Gen(S1) = add(S1) contains no projective, but the closure
  // condition is evaluated on its own samples; Gen({P1, S1}) contains P1 and
  // P2 = S2 is missing. Any failure must replay.
  auto alg = Algebra::create(a2Spec(F5));
  for (const auto& items : {std::vector<Rep>{projectiveModule(alg, 0), simpleModule(alg, 0)},
                            std::vector<Rep>{simpleModule(alg, 0)}}) {
    USet u(items);
    for (const char* cls : {"gen", "pres"}) {
      auto x = Membership::parse(cls, u);
      auto co = isWeaklyCoresolvingSample(alg, x, specWith(30));
      auto re = isWeaklyResolvingSample(alg, x, specWith(30));
      requireWitnessesReplay(co, u);
      requireWitnessesReplay(re, u);
      CHECK(refuted(co));
    }
  }
}

TEST_CASE("implications between the characterizations hold on samples") {
  std::vector<std::pair<AlgebraPtr, std::vector<std::vector<std::size_t>>>> cases;
  for (const Field& f : {F5, Q}) {
    auto glp = Algebra::create(glpSpec(f));
    auto a2 = Algebra::create(a2Spec(f));
    std::vector<USet> sets{USet({projectiveModule(glp, 1)}), USet({projectiveModule(glp, 0)}),
                           USet({simpleModule(glp, 0)}), USet({simpleModule(glp, 1)}),
                           USet({simpleModule(glp, 0), simpleModule(glp, 1)}),
                           USet({projectiveModule(a2, 0)}), USet({simpleModule(a2, 0)}),
                           USet({simpleModule(a2, 0), projectiveModule(a2, 1)})};
    for (const auto& u : sets) {
      auto spec = specWith(25, 7);
      auto c = checkPresCoreflective(u, spec);
      auto a = checkCoreflectiveAbelian(u, spec);
      auto e = checkAbelianExact(u, spec);
      INFO("U member dims " << dimVector(u[0]) << " over " << f.name());
      if (!refuted(e)) CHECK_FALSE(refuted(a));
      if (!refuted(a)) CHECK_FALSE(refuted(c));
      requireWitnessesReplay(c, u);
      requireWitnessesReplay(a, u);
      requireWitnessesReplay(e, u);
    }
  }
}

TEST_CASE("reports are deterministic and independent of the thread count") {
  auto alg = Algebra::create(glpSpec(F5));
  USet u({projectiveModule(alg, 1)});
  auto spec = specWith(24, 11);
  std::string one, four;
  {
    ThreadsEnv env("1");
    one = io::reportToJson(checkAbelianExact(u, spec), alg->spec(), u.items()).dump(2);
  }
  {
    ThreadsEnv env("4");
    CHECK(workerThreads() == 4);
    four = io::reportToJson(checkAbelianExact(u, spec), alg->spec(), u.items()).dump(2);
  }
  CHECK(one == four);
  CHECK(one == io::reportToJson(checkAbelianExact(u, spec), alg->spec(), u.items()).dump(2));
  auto other = io::reportToJson(checkAbelianExact(u, specWith(24, 12)), alg->spec(), u.items());
  CHECK(other.dump(2) != one);
}

TEST_CASE("report JSON carries replayable witnesses") {
  auto alg = Algebra::create(glpSpec(Q));
  USet u({projectiveModule(alg, 1)});
  auto r = checkAbelianExact(u, specWith(30, 5));
  auto j = io::reportToJson(r, alg->spec(), u.items());
  CHECK(j["schema"] == "coreflect.report/1");
  CHECK(j["overall"] == "fail");
  CHECK(j["seed"] == 5);
  CHECK(j["anchors"].size() == 1 + r.conditions.size());
  CHECK(j.dump().find("time") == std::string::npos);
  auto bundle = io::readWitnesses(nlohmann::ordered_json::parse(j.dump()));
  REQUIRE(bundle.witnesses.size() == r.witnesses.size());
  for (const auto& w : bundle.witnesses) CHECK(verifyWitness(w, bundle.u).confirmed);
  auto doc = io::witnessDocument(r.witnesses.at(0), alg->spec(), u.items());
  auto single = io::readWitnesses(nlohmann::ordered_json::parse(doc.dump()));
  REQUIRE(single.witnesses.size() == 1);
  CHECK(verifyWitness(single.witnesses[0], single.u).confirmed);
  CHECK(io::witnessToJson(single.witnesses[0]).dump() == io::witnessToJson(r.witnesses[0]).dump());
  auto text = io::reportToText(r);
  CHECK(text.find("sum-morphism-kernels-generated") != std::string::npos);
  CHECK(text.find("overall: fail") != std::string::npos);
}

TEST_CASE("dual checks through the opposite algebra agree with direct checks") {
  for (const auto& spec0 : {a2Spec(F5), glpSpec(F5)}) {
    auto alg = Algebra::create(spec0);
    auto op = oppositeAlgebra(alg);
    std::vector<Rep> members{projectiveModule(alg, alg->vertexCount() - 1)};
    USet u(members);
    std::vector<Rep> dualMembers;
    for (const auto& x : members) dualMembers.push_back(dualize(x, op));
    auto spec = specWith(20, 3);
    const std::vector<CovariantCheck> checks{checkPresCoreflective, checkCoreflectiveAbelian,
                                             checkAbelianExact};
    for (const auto& check : checks) {
      auto direct = check(u, spec, {});
      auto dual = dualCheck(check, op, dualMembers, spec);
      CHECK(dual.check == "dual-" + direct.check);
      REQUIRE(dual.conditions.size() == direct.conditions.size());
      for (std::size_t c = 0; c < direct.conditions.size(); ++c)
        CHECK(dual.conditions[c].verdict == direct.conditions[c].verdict);
    }
  }
}

TEST_CASE("invalid sample specifications are rejected") {
  auto alg = Algebra::create(a2Spec(F5));
  USet u({projectiveModule(alg, 0)});
  CHECK_THROWS_AS(checkPresCoreflective(u, specWith(0)), Error);
}
