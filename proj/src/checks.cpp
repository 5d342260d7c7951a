#include "coreflect/checks.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <unordered_set>

#include "coreflect/error.hpp"
#include "coreflect/projective.hpp"
#include "coreflect/random.hpp"

namespace coreflect {

std::string verdictName(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "pass";
    case Verdict::Fail:
      return "fail";
    case Verdict::Inconclusive:
      return "inconclusive";
  }
  return "unknown";
}

Verdict CheckReport::overall() const {
  bool inconclusive = false;
  for (const auto& c : conditions) {
    if (c.verdict == Verdict::Fail) return Verdict::Fail;
    if (c.verdict == Verdict::Inconclusive) inconclusive = true;
  }
  return inconclusive ? Verdict::Inconclusive : Verdict::Pass;
}

std::size_t workerThreads() {
  if (const char* env = std::getenv("COREFLECT_THREADS")) {
    char* end = nullptr;
    long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n > 0) return static_cast<std::size_t>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallelFor(std::size_t n, const std::function<void(std::size_t)>& fn) {
  const std::size_t threads = std::min(workerThreads(), n);
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex errorMutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(errorMutex);
        if (!error) error = std::current_exception();
        next = n;
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

std::vector<std::size_t> sampleMultiplicities(const USet& u, const SampleSpec& spec, Rng& rng) {
  std::vector<std::size_t> m(u.size());
  for (auto& x : m)
    x = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(spec.maxMultiplicity)));
  return m;
}

PresentedSample samplePresented(const USet& u, const SampleSpec& spec, Rng& rng) {
  PresentedSample out;
  out.top = sampleMultiplicities(u, spec, rng);
  out.bottom = sampleMultiplicities(u, spec, rng);
  auto top = uSum(u, out.top);
  auto bottom = uSum(u, out.bottom);
  out.presentation = sampleUSumMor(u, bottom, top, rng);
  out.cokernel = cokernel(out.presentation);
  return out;
}

Mor projectivePreenvelope(const Rep& x) {
  const auto& alg = x.algebra();
  std::vector<Rep> parts;
  std::vector<Mor> components;
  for (std::size_t v = 0; v < alg->vertexCount(); ++v) {
    Rep p = projectiveModule(alg, v);
    for (const auto& b : homBasis(x, p)) {
      parts.push_back(p);
      components.push_back(b);
    }
  }
  return toSum(directSum(alg, parts), components, x);
}

namespace {

// Independent random stream for the index-th sample of one condition family.
Rng stream(const SampleSpec& spec, std::uint64_t salt, std::size_t index) {
  return Rng::derive(Rng::derive(spec.seed, salt).next(), index);
}

void requireCount(const SampleSpec& spec) {
  if (spec.count == 0) throw Error("sample count must be at least 1");
}

ObjectSampler defaultSampler(const AlgebraPtr& alg, const SampleSpec& spec) {
  return [alg, spec](std::size_t i) { return sampleRep(alg, spec, i); };
}

std::string labelFor(const std::string& predicate, const std::string& variant) {
  if (predicate == "pres-candidate-not-member" || predicate == "cokernel-not-presented")
    return "canonical-test";
  if (variant == "pres") return "canonical-test";
  return "certificate";
}

struct Outcome {
  bool evaluated = false;
  std::optional<Witness> witness;
};

struct ConditionDef {
  std::string name;
  std::string statement;
};

// Evaluates fn(i) -> one Outcome per condition for every sample index and
// assembles the report; the witness of a condition is its lowest failing
// sample, so the result does not depend on scheduling.
void runSampled(CheckReport& report, const std::vector<ConditionDef>& defs, std::size_t count,
                const std::function<std::vector<Outcome>(std::size_t)>& fn) {
  std::vector<std::vector<Outcome>> results(count);
  parallelFor(count, [&](std::size_t i) {
    results[i] = fn(i);
    if (results[i].size() != defs.size())
      throw InvariantViolation("sample evaluation returned the wrong number of outcomes");
  });
  for (std::size_t c = 0; c < defs.size(); ++c) {
    ConditionResult r;
    r.name = defs[c].name;
    r.statement = defs[c].statement;
    r.verdict = Verdict::Inconclusive;
    r.label = "sampled";
    for (std::size_t i = 0; i < count; ++i) {
      const Outcome& o = results[i][c];
      if (!o.evaluated) continue;
      ++r.tested;
      if (o.witness && !r.witness) {
        Witness w = *o.witness;
        w.condition = r.name;
        w.sample = i;
        r.verdict = Verdict::Fail;
        r.label = labelFor(w.predicate, w.variant);
        r.witness = report.witnesses.size();
        report.witnesses.push_back(std::move(w));
      }
    }
    report.conditions.push_back(std::move(r));
  }
}

Outcome held() { return {true, std::nullopt}; }
Outcome violated(Witness w) { return {true, std::move(w)}; }

// Ker eps_A as a subobject-with-inclusion of U_A.
RepWithMor canonicalKernel(const USet& u, const Rep& a) {
  return kernel(canonicalEps(u, a).morphism);
}

// The first member with Hom(U, q) != 0.
std::optional<std::size_t> memberWithNonzeroHom(const USet& u, const Rep& q) {
  for (std::size_t j = 0; j < u.size(); ++j)
    if (homSpace(u[j], q).dim() > 0) return j;
  return std::nullopt;
}

Outcome kernelQuotientHomVanishes(const USet& u, const Rep& a, bool second) {
  auto k = canonicalKernel(u, a);
  auto sub = second ? trace2Sub(u, k.object) : traceSub(u, k.object);
  auto q = quotient(sub);
  if (auto j = memberWithNonzeroHom(u, q.object)) {
    Witness w;
    w.predicate = "hom-to-kernel-quotient-nonzero";
    w.variant = second ? "tr2" : "tr";
    w.objects = {a};
    w.member = *j;
    w.detail = "Hom(U, Ker eps_A / " + w.variant + "(Ker eps_A)) has dimension " +
               std::to_string(homSpace(u[*j], q.object).dim());
    return violated(std::move(w));
  }
  return held();
}

Outcome candidateInPres(const USet& u, const Rep& a) {
  auto k = canonicalKernel(u, a);
  auto t2 = imageOfSub(k.map, trace2Sub(u, k.object));
  auto c = quotient(t2);
  auto m = inPresCanonical(u, c.object);
  if (m.member()) return held();
  Witness w;
  w.predicate = "pres-candidate-not-member";
  w.objects = {a};
  w.detail = "U_A / tr2(Ker eps_A) fails the canonical test: " + verdictName(m.verdict);
  return violated(std::move(w));
}

Outcome sumKernelGenerated(const USet& u, const SampleSpec& spec, Rng& rng) {
  auto a = sampleMultiplicities(u, spec, rng);
  auto b = sampleMultiplicities(u, spec, rng);
  auto g = sampleUSumMor(u, uSum(u, a), uSum(u, b), rng);
  auto k = kernel(g);
  if (inGen(u, k.object)) return held();
  Witness w;
  w.predicate = "kernel-not-generated";
  w.morphisms = {g};
  w.sums = {a, b};
  w.detail = "the kernel has dimension vector " + dimVector(k.object) + " and trace " +
             std::to_string(traceSub(u, k.object).totalDim());
  return violated(std::move(w));
}

Outcome presentedKernelGenerated(const USet& u, const SampleSpec& spec, Rng& rng) {
  auto b = samplePresented(u, spec, rng);
  auto k = canonicalKernel(u, b.object());
  if (inGen(u, k.object)) return held();
  Witness w;
  w.predicate = "canonical-kernel-not-generated";
  w.morphisms = {b.presentation};
  w.sums = {b.bottom, b.top};
  w.detail = "Ker eps_B is not generated for B = coker of the presentation";
  return violated(std::move(w));
}

Outcome inducedMapBijective(const USet& u, const SampleSpec& spec, Rng& rng) {
  auto b = samplePresented(u, spec, rng);
  auto mult = sampleMultiplicities(u, spec, rng);
  auto ut = uSum(u, mult);
  Mor g = sampleMor(ut.object(), b.object(), rng);
  auto k = kernel(g);
  auto t = imageOfSub(k.map, traceSub(u, k.object));
  auto q = quotient(t);
  auto im = image(g);
  auto gbar = factorThroughSource(im.epi, q.map);
  if (!gbar) throw InvariantViolation("inducedMapBijective: g does not vanish on tr(Ker g)");
  for (std::size_t j = 0; j < u.size(); ++j) {
    auto from = homSpace(u[j], gbar->domain());
    auto to = homSpace(u[j], gbar->codomain());
    const std::size_t r = rank(postComposeMatrix(from, to, *gbar));
    if (from.dim() == to.dim() && r == from.dim()) continue;
    Witness w;
    w.predicate = "induced-map-not-bijective";
    w.morphisms = {g, b.presentation};
    w.sums = {mult, b.bottom, b.top};
    w.member = j;
    w.detail = "Hom(U, gbar) has rank " + std::to_string(r) + " from dimension " +
               std::to_string(from.dim()) + " to " + std::to_string(to.dim());
    return violated(std::move(w));
  }
  return held();
}

std::vector<std::size_t> nonzeroMultiplicities(const USet& u, const SampleSpec& spec, Rng& rng) {
  auto m = sampleMultiplicities(u, spec, rng);
  if (std::all_of(m.begin(), m.end(), [](std::size_t x) { return x == 0; }))
    m[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(m.size()) - 1))] = 1;
  return m;
}

Witness subobjectWitness(const USet& u, const Mor& mono, const std::vector<std::size_t>& mult) {
  Witness w;
  w.predicate = "subobject-not-generated";
  w.morphisms = {mono};
  w.sums = {mult};
  w.detail = "a subobject with dimension vector " + dimVector(mono.domain()) + " has trace " +
             std::to_string(traceSub(u, mono.domain()).totalDim());
  return w;
}

std::string subspaceKey(const SubRep& s) {
  std::string key;
  for (const auto& sp : s.spaces()) {
    const Mat& b = sp.basis();
    key += std::to_string(b.rows()) + ':';
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) key += b.at(i, j).str() + ',';
    key += '|';
  }
  return key;
}

// Every subrepresentation of x, found as sums of cyclic subrepresentations
// generated by single vectors at one vertex.
std::vector<SubRep> allSubReps(const Rep& x) {
  const Field& f = x.field();
  const std::uint32_t p = f.characteristic();
  std::vector<SubRep> cyclic;
  std::unordered_set<std::string> seenCyclic;
  for (std::size_t v = 0; v < x.vertexCount(); ++v) {
    const std::size_t d = x.dim(v);
    if (d == 0) continue;
    std::uint64_t total = 1;
    for (std::size_t k = 0; k < d; ++k) total *= p;
    for (std::uint64_t code = 1; code < total; ++code) {
      std::vector<Scalar> entries(d, Scalar::zero(f));
      std::uint64_t c = code;
      std::size_t lead = d;
      for (std::size_t k = 0; k < d; ++k) {
        entries[k] = Scalar::fromResidue(f, static_cast<std::uint32_t>(c % p));
        if (lead == d && !entries[k].isZero()) lead = k;
        c /= p;
      }
      if (!entries[lead].isOne()) continue;  // one vector per line
      SubRep s = generatedSubRep(x, {{v, Mat::column(f, entries)}});
      if (seenCyclic.insert(subspaceKey(s)).second) cyclic.push_back(std::move(s));
    }
  }
  std::vector<SubRep> all{SubRep::zero(x)};
  std::unordered_set<std::string> seen{subspaceKey(all.front())};
  for (std::size_t i = 0; i < all.size(); ++i)
    for (const auto& c : cyclic) {
      if (all[i].contains(c)) continue;
      SubRep t = subSum(all[i], c);
      if (seen.insert(subspaceKey(t)).second) all.push_back(std::move(t));
    }
  return all;
}

CheckReport newReport(const std::string& check, const std::string& statement,
                      const SampleSpec& spec) {
  CheckReport r;
  r.check = check;
  r.statement = statement;
  r.spec = spec;
  return r;
}

const ConditionDef kCandidateInPres{
    "candidate-in-pres",
    "for every A, U_A / tr^2(Ker eps_A) lies in Pres(U) (canonical test)"};
const ConditionDef kQuotientTr2{
    "hom-to-kernel-quotient-tr2-vanishes",
    "for every A and every U in U, Hom(U, Ker eps_A / tr^2(Ker eps_A)) = 0"};
const ConditionDef kQuotientTr{
    "hom-to-kernel-quotient-tr-vanishes",
    "for every A and every U in U, Hom(U, Ker eps_A / tr(Ker eps_A)) = 0"};
const ConditionDef kInducedBijective{
    "induced-map-bijective",
    "for every g: U~ -> B with U~ a finite sum of members and B in Pres(U), "
    "Hom(U, -) maps U~ / tr(Ker g) -> Im g bijectively"};
const ConditionDef kSumKernels{
    "sum-morphism-kernels-generated",
    "every morphism between finite sums of members has its kernel in Gen(U)"};
const ConditionDef kPresentedKernels{
    "presented-canonical-kernels-generated",
    "for every B in Pres(U), the kernel of eps_B lies in Gen(U)"};
const ConditionDef kSubobjects{
    "subobjects-generated", "every subobject of a finite sum of members lies in Gen(U)"};
const ConditionDef kUEpi{"epis-are-u-epis",
                         "every epimorphism from a finite sum of members is a U-epimorphism"};
const ConditionDef kCokernels{
    "cokernels-presented",
    "the cokernel of every morphism between objects of Pres(U) lies in Pres(U) (canonical test)"};

}  // namespace

CheckReport checkPresCoreflective(const USet& u, const SampleSpec& spec,
                                  const ObjectSampler& sampler) {
  requireCount(spec);
  auto draw = sampler ? sampler : defaultSampler(u.algebra(), spec);
  auto r = newReport("coreflective", "Pres(U) is a coreflective subcategory", spec);
  runSampled(r, {kCandidateInPres, kQuotientTr2}, spec.count, [&](std::size_t i) {
    Rep a = draw(i);
    return std::vector<Outcome>{candidateInPres(u, a), kernelQuotientHomVanishes(u, a, true)};
  });
  r.census = {{"objects", spec.count}};
  return r;
}

CheckReport checkCoreflectiveAbelian(const USet& u, const SampleSpec& spec,
                                     const ObjectSampler& sampler) {
  requireCount(spec);
  auto draw = sampler ? sampler : defaultSampler(u.algebra(), spec);
  auto r = newReport("abelian", "Pres(U) is coreflective and abelian", spec);
  runSampled(r, {kQuotientTr, kInducedBijective}, spec.count, [&](std::size_t i) {
    Rep a = draw(i);
    Rng rng = stream(spec, 1, i);
    return std::vector<Outcome>{kernelQuotientHomVanishes(u, a, false),
                                inducedMapBijective(u, spec, rng)};
  });
  r.census = {{"objects", spec.count}, {"morphisms-to-presented", spec.count}};
  return r;
}

CheckReport checkAbelianExact(const USet& u, const SampleSpec& spec,
                              const ObjectSampler& sampler) {
  requireCount(spec);
  auto draw = sampler ? sampler : defaultSampler(u.algebra(), spec);
  auto r = newReport("abelian-exact", "Pres(U) is an abelian exact subcategory", spec);
  runSampled(r, {kSumKernels, kQuotientTr, kPresentedKernels}, spec.count, [&](std::size_t i) {
    Rep a = draw(i);
    Rng rng1 = stream(spec, 2, i);
    Rng rng2 = stream(spec, 3, i);
    return std::vector<Outcome>{sumKernelGenerated(u, spec, rng1),
                                kernelQuotientHomVanishes(u, a, false),
                                presentedKernelGenerated(u, spec, rng2)};
  });
  r.census = {{"objects", spec.count},
              {"sum-morphisms", spec.count},
              {"presented-objects", spec.count}};
  return r;
}

CheckReport checkGenAbelian(const USet& u, CheckMode mode, const SampleSpec& spec,
                            std::uint64_t bound) {
  requireCount(spec);
  auto r = newReport("gen-abelian", "Gen(U) is an abelian subcategory", spec);
  if (mode == CheckMode::Sampled) {
    runSampled(r, {kSubobjects}, spec.count, [&](std::size_t i) {
      Rng rng = stream(spec, 4, i);
      auto mult = nonzeroMultiplicities(u, spec, rng);
      auto x = uSum(u, mult);
      RepWithMor sub;
      if (i % 2 == 0) {
        const auto gens = static_cast<std::size_t>(
            rng.uniform(1, static_cast<std::int64_t>(std::max<std::size_t>(1, spec.maxGenerators))));
        sub = carrier(randomSubRep(x.object(), gens, rng));
      } else {
        auto b = sampleMultiplicities(u, spec, rng);
        sub = kernel(sampleUSumMor(u, x, uSum(u, b), rng));
      }
      if (inGen(u, sub.object)) return std::vector<Outcome>{held()};
      return std::vector<Outcome>{violated(subobjectWitness(u, sub.map, mult))};
    });
    r.census = {{"subobjects", spec.count}};
    return r;
  }

  if (u.field().isRationals()) throw Error("exhaustive mode requires a prime field");
  const std::uint64_t p = u.field().characteristic();
  // All multiplicity vectors in [0, max]^n except zero, in lexicographic order.
  std::vector<std::vector<std::size_t>> families;
  std::vector<std::size_t> m(u.size(), 0);
  for (;;) {
    std::size_t k = 0;
    while (k < m.size() && m[k] == spec.maxMultiplicity) m[k++] = 0;
    if (k == m.size()) break;
    ++m[k];
    families.push_back(m);
  }
  std::sort(families.begin(), families.end());
  for (const auto& f : families) {
    std::size_t dim = 0;
    for (std::size_t j = 0; j < u.size(); ++j) dim += f[j] * u[j].totalDim();
    std::uint64_t size = 1;
    for (std::size_t k = 0; k < dim; ++k) {
      size *= p;
      if (size > bound)
        throw ExhaustiveBoundExceeded("a sum of members has p^dim above the bound " +
                                      std::to_string(bound) +
                                      "; lower the multiplicity or raise the bound");
    }
  }
  ConditionResult c;
  c.name = kSubobjects.name;
  c.statement = kSubobjects.statement + " (all sums with multiplicities up to " +
                std::to_string(spec.maxMultiplicity) + ")";
  c.verdict = Verdict::Inconclusive;
  c.label = "exhaustive-bounded";
  std::size_t index = 0;
  for (const auto& f : families) {
    auto x = uSum(u, f);
    for (const auto& s : allSubReps(x.object())) {
      ++c.tested;
      auto sub = carrier(s);
      if (!inGen(u, sub.object)) {
        Witness w = subobjectWitness(u, sub.map, f);
        w.condition = c.name;
        w.sample = index;
        c.verdict = Verdict::Fail;
        c.label = "certificate";
        c.witness = 0;
        r.witnesses.push_back(std::move(w));
        break;
      }
      ++index;
    }
    if (c.verdict == Verdict::Fail) break;
  }
  r.census = {{"families", families.size()}, {"subobjects", c.tested}};
  r.conditions.push_back(std::move(c));
  return r;
}

CheckReport checkSigmaQP(const USet& u, const SampleSpec& spec) {
  requireCount(spec);
  auto r = newReport("sigma-qp", "U is Sigma-quasi-projective", spec);
  if (std::all_of(u.items().begin(), u.items().end(), [](const Rep& x) { return isProjective(x); })) {
    ConditionResult c;
    c.name = kUEpi.name;
    c.statement = kUEpi.statement;
    c.verdict = Verdict::Pass;
    c.label = "proof:projective";
    r.conditions.push_back(std::move(c));
    r.census = {{"epimorphisms", 0}};
    return r;
  }
  runSampled(r, {kUEpi}, spec.count, [&](std::size_t i) {
    Rng rng = stream(spec, 5, i);
    auto mult = sampleMultiplicities(u, spec, rng);
    auto x = uSum(u, mult);
    const auto gens =
        static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(spec.maxGenerators)));
    auto q = randomQuotient(x.object(), gens, rng);
    for (std::size_t j = 0; j < u.size(); ++j) {
      auto to = homSpace(u[j], q.object);
      if (to.dim() == 0) continue;
      auto from = homSpace(u[j], x.object());
      if (rank(postComposeMatrix(from, to, q.map)) == to.dim()) continue;
      Witness w;
      w.predicate = "not-u-epi";
      w.morphisms = {q.map};
      w.sums = {mult};
      w.member = j;
      w.detail = "a morphism from a member into the quotient does not lift";
      return std::vector<Outcome>{violated(std::move(w))};
    }
    return std::vector<Outcome>{held()};
  });
  r.census = {{"epimorphisms", spec.count}};
  return r;
}

CheckReport checkClosedUnderCokernels(const USet& u, const SampleSpec& spec) {
  requireCount(spec);
  auto r = newReport("cokernel-closure", "Pres(U) is closed under cokernels", spec);
  runSampled(r, {kCokernels}, spec.count, [&](std::size_t i) {
    Rng rng = stream(spec, 6, i);
    auto b = samplePresented(u, spec, rng);
    auto c = samplePresented(u, spec, rng);
    Mor f = sampleMor(b.object(), c.object(), rng);
    auto q = cokernel(f);
    auto m = inPresCanonical(u, q.object);
    if (m.member()) return std::vector<Outcome>{held()};
    Witness w;
    w.predicate = "cokernel-not-presented";
    w.morphisms = {b.presentation, c.presentation, f};
    w.sums = {b.bottom, b.top, c.bottom, c.top};
    w.detail = "the cokernel fails the canonical test: " + verdictName(m.verdict);
    return std::vector<Outcome>{violated(std::move(w))};
  });
  r.census = {{"morphisms", spec.count}};
  return r;
}

std::string Membership::name() const {
  switch (kind) {
    case Kind::All:
      return "all";
    case Kind::Zero:
      return "zero";
    case Kind::Gen:
      return "gen";
    case Kind::Pres:
      return "pres";
  }
  return "unknown";
}

bool Membership::contains(const Rep& m) const {
  switch (kind) {
    case Kind::All:
      return true;
    case Kind::Zero:
      return m.isZero();
    case Kind::Gen:
      return inGen(*u, m);
    case Kind::Pres:
      return inPresCanonical(*u, m).member();
  }
  return false;
}

Membership Membership::parse(const std::string& name, std::optional<USet> u) {
  Membership m;
  if (name == "all") m.kind = Kind::All;
  else if (name == "zero") m.kind = Kind::Zero;
  else if (name == "gen") m.kind = Kind::Gen;
  else if (name == "pres") m.kind = Kind::Pres;
  else throw Error("unknown membership class '" + name + "' (expected all, zero, gen or pres)");
  if ((m.kind == Kind::Gen || m.kind == Kind::Pres) && !u)
    throw Error("membership class '" + name + "' needs a USet");
  m.u = std::move(u);
  return m;
}

namespace {

Rep sampleMember(const AlgebraPtr& alg, const Membership& x, const SampleSpec& spec, Rng& rng) {
  switch (x.kind) {
    case Membership::Kind::All:
      return sampleRep(alg, spec, rng);
    case Membership::Kind::Zero:
      return Rep::zero(alg);
    case Membership::Kind::Gen: {
      auto s = uSum(*x.u, sampleMultiplicities(*x.u, spec, rng));
      const auto gens =
          static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(spec.maxGenerators)));
      return randomQuotient(s.object(), gens, rng).object;
    }
    case Membership::Kind::Pres:
      return samplePresented(*x.u, spec, rng).object();
  }
  throw InvariantViolation("sampleMember: unknown kind");
}

void projectivesContained(const AlgebraPtr& alg, const Membership& x, ConditionResult& c,
                          std::vector<Witness>& witnesses) {
  for (std::size_t v = 0; v < alg->vertexCount(); ++v) {
    ++c.tested;
    Rep p = projectiveModule(alg, v);
    if (x.contains(p)) continue;
    Witness w;
    w.predicate = "projective-not-member";
    w.condition = c.name;
    w.sample = v;
    w.objects = {p};
    w.member = v;
    w.variant = x.name();
    w.detail = "the indecomposable projective at vertex " + alg->quiver().vertices[v] +
               " is not in the class";
    c.verdict = Verdict::Fail;
    c.label = labelFor(w.predicate, w.variant);
    c.witness = witnesses.size();
    witnesses.push_back(std::move(w));
    return;
  }
  c.verdict = Verdict::Pass;
  c.label = "proof:indecomposable-projectives";
}

CheckReport closureCheck(const AlgebraPtr& alg, const Membership& x, const SampleSpec& spec,
                         bool coresolving) {
  requireCount(spec);
  if ((x.kind == Membership::Kind::Gen || x.kind == Membership::Kind::Pres) &&
      !sameAlgebra(x.u->algebra(), alg))
    throw AlgebraMismatch("membership class over a different algebra");
  auto r = newReport(coresolving ? "weakly-coresolving" : "weakly-resolving",
                     coresolving ? "the class " + x.name() + " is weakly coresolving"
                                 : "the class " + x.name() + " is weakly resolving",
                     spec);
  ConditionResult proj;
  proj.name = "contains-projectives";
  proj.statement = "every projective lies in the class";
  projectivesContained(alg, x, proj, r.witnesses);
  r.conditions.push_back(std::move(proj));

  const ConditionDef def =
      coresolving
          ? ConditionDef{"closed-under-cokernels-of-p-monos",
                         "the cokernel of every monomorphism between objects of the class along "
                         "which maps to projectives extend lies in the class"}
          : ConditionDef{"closed-under-kernels-of-epis",
                         "the kernel of every epimorphism between objects of the class lies in "
                         "the class"};
  std::vector<int> skipped(spec.count, 0);
  CheckReport sampled;
  runSampled(sampled, {def}, spec.count, [&](std::size_t i) {
    Rng rng = stream(spec, coresolving ? 7 : 8, i);
    Rep a = sampleMember(alg, x, spec, rng);
    Rep b = sampleMember(alg, x, spec, rng);
    if (!x.contains(a) || !x.contains(b)) {
      skipped[i] = 1;
      return std::vector<Outcome>{Outcome{}};
    }
    Mor f0 = sampleMor(a, b, rng);
    Mor m;
    if (coresolving) {
      Mor h = projectivePreenvelope(a);
      auto target = directSum(alg, {b, h.codomain()});
      m = toSum(target, {f0, h}, a);
      if (!x.contains(target.object)) {
        skipped[i] = 2;
        return std::vector<Outcome>{Outcome{}};
      }
      if (!isMono(m)) {
        skipped[i] = 3;
        return std::vector<Outcome>{Outcome{}};
      }
    } else {
      auto cover = projectiveCover(b);
      auto source = directSum(alg, {a, cover.object});
      m = fromSum(source, {f0, cover.cover}, b);
      if (!x.contains(source.object)) {
        skipped[i] = 2;
        return std::vector<Outcome>{Outcome{}};
      }
    }
    Rep result = coresolving ? cokernel(m).object : kernel(m).object;
    if (x.contains(result)) return std::vector<Outcome>{held()};
    Witness w;
    w.predicate = coresolving ? "cokernel-of-p-mono-not-member" : "kernel-of-p-epi-not-member";
    w.morphisms = {m};
    w.variant = x.name();
    w.detail = std::string(coresolving ? "the cokernel" : "the kernel") +
               " has dimension vector " + dimVector(result) + " and is not in the class";
    return std::vector<Outcome>{violated(std::move(w))};
  });
  for (auto& c : sampled.conditions) {
    if (c.witness) *c.witness += r.witnesses.size();
    r.conditions.push_back(std::move(c));
  }
  for (auto& w : sampled.witnesses) r.witnesses.push_back(std::move(w));
  auto count = [&](int k) {
    return static_cast<std::size_t>(std::count(skipped.begin(), skipped.end(), k));
  };
  r.census = {{"morphisms", spec.count},
              {"skipped-endpoint-not-member", count(1)},
              {"skipped-sum-not-member", count(2)},
              {"skipped-not-mono", count(3)}};
  return r;
}

}  // namespace

CheckReport isWeaklyCoresolvingSample(const AlgebraPtr& algebra, const Membership& x,
                                      const SampleSpec& spec) {
  return closureCheck(algebra, x, spec, true);
}

CheckReport isWeaklyResolvingSample(const AlgebraPtr& algebra, const Membership& x,
                                    const SampleSpec& spec) {
  return closureCheck(algebra, x, spec, false);
}

CheckReport dualCheck(const CovariantCheck& check, const AlgebraPtr& b, const std::vector<Rep>& v,
                      const SampleSpec& spec) {
  AlgebraPtr op = oppositeAlgebra(b);
  std::vector<Rep> dv;
  for (const auto& x : v) dv.push_back(dualize(x, op));
  USet u(std::move(dv));
  ObjectSampler sampler = [b, op, spec](std::size_t i) {
    return dualize(sampleRep(b, spec, i), op);
  };
  auto r = check(u, spec, sampler);
  r.check = "dual-" + r.check;
  return r;
}

}  // namespace coreflect
