#include "coreflect/trace.hpp"

#include "coreflect/error.hpp"
#include "coreflect/random.hpp"

namespace coreflect {

USet::USet(std::vector<Rep> items) : items_(std::move(items)) {
  if (items_.empty()) throw Error("USet: at least one member required");
  for (const auto& r : items_) {
    if (r.isZero()) throw Error("USet: members must be nonzero");
    if (!sameAlgebra(r.algebra(), items_.front().algebra()))
      throw AlgebraMismatch("USet: members over different algebras");
  }
  for (const auto& a : items_)
    for (const auto& b : items_) homs_.push_back(homSpace(a, b));
}

USum uSum(const USet& u, const std::vector<std::size_t>& multiplicities) {
  if (multiplicities.size() != u.size())
    throw DimensionMismatch("uSum: one multiplicity per member required");
  USum out;
  std::vector<Rep> parts;
  for (std::size_t k = 0; k < u.size(); ++k)
    for (std::size_t m = 0; m < multiplicities[k]; ++m) {
      parts.push_back(u[k]);
      out.members.push_back(k);
    }
  out.sum = directSum(u.algebra(), parts);
  return out;
}

Mor sampleUSumMor(const USet& u, const USum& from, const USum& to, Rng& rng) {
  Mor out = Mor::zero(from.object(), to.object());
  for (std::size_t i = 0; i < from.members.size(); ++i)
    for (std::size_t j = 0; j < to.members.size(); ++j) {
      const auto& h = u.hom(from.members[i], to.members[j]);
      if (h.dim() == 0) continue;
      Mor block = sampleMor(h, rng);
      if (rng.uniform(0, 1) == 0) {
        const auto k = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(h.dim()) - 1));
        block = h[k].scaled(rng.nonzeroScalar(u.field()));
      }
      out = out + to.sum.injections[j] * block * from.sum.projections[i];
    }
  return out;
}

SubRep traceSub(const USet& u, const Rep& a) {
  const Field& f = a.field();
  std::vector<Subspace> spaces;
  std::vector<Mat> gens;
  for (std::size_t v = 0; v < a.vertexCount(); ++v) gens.emplace_back(f, a.dim(v), 0);
  for (const auto& x : u.items()) {
    if (!sameAlgebra(x.algebra(), a.algebra())) throw AlgebraMismatch("traceSub: mixed algebras");
    auto h = homSpace(x, a);
    for (const auto& b : h.basis())
      for (std::size_t v = 0; v < a.vertexCount(); ++v) gens[v] = Mat::hstack(gens[v], b.at(v));
  }
  for (std::size_t v = 0; v < a.vertexCount(); ++v) spaces.push_back(imageSpace(gens[v]));
  return SubRep(a, std::move(spaces));
}

SubRep trace2Sub(const USet& u, const Rep& a) {
  auto q = quotient(traceSub(u, a));
  return preimageSub(q.map, traceSub(u, q.object));
}

bool inGen(const USet& u, const Rep& a) { return traceSub(u, a).isFull(); }

bool isUEpi(const USet& u, const Mor& f) {
  for (const auto& x : u.items()) {
    auto target = homSpace(x, f.codomain());
    if (target.dim() == 0) continue;
    auto source = homSpace(x, f.domain());
    if (rank(postComposeMatrix(source, target, f)) != target.dim()) return false;
  }
  return true;
}

PrecoverData canonicalEps(const USet& u, const Rep& a) {
  PrecoverData out;
  out.kind = PrecoverData::Kind::SumU;
  std::vector<Rep> parts;
  std::vector<Mor> components;
  for (const auto& x : u.items()) {
    auto h = homSpace(x, a);
    out.multiplicities.push_back(h.dim());
    for (const auto& b : h.basis()) {
      parts.push_back(x);
      components.push_back(b);
    }
  }
  auto s = directSum(a.algebra(), parts);
  out.morphism = fromSum(s, components, a);
  return out;
}

bool checkPresentation(const Presentation& p) {
  if (!(p.presentation.codomain() == p.epi.domain())) return false;
  if (!isEpi(p.epi)) return false;
  if (!(p.epi * p.presentation).isZero()) return false;
  return imageSub(p.presentation) == kernelSub(p.epi);
}

namespace {

// U_K -> K -> U_A, whose image is tr(Ker eps_A).
Mor kernelTraceGenerator(const USet& u, const RepWithMor& k) {
  auto epsK = canonicalEps(u, k.object);
  return k.map * epsK.morphism;
}

}  // namespace

PresPrecover presPrecover(const USet& u, const Rep& a) {
  auto eps = canonicalEps(u, a);
  auto k = kernel(eps.morphism);
  Mor gen = kernelTraceGenerator(u, k);
  auto c = cokernel(gen);
  auto induced = factorThroughSource(eps.morphism, c.map);
  if (!induced) throw InvariantViolation("presPrecover: eps does not vanish on tr(Ker eps)");
  PresPrecover out;
  out.data.kind = PrecoverData::Kind::PresU;
  out.data.morphism = *induced;
  out.data.multiplicities = eps.multiplicities;
  out.certificate = {gen, c.map};
  return out;
}

PresMembership inPresCanonical(const USet& u, const Rep& a) {
  PresMembership out;
  auto eps = canonicalEps(u, a);
  if (!isEpi(eps.morphism)) {
    out.verdict = PresMembership::Verdict::NotGenerated;
    return out;
  }
  auto k = kernel(eps.morphism);
  if (!inGen(u, k.object)) {
    out.verdict = PresMembership::Verdict::KernelNotGenerated;
    return out;
  }
  out.verdict = PresMembership::Verdict::Member;
  out.certificate = Presentation{kernelTraceGenerator(u, k), eps.morphism};
  return out;
}

std::string verdictName(PresMembership::Verdict v) {
  switch (v) {
    case PresMembership::Verdict::Member:
      return "member";
    case PresMembership::Verdict::NotGenerated:
      return "not-generated";
    case PresMembership::Verdict::KernelNotGenerated:
      return "kernel-not-generated";
  }
  return "unknown";
}

}  // namespace coreflect
