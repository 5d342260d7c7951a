#include "coreflect/coreflect.hpp"

#include "coreflect/error.hpp"

namespace coreflect {

std::string methodName(CoreflectionResult::Method m) {
  switch (m) {
    case CoreflectionResult::Method::Formula:
      return "formula";
    case CoreflectionResult::Method::Generic:
      return "generic";
    case CoreflectionResult::Method::Trace:
      return "trace";
  }
  return "unknown";
}

std::string statusName(GenericConstruction::Status s) {
  switch (s) {
    case GenericConstruction::Status::Ok:
      return "ok";
    case GenericConstruction::Status::CokernelNotPresented:
      return "cokernel-not-presented";
    case GenericConstruction::Status::LiftFailed:
      return "lift-failed";
    case GenericConstruction::Status::NotIdempotent:
      return "not-idempotent";
  }
  return "unknown";
}

CoreflectionResult coreflectorCandidate(const USet& u, const Rep& a) {
  auto eps = canonicalEps(u, a);
  auto k = kernel(eps.morphism);
  auto t2 = imageOfSub(k.map, trace2Sub(u, k.object));
  auto q = quotient(t2);
  auto counit = factorThroughSource(eps.morphism, q.map);
  if (!counit) throw InvariantViolation("coreflectorCandidate: eps does not vanish on tr^2(Ker eps)");
  CoreflectionResult out;
  out.target = q.object;
  out.counit = *counit;
  out.method = CoreflectionResult::Method::Formula;
  out.verified = isCoreflection(u, out.counit).ok;
  return out;
}

namespace {

std::vector<CoreflectionCheck::PerMember> homBijectivity(const USet& u, const Mor& p) {
  std::vector<CoreflectionCheck::PerMember> out;
  for (const auto& x : u.items()) {
    auto from = homSpace(x, p.domain());
    auto to = homSpace(x, p.codomain());
    CoreflectionCheck::PerMember m;
    m.homIntoDomain = from.dim();
    m.homIntoCodomain = to.dim();
    m.rank = rank(postComposeMatrix(from, to, p));
    out.push_back(m);
  }
  return out;
}

bool allBijective(const std::vector<CoreflectionCheck::PerMember>& v) {
  for (const auto& m : v)
    if (!m.bijective()) return false;
  return true;
}

}  // namespace

CoreflectionCheck isCoreflection(const USet& u, const Mor& p) {
  CoreflectionCheck out;
  out.members = homBijectivity(u, p);
  out.domainMembership = inPresCanonical(u, p.domain());
  out.ok = allBijective(out.members) && out.domainMembership.member();
  return out;
}

UniversalPropertyReport verifyUniversalProperty(const Mor& p, const std::vector<Rep>& testObjects) {
  UniversalPropertyReport out;
  for (std::size_t i = 0; i < testObjects.size(); ++i) {
    const Rep& b = testObjects[i];
    auto from = homSpace(b, p.domain());
    auto to = homSpace(b, p.codomain());
    Mat m = postComposeMatrix(from, to, p);
    ++out.tested;
    auto ns = nullSpace(m);
    if (ns.basis.cols() > 0) {
      out.ok = false;
      out.failingIndex = i;
      out.witness = from.combination(ns.basis.block(0, 0, ns.basis.rows(), 1));
      out.reason = "composition with p is not injective";
      return out;
    }
    if (from.dim() != to.dim()) {
      out.ok = false;
      out.failingIndex = i;
      for (std::size_t k = 0; k < to.dim(); ++k) {
        if (solveAll(m, to.coordinates(to[k]))) continue;
        out.witness = to[k];
        break;
      }
      out.reason = "a morphism into cod p does not factor through p";
      return out;
    }
  }
  return out;
}

CoreflectionResult genCoreflector(const USet& u, const Rep& a) {
  auto c = carrier(traceSub(u, a));
  CoreflectionResult out;
  out.target = c.object;
  out.counit = c.map;
  out.method = CoreflectionResult::Method::Trace;
  out.verified = allBijective(homBijectivity(u, c.map));
  return out;
}

GenericConstruction constructCoreflectionGeneric(const USet& u, const Rep& a) {
  using St = GenericConstruction::Status;
  GenericConstruction out;
  auto f = presPrecover(u, a).data.morphism;
  out.precover = f;
  auto k = kernel(f);
  auto g = presPrecover(u, k.object).data.morphism;
  auto c = cokernel(k.map * g);
  out.cokernelMap = c.map;
  if (!inPresCanonical(u, c.object).member()) {
    out.status = St::CokernelNotPresented;
    out.detail = "the cokernel of B' -> Ker f -> B fails the canonical Pres(U) test";
    return out;
  }
  auto h = factorThroughSource(f, c.map);
  if (!h) throw InvariantViolation("constructCoreflectionGeneric: f does not vanish on Im(k g)");
  auto lift = factorThrough(*h, f);
  if (!lift) {
    out.status = St::LiftFailed;
    out.detail = "the induced map C -> A does not lift through the precover";
    return out;
  }
  Mor e = *lift * c.map;
  out.idempotent = e;
  if (!(e * e == e)) {
    out.status = St::NotIdempotent;
    out.detail = "e = a c satisfies e^2 != e";
    return out;
  }

  const Rep& b = f.domain();
  const auto& q = b.algebra()->quiver();
  std::vector<Mat> us, vs;
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < b.vertexCount(); ++v) {
    auto [uv, vv] = splitIdempotent(e.at(v));
    dims.push_back(vv.cols());
    us.push_back(std::move(uv));
    vs.push_back(std::move(vv));
  }
  std::vector<Mat> arrows;
  for (std::size_t x = 0; x < q.arrows.size(); ++x)
    arrows.push_back(us[q.arrows[x].target] * b.arrow(x) * vs[q.arrows[x].source]);
  Rep image(b.algebra(), std::move(dims), std::move(arrows));
  Mor incl(image, b, std::move(vs));

  CoreflectionResult r;
  r.target = image;
  r.counit = f * incl;
  r.method = CoreflectionResult::Method::Generic;
  r.verified = isCoreflection(u, r.counit).ok;
  out.result = std::move(r);
  return out;
}

std::optional<Mor> comparisonIso(const CoreflectionResult& from, const CoreflectionResult& to) {
  auto t = factorThrough(from.counit, to.counit);
  if (!t) return std::nullopt;
  auto hom = homSpace(from.target, to.target);
  auto ends = homSpace(from.target, to.counit.codomain());
  if (rank(postComposeMatrix(hom, ends, to.counit)) != hom.dim()) return std::nullopt;
  if (!isIsomorphism(*t)) return std::nullopt;
  return t;
}

}  // namespace coreflect
