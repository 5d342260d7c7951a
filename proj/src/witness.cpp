#include "coreflect/witness.hpp"

#include "coreflect/error.hpp"
#include "coreflect/projective.hpp"

namespace coreflect {

namespace {

struct Refuted {
  std::string why;
};

void require(bool ok, const std::string& why) {
  if (!ok) throw Refuted{why};
}

const std::vector<Rep>& members(const std::vector<Rep>& u) {
  require(!u.empty(), "the witness needs the USet members");
  return u;
}

// The canonical map into a: one copy of U per Hom basis element.
Mor canonicalMap(const std::vector<Rep>& u, const Rep& a) {
  std::vector<Rep> parts;
  std::vector<Mor> comps;
  for (const auto& x : members(u))
    for (const auto& b : homBasis(x, a)) {
      parts.push_back(x);
      comps.push_back(b);
    }
  return fromSum(directSum(a.algebra(), parts), comps, a);
}

bool generated(const std::vector<Rep>& u, const Rep& a) { return isEpi(canonicalMap(u, a)); }

SubRep traceOf(const std::vector<Rep>& u, const Rep& a) { return imageSub(canonicalMap(u, a)); }

SubRep secondTraceOf(const std::vector<Rep>& u, const Rep& a) {
  auto q = quotient(traceOf(u, a));
  return preimageSub(q.map, traceOf(u, q.object));
}

bool passesCanonicalTest(const std::vector<Rep>& u, const Rep& a) {
  Mor e = canonicalMap(u, a);
  return isEpi(e) && generated(u, kernel(e).object);
}

Rep sumOf(const std::vector<Rep>& u, const std::vector<std::size_t>& mult, const AlgebraPtr& alg) {
  require(mult.size() == members(u).size(), "a multiplicity vector has the wrong length");
  std::vector<Rep> parts;
  for (std::size_t j = 0; j < u.size(); ++j)
    for (std::size_t k = 0; k < mult[j]; ++k) parts.push_back(u[j]);
  return directSum(alg, parts).object;
}

void requireShape(const Witness& w, std::size_t objects, std::size_t morphisms, std::size_t sums) {
  require(w.objects.size() == objects && w.morphisms.size() == morphisms && w.sums.size() == sums,
          "the witness data does not have the shape its predicate expects");
}

const Rep& memberAt(const std::vector<Rep>& u, const Witness& w) {
  require(w.member && *w.member < members(u).size(), "the witness names no valid member");
  return u[*w.member];
}

bool inClass(const std::string& cls, const std::vector<Rep>& u, const Rep& m) {
  if (cls == "all") return true;
  if (cls == "zero") return m.isZero();
  if (cls == "gen") return generated(u, m);
  if (cls == "pres") return passesCanonicalTest(u, m);
  throw Refuted{"unknown membership class '" + cls + "'"};
}

std::string replay(const Witness& w, const std::vector<Rep>& u) {
  const std::string& p = w.predicate;

  if (p == "kernel-not-generated") {
    requireShape(w, 0, 1, 2);
    const Mor& g = w.morphisms[0];
    const auto& alg = g.domain().algebra();
    require(g.domain() == sumOf(u, w.sums[0], alg), "the domain is not the stated sum of members");
    require(g.codomain() == sumOf(u, w.sums[1], alg), "the codomain is not the stated sum of members");
    Rep k = kernel(g).object;
    require(!generated(u, k), "the kernel is generated");
    return "the kernel (" + dimVector(k) + ") has trace of dimension " +
           std::to_string(traceOf(u, k).totalDim());
  }

  if (p == "subobject-not-generated") {
    requireShape(w, 0, 1, 1);
    const Mor& m = w.morphisms[0];
    require(m.codomain() == sumOf(u, w.sums[0], m.domain().algebra()),
            "the ambient object is not the stated sum of members");
    require(isMono(m), "the map is not a monomorphism");
    require(!generated(u, m.domain()), "the subobject is generated");
    return "the subobject (" + dimVector(m.domain()) + ") has trace of dimension " +
           std::to_string(traceOf(u, m.domain()).totalDim());
  }

  if (p == "hom-to-kernel-quotient-nonzero") {
    requireShape(w, 1, 0, 0);
    require(w.variant == "tr" || w.variant == "tr2", "the variant must be tr or tr2");
    Rep k = kernel(canonicalMap(u, w.objects[0])).object;
    auto sub = w.variant == "tr" ? traceOf(u, k) : secondTraceOf(u, k);
    Rep q = quotient(sub).object;
    const std::size_t d = homBasis(memberAt(u, w), q).size();
    require(d > 0, "the Hom space vanishes");
    return "Hom(U, Ker eps_A / " + w.variant + ") has dimension " + std::to_string(d);
  }

  if (p == "pres-candidate-not-member") {
    requireShape(w, 1, 0, 0);
    auto k = kernel(canonicalMap(u, w.objects[0]));
    Rep c = quotient(imageOfSub(k.map, secondTraceOf(u, k.object))).object;
    require(!passesCanonicalTest(u, c), "the candidate passes the canonical test");
    return "U_A / tr2(Ker eps_A) (" + dimVector(c) + ") fails the canonical test";
  }

  if (p == "induced-map-not-bijective") {
    requireShape(w, 0, 2, 3);
    const Mor& g = w.morphisms[0];
    const Mor& h = w.morphisms[1];
    const auto& alg = g.domain().algebra();
    require(g.domain() == sumOf(u, w.sums[0], alg), "dom g is not the stated sum of members");
    require(h.domain() == sumOf(u, w.sums[1], alg), "dom h is not the stated sum of members");
    require(h.codomain() == sumOf(u, w.sums[2], alg), "cod h is not the stated sum of members");
    require(g.codomain() == cokernel(h).object, "cod g is not the cokernel of h");
    auto k = kernel(g);
    auto q = quotient(imageOfSub(k.map, traceOf(u, k.object)));
    auto im = image(g);
    auto gbar = factorThroughSource(im.epi, q.map);
    require(gbar.has_value(), "g does not vanish on the trace of its kernel");
    const Rep& x = memberAt(u, w);
    auto from = homSpace(x, gbar->domain());
    auto to = homSpace(x, gbar->codomain());
    const std::size_t r = rank(postComposeMatrix(from, to, *gbar));
    require(!(from.dim() == to.dim() && r == from.dim()), "Hom(U, gbar) is bijective");
    return "Hom(U, gbar) has rank " + std::to_string(r) + " between dimensions " +
           std::to_string(from.dim()) + " and " + std::to_string(to.dim());
  }

  if (p == "canonical-kernel-not-generated") {
    requireShape(w, 0, 1, 2);
    const Mor& h = w.morphisms[0];
    const auto& alg = h.domain().algebra();
    require(h.domain() == sumOf(u, w.sums[0], alg), "dom h is not the stated sum of members");
    require(h.codomain() == sumOf(u, w.sums[1], alg), "cod h is not the stated sum of members");
    Rep b = cokernel(h).object;
    Rep k = kernel(canonicalMap(u, b)).object;
    require(!generated(u, k), "Ker eps_B is generated");
    return "Ker eps_B (" + dimVector(k) + ") is not generated";
  }

  if (p == "not-u-epi") {
    requireShape(w, 0, 1, 1);
    const Mor& q = w.morphisms[0];
    require(q.domain() == sumOf(u, w.sums[0], q.domain().algebra()),
            "the domain is not the stated sum of members");
    require(isEpi(q), "the map is not an epimorphism");
    const Rep& x = memberAt(u, w);
    auto to = homSpace(x, q.codomain());
    auto from = homSpace(x, q.domain());
    const std::size_t r = rank(postComposeMatrix(from, to, q));
    require(r < to.dim(), "Hom(U, q) is surjective");
    return "Hom(U, q) has rank " + std::to_string(r) + " onto dimension " + std::to_string(to.dim());
  }

  if (p == "cokernel-not-presented") {
    requireShape(w, 0, 3, 4);
    const Mor& hb = w.morphisms[0];
    const Mor& hc = w.morphisms[1];
    const Mor& f = w.morphisms[2];
    const auto& alg = f.domain().algebra();
    require(hb.domain() == sumOf(u, w.sums[0], alg) && hb.codomain() == sumOf(u, w.sums[1], alg) &&
                hc.domain() == sumOf(u, w.sums[2], alg) && hc.codomain() == sumOf(u, w.sums[3], alg),
            "the presentations are not maps between the stated sums of members");
    require(f.domain() == cokernel(hb).object, "dom f is not the first presented object");
    require(f.codomain() == cokernel(hc).object, "cod f is not the second presented object");
    Rep c = cokernel(f).object;
    require(!passesCanonicalTest(u, c), "the cokernel passes the canonical test");
    return "the cokernel (" + dimVector(c) + ") fails the canonical test";
  }

  if (p == "projective-not-member") {
    requireShape(w, 1, 0, 0);
    const Rep& pr = w.objects[0];
    require(w.member && *w.member < pr.vertexCount(), "the witness names no vertex");
    require(pr == projectiveModule(pr.algebra(), *w.member),
            "the object is not the indecomposable projective at the named vertex");
    require(!inClass(w.variant, u, pr), "the projective lies in the class");
    return "the projective (" + dimVector(pr) + ") is not in the class " + w.variant;
  }

  if (p == "cokernel-of-p-mono-not-member" || p == "kernel-of-p-epi-not-member") {
    requireShape(w, 0, 1, 0);
    const Mor& m = w.morphisms[0];
    require(inClass(w.variant, u, m.domain()), "the domain is not in the class");
    require(inClass(w.variant, u, m.codomain()), "the codomain is not in the class");
    Rep result;
    if (p == "cokernel-of-p-mono-not-member") {
      require(isMono(m), "the map is not a monomorphism");
      const auto& alg = m.domain().algebra();
      for (std::size_t v = 0; v < alg->vertexCount(); ++v) {
        Rep pr = projectiveModule(alg, v);
        auto from = homSpace(m.codomain(), pr);
        auto to = homSpace(m.domain(), pr);
        require(rank(preComposeMatrix(from, to, m)) == to.dim(),
                "some map to a projective does not extend along the monomorphism");
      }
      result = cokernel(m).object;
    } else {
      require(isEpi(m), "the map is not an epimorphism");
      result = kernel(m).object;
    }
    require(!inClass(w.variant, u, result), "the result lies in the class");
    return "the " + std::string(p[0] == 'c' ? "cokernel" : "kernel") + " (" + dimVector(result) +
           ") is not in the class " + w.variant;
  }

  throw Refuted{"unknown predicate '" + p + "'"};
}

}  // namespace

Replay verifyWitness(const Witness& w, const std::vector<Rep>& u) {
  try {
    return {true, replay(w, u)};
  } catch (const Refuted& r) {
    return {false, r.why};
  } catch (const InvariantViolation&) {
    throw;
  } catch (const Error& e) {
    return {false, e.what()};
  }
}

}  // namespace coreflect
