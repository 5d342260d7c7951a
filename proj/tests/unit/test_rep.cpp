#include "doctest.h"

#include "coreflect/builtins.hpp"
#include "coreflect/error.hpp"
#include "coreflect/projective.hpp"
#include "coreflect/sample.hpp"

using namespace coreflect;

namespace {

const Field F5 = Field::prime(5);
const Field Q = Field::rationals();

struct A2 {
  AlgebraPtr alg;
  Rep p1, p2, s1, s2;
  explicit A2(const Field& f) : alg(Algebra::create(a2Spec(f))) {
    p1 = projectiveModule(alg, 0);
    p2 = projectiveModule(alg, 1);
    s1 = simpleModule(alg, 0);
    s2 = simpleModule(alg, 1);
  }
};

// The morphism P1 -> S1 that is the identity at vertex 1.
Mor topProjection(const A2& a) {
  return Mor(a.p1, a.s1, {Mat::identity(a.alg->field(), 1), Mat(a.alg->field(), 0, 1)});
}

}  // namespace

TEST_CASE("A2 projectives and simples") {
  A2 a(Q);
  CHECK(a.p1.dims() == std::vector<std::size_t>{1, 1});
  CHECK(a.p2.dims() == std::vector<std::size_t>{0, 1});
  CHECK(a.p2 == a.s2);
  CHECK(validate(a.p1).empty());
  CHECK(validate(Rep::zero(a.alg)).empty());
}

TEST_CASE("relation violations are reported") {
  auto glp = Algebra::create(glpSpec(Q));
  Rep bad(glp, {1, 1}, {Mat::identity(Q, 1), Mat::identity(Q, 1)});
  auto v = validate(bad);
  REQUIRE(v.size() == 1);
  CHECK(v[0] == "beta*alpha");
}

TEST_CASE("morphism naturality is enforced") {
  A2 a(Q);
  // Identity at vertex 2 only: not natural P1 -> P1.
  CHECK_THROWS_AS(Mor(a.p1, a.p1, {Mat(Q, 1, 1), Mat::identity(Q, 1)}), InvariantViolation);
}

TEST_CASE("A2 Hom dimensions") {
  A2 a(Q);
  CHECK(homSpace(a.s1, a.s2).dim() == 0);
  CHECK(homSpace(a.p1, a.s2).dim() == 0);
  CHECK(homSpace(a.s2, a.p1).dim() == 1);
  CHECK(homSpace(a.p1, a.s1).dim() == 1);
  CHECK(homSpace(a.p1, a.p1).dim() == 1);
  auto h = homSpace(a.p1, a.p1);
  CHECK(h.coordinates(Mor::identity(a.p1)).rows() == 1);
}

TEST_CASE("hom spaces across algebras are rejected") {
  A2 a(Q), b(Q);
  auto g = Algebra::create(glpSpec(Q));
  CHECK_THROWS_AS(homSpace(a.p1, projectiveModule(g, 0)), AlgebraMismatch);
  // Equal specifications count as the same algebra.
  CHECK(homSpace(a.p1, b.p1).dim() == 1);
}

TEST_CASE("kernels, cokernels and images") {
  A2 a(Q);
  auto id = Mor::identity(a.p1);
  CHECK(kernel(id).object.isZero());
  CHECK(cokernel(id).object.isZero());
  auto z = Mor::zero(a.p1, a.s1);
  CHECK(kernel(z).object.dims() == a.p1.dims());
  CHECK(cokernel(z).object.dims() == a.s1.dims());
  auto k = kernel(topProjection(a));
  CHECK(k.object.dims() == std::vector<std::size_t>{0, 1});
  CHECK(findIso(k.object, a.s2).status == IsoSearch::Status::Found);
  auto im = image(topProjection(a));
  CHECK(im.mono * im.epi == topProjection(a));
  CHECK(isMono(im.mono));
  CHECK(isEpi(im.epi));
}

TEST_CASE("direct sums and pullbacks") {
  A2 a(Q);
  auto s0 = directSum(a.alg, {});
  CHECK(s0.object.isZero());
  auto f = topProjection(a);
  auto pb = pullback(f, Mor::identity(a.s1));
  CHECK(pb.object.dims() == a.p1.dims());
  CHECK(pb.p1 * Mor::identity(pb.object) == pb.p1);
  CHECK(isIsomorphism(pb.p1));
  CHECK(pb.p2 == f * pb.p1);
  auto pb2 = pullback(f, f);
  // dim PB = dim P1 + dim P1 - dim Im f = 2 + 2 - 1.
  CHECK(pb2.object.totalDim() == 3);
  CHECK(pb2.object.dims() == std::vector<std::size_t>{1, 2});
  CHECK(f * pb2.p1 == f * pb2.p2);
  auto po = pushout(Mor::identity(a.p1), f);
  CHECK(po.object.dims() == a.s1.dims());
}

TEST_CASE("duality") {
  A2 a(Q);
  auto op = oppositeAlgebra(a.alg);
  auto d1 = dualize(a.p1, op);
  CHECK(d1.dims() == a.p1.dims());
  // D(P1) is the injective at 1 of the opposite algebra, which is its projective at 2.
  CHECK(findIso(d1, projectiveModule(op, 1)).status == IsoSearch::Status::Found);
  CHECK(findIso(dualize(a.s1, op), simpleModule(op, 0)).status == IsoSearch::Status::Found);
  auto id = Mor::identity(a.p1);
  CHECK(dualize(id, d1, d1) == Mor::identity(d1));
  auto back = dualize(d1, oppositeAlgebra(op));
  CHECK(findIso(back, a.p1).status == IsoSearch::Status::Found);
}

TEST_CASE("findIso") {
  A2 a(F5);
  auto self = findIso(a.p1, a.p1);
  CHECK(self.status == IsoSearch::Status::Found);
  CHECK(findIso(a.s1, a.s2).status == IsoSearch::Status::NotIsomorphic);
  // S1 + S2 and P1 share dimension vectors but are not isomorphic.
  auto ss = directSum(a.alg, {a.s1, a.s2}).object;
  CHECK(findIso(ss, a.p1).status == IsoSearch::Status::NotIsomorphic);
}

TEST_CASE("radical, Loewy length and projective covers") {
  A2 a(Q);
  CHECK(loewyLength(a.p1) == 2);
  CHECK(loewyLength(a.s1) == 1);
  CHECK(radicalSub(a.s1).isZero());
  auto c = projectiveCover(a.s1);
  CHECK(c.object.dims() == a.p1.dims());
  CHECK(isEpi(c.cover));
  auto cp = projectiveCover(a.p1);
  CHECK(isIsomorphism(cp.cover));
  auto cz = projectiveCover(Rep::zero(a.alg));
  CHECK(cz.object.isZero());

  auto glp = Algebra::create(glpSpec(F5));
  auto e1 = projectiveModule(glp, 0);
  auto e2 = projectiveModule(glp, 1);
  CHECK(e1.totalDim() == 2);
  CHECK(e2.totalDim() == 3);
  CHECK(loewyLength(e2) == 3);
  CHECK(loewyLength(e1) == 2);
  auto cs2 = projectiveCover(simpleModule(glp, 1));
  CHECK(findIso(cs2.object, e2).status == IsoSearch::Status::Found);
}

TEST_CASE("kernel and cokernel universal properties on samples") {
  for (const auto& spec : {glpSpec(F5), a2Spec(Q)}) {
    auto alg = Algebra::create(spec);
    SampleSpec ss{20, 2, 2, 11};
    for (std::size_t i = 0; i < ss.count; ++i) {
      Rng rng = Rng::derive(ss.seed, i);
      Rep m = sampleRep(alg, ss, rng);
      Rep n = sampleRep(alg, ss, rng);
      Mor f = sampleMor(m, n, rng);
      auto k = kernel(f);
      CHECK((f * k.map).isZero());
      CHECK(isMono(k.map));
      auto c = cokernel(f);
      CHECK((c.map * f).isZero());
      CHECK(isEpi(c.map));
      CHECK(c.object.totalDim() == n.totalDim() - image(f).object.totalDim());
      // A test morphism killed by f factors uniquely through the kernel.
      Rep x = sampleRep(alg, ss, rng);
      Mor t = k.map * sampleMor(x, k.object, rng);
      auto s = factorThrough(t, k.map);
      REQUIRE(s);
      CHECK(k.map * *s == t);
      Mor u = sampleMor(c.object, x, rng) * c.map;
      auto r = factorThroughSource(u, c.map);
      REQUIRE(r);
      CHECK(*r * c.map == u);
      auto im = image(f);
      CHECK(im.mono * im.epi == f);
      CHECK(validate(k.object).empty());
      CHECK(validate(c.object).empty());
      // Pullback bookkeeping.
      Rep y = sampleRep(alg, ss, rng);
      Mor g = sampleMor(y, n, rng);
      auto pb = pullback(f, g);
      auto s2 = directSum(alg, {m, y});
      auto joint = image(fromSum(s2, {f, g}, n)).object;
      CHECK(pb.object.totalDim() == m.totalDim() + y.totalDim() - joint.totalDim());
      CHECK(f * pb.p1 == g * pb.p2);
    }
  }
}

TEST_CASE("double dual of samples") {
  auto alg = Algebra::create(glpSpec(F5));
  auto op = oppositeAlgebra(alg);
  auto opop = oppositeAlgebra(op);
  SampleSpec ss{15, 2, 2, 3};
  for (std::size_t i = 0; i < ss.count; ++i) {
    Rep m = sampleRep(alg, ss, i);
    Rep dd = dualize(dualize(m, op), opop);
    CHECK(findIso(dd, Rep(alg, m.dims(), m.arrows())).status == IsoSearch::Status::Found);
  }
}

TEST_CASE("sampling is deterministic") {
  auto alg = Algebra::create(glpSpec(F5));
  SampleSpec ss{1, 1, 1, 1};
  CHECK(sampleRep(alg, ss, 0) == sampleRep(alg, ss, 0));
  SampleSpec none{1, 2, 0, 5};
  CHECK(isProjective(sampleRep(alg, none, 0)));
}
