#include "doctest.h"

#include "coreflect/algebra.hpp"
#include "coreflect/error.hpp"

using namespace coreflect;

namespace {

AlgebraSpec quiverSpec(const Field& f, std::vector<std::string> vertices, std::vector<Arrow> arrows,
                       std::size_t bound) {
  AlgebraSpec s;
  s.field = f;
  s.quiver.vertices = std::move(vertices);
  s.quiver.arrows = std::move(arrows);
  s.nilBound = bound;
  return s;
}

Relation monomial(const Quiver& q, std::vector<std::size_t> arrows) {
  return Relation::make(q, {{Scalar::one(Field::rationals()), std::move(arrows)}});
}

}  // namespace

TEST_CASE("path basis of a single vertex") {
  auto s = quiverSpec(Field::rationals(), {"1"}, {}, 1);
  CHECK(pathBasis(s).size() == 1);
}

TEST_CASE("path basis of A2") {
  auto s = quiverSpec(Field::rationals(), {"1", "2"}, {{"a", 0, 1}}, 2);
  auto b = pathBasis(s);
  CHECK(b.size() == 3);
  CHECK(b.indexOf(Path{0, 1, {0}}).has_value());
}

TEST_CASE("path basis of the two-cycle with one zero relation") {
  auto s = quiverSpec(Field::rationals(), {"1", "2"}, {{"beta", 0, 1}, {"alpha", 1, 0}}, 4);
  s.relations.push_back(monomial(s.quiver, {0, 1}));
  auto b = pathBasis(s);
  CHECK(b.size() == 5);
  // alpha*beta survives, beta*alpha does not.
  CHECK(b.indexOf(Path{1, 1, {1, 0}}).has_value());
  CHECK(b.normalForm(Path{0, 0, {0, 1}}).empty());
  CHECK(b.between(1, 1).size() == 2);
}

TEST_CASE("insufficient nil bound is reported") {
  auto s = quiverSpec(Field::rationals(), {"1"}, {{"x", 0, 0}}, 3);
  CHECK_THROWS_AS(pathBasis(s), NotFiniteDimensionalAtBound);
  s.relations.push_back(monomial(s.quiver, {0, 0, 0}));
  CHECK(pathBasis(s).size() == 3);
}

TEST_CASE("commutativity relation identifies parallel paths") {
  // Commutative square 1 -> 2 -> 4, 1 -> 3 -> 4 with ab = cd.
  auto s = quiverSpec(Field::prime(5), {"1", "2", "3", "4"},
                      {{"a", 0, 1}, {"b", 1, 3}, {"c", 0, 2}, {"d", 2, 3}}, 3);
  auto one = Scalar::one(s.field);
  s.relations.push_back(Relation::make(s.quiver, {{one, {0, 1}}, {-one, {2, 3}}}));
  auto b = pathBasis(s);
  CHECK(b.size() == 4 + 4 + 1);
  auto ab = b.normalForm(Path{0, 3, {0, 1}});
  auto cd = b.normalForm(Path{0, 3, {2, 3}});
  CHECK(ab == cd);
}

TEST_CASE("multiplication table is associative") {
  auto s = quiverSpec(Field::rationals(), {"1", "2"}, {{"beta", 0, 1}, {"alpha", 1, 0}}, 4);
  s.relations.push_back(monomial(s.quiver, {0, 1}));
  auto b = pathBasis(s);
  const Field f = s.field;
  auto times = [&](const PathBasis::Sparse& x, std::size_t j) {
    std::map<std::size_t, Scalar> acc;
    for (const auto& [i, c] : x)
      for (const auto& [k, d] : b.multiply(i, j)) {
        auto it = acc.try_emplace(k, Scalar::zero(f)).first;
        it->second += c * d;
      }
    return acc;
  };
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      for (std::size_t k = 0; k < b.size(); ++k) {
        auto left = times(b.multiply(i, j), k);
        std::map<std::size_t, Scalar> right;
        for (const auto& [m, c] : b.multiply(j, k)) {
          for (const auto& [n, d] : b.multiply(i, m)) {
            auto it = right.try_emplace(n, Scalar::zero(f)).first;
            it->second += c * d;
          }
        }
        std::erase_if(left, [](const auto& e) { return e.second.isZero(); });
        std::erase_if(right, [](const auto& e) { return e.second.isZero(); });
        CHECK(left == right);
      }
}

TEST_CASE("relation validation") {
  Quiver q{{"1", "2"}, {{"a", 0, 1}, {"b", 0, 1}}};
  auto one = Scalar::one(Field::rationals());
  CHECK_THROWS_AS(Relation::make(q, {{one, {0, 1}}}), Error);
  CHECK_THROWS_AS(Relation::make(q, {{one, {0}}}), Error);
  Quiver dup{{"1", "1"}, {}};
  CHECK_THROWS_AS(dup.validate(), Error);
}

TEST_CASE("opposite reverses arrows and relation paths") {
  auto s = quiverSpec(Field::rationals(), {"1", "2"}, {{"beta", 0, 1}, {"alpha", 1, 0}}, 4);
  s.relations.push_back(monomial(s.quiver, {0, 1}));
  auto op = s.opposite();
  CHECK(op.quiver.arrows[0].source == 1);
  CHECK(op.relations[0].terms[0].arrows == std::vector<std::size_t>{1, 0});
  CHECK(op.opposite() == s);
  CHECK(pathBasis(op).size() == 5);
}
