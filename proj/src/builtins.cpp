#include "coreflect/builtins.hpp"

#include "coreflect/error.hpp"

namespace coreflect {

AlgebraSpec glpSpec(const Field& f) {
  AlgebraSpec s;
  s.field = f;
  s.quiver.vertices = {"1", "2"};
  s.quiver.arrows = {{"beta", 0, 1}, {"alpha", 1, 0}};
  s.relations.push_back(Relation::make(s.quiver, {{Scalar::one(f), {0, 1}}}));
  s.nilBound = 4;
  return s;
}

AlgebraSpec a2Spec(const Field& f) {
  AlgebraSpec s;
  s.field = f;
  s.quiver.vertices = {"1", "2"};
  s.quiver.arrows = {{"a", 0, 1}};
  s.nilBound = 2;
  return s;
}

AlgebraSpec semisimpleSpec(const Field& f) {
  AlgebraSpec s;
  s.field = f;
  s.quiver.vertices = {"1", "2"};
  s.nilBound = 1;
  return s;
}

std::vector<std::string> builtinNames() { return {"glp", "a2", "semisimple"}; }

AlgebraSpec builtinSpec(const std::string& name, const Field& f) {
  if (name == "glp") return glpSpec(f);
  if (name == "a2") return a2Spec(f);
  if (name == "semisimple") return semisimpleSpec(f);
  throw Error("unknown built-in algebra '" + name + "'");
}

}  // namespace coreflect
