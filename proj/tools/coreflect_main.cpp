#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "coreflect/builtins.hpp"
#include "coreflect/checks.hpp"
#include "coreflect/coreflect.hpp"
#include "coreflect/error.hpp"
#include "coreflect/io.hpp"
#include "coreflect/projective.hpp"
#include "coreflect/report.hpp"
#include "coreflect/stable.hpp"
#include "coreflect/witness.hpp"

namespace fs = std::filesystem;
using namespace coreflect;
using io::Json;

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;
constexpr int kInternal = 3;

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Options {
  std::string algebra;
  std::string uset;
  std::vector<std::string> modules;
  std::string morphism;
  std::size_t samples = 50;
  std::uint64_t seed = 1;
  std::string mode = "sampled";
  std::string out;
  std::string format = "json";
  std::size_t maxMultiplicity = 3;
  std::size_t maxGenerators = 3;
  std::uint64_t exhaustiveBound = 4096;
  std::size_t times = 1;
  std::string field = "F5";
  std::string input;
};

struct Context {
  AlgebraSpec spec;
  AlgebraPtr algebra;
};

Context loadContext(const Options& o) {
  if (o.algebra.empty()) throw UsageError("--algebra is required");
  Context c;
  c.spec = io::loadAlgebraSpec(o.algebra);
  c.algebra = Algebra::create(c.spec);
  return c;
}

USet loadU(const Context& c, const Options& o) {
  if (o.uset.empty()) throw UsageError("--uset is required");
  return io::loadUSet(c.algebra, o.uset);
}

Rep module(const Context& c, const Options& o, std::size_t k) {
  if (o.modules.size() <= k)
    throw UsageError(k == 0 ? "--module is required" : "a second --module is required");
  return io::loadModule(c.algebra, o.modules[k]);
}

Mor morphism(const Context& c, const Options& o) {
  if (o.morphism.empty()) throw UsageError("--morphism is required");
  return io::morFromToml(c.algebra, io::readFile(o.morphism));
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
  } else {
    io::writeFile(o.out, text);
  }
}

bool json(const Options& o) { return o.format == "json"; }

Json document(const std::string& verb, const Context& c) {
  Json j;
  j["verb"] = verb;
  j["algebra"] = io::algebraToJson(c.spec);
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string comment(const std::string& line) { return "# " + line + "\n"; }

Json subJson(const SubRep& s) {
  Json dims = Json::array();
  for (const auto& sp : s.spaces()) dims.push_back(sp.dim());
  auto c = carrier(s);
  return {{"dims", std::move(dims)}, {"object", io::repToJson(c.object)},
          {"inclusion", io::morToJson(c.map)}};
}

int runHom(const Options& o) {
  auto c = loadContext(o);
  Rep m = module(c, o, 0);
  Rep n = module(c, o, 1);
  auto basis = homBasis(m, n);
  if (json(o)) {
    Json j = document("hom", c);
    j["dim"] = basis.size();
    Json arr = Json::array();
    for (const auto& b : basis) arr.push_back(io::morToJson(b));
    j["basis"] = std::move(arr);
    emit(o, dump(j));
  } else {
    std::string t = comment("dim Hom(M, N) = " + std::to_string(basis.size()));
    for (std::size_t k = 0; k < basis.size(); ++k)
      t += "\n" + comment("basis morphism " + std::to_string(k)) + io::morToToml(basis[k]);
    emit(o, t);
  }
  return kOk;
}

int runKernelOrCokernel(const Options& o, bool isKernel) {
  auto c = loadContext(o);
  Mor f = morphism(c, o);
  auto r = isKernel ? kernel(f) : cokernel(f);
  const std::string verb = isKernel ? "kernel" : "cokernel";
  if (json(o)) {
    Json j = document(verb, c);
    j["object"] = io::repToJson(r.object);
    j["map"] = io::morToJson(r.map);
    emit(o, dump(j));
  } else {
    emit(o, comment(verb + " (" + dimVector(r.object) + ") with its " +
                    (isKernel ? "inclusion" : "projection")) +
                io::morToToml(r.map));
  }
  return kOk;
}

int runTrace(const Options& o, bool second) {
  auto c = loadContext(o);
  USet u = loadU(c, o);
  Rep a = module(c, o, 0);
  SubRep s = second ? trace2Sub(u, a) : traceSub(u, a);
  const std::string verb = second ? "trace2" : "trace";
  if (json(o)) {
    Json j = document(verb, c);
    j["module"] = io::repToJson(a);
    j["sub"] = subJson(s);
    j["generated"] = s.isFull();
    emit(o, dump(j));
  } else {
    emit(o, comment(verb + " of dimension " + std::to_string(s.totalDim()) + " in (" +
                    dimVector(a) + ")") +
                io::morToToml(carrier(s).map));
  }
  return kOk;
}

int runEps(const Options& o) {
  auto c = loadContext(o);
  USet u = loadU(c, o);
  Rep a = module(c, o, 0);
  auto e = canonicalEps(u, a);
  const std::size_t im = imageSub(e.morphism).totalDim();
  if (json(o)) {
    Json j = document("eps", c);
    j["multiplicities"] = e.multiplicities;
    j["morphism"] = io::morToJson(e.morphism);
    j["image_dim"] = im;
    j["epi"] = isEpi(e.morphism);
    emit(o, dump(j));
  } else {
    std::ostringstream t;
    t << "# eps_A from multiplicities";
    for (auto m : e.multiplicities) t << " " << m;
    t << ", image of dimension " << im << "\n";
    emit(o, t.str() + io::morToToml(e.morphism));
  }
  return kOk;
}

int runPresPrecover(const Options& o) {
  auto c = loadContext(o);
  USet u = loadU(c, o);
  Rep a = module(c, o, 0);
  auto p = presPrecover(u, a);
  if (json(o)) {
    Json j = document("pres-precover", c);
    j["multiplicities"] = p.data.multiplicities;
    j["morphism"] = io::morToJson(p.data.morphism);
    j["presentation"] = io::morToJson(p.certificate.presentation);
    j["presentation_epi"] = io::morToJson(p.certificate.epi);
    j["presentation_exact"] = checkPresentation(p.certificate);
    emit(o, dump(j));
  } else {
    emit(o, comment("Pres(U)-precover from (" + dimVector(p.data.morphism.domain()) + ")") +
                io::morToToml(p.data.morphism));
  }
  return kOk;
}

Json resultJson(const CoreflectionResult& r) {
  return {{"method", methodName(r.method)},
          {"target", io::repToJson(r.target)},
          {"counit", io::morToJson(r.counit)},
          {"verified", r.verified},
          {"counit_is_iso", isIsomorphism(r.counit)}};
}

std::string resultText(const CoreflectionResult& r) {
  return comment("method: " + methodName(r.method)) +
         comment("verified: " + std::string(r.verified ? "true" : "false")) +
         comment("counit isomorphism: " + std::string(isIsomorphism(r.counit) ? "true" : "false")) +
         io::morToToml(r.counit);
}

int runCoreflect(const Options& o, const std::string& verb) {
  auto c = loadContext(o);
  USet u = loadU(c, o);
  Rep a = module(c, o, 0);
  auto r = verb == "coreflect" ? coreflectorCandidate(u, a) : genCoreflector(u, a);
  if (json(o)) {
    Json j = document(verb, c);
    j["result"] = resultJson(r);
    emit(o, dump(j));
  } else {
    emit(o, resultText(r));
  }
  return r.verified ? kOk : kFail;
}

int runCoreflectGeneric(const Options& o) {
  auto c = loadContext(o);
  USet u = loadU(c, o);
  Rep a = module(c, o, 0);
  auto g = constructCoreflectionGeneric(u, a);
  const bool ok = g.status == GenericConstruction::Status::Ok && g.result && g.result->verified;
  if (json(o)) {
    Json j = document("coreflect-generic", c);
    j["status"] = statusName(g.status);
    j["detail"] = g.detail;
    j["precover"] = io::morToJson(g.precover);
    j["cokernel_map"] = io::morToJson(g.cokernelMap);
    j["idempotent"] = g.idempotent ? io::morToJson(*g.idempotent) : Json(nullptr);
    j["result"] = g.result ? resultJson(*g.result) : Json(nullptr);
    emit(o, dump(j));
  } else {
    std::string t = comment("status: " + statusName(g.status));
    if (!g.detail.empty()) t += comment(g.detail);
    if (g.result) t += resultText(*g.result);
    emit(o, t);
  }
  return ok ? kOk : kFail;
}

int runSyzygy(const Options& o) {
  auto c = loadContext(o);
  Rep m = module(c, o, 0);
  Rep s = syzygy(m, o.times);
  if (json(o)) {
    Json j = document("syzygy", c);
    j["times"] = o.times;
    j["object"] = io::repToJson(s);
    j["projective"] = isProjective(s);
    emit(o, dump(j));
  } else {
    emit(o, comment("syzygy of order " + std::to_string(o.times) + ": (" + dimVector(s) + ")") +
                io::repToToml(s));
  }
  return kOk;
}

int runStableHom(const Options& o) {
  auto c = loadContext(o);
  Rep m = module(c, o, 0);
  Rep n = module(c, o, 1);
  auto s = stableHom(m, n);
  if (json(o)) {
    Json j = document("stable-hom", c);
    j["total_dim"] = s.totalDim;
    j["factoring_dim"] = s.factoringDim;
    j["stable_dim"] = s.stableDim();
    Json arr = Json::array();
    for (const auto& f : s.complement) arr.push_back(io::morToJson(f));
    j["complement"] = std::move(arr);
    emit(o, dump(j));
  } else {
    std::string t = comment("dim Hom(M, N) = " + std::to_string(s.totalDim)) +
                    comment("factoring through projectives: " + std::to_string(s.factoringDim)) +
                    comment("stable dimension: " + std::to_string(s.stableDim()));
    for (std::size_t k = 0; k < s.complement.size(); ++k)
      t += "\n" + comment("representative " + std::to_string(k)) + io::morToToml(s.complement[k]);
    emit(o, t);
  }
  return kOk;
}

fs::path witnessPath(const fs::path& report, std::size_t k) {
  fs::path p = report;
  p.replace_extension();
  return p.string() + ".witness-" + std::to_string(k) + ".json";
}

int runCheck(const Options& o, const std::string& name) {
  auto c = loadContext(o);
  USet u = loadU(c, o);
  if (o.samples == 0) throw UsageError("--samples must be positive");
  SampleSpec spec;
  spec.count = o.samples;
  spec.seed = o.seed;
  spec.maxMultiplicity = o.maxMultiplicity;
  spec.maxGenerators = o.maxGenerators;
  const bool exhaustive = o.mode == "exhaustive";
  if (exhaustive && name != "gen-abelian")
    throw UsageError("--mode exhaustive is only available for gen-abelian");

  CheckReport r;
  if (name == "coreflective") r = checkPresCoreflective(u, spec);
  else if (name == "abelian") r = checkCoreflectiveAbelian(u, spec);
  else if (name == "abelian-exact") r = checkAbelianExact(u, spec);
  else if (name == "gen-abelian")
    r = checkGenAbelian(u, exhaustive ? CheckMode::Exhaustive : CheckMode::Sampled, spec,
                        o.exhaustiveBound);
  else if (name == "sigma-qp") r = checkSigmaQP(u, spec);
  else r = checkClosedUnderCokernels(u, spec);

  emit(o, json(o) ? dump(io::reportToJson(r, c.spec, u.items())) : io::reportToText(r));
  if (!o.out.empty())
    for (std::size_t k = 0; k < r.witnesses.size(); ++k)
      io::writeFile(witnessPath(o.out, k),
                    dump(io::witnessDocument(r.witnesses[k], c.spec, u.items())));
  return r.overall() == Verdict::Fail ? kFail : kOk;
}

int runExampleGlp(const Options& o) {
  fs::path dir = o.out.empty() ? fs::path(".") : fs::path(o.out);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw ParseError("cannot create directory " + dir.string() + ": " + ec.message());
  io::writeFile(dir / "algebra.toml", io::algebraToToml(glpSpec(io::parseField(o.field))));
  io::writeFile(dir / "uset.toml", io::usetToToml({"proj:2"}));
  std::cout << "wrote " << (dir / "algebra.toml").string() << " and " << (dir / "uset.toml").string()
            << "\n";
  return kOk;
}

Json parseJson(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // Byte offsets are converted to line and column for the diagnostic.
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("invalid JSON", line, col);
  }
}

int runVerifyWitness(const Options& o) {
  if (o.input.empty()) throw UsageError("a report or witness file is required");
  auto bundle = io::readWitnesses(parseJson(io::readFile(o.input)));
  bool all = true;
  Json arr = Json::array();
  std::string text;
  for (std::size_t k = 0; k < bundle.witnesses.size(); ++k) {
    const auto& w = bundle.witnesses[k];
    auto r = verifyWitness(w, bundle.u);
    all = all && r.confirmed;
    arr.push_back({{"index", k}, {"predicate", w.predicate}, {"confirmed", r.confirmed},
                   {"message", r.message}});
    text += "witness #" + std::to_string(k) + " " + w.predicate + ": " +
            (r.confirmed ? "confirmed" : "refuted") + ": " + r.message + "\n";
  }
  if (bundle.witnesses.empty()) text = "no witnesses\n";
  if (json(o)) {
    Json j;
    j["verb"] = "verify-witness";
    j["witnesses"] = std::move(arr);
    j["all_confirmed"] = all;
    emit(o, dump(j));
  } else {
    emit(o, text);
  }
  return all ? kOk : kFail;
}

void addAlgebra(CLI::App* sub, Options& o) {
  sub->add_option("--algebra", o.algebra, "algebra TOML file or builtin:<name>[@<field>]");
}

void addOutput(CLI::App* sub, Options& o) {
  sub->add_option("--out", o.out, "write output to this file instead of stdout");
  sub->add_option("--format", o.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
}

void addModules(CLI::App* sub, Options& o, std::size_t count) {
  sub->add_option("--module", o.modules,
                  count == 1 ? "module TOML file, proj:<vertex> or simple:<vertex>"
                             : "give twice: domain then codomain")
      ->expected(1)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
}

int dispatch(int argc, char** argv) {
  CLI::App app{"Exact computations with coreflective subcategories of quiver representations"};
  app.require_subcommand(1);
  Options o;
  std::string verb;
  std::string checkName;
  std::string exampleName;

  auto add = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->callback([&verb, name] { verb = name; });
    return sub;
  };

  auto* hom = add("hom", "basis of Hom(M, N)");
  addAlgebra(hom, o);
  addModules(hom, o, 2);
  addOutput(hom, o);

  for (const std::string name : {"kernel", "cokernel"}) {
    auto* sub = add(name, name + " of a morphism");
    addAlgebra(sub, o);
    sub->add_option("--morphism", o.morphism, "morphism TOML file");
    addOutput(sub, o);
  }

  const std::vector<std::pair<std::string, std::string>> usetVerbs = {
      {"trace", "trace of U in a module"},
      {"trace2", "second trace of U in a module"},
      {"eps", "canonical map from a sum of members onto the trace"},
      {"pres-precover", "Pres(U)-precover with its presentation"},
      {"coreflect", "coreflection onto Pres(U) by the quotient formula"},
      {"coreflect-generic", "coreflection by the idempotent-splitting construction"},
      {"gen-coreflect", "coreflection onto Gen(U) by the trace"}};
  for (const auto& [name, help] : usetVerbs) {
    auto* sub = add(name, help);
    addAlgebra(sub, o);
    sub->add_option("--uset", o.uset, "USet TOML file or comma-separated module references");
    addModules(sub, o, 1);
    addOutput(sub, o);
  }

  auto* syz = add("syzygy", "kernel of the projective cover, iterated");
  addAlgebra(syz, o);
  addModules(syz, o, 1);
  syz->add_option("--times", o.times, "order of the syzygy")->check(CLI::PositiveNumber);
  addOutput(syz, o);

  auto* stable = add("stable-hom", "Hom(M, N) modulo maps factoring through projectives");
  addAlgebra(stable, o);
  addModules(stable, o, 2);
  addOutput(stable, o);

  auto* check = add("check", "test a characterization on sampled or enumerated data");
  check->add_option("name", checkName, "which characterization")
      ->required()
      ->check(CLI::IsMember({"coreflective", "abelian", "abelian-exact", "gen-abelian", "sigma-qp",
                             "cokernel-closure"}));
  addAlgebra(check, o);
  check->add_option("--uset", o.uset, "USet TOML file or comma-separated module references");
  check->add_option("--samples", o.samples, "number of samples per condition");
  check->add_option("--seed", o.seed, "random seed");
  check->add_option("--mode", o.mode, "sampled, or exhaustive for gen-abelian")
      ->check(CLI::IsMember({"sampled", "exhaustive"}));
  check->add_option("--max-multiplicity", o.maxMultiplicity, "largest multiplicity of a summand");
  check->add_option("--max-generators", o.maxGenerators, "largest number of random generators");
  check->add_option("--exhaustive-bound", o.exhaustiveBound,
                    "largest module cardinality enumerated in exhaustive mode");
  addOutput(check, o);

  auto* example = add("example", "write a built-in example to a directory");
  example->add_option("name", exampleName, "example name")
      ->required()
      ->check(CLI::IsMember({"glp"}));
  example->add_option("--out", o.out, "target directory");
  example->add_option("--field", o.field, "Q, F<p> or Fp:<p>");

  auto* verify = add("verify-witness", "replay the witnesses of a report or witness file");
  verify->add_option("file", o.input, "report or witness JSON")->required();
  verify->add_option("--out", o.out, "write output to this file instead of stdout");
  verify->add_option("--format", o.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (verb == "hom") return runHom(o);
  if (verb == "kernel") return runKernelOrCokernel(o, true);
  if (verb == "cokernel") return runKernelOrCokernel(o, false);
  if (verb == "trace") return runTrace(o, false);
  if (verb == "trace2") return runTrace(o, true);
  if (verb == "eps") return runEps(o);
  if (verb == "pres-precover") return runPresPrecover(o);
  if (verb == "coreflect" || verb == "gen-coreflect") return runCoreflect(o, verb);
  if (verb == "coreflect-generic") return runCoreflectGeneric(o);
  if (verb == "syzygy") return runSyzygy(o);
  if (verb == "stable-hom") return runStableHom(o);
  if (verb == "check") return runCheck(o, checkName);
  if (verb == "example") return runExampleGlp(o);
  return runVerifyWitness(o);
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}
