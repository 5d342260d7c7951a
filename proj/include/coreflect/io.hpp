#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "coreflect/algebra.hpp"
#include "coreflect/rep.hpp"
#include "coreflect/trace.hpp"

namespace coreflect::io {

using Json = nlohmann::ordered_json;

/// Parses "x*y - 2*y*x", "-1/2*a*b + c*d", "beta*alpha". A term is an
/// optional integer or a/b coefficient followed by arrows joined with `*`,
/// composed left to right.
Relation parseRelation(const std::string& text, const Quiver& q, const Field& f);

/// "Q", "F5", "Fp:5".
Field parseField(const std::string& text);

/// "builtin:<name>[@<field>]" with field defaulting to F5, or a path to an
/// algebra TOML file.
AlgebraSpec loadAlgebraSpec(const std::string& source);
AlgebraPtr loadAlgebra(const std::string& source);

AlgebraSpec algebraFromToml(const std::string& text);
std::string algebraToToml(const AlgebraSpec& spec);

Rep repFromToml(const AlgebraPtr& algebra, const std::string& text);
std::string repToToml(const Rep& m);
Mor morFromToml(const AlgebraPtr& algebra, const std::string& text);
std::string morToToml(const Mor& f);

/// A module reference: "proj:<vertex>", "simple:<vertex>", or a Rep TOML
/// path resolved against `base`.
Rep loadModule(const AlgebraPtr& algebra, const std::string& ref,
               const std::filesystem::path& base = {});
/// A USet file (`items = [...]` of module references), or a comma-separated
/// list of module references.
USet loadUSet(const AlgebraPtr& algebra, const std::string& source);
std::string usetToToml(const std::vector<std::string>& refs);

Json matrixToJson(const Mat& m);
Mat matrixFromJson(const Field& f, const Json& j, std::size_t rows, std::size_t cols);
Json algebraToJson(const AlgebraSpec& spec);
AlgebraSpec algebraFromJson(const Json& j);
Json repToJson(const Rep& m);
Rep repFromJson(const AlgebraPtr& algebra, const Json& j);
Json morToJson(const Mor& f);
Mor morFromJson(const AlgebraPtr& algebra, const Json& j);

std::string readFile(const std::filesystem::path& path);
void writeFile(const std::filesystem::path& path, const std::string& text);

}  // namespace coreflect::io
