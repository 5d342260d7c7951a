#include "coreflect/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "coreflect/builtins.hpp"
#include "coreflect/error.hpp"
#include "coreflect/projective.hpp"
#include "coreflect/toml.hpp"

namespace coreflect::io {

namespace {

bool isNameChar(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// Rethrows any Error raised while interpreting `v` as a ParseError located at v.
template <class Fn>
auto located(const toml::Value& v, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const ParseError& e) {
    if (e.line() != 0) throw;
    throw ParseError(e.what(), v.line, v.column);
  } catch (const InvariantViolation&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what(), v.line, v.column);
  }
}

std::size_t vertexByName(const Quiver& q, const std::string& name) {
  auto v = q.vertexIndex(name);
  if (!v) throw ParseError("unknown vertex '" + name + "'");
  return *v;
}

std::size_t toSize(const toml::Value& v, const char* what) {
  auto n = v.integer();
  if (n < 0) throw ParseError(std::string(what) + " must be non-negative", v.line, v.column);
  return static_cast<std::size_t>(n);
}

Scalar scalarFromToml(const Field& f, const toml::Value& v) {
  if (v.isInt()) return Scalar::fromInt(f, v.integer());
  if (v.isString()) return located(v, [&] { return Scalar::parse(f, v.str()); });
  throw ParseError("matrix entry must be an integer or an \"a/b\" string", v.line, v.column);
}

Mat matrixFromToml(const Field& f, const toml::Value& v, std::size_t rows, std::size_t cols) {
  const auto& rs = v.array();
  if (rs.size() != rows)
    throw ParseError("expected " + std::to_string(rows) + " rows, found " +
                         std::to_string(rs.size()),
                     v.line, v.column);
  Mat m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const auto& row = rs[i].array();
    if (row.size() != cols)
      throw ParseError("expected " + std::to_string(cols) + " entries in row, found " +
                           std::to_string(row.size()),
                       rs[i].line, rs[i].column);
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, scalarFromToml(f, row[j]));
  }
  return m;
}

std::string scalarToToml(const Scalar& s) {
  std::string t = s.str();
  if (t.find('/') != std::string::npos || t.size() > 18) return toml::quote(t);
  return t;
}

std::string matrixToToml(const Mat& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) out += ", ";
    out += "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ", ";
      out += scalarToToml(m.at(i, j));
    }
    out += "]";
  }
  return out + "]";
}

std::vector<std::size_t> dimsFromToml(const Quiver& q, const toml::Value& v) {
  std::vector<std::size_t> dims(q.vertices.size(), 0);
  std::vector<bool> seen(q.vertices.size(), false);
  for (const auto& [name, d] : v.table()) {
    std::size_t idx = located(d, [&] { return vertexByName(q, name); });
    dims[idx] = toSize(d, "dimension");
    seen[idx] = true;
  }
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (!seen[i])
      throw ParseError("missing dimension for vertex '" + q.vertices[i] + "'", v.line, v.column);
  return dims;
}

// A Rep stored as `dims` in `repTable` and arrow matrices in `arrowTable`.
Rep repFromTables(const AlgebraPtr& alg, const toml::Value& repTable,
                  const toml::Value* arrowTable, const toml::Value& where) {
  const Quiver& q = alg->quiver();
  auto dims = dimsFromToml(q, repTable.at("dims"));
  std::vector<Mat> arrows;
  std::vector<bool> seen(q.arrows.size(), false);
  for (const auto& a : q.arrows) arrows.emplace_back(alg->field(), dims[a.target], dims[a.source]);
  if (arrowTable) {
    for (const auto& [name, m] : arrowTable->table()) {
      auto idx = q.arrowIndex(name);
      if (!idx) throw ParseError("unknown arrow '" + name + "'", m.line, m.column);
      const auto& a = q.arrows[*idx];
      arrows[*idx] = matrixFromToml(alg->field(), m, dims[a.target], dims[a.source]);
      seen[*idx] = true;
    }
  }
  for (std::size_t i = 0; i < seen.size(); ++i) {
    const auto& a = q.arrows[i];
    if (!seen[i] && dims[a.source] != 0 && dims[a.target] != 0)
      throw ParseError("missing matrix for arrow '" + a.name + "'", where.line, where.column);
  }
  Rep m(alg, std::move(dims), std::move(arrows));
  auto violated = validate(m);
  if (!violated.empty())
    throw ParseError("representation violates relation '" + violated.front() + "'", where.line,
                     where.column);
  return m;
}

std::string repTables(const Rep& m, const std::string& prefix) {
  const Quiver& q = m.algebra()->quiver();
  std::ostringstream out;
  out << "[" << prefix << "]\ndims = {";
  for (std::size_t v = 0; v < m.vertexCount(); ++v)
    out << (v ? ", " : " ") << toml::key(q.vertices[v]) << " = " << m.dim(v);
  out << (m.vertexCount() ? " }" : "}") << "\n\n[" << prefix << ".arrows]\n";
  for (std::size_t a = 0; a < q.arrows.size(); ++a)
    out << toml::key(q.arrows[a].name) << " = " << matrixToToml(m.arrow(a)) << "\n";
  return out.str();
}

void checkNatural(const Rep& dom, const Rep& cod, const std::vector<Mat>& maps) {
  const Quiver& q = dom.algebra()->quiver();
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const auto& ar = q.arrows[a];
    if (!(cod.arrow(a) * maps[ar.source] == maps[ar.target] * dom.arrow(a)))
      throw ParseError("morphism is not compatible with arrow '" + ar.name + "'");
  }
}

std::string fieldKind(const Field& f) { return f.isRationals() ? "Q" : "Fp"; }

}  // namespace

Relation parseRelation(const std::string& text, const Quiver& q, const Field& f) {
  std::size_t pos = 0;
  auto err = [&](const std::string& what) -> ParseError {
    return ParseError("in relation '" + text + "': " + what + " at offset " + std::to_string(pos));
  };
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  std::vector<RelationTerm> terms;
  skip();
  if (pos == text.size()) throw err("empty relation");
  bool first = true;
  while (true) {
    skip();
    if (pos == text.size()) break;
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
      negative = text[pos] == '-';
      ++pos;
      skip();
    } else if (!first) {
      throw err("expected '+' or '-'");
    }
    first = false;
    Scalar coef = Scalar::one(f);
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos < text.size() && text[pos] == '/') {
        ++pos;
        if (pos == text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
          throw err("expected a denominator");
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      }
      try {
        coef = Scalar::parse(f, text.substr(start, pos - start));
      } catch (const Error& e) {
        throw err(e.what());
      }
      skip();
      if (pos < text.size() && text[pos] == '*') ++pos;
      skip();
    }
    if (negative) coef = -coef;
    std::vector<std::size_t> arrows;
    while (true) {
      std::size_t start = pos;
      while (pos < text.size() && isNameChar(text[pos])) ++pos;
      if (start == pos) throw err("expected an arrow name");
      std::string name = text.substr(start, pos - start);
      auto idx = q.arrowIndex(name);
      if (!idx) {
        pos = start;
        throw err("unknown arrow '" + name + "'");
      }
      arrows.push_back(*idx);
      skip();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip();
        continue;
      }
      break;
    }
    terms.push_back({coef, std::move(arrows)});
  }
  try {
    return Relation::make(q, std::move(terms));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError("in relation '" + text + "': " + e.what());
  }
}

Field parseField(const std::string& text) {
  if (text == "Q") return Field::rationals();
  std::string digits;
  if (text.size() > 1 && text[0] == 'F') digits = text.substr(1);
  if (digits.rfind("p:", 0) == 0) digits = digits.substr(2);
  if (digits.empty() || digits.size() > 10 ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(c); }))
    throw ParseError("unknown field '" + text + "' (expected Q or F<p>)");
  try {
    return Field::prime(std::stoull(digits));
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

AlgebraSpec algebraFromToml(const std::string& text) {
  auto doc = toml::parse(text);
  AlgebraSpec spec;

  const toml::Value* fieldTable = doc.find("field");
  const toml::Value* kindV = fieldTable ? fieldTable->find("kind") : nullptr;
  if (!kindV) throw ParseError("missing [field] kind", doc.line, doc.column);
  const std::string& kind = kindV->str();
  if (kind == "Q") {
    spec.field = Field::rationals();
  } else if (kind == "Fp") {
    const auto& p = fieldTable->at("p");
    spec.field = located(p, [&] { return Field::prime(static_cast<std::uint64_t>(toSize(p, "p"))); });
  } else {
    throw ParseError("field kind must be \"Q\" or \"Fp\"", kindV->line, kindV->column);
  }

  const toml::Value* nb = fieldTable->find("nil_bound");
  if (!nb) nb = doc.find("nil_bound");
  if (!nb) throw ParseError("missing nil_bound", fieldTable->line, fieldTable->column);
  spec.nilBound = toSize(*nb, "nil_bound");
  if (spec.nilBound == 0) throw ParseError("nil_bound must be positive", nb->line, nb->column);

  const auto& quiver = doc.at("quiver");
  for (const auto& v : quiver.at("vertices").array()) spec.quiver.vertices.push_back(v.str());
  if (const auto* arrows = quiver.find("arrows")) {
    for (const auto& a : arrows->array()) {
      Arrow ar;
      ar.name = a.at("name").str();
      if (ar.name.empty() || std::isdigit(static_cast<unsigned char>(ar.name[0])) ||
          !std::all_of(ar.name.begin(), ar.name.end(), isNameChar))
        throw ParseError("arrow names use letters, digits and '_' and do not start with a digit",
                         a.line, a.column);
      ar.source = located(a, [&] { return vertexByName(spec.quiver, a.at("from").str()); });
      ar.target = located(a, [&] { return vertexByName(spec.quiver, a.at("to").str()); });
      spec.quiver.arrows.push_back(std::move(ar));
    }
  }
  located(quiver, [&] {
    spec.quiver.validate();
    return 0;
  });

  if (const auto* rel = doc.find("relations")) {
    if (const auto* items = rel->find("items"))
      for (const auto& r : items->array())
        spec.relations.push_back(
            located(r, [&] { return parseRelation(r.str(), spec.quiver, spec.field); }));
  }
  return spec;
}

std::string algebraToToml(const AlgebraSpec& spec) {
  std::ostringstream out;
  out << "[quiver]\nvertices = [";
  for (std::size_t v = 0; v < spec.quiver.vertices.size(); ++v)
    out << (v ? ", " : "") << toml::quote(spec.quiver.vertices[v]);
  out << "]\narrows = [";
  for (const auto& a : spec.quiver.arrows)
    out << "\n  { name = " << toml::quote(a.name)
        << ", from = " << toml::quote(spec.quiver.vertices[a.source])
        << ", to = " << toml::quote(spec.quiver.vertices[a.target]) << " },";
  out << (spec.quiver.arrows.empty() ? "]\n" : "\n]\n");
  out << "\n[relations]\nitems = [";
  for (std::size_t r = 0; r < spec.relations.size(); ++r)
    out << (r ? ", " : "") << toml::quote(relationText(spec.relations[r], spec.quiver));
  out << "]\n\n[field]\nkind = " << toml::quote(fieldKind(spec.field)) << "\n";
  if (!spec.field.isRationals()) out << "p = " << spec.field.characteristic() << "\n";
  out << "nil_bound = " << spec.nilBound << "\n";
  return out.str();
}

AlgebraSpec loadAlgebraSpec(const std::string& source) {
  const std::string prefix = "builtin:";
  if (source.rfind(prefix, 0) == 0) {
    std::string name = source.substr(prefix.size());
    Field f = Field::prime(5);
    if (auto at = name.find('@'); at != std::string::npos) {
      f = parseField(name.substr(at + 1));
      name = name.substr(0, at);
    }
    try {
      return builtinSpec(name, f);
    } catch (const Error& e) {
      throw ParseError(e.what());
    }
  }
  return algebraFromToml(readFile(source));
}

AlgebraPtr loadAlgebra(const std::string& source) {
  auto spec = loadAlgebraSpec(source);
  try {
    return Algebra::create(std::move(spec));
  } catch (const NotFiniteDimensionalAtBound&) {
    throw;
  } catch (const InvariantViolation&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

Rep repFromToml(const AlgebraPtr& algebra, const std::string& text) {
  auto doc = toml::parse(text);
  return repFromTables(algebra, doc.at("rep"), doc.find("arrows"), doc);
}

std::string repToToml(const Rep& m) {
  std::string t = repTables(m, "rep");
  // The arrow table of a standalone Rep file is top-level [arrows].
  auto pos = t.find("[rep.arrows]");
  return t.replace(pos, 12, "[arrows]");
}

Mor morFromToml(const AlgebraPtr& algebra, const std::string& text) {
  auto doc = toml::parse(text);
  const auto& domT = doc.at("domain");
  const auto& codT = doc.at("codomain");
  Rep dom = repFromTables(algebra, domT, domT.find("arrows"), domT);
  Rep cod = repFromTables(algebra, codT, codT.find("arrows"), codT);
  const Quiver& q = algebra->quiver();
  std::vector<Mat> maps;
  for (std::size_t v = 0; v < q.vertices.size(); ++v) maps.emplace_back(algebra->field(), cod.dim(v), dom.dim(v));
  const auto& mapsT = doc.at("maps");
  std::vector<bool> seen(q.vertices.size(), false);
  for (const auto& [name, m] : mapsT.table()) {
    std::size_t v = located(m, [&] { return vertexByName(q, name); });
    maps[v] = matrixFromToml(algebra->field(), m, cod.dim(v), dom.dim(v));
    seen[v] = true;
  }
  for (std::size_t v = 0; v < seen.size(); ++v)
    if (!seen[v] && dom.dim(v) && cod.dim(v))
      throw ParseError("missing map at vertex '" + q.vertices[v] + "'", mapsT.line, mapsT.column);
  located(mapsT, [&] {
    checkNatural(dom, cod, maps);
    return 0;
  });
  return Mor(dom, cod, std::move(maps));
}

std::string morToToml(const Mor& f) {
  const Quiver& q = f.domain().algebra()->quiver();
  std::ostringstream out;
  out << repTables(f.domain(), "domain") << "\n" << repTables(f.codomain(), "codomain") << "\n[maps]\n";
  for (std::size_t v = 0; v < q.vertices.size(); ++v)
    out << toml::key(q.vertices[v]) << " = " << matrixToToml(f.at(v)) << "\n";
  return out.str();
}

Rep loadModule(const AlgebraPtr& algebra, const std::string& ref, const std::filesystem::path& base) {
  const Quiver& q = algebra->quiver();
  for (const std::string kind : {"proj:", "simple:"}) {
    if (ref.rfind(kind, 0) != 0) continue;
    std::size_t v = vertexByName(q, ref.substr(kind.size()));
    return kind == "proj:" ? projectiveModule(algebra, v) : simpleModule(algebra, v);
  }
  std::filesystem::path p(ref);
  if (p.is_relative() && !base.empty()) p = base / p;
  return repFromToml(algebra, readFile(p));
}

USet loadUSet(const AlgebraPtr& algebra, const std::string& source) {
  std::vector<Rep> items;
  std::filesystem::path path(source);
  std::error_code ec;
  if (std::filesystem::is_regular_file(path, ec)) {
    auto doc = toml::parse(readFile(path));
    const toml::Value* list = doc.find("items");
    if (!list)
      if (const auto* u = doc.find("uset")) list = u->find("items");
    if (!list) throw ParseError("missing items in USet file", doc.line, doc.column);
    for (const auto& r : list->array())
      items.push_back(located(r, [&] { return loadModule(algebra, r.str(), path.parent_path()); }));
  } else {
    std::stringstream ss(source);
    std::string ref;
    while (std::getline(ss, ref, ',')) {
      auto b = ref.find_first_not_of(' ');
      auto e = ref.find_last_not_of(' ');
      if (b == std::string::npos) continue;
      items.push_back(loadModule(algebra, ref.substr(b, e - b + 1)));
    }
  }
  try {
    return USet(std::move(items));
  } catch (const InvariantViolation&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

std::string usetToToml(const std::vector<std::string>& refs) {
  std::string out = "items = [";
  for (std::size_t i = 0; i < refs.size(); ++i) out += (i ? ", " : "") + toml::quote(refs[i]);
  return out + "]\n";
}

Json matrixToJson(const Mat& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat matrixFromJson(const Field& f, const Json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows)
    throw ParseError("expected a matrix with " + std::to_string(rows) + " rows");
  Mat m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const Json& row = j[i];
    if (!row.is_array() || row.size() != cols)
      throw ParseError("expected a matrix row with " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) {
      const Json& e = row[c];
      if (e.is_string()) m.set(i, c, Scalar::parse(f, e.get<std::string>()));
      else if (e.is_number_integer()) m.set(i, c, Scalar::fromInt(f, e.get<long long>()));
      else throw ParseError("matrix entries must be strings or integers");
    }
  }
  return m;
}

Json algebraToJson(const AlgebraSpec& spec) {
  Json j;
  j["field"] = spec.field.name();
  j["nil_bound"] = spec.nilBound;
  j["vertices"] = spec.quiver.vertices;
  Json arrows = Json::array();
  for (const auto& a : spec.quiver.arrows)
    arrows.push_back({{"name", a.name},
                      {"from", spec.quiver.vertices[a.source]},
                      {"to", spec.quiver.vertices[a.target]}});
  j["arrows"] = std::move(arrows);
  Json rels = Json::array();
  for (const auto& r : spec.relations) rels.push_back(relationText(r, spec.quiver));
  j["relations"] = std::move(rels);
  return j;
}

AlgebraSpec algebraFromJson(const Json& j) {
  try {
    AlgebraSpec spec;
    spec.field = parseField(j.at("field").get<std::string>());
    spec.nilBound = j.at("nil_bound").get<std::size_t>();
    spec.quiver.vertices = j.at("vertices").get<std::vector<std::string>>();
    for (const auto& a : j.at("arrows")) {
      spec.quiver.arrows.push_back({a.at("name").get<std::string>(),
                                    vertexByName(spec.quiver, a.at("from").get<std::string>()),
                                    vertexByName(spec.quiver, a.at("to").get<std::string>())});
    }
    spec.quiver.validate();
    for (const auto& r : j.at("relations"))
      spec.relations.push_back(parseRelation(r.get<std::string>(), spec.quiver, spec.field));
    return spec;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed algebra JSON: ") + e.what());
  }
}

Json repToJson(const Rep& m) {
  const Quiver& q = m.algebra()->quiver();
  Json j;
  j["dims"] = m.dims();
  Json arrows = Json::object();
  for (std::size_t a = 0; a < q.arrows.size(); ++a) arrows[q.arrows[a].name] = matrixToJson(m.arrow(a));
  j["arrows"] = std::move(arrows);
  return j;
}

Rep repFromJson(const AlgebraPtr& algebra, const Json& j) {
  try {
    const Quiver& q = algebra->quiver();
    auto dims = j.at("dims").get<std::vector<std::size_t>>();
    if (dims.size() != q.vertices.size()) throw ParseError("dims must list one entry per vertex");
    std::vector<Mat> arrows;
    for (const auto& a : q.arrows)
      arrows.push_back(matrixFromJson(algebra->field(), j.at("arrows").at(a.name), dims[a.target],
                                      dims[a.source]));
    Rep m(algebra, std::move(dims), std::move(arrows));
    auto violated = validate(m);
    if (!violated.empty())
      throw ParseError("representation violates relation '" + violated.front() + "'");
    return m;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed representation JSON: ") + e.what());
  }
}

Json morToJson(const Mor& f) {
  Json j;
  j["domain"] = repToJson(f.domain());
  j["codomain"] = repToJson(f.codomain());
  Json maps = Json::array();
  for (const auto& m : f.maps()) maps.push_back(matrixToJson(m));
  j["maps"] = std::move(maps);
  return j;
}

Mor morFromJson(const AlgebraPtr& algebra, const Json& j) {
  try {
    Rep dom = repFromJson(algebra, j.at("domain"));
    Rep cod = repFromJson(algebra, j.at("codomain"));
    const auto& mj = j.at("maps");
    if (!mj.is_array() || mj.size() != dom.vertexCount())
      throw ParseError("maps must list one matrix per vertex");
    std::vector<Mat> maps;
    for (std::size_t v = 0; v < dom.vertexCount(); ++v)
      maps.push_back(matrixFromJson(algebra->field(), mj[v], cod.dim(v), dom.dim(v)));
    checkNatural(dom, cod, maps);
    return Mor(dom, cod, std::move(maps));
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed morphism JSON: ") + e.what());
  }
}

std::string readFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void writeFile(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw Error("failed writing '" + path.string() + "'");
}

}  // namespace coreflect::io
