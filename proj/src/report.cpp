#include "coreflect/report.hpp"

#include <algorithm>
#include <sstream>

#include "coreflect/error.hpp"

namespace coreflect::io {

Json witnessToJson(const Witness& w) {
  Json j;
  j["predicate"] = w.predicate;
  j["condition"] = w.condition;
  j["sample"] = w.sample;
  j["member"] = w.member ? Json(*w.member) : Json(nullptr);
  j["variant"] = w.variant;
  j["detail"] = w.detail;
  j["sums"] = w.sums;
  Json objects = Json::array();
  for (const auto& o : w.objects) objects.push_back(repToJson(o));
  j["objects"] = std::move(objects);
  Json morphisms = Json::array();
  for (const auto& m : w.morphisms) morphisms.push_back(morToJson(m));
  j["morphisms"] = std::move(morphisms);
  return j;
}

Witness witnessFromJson(const AlgebraPtr& algebra, const Json& j) {
  try {
    Witness w;
    w.predicate = j.at("predicate").get<std::string>();
    w.condition = j.value("condition", "");
    w.sample = j.value("sample", std::size_t{0});
    if (j.contains("member") && !j.at("member").is_null())
      w.member = j.at("member").get<std::size_t>();
    w.variant = j.value("variant", "");
    w.detail = j.value("detail", "");
    if (j.contains("sums")) w.sums = j.at("sums").get<std::vector<std::vector<std::size_t>>>();
    if (j.contains("objects"))
      for (const auto& o : j.at("objects")) w.objects.push_back(repFromJson(algebra, o));
    if (j.contains("morphisms"))
      for (const auto& m : j.at("morphisms")) w.morphisms.push_back(morFromJson(algebra, m));
    return w;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed witness: ") + e.what());
  }
}

namespace {

Json usetJson(const std::vector<Rep>& u) {
  Json arr = Json::array();
  for (const auto& x : u) arr.push_back(repToJson(x));
  return arr;
}

}  // namespace

Json reportToJson(const CheckReport& r, const AlgebraSpec& algebra, const std::vector<Rep>& u) {
  Json j;
  j["schema"] = kReportSchema;
  j["check"] = r.check;
  Json anchors = Json::array();
  anchors.push_back(r.statement);
  for (const auto& c : r.conditions) anchors.push_back(c.statement);
  j["anchors"] = std::move(anchors);
  j["algebra"] = algebraToJson(algebra);
  j["uset"] = usetJson(u);
  j["seed"] = r.spec.seed;
  Json census = Json::object();
  for (const auto& [k, v] : r.census) census[k] = v;
  j["samples"] = {{"count", r.spec.count},
                  {"max_multiplicity", r.spec.maxMultiplicity},
                  {"max_generators", r.spec.maxGenerators},
                  {"census", std::move(census)}};
  Json verdicts = Json::array();
  for (const auto& c : r.conditions) {
    verdicts.push_back({{"condition", c.name},
                        {"statement", c.statement},
                        {"verdict", verdictName(c.verdict)},
                        {"label", c.label},
                        {"tested", c.tested},
                        {"witness", c.witness ? Json(*c.witness) : Json(nullptr)}});
  }
  j["verdicts"] = std::move(verdicts);
  j["overall"] = verdictName(r.overall());
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses) witnesses.push_back(witnessToJson(w));
  j["witnesses"] = std::move(witnesses);
  return j;
}

Json witnessDocument(const Witness& w, const AlgebraSpec& algebra, const std::vector<Rep>& u) {
  Json j;
  j["schema"] = kWitnessSchema;
  j["algebra"] = algebraToJson(algebra);
  j["uset"] = usetJson(u);
  j["witness"] = witnessToJson(w);
  return j;
}

std::string reportToText(const CheckReport& r) {
  std::vector<std::vector<std::string>> rows{{"condition", "verdict", "label", "tested", "witness"}};
  for (const auto& c : r.conditions)
    rows.push_back({c.name, verdictName(c.verdict), c.label, std::to_string(c.tested),
                    c.witness ? "#" + std::to_string(*c.witness) : "-"});
  std::vector<std::size_t> width(rows.front().size(), 0);
  for (const auto& row : rows)
    for (std::size_t k = 0; k < row.size(); ++k) width[k] = std::max(width[k], row[k].size());
  std::ostringstream out;
  out << "check: " << r.check << " (" << r.statement << ")\n";
  out << "seed: " << r.spec.seed << "  samples: " << r.spec.count << "\n\n";
  for (const auto& row : rows) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      out << row[k];
      if (k + 1 < row.size()) out << std::string(width[k] - row[k].size() + 2, ' ');
    }
    out << "\n";
  }
  out << "\noverall: " << verdictName(r.overall()) << "\n";
  for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
    const auto& w = r.witnesses[i];
    out << "witness #" << i << ": " << w.predicate << " at sample " << w.sample << ": " << w.detail
        << "\n";
  }
  return out.str();
}

WitnessBundle readWitnesses(const Json& doc) {
  try {
    const std::string schema = doc.at("schema").get<std::string>();
    if (schema != kReportSchema && schema != kWitnessSchema)
      throw ParseError("unknown document schema '" + schema + "'");
    WitnessBundle b;
    b.algebra = Algebra::create(algebraFromJson(doc.at("algebra")));
    for (const auto& x : doc.at("uset")) b.u.push_back(repFromJson(b.algebra, x));
    if (schema == kWitnessSchema) {
      b.witnesses.push_back(witnessFromJson(b.algebra, doc.at("witness")));
    } else {
      for (const auto& w : doc.at("witnesses")) b.witnesses.push_back(witnessFromJson(b.algebra, w));
    }
    return b;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed document: ") + e.what());
  }
}

}  // namespace coreflect::io
