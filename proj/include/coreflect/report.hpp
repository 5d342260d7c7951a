#pragma once

#include <string>
#include <vector>

#include "coreflect/checks.hpp"
#include "coreflect/io.hpp"

namespace coreflect::io {

inline constexpr const char* kReportSchema = "coreflect.report/1";
inline constexpr const char* kWitnessSchema = "coreflect.witness/1";

Json witnessToJson(const Witness& w);
Witness witnessFromJson(const AlgebraPtr& algebra, const Json& j);

/// The full report: schema, check, anchors, algebra, USet members (if any),
/// seed, sample settings and census, per-condition verdicts, overall verdict
/// and witnesses. No timestamps, so equal inputs give equal bytes.
Json reportToJson(const CheckReport& r, const AlgebraSpec& algebra, const std::vector<Rep>& u);
/// A standalone witness document carrying the algebra and USet it needs.
Json witnessDocument(const Witness& w, const AlgebraSpec& algebra, const std::vector<Rep>& u);
/// Aligned table of the condition verdicts.
std::string reportToText(const CheckReport& r);

/// Witnesses with their algebra and USet, read from a report or a witness
/// document.
struct WitnessBundle {
  AlgebraPtr algebra;
  std::vector<Rep> u;
  std::vector<Witness> witnesses;
};
WitnessBundle readWitnesses(const Json& doc);

}  // namespace coreflect::io
