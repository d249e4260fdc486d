#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "artinres/contract.hpp"
#include "artinres/laurent.hpp"
#include "artinres/tropical.hpp"

namespace artinres::io {

using nlohmann::json;

inline constexpr int kFormatVersion = 1;

/// Parses text, reporting syntax errors as Parse errors with line and
/// column.
json parse_text(const std::string& text, const std::string& source = "<input>");
json read_file(const std::string& path);

/// Keys sorted, newline terminated.
std::string dump(const json& j);

RingDescriptor ring_from_json(const json& j);
json to_json(const RingDescriptor& ring);

/// {"e1,e2": "num/den", ...}; the empty key is the constant for a ring
/// without variables.
RingElement element_from_json(const json& j, const RingDescriptor& ring);
json to_json(const RingElement& a);

/// {"coeffs": {"-2": elem, ...}, "prec": int or "inf"}.
LaurentSeries series_from_json(const json& j, const RingDescriptor& ring);
json to_json(const LaurentSeries& s);

/// {"monoid_rank": r, "vertices": [...], "edges": [...], "legs": [...]}.
TropicalCurve curve_from_json(const json& j);
json to_json(const TropicalCurve& curve);

/// A residue input: {"version", "ring", "differential": series}.
struct DifferentialFile {
  RingDescriptor ring;
  Differential form;
};
DifferentialFile differential_file_from_json(const json& j);
json to_json(const DifferentialFile& f);

/// {"level": n, "constant": elem, "tails": {"R1": [elem, ...]}}. Elements
/// live in A / m^{level+1}; without "level" they live in A.
struct JetRecord {
  std::optional<int> level;
  JetFunction jet;
};
JetRecord jet_from_json(const json& j, const RingDescriptor& ring, int jet_order);
json to_json(const JetRecord& jet);

struct Scenario {
  RingDescriptor ring;
  TropicalCurve curve;
  std::string vertex;
  std::map<std::string, RingElement> parameters;
  std::vector<NodeChart> charts;
  int jet_order = 4;
  std::vector<JetRecord> jets;

  CurveModel model() const;
};
Scenario scenario_from_json(const json& j);
json to_json(const Scenario& s);

/// {"version", "ring"}.
RingDescriptor ring_file_from_json(const json& j);

/// {"version", "curve", "vertex"?}; the vertex fixes the radius.
struct CurveFile {
  TropicalCurve curve;
  std::optional<std::string> vertex;
};
CurveFile curve_file_from_json(const json& j);
json to_json(const CurveFile& f);

/// {"version", "jet"}.
JetRecord jet_file_from_json(const json& j, const RingDescriptor& ring, int jet_order);

json to_json(const AlignmentReport& report);
json to_json(const SingularityReport& report);

}  // namespace artinres::io
