#pragma once

// Text / JSON / CSV renderers for reports. Machine formats are fully
// deterministic: fixed key order, fixed column order, integers and slopes
// emitted as decimal strings, no timestamps. Column orders are documented in
// the README and must not change without updating it.

#include <string>
#include <vector>

#include "json.hpp"
#include "sfs/family.hpp"
#include "sfs/negcf.hpp"
#include "sfs/seifert.hpp"

namespace sfs {

using Json = nlohmann::ordered_json;

enum class OutputFormat { Text, Json, Csv };
OutputFormat parse_format(const std::string& text);

// One stop for emitting a JSON document: 2-space indent plus trailing
// newline, the exact bytes the round-trip guarantee is stated against.
std::string dump_json(const Json& j);

Json to_json(const Slope& s);                 // "p/q" string
Json to_json(const SeifertInvariants& inv);   // {e0, ratios:[{p,q}]}
Json to_json(const NegCF& cf);                // ["-2","-4",...]
Json to_json(const TriangleRow& row);
Json to_json(const UpperRow& row);
Json to_json(const MaxTwistEntry& entry);
Json to_json(const CountReport& report);
Json to_json(const TargetVerdict& verdict);

std::string csv_seifert_ratios(const SeifertInvariants& inv);  // "p/q;p/q;..."

std::string render_triangle_csv(const std::vector<TriangleRow>& rows);
std::string render_upper_csv(const std::vector<UpperRow>& rows);
std::string render_count_csv(const CountReport& report);
std::string render_maxtwist_csv(const std::vector<MaxTwistEntry>& entries);
std::string render_target_csv(const FamilyParams& params, const TargetVerdict& verdict);

// Text tables use a compact aligned layout (integer slopes
// rendered bare) for visual diffing.
std::string render_triangle_text(const FamilyParams& params, const std::vector<TriangleRow>& rows);
std::string render_upper_text(const FamilyParams& params, const std::vector<UpperRow>& rows);
std::string render_count_text(const CountReport& report);
std::string render_maxtwist_text(const std::vector<MaxTwistEntry>& entries);
std::string render_target_text(const TargetVerdict& verdict);

}  // namespace sfs
