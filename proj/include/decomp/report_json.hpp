#pragma once

#include <string>

#include <json.hpp>

#include "decomp/decomposition.hpp"
#include "decomp/discharging.hpp"
#include "decomp/faces.hpp"
#include "decomp/rational.hpp"
#include "decomp/reducer.hpp"
#include "decomp/structure.hpp"

namespace decomp {

using Json = nlohmann::ordered_json;

// FNV-1a 64-bit digest of the raw input bytes, 16 lowercase hex digits.
std::string input_digest(const std::string& bytes);

// {"v": 1, "command": ..., "input_digest": ..., "result": payload}
Json make_report(const std::string& command, const std::string& input_bytes, Json payload);

Json to_json(const Rational& r);  // "p/q"
Json to_json(const EmbeddingSummary& s);
Json to_json(const StructureReport& r);
Json to_json(const OrientedDecomposition& dec);
Json to_json(const Violation& v);
Json to_json(const ConfigMatch& m);
Json trace_json(const DecomposeResult& res);
Json to_json(const AuditReport& rep);

}  // namespace decomp
