#ifndef OBNOX_IO_HPP
#define OBNOX_IO_HPP

#include <string>

#include <json.hpp>

#include "obnox/generators.hpp"
#include "obnox/instance.hpp"
#include "obnox/types.hpp"

namespace obnox {

/// Instance document, schema version 1:
///   {"format_version":1,
///    "space": {"kind":"euclidean","dim":d,"voters":[[..]],"candidates":[[..]]}
///           | {"kind":"graph","num_vertices":n,"edges":[[u,v,w],..],
///              "voters":[ids],"candidates":[ids]}
///           | {"kind":"matrix","num_voters":a,"num_candidates":b,
///              "dist":[[..]]}   // full (a+b)^2 table, voters first
///    "k":int, "lambda":int, "t":optional real}
/// Schema violations raise ValidationError naming the offending field path.
Instance parse_instance(const nlohmann::json& doc,
                        bool validate_triangle = false);

/// Inverse of parse_instance; emit(parse(x)) preserves all fields.
nlohmann::json emit_instance(const Instance& inst);

/// Result document {"status","committee","value","guarantee","algorithm",
/// "wall_time_ms"}. Recomputes objective(committee) and refuses to emit on
/// mismatch with result.value.
nlohmann::json emit_result(const Instance& inst, const SolveResult& result);

nlohmann::json emit_ground_truth(const GroundTruth& gt);
GroundTruth parse_ground_truth(const nlohmann::json& doc);

nlohmann::json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& doc);

}  // namespace obnox

#endif
