#pragma once

// IFS ingestion format:
//   {"ratio": "1/6",
//    "translations": [["0/1", "0/1"], ["1/6", "0/1"], ...],
//    "invariant_square": ["0/1", "0/1", "1/1", "1/1"]}   // xmin, ymin, xmax, ymax; optional
// Every rational is a "p/q" string with q > 0, reduced on load.

#include "ifscheck/ifs.hpp"

#include <json.hpp>

#include <string>

namespace ifscheck {

/// Throws InputError on schema violations or malformed rationals.
Ifs ifs_from_json(const nlohmann::json& doc);
/// Requires a homogeneous system (all ratios equal).
nlohmann::json ifs_to_json(const Ifs& ifs);

/// "paper", "grid" (6×6) or a path to a JSON file. Throws InputError.
Ifs load_ifs(const std::string& name_or_path);

}  // namespace ifscheck
