#pragma once

// JSON forms exchanged by the command-line tool.
//
//   abacus        {"n": 4, "entries": [[3,-1],[1,0],[2,0],[4,1]]}
//   window        {"n": 4, "values": [-1,1,2,8]}
//   level vector  {"beta": [0,0,-1,1]}
//   tableau       {"rank": 3, "rows": [[2,0,0],[1,0],[1]]}, plus "m" for a region
//   path          {"n": 5, "m": 3, "steps": [1,4,11,12,14]}
//
// Readers throw InvariantError naming the field or invariant that failed.

#include "shibij/affine.hpp"
#include "shibij/lattice_paths.hpp"
#include "shibij/tableau.hpp"

#include <json.hpp>

#include <string_view>

namespace shibij::json {

using nlohmann::json;

/// Parses text, mapping syntax errors to InvariantError.
json parse(std::string_view text);

json to_json(const Abacus& a);
json to_json(const Window& w);
json to_json(const LevelVector& v);
json to_json(const AlcoveTableau& t);
json to_json(const RegionTableau& r);
json to_json(const LatticePath& p);

/// Entries as [[base, level], ...].
json entries_json(const Abacus& a);

/// Accepts the object form, a bare [[base, level], ...] array, or the "[5^-2,2^-1,...]" string.
Abacus abacus_from_json(const json& j);
Window window_from_json(const json& j);
LevelVector level_vector_from_json(const json& j);
/// Accepts the object form or a bare array of rows.
AlcoveTableau alcove_tableau_from_json(const json& j);
/// m comes from the object, or from `fallback_m` when absent (0 means required).
RegionTableau region_tableau_from_json(const json& j, std::int64_t fallback_m = 0);
LatticePath path_from_json(const json& j, std::int64_t fallback_m = 0);

}  // namespace shibij::json
