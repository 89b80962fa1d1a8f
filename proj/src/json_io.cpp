#include "shibij/json_io.hpp"

#include "shibij/errors.hpp"

namespace shibij::json {

namespace {

const json& field(const json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) {
        throw InvariantError(std::string("missing field \"") + name + "\"");
    }
    return j.at(name);
}

std::int64_t integer(const json& j, const char* what) {
    if (!j.is_number_integer()) {
        throw InvariantError(std::string(what) + " must be an integer");
    }
    return j.get<std::int64_t>();
}

std::vector<std::int64_t> integers(const json& j, const char* what) {
    if (!j.is_array()) {
        throw InvariantError(std::string(what) + " must be an array of integers");
    }
    std::vector<std::int64_t> out;
    for (const auto& x : j) {
        out.push_back(integer(x, what));
    }
    return out;
}

std::vector<std::vector<std::int64_t>> rows_of(const json& j) {
    if (!j.is_array()) {
        throw InvariantError("\"rows\" must be an array of arrays");
    }
    std::vector<std::vector<std::int64_t>> rows;
    for (const auto& row : j) {
        rows.push_back(integers(row, "tableau row"));
    }
    return rows;
}

std::vector<std::vector<std::int64_t>> checked_rows(const json& j) {
    if (j.is_array()) {
        return rows_of(j);
    }
    auto rows = rows_of(field(j, "rows"));
    if (j.contains("rank") && integer(j.at("rank"), "\"rank\"") != static_cast<std::int64_t>(rows.size())) {
        throw InvariantError("\"rank\" does not match the number of rows");
    }
    return rows;
}

json rows_json(const std::vector<std::vector<std::int64_t>>& rows) {
    json out = json::array();
    for (const auto& row : rows) {
        out.push_back(row);
    }
    return out;
}

}  // namespace

json parse(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvariantError(std::string("malformed JSON: ") + e.what());
    }
}

json entries_json(const Abacus& a) {
    json entries = json::array();
    for (const auto& e : a.entries()) {
        entries.push_back({e.base, e.level});
    }
    return entries;
}

json to_json(const Abacus& a) {
    return {{"n", a.size()}, {"entries", entries_json(a)}};
}

json to_json(const Window& w) {
    return {{"n", w.size()}, {"values", std::vector<std::int64_t>(w.values().begin(), w.values().end())}};
}

json to_json(const LevelVector& v) {
    return {{"beta", std::vector<std::int64_t>(v.values().begin(), v.values().end())}};
}

json to_json(const AlcoveTableau& t) {
    return {{"rank", t.rank()}, {"rows", rows_json(t.rows())}};
}

json to_json(const RegionTableau& r) {
    return {{"rank", r.rank()}, {"m", r.m()}, {"rows", rows_json(r.rows())}};
}

json to_json(const LatticePath& p) {
    return {{"n", p.n()}, {"m", p.m()}, {"steps", p.steps()}};
}

Abacus abacus_from_json(const json& j) {
    if (j.is_string()) {
        return parse_abacus(j.get<std::string>());
    }
    const json& entries = j.is_array() ? j : field(j, "entries");
    if (!entries.is_array()) {
        throw InvariantError("\"entries\" must be an array of [base, level] pairs");
    }
    std::vector<BaseLevel> parsed;
    for (const auto& e : entries) {
        if (!e.is_array() || e.size() != 2) {
            throw InvariantError("abacus entries must be [base, level] pairs");
        }
        parsed.push_back({integer(e[0], "base"), integer(e[1], "level")});
    }
    if (j.is_object() && j.contains("n") && integer(j.at("n"), "\"n\"") != static_cast<std::int64_t>(parsed.size())) {
        throw InvariantError("\"n\" does not match the number of entries");
    }
    return Abacus::from_entries(parsed);
}

Window window_from_json(const json& j) {
    auto values = integers(j.is_array() ? j : field(j, "values"), "\"values\"");
    if (j.is_object() && j.contains("n") && integer(j.at("n"), "\"n\"") != static_cast<std::int64_t>(values.size())) {
        throw InvariantError("\"n\" does not match the number of values");
    }
    return Window(std::move(values));
}

LevelVector level_vector_from_json(const json& j) {
    return LevelVector(integers(j.is_array() ? j : field(j, "beta"), "\"beta\""));
}

AlcoveTableau alcove_tableau_from_json(const json& j) {
    return AlcoveTableau::from_rows(checked_rows(j));
}

RegionTableau region_tableau_from_json(const json& j, std::int64_t fallback_m) {
    auto m = fallback_m;
    if (j.is_object() && j.contains("m")) {
        m = integer(j.at("m"), "\"m\"");
    }
    if (m == 0) {
        throw InvariantError("region tableau needs \"m\"");
    }
    return RegionTableau::from_rows(checked_rows(j), m);
}

LatticePath path_from_json(const json& j, std::int64_t fallback_m) {
    auto steps = integers(j.is_array() ? j : field(j, "steps"), "\"steps\"");
    auto m = fallback_m;
    if (j.is_object() && j.contains("m")) {
        m = integer(j.at("m"), "\"m\"");
    }
    if (m == 0) {
        throw InvariantError("path needs \"m\"");
    }
    auto n = static_cast<std::int64_t>(steps.size());
    if (j.is_object() && j.contains("n")) {
        n = integer(j.at("n"), "\"n\"");
    }
    return LatticePath(n, m, std::move(steps));
}

}  // namespace shibij::json
