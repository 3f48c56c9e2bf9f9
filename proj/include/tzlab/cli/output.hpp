#pragma once

/**
 * @file output.hpp
 * @brief Uniform CSV / JSON emission for CLI results.
 *
 * A Result is a flat-ish JSON record plus an optional table. JSON output is
 * the record with `columns` and `rows` appended; CSV output writes metadata
 * and scalar record fields as `# key=value` lines followed by the table, or a
 * one-row table of the record when there is no table. Floating values use
 * shortest round-trip formatting in both encodings.
 */

#include <chrono>
#include <ctime>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "tzlab/core/format.hpp"

namespace tzlab::cli {

using json = nlohmann::ordered_json;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<json>> rows;

    void add(std::vector<json> row) { rows.push_back(std::move(row)); }
};

struct Result {
    json record = json::object();
    std::optional<Table> table;
    bool stochastic = false;
};

enum class Format { csv, json };

inline std::string iso_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

inline std::string csv_cell(const json& v) {
    switch (v.type()) {
        case json::value_t::number_float: return format_double(v.get<double>());
        case json::value_t::number_integer: return std::to_string(v.get<std::int64_t>());
        case json::value_t::number_unsigned: return std::to_string(v.get<std::uint64_t>());
        case json::value_t::boolean: return v.get<bool>() ? "true" : "false";
        case json::value_t::null: return "";
        case json::value_t::string: {
            const auto s = v.get<std::string>();
            if (s.find_first_of(",\"\n") == std::string::npos) return s;
            std::string q = "\"";
            for (char c : s) {
                if (c == '"') q += '"';
                q += c;
            }
            return q + "\"";
        }
        default: return v.dump();
    }
}

inline void flatten(const json& v, const std::string& prefix, std::vector<std::pair<std::string, json>>& out) {
    if (v.is_object()) {
        for (const auto& [k, item] : v.items()) flatten(item, prefix.empty() ? k : prefix + "." + k, out);
    } else if (v.is_array()) {
        for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], prefix + "." + std::to_string(i), out);
    } else {
        out.emplace_back(prefix, v);
    }
}

inline void write_json(std::ostream& os, const Result& r, const json& meta) {
    json doc = r.record;
    if (r.table) {
        doc["columns"] = r.table->columns;
        json rows = json::array();
        for (const auto& row : r.table->rows) rows.push_back(json(row));
        doc["rows"] = std::move(rows);
    }
    if (!meta.empty()) doc["meta"] = meta;
    os << doc.dump() << '\n';
}

inline void write_csv(std::ostream& os, const Result& r, const json& meta) {
    std::vector<std::pair<std::string, json>> flat;
    flatten(meta, "", flat);
    for (const auto& [k, v] : flat) os << "# " << k << '=' << csv_cell(v) << '\n';
    flat.clear();
    flatten(r.record, "", flat);
    if (r.table) {
        for (const auto& [k, v] : flat) os << "# " << k << '=' << csv_cell(v) << '\n';
        for (std::size_t i = 0; i < r.table->columns.size(); ++i) os << (i ? "," : "") << r.table->columns[i];
        os << '\n';
        for (const auto& row : r.table->rows) {
            for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
            os << '\n';
        }
        return;
    }
    for (std::size_t i = 0; i < flat.size(); ++i) os << (i ? "," : "") << flat[i].first;
    os << '\n';
    for (std::size_t i = 0; i < flat.size(); ++i) os << (i ? "," : "") << csv_cell(flat[i].second);
    os << '\n';
}

}  // namespace tzlab::cli
