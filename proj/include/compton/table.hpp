#pragma once

// Result tables and their CSV / JSON writers.

#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

namespace compton {

using Cell = std::variant<double, long long, std::string>;

struct Table {
    std::vector<std::pair<std::string, std::string>> metadata;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_meta(std::string key, std::string value) { metadata.emplace_back(std::move(key), std::move(value)); }
};

/// 12 significant digits, shortest exponent form.
inline std::string format_number(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

/// x rounded to 12 significant digits.
inline double round12(double x) {
    return std::strtod(format_number(x).c_str(), nullptr);
}

inline void write_csv(std::ostream& os, const Table& t) {
    for (const auto& [k, v] : t.metadata) os << "# " << k << '=' << v << '\n';
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
    os << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << ',';
            std::visit(
                [&](const auto& v) {
                    using V = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<V, double>) {
                        os << format_number(v);
                    } else {
                        os << v;
                    }
                },
                row[i]);
        }
        os << '\n';
    }
}

inline nlohmann::ordered_json to_json(const Table& t) {
    nlohmann::ordered_json j;
    auto& meta = j["metadata"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : t.metadata) meta[k] = v;
    j["columns"] = t.columns;
    auto& rows = j["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
        auto r = nlohmann::ordered_json::array();
        for (const auto& cell : row) {
            std::visit(
                [&](const auto& v) {
                    using V = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<V, double>) {
                        r.push_back(round12(v));
                    } else {
                        r.push_back(v);
                    }
                },
                cell);
        }
        rows.push_back(std::move(r));
    }
    return j;
}

/// Pretty JSON with a trailing newline. Parsing the text and dumping it again
/// reproduces it byte for byte.
inline std::string json_text(const nlohmann::ordered_json& j) {
    return j.dump(2) + "\n";
}

inline void write_json(std::ostream& os, const Table& t) {
    os << json_text(to_json(t));
}

}  // namespace compton
