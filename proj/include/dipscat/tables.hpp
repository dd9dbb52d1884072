#pragma once

// Tabular results and their serialized forms. Both emitters are
// deterministic: fixed column order, fixed 12-significant-digit numeric
// formatting, no locale or timestamp dependence, so identical configs
// produce byte-identical files. CSV carries the config and summary footer
// as trailing '#' comment lines and parses back losslessly at the emitted
// precision; JSON mirrors the same content under a versioned schema.

#include <cctype>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dipscat {

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    // resolved run configuration and derived summary values, in emit order
    std::vector<std::pair<std::string, std::string>> config;
    std::vector<std::pair<std::string, std::string>> footer;
};

namespace detail {

inline std::string format_number(double v) {
    if (!std::isfinite(v)) {
        throw std::invalid_argument("table values must be finite");
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

inline std::string trim(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

inline std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(trim(line.substr(start)));
            return out;
        }
        out.push_back(trim(line.substr(start, pos - start)));
        start = pos + 1;
    }
}

inline void append_comment_pairs(std::string& out, const char* prefix,
                                 const std::vector<std::pair<std::string, std::string>>& pairs) {
    for (const auto& [key, value] : pairs) {
        out += "# ";
        out += prefix;
        out += key;
        out += " = ";
        out += value;
        out += '\n';
    }
}

inline std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            default: out += ch;
        }
    }
    return out;
}

}  // namespace detail

inline std::string emit_csv(const Table& table) {
    if (table.columns.empty()) {
        throw std::invalid_argument("emit_csv: table has no columns");
    }
    std::string out;
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i) out += ',';
        out += table.columns[i];
    }
    out += '\n';
    for (const auto& row : table.rows) {
        if (row.size() != table.columns.size()) {
            throw std::invalid_argument("emit_csv: row width differs from header");
        }
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += detail::format_number(row[i]);
        }
        out += '\n';
    }
    detail::append_comment_pairs(out, "config.", table.config);
    detail::append_comment_pairs(out, "", table.footer);
    return out;
}

inline Table parse_csv(const std::string& text) {
    Table table;
    std::size_t pos = 0;
    bool saw_header = false;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string::npos) end = text.size();
        const std::string line = detail::trim(text.substr(pos, end - pos));
        pos = end + 1;
        if (line.empty()) continue;
        if (line.front() == '#') {
            const std::string body = detail::trim(line.substr(1));
            const std::size_t eq = body.find('=');
            if (eq == std::string::npos) {
                throw std::invalid_argument("parse_csv: comment line without key = value");
            }
            std::string key = detail::trim(body.substr(0, eq));
            const std::string value = detail::trim(body.substr(eq + 1));
            if (key.rfind("config.", 0) == 0) {
                table.config.emplace_back(key.substr(7), value);
            } else {
                table.footer.emplace_back(key, value);
            }
            continue;
        }
        if (!saw_header) {
            table.columns = detail::split(line, ',');
            saw_header = true;
            continue;
        }
        const std::vector<std::string> cells = detail::split(line, ',');
        if (cells.size() != table.columns.size()) {
            throw std::invalid_argument("parse_csv: row width differs from header");
        }
        std::vector<double> row;
        row.reserve(cells.size());
        for (const auto& cell : cells) {
            std::size_t used = 0;
            double v = 0.0;
            try {
                v = std::stod(cell, &used);
            } catch (const std::exception&) {
                throw std::invalid_argument("parse_csv: non-numeric cell '" + cell + "'");
            }
            if (used != cell.size()) {
                throw std::invalid_argument("parse_csv: trailing junk in cell '" + cell + "'");
            }
            row.push_back(v);
        }
        table.rows.push_back(std::move(row));
    }
    if (!saw_header) {
        throw std::invalid_argument("parse_csv: missing header row");
    }
    return table;
}

// Equality at emitted precision: serialized forms are compared, since a
// 12-digit decimal cannot carry the last bits of a double.
inline bool tables_equal(const Table& a, const Table& b) {
    return emit_csv(a) == emit_csv(b);
}

inline std::string emit_json(const Table& table) {
    if (table.columns.empty()) {
        throw std::invalid_argument("emit_json: table has no columns");
    }
    std::string out = "{\n  \"schema_version\": 1,\n  \"config\": {";
    for (std::size_t i = 0; i < table.config.size(); ++i) {
        out += i ? ",\n    " : "\n    ";
        out += '"' + detail::json_escape(table.config[i].first) + "\": \"" +
               detail::json_escape(table.config[i].second) + '"';
    }
    out += table.config.empty() ? "},\n" : "\n  },\n";
    out += "  \"columns\": [";
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i) out += ", ";
        out += '"' + detail::json_escape(table.columns[i]) + '"';
    }
    out += "],\n  \"rows\": [";
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        if (table.rows[r].size() != table.columns.size()) {
            throw std::invalid_argument("emit_json: row width differs from header");
        }
        out += r ? ",\n    " : "\n    ";
        out += '[';
        for (std::size_t i = 0; i < table.rows[r].size(); ++i) {
            if (i) out += ", ";
            out += detail::format_number(table.rows[r][i]);
        }
        out += ']';
    }
    out += table.rows.empty() ? "],\n" : "\n  ],\n";
    out += "  \"footer\": {";
    for (std::size_t i = 0; i < table.footer.size(); ++i) {
        out += i ? ",\n    " : "\n    ";
        out += '"' + detail::json_escape(table.footer[i].first) + "\": \"" +
               detail::json_escape(table.footer[i].second) + '"';
    }
    out += table.footer.empty() ? "}\n}\n" : "\n  }\n}\n";
    return out;
}

}  // namespace dipscat
