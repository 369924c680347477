#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ecokin/errors.hpp"

namespace ecokin {

/// One report cell; numbers render with 17 significant digits so repeated
/// runs are byte-identical.
using Cell = std::variant<std::string, double, std::int64_t, bool>;

/// Ordered key/value row of one result.
using Row = std::vector<std::pair<std::string, Cell>>;

struct BlockReport {
    std::size_t index = 0;
    std::string command;  // canonical JSON echo of the command block
    std::vector<Row> rows;
    std::vector<std::string> warnings;
};

struct ReportEnvelope {
    std::string digest;  // fnv1a-64 of the untouched config text
    std::uint64_t seed = 0;
    std::vector<BlockReport> blocks;
};

/// (series, x, y) triple for external plotting.
struct PlotPoint {
    std::string series;
    double x = 0.0;
    double y = 0.0;
};

inline std::string format_double(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

inline std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t hash = 14695981039346656037ULL;
    for (const unsigned char c : bytes) {
        hash ^= c;
        hash *= 1099511628211ULL;
    }
    return hash;
}

inline std::string fnv1a64_hex(const std::string& bytes) {
    char buffer[24];
    std::snprintf(buffer, sizeof(buffer), "%016llx",
                  static_cast<unsigned long long>(fnv1a64(bytes)));
    return buffer;
}

namespace detail {

inline std::string cell_text(const Cell& cell) {
    if (const auto* s = std::get_if<std::string>(&cell)) return *s;
    if (const auto* d = std::get_if<double>(&cell)) return format_double(*d);
    if (const auto* i = std::get_if<std::int64_t>(&cell)) {
        return std::to_string(*i);
    }
    return std::get<bool>(cell) ? "true" : "false";
}

inline std::string csv_escape(const std::string& text) {
    if (text.find_first_of(",\"\n") == std::string::npos) return text;
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline std::string json_escape(const std::string& text) {
    std::string out;
    for (char c : text) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buffer[8];
                    std::snprintf(buffer, sizeof(buffer), "\\u%04x", c);
                    out += buffer;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

inline std::string cell_json(const Cell& cell) {
    if (const auto* s = std::get_if<std::string>(&cell)) {
        return "\"" + json_escape(*s) + "\"";
    }
    if (const auto* d = std::get_if<double>(&cell)) {
        // inf/nan are not JSON numbers; quote them.
        if (!std::isfinite(*d)) return "\"" + cell_text(cell) + "\"";
    }
    return cell_text(cell);
}

}  // namespace detail

/// Flat CSV: '#' comment lines carry the envelope metadata, each block is
/// one or more header+rows tables (a fresh header starts whenever the row
/// shape changes, e.g. the balanced/cycle/summary rows of an economy run).
inline std::string render_csv(const ReportEnvelope& envelope) {
    std::string out;
    out += "# ecokin-report v1\n";
    out += "# digest: " + envelope.digest + "\n";
    out += "# seed: " + std::to_string(envelope.seed) + "\n";
    for (const auto& block : envelope.blocks) {
        out += "# block " + std::to_string(block.index) + ": " +
               block.command + "\n";
        for (const auto& warning : block.warnings) {
            out += "# warning: " + warning + "\n";
        }
        std::string previous_header;
        for (const auto& row : block.rows) {
            std::string header;
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i) header += ",";
                header += detail::csv_escape(row[i].first);
            }
            if (header != previous_header) {
                out += header + "\n";
                previous_header = header;
            }
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i) out += ",";
                out += detail::csv_escape(detail::cell_text(row[i].second));
            }
            out += "\n";
        }
    }
    return out;
}

/// JSON lines: one meta object, then one object per block/row/warning.
inline std::string render_json_lines(const ReportEnvelope& envelope) {
    std::string out;
    out += "{\"type\":\"meta\",\"digest\":\"" + envelope.digest +
           "\",\"seed\":" + std::to_string(envelope.seed) + "}\n";
    for (const auto& block : envelope.blocks) {
        out += "{\"type\":\"block\",\"index\":" + std::to_string(block.index) +
               ",\"command\":" + block.command + "}\n";
        for (const auto& row : block.rows) {
            out += "{\"type\":\"row\",\"block\":" +
                   std::to_string(block.index);
            for (const auto& [key, cell] : row) {
                out += ",\"" + detail::json_escape(key) +
                       "\":" + detail::cell_json(cell);
            }
            out += "}\n";
        }
        for (const auto& warning : block.warnings) {
            out += "{\"type\":\"warning\",\"block\":" +
                   std::to_string(block.index) + ",\"message\":\"" +
                   detail::json_escape(warning) + "\"}\n";
        }
    }
    return out;
}

enum class ReportFormat { Csv, JsonLines };

inline ReportFormat parse_format(const std::string& name) {
    if (name == "csv") return ReportFormat::Csv;
    if (name == "json-lines") return ReportFormat::JsonLines;
    throw validation_error("unknown format '" + name +
                           "' (expected csv or json-lines)");
}

inline std::string render(const ReportEnvelope& envelope, ReportFormat format) {
    return format == ReportFormat::Csv ? render_csv(envelope)
                                       : render_json_lines(envelope);
}

}  // namespace ecokin
