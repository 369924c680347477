#pragma once

#include <cmath>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "ecokin/errors.hpp"
#include "ecokin/interval.hpp"

namespace ecokin {

/// One ingested quote quadruple: the same pair of objects quoted in two
/// scales, (a_min, a_max) in the first and (b_min, b_max) in the second.
///
/// Each side measures the squared interval between the quoted object and
/// the scale's reference point. The rows carry no explicit reference, so
/// it defaults to the radar midpoint of the quoted extremes (the geometric
/// mean price); each side is then log(min/ref) * log(max/ref) and the row
/// result averages the two sides. Invariance predicts the sides agree.
struct QuoteOutcome {
    std::string pair_id;
    LogBase base = LogBase::Two;
    IntervalResult side_a;
    IntervalResult side_b;
    IntervalResult combined;
    double mismatch = 0.0;  // relative disagreement of the two sides
};

struct QuoteReport {
    std::vector<QuoteOutcome> outcomes;
    std::vector<std::string> warnings;
};

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(field);
            field.clear();
        } else if (c != '\r') {
            field += c;
        }
    }
    fields.push_back(field);
    return fields;
}

inline std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t");
    return s.substr(begin, end - begin + 1);
}

inline bool parse_price(const std::string& text, double& out) {
    const std::string t = trim(text);
    if (t.empty()) return false;
    std::size_t pos = 0;
    try {
        out = std::stod(t, &pos);
    } catch (const std::exception&) {
        return false;
    }
    return pos == t.size() && std::isfinite(out);
}

/// Interval between a quoted spread and its own radar midpoint.
inline IntervalResult side_interval(double lo, double hi, LogBase base) {
    const double reference = std::sqrt(lo * hi);
    return interval_from_prices(lo, hi, reference, reference, base);
}

}  // namespace detail

/// Reads quote quadruples from CSV with header
/// `pair_id,a_min,a_max,b_min,b_max[,base]` and evaluates one interval per
/// row. Malformed rows are reported with their line numbers and skipped;
/// the rest of the file is still processed.
inline QuoteReport ingest_quotes(std::istream& in,
                                 LogBase default_base = LogBase::Two) {
    std::string line;
    if (!std::getline(in, line)) {
        throw validation_error("quote file is empty");
    }
    {
        auto header = detail::split_csv_line(line);
        for (auto& h : header) h = detail::trim(h);
        const bool five = header == std::vector<std::string>{
            "pair_id", "a_min", "a_max", "b_min", "b_max"};
        const bool six = header == std::vector<std::string>{
            "pair_id", "a_min", "a_max", "b_min", "b_max", "base"};
        if (!five && !six) {
            throw validation_error(
                "quote header must be pair_id,a_min,a_max,b_min,b_max[,base]");
        }
    }

    QuoteReport report;
    std::size_t line_number = 1;
    while (std::getline(in, line)) {
        ++line_number;
        if (detail::trim(line).empty()) continue;
        const auto fields = detail::split_csv_line(line);
        const std::string where = "line " + std::to_string(line_number);

        if (fields.size() != 5 && fields.size() != 6) {
            report.warnings.push_back(where + ": expected 5 or 6 fields, got " +
                                      std::to_string(fields.size()));
            continue;
        }

        double prices[4];
        bool ok = true;
        for (int i = 0; i < 4; ++i) {
            ok = ok && detail::parse_price(fields[i + 1], prices[i]);
        }
        if (!ok) {
            report.warnings.push_back(where + ": unparseable price field");
            continue;
        }
        if (!(prices[0] > 0.0 && prices[1] > 0.0 && prices[2] > 0.0 &&
              prices[3] > 0.0)) {
            report.warnings.push_back(where + ": prices must be positive");
            continue;
        }

        LogBase base = default_base;
        if (fields.size() == 6) {
            const std::string tag = detail::trim(fields[5]);
            if (tag == "e") {
                base = LogBase::E;
            } else if (tag == "2") {
                base = LogBase::Two;
            } else if (!tag.empty()) {
                report.warnings.push_back(where + ": base must be '2' or 'e'");
                continue;
            }
        }

        QuoteOutcome outcome;
        outcome.pair_id = detail::trim(fields[0]);
        outcome.base = base;
        outcome.side_a = detail::side_interval(prices[0], prices[1], base);
        outcome.side_b = detail::side_interval(prices[2], prices[3], base);
        const double mean =
            0.5 * (outcome.side_a.squared + outcome.side_b.squared);
        const double scale = std::max(std::abs(outcome.side_a.squared),
                                      std::abs(outcome.side_b.squared));
        outcome.combined = detail::make_interval(mean, std::sqrt(scale));
        outcome.mismatch =
            scale > 0.0
                ? std::abs(outcome.side_a.squared - outcome.side_b.squared) /
                      scale
                : 0.0;
        report.outcomes.push_back(std::move(outcome));
    }
    return report;
}

inline QuoteReport ingest_quotes_text(const std::string& csv,
                                      LogBase default_base = LogBase::Two) {
    std::istringstream in(csv);
    return ingest_quotes(in, default_base);
}

}  // namespace ecokin
