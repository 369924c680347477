#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "ecokin/algebra.hpp"
#include "ecokin/errors.hpp"
#include "ecokin/frame.hpp"
#include "ecokin/interval.hpp"
#include "ecokin/rational.hpp"
#include "ecokin/transport.hpp"
#include "ecokin/worldline.hpp"

namespace ecokin {

inline constexpr const char* kConfigVersion = "ecokin/1";

// ---------------------------------------------------------------------------
// Config model. One file describes one reproducible experiment: a shared
// cast of objects, frames and expressions, plus an ordered list of command
// blocks executed against them.
// ---------------------------------------------------------------------------

struct TransformCommand {
    std::vector<Event> events;
    std::vector<std::string> objects;
    std::vector<double> offsets{0.0};  // proper-quantity sample offsets
    std::vector<std::string> frames;
};

struct IntervalPairSpec {
    Event a;
    Event b;
};

struct IntervalPricesSpec {
    double a_min = 0.0, a_max = 0.0, b_min = 0.0, b_max = 0.0;
    std::optional<LogBase> base;
};

struct IntervalCommand {
    std::vector<IntervalPairSpec> pairs;
    std::vector<IntervalPricesSpec> prices;
};

struct QuotesCommand {
    std::string csv_path;    // resolved against the config directory
    std::string inline_csv;  // alternative to csv_path
};

struct TransportCommand {
    TransportParams params;
    std::optional<double> quality_rate;  // runs the speed-limit check
};

struct EconomyCommand {
    std::size_t size = 0;
    std::vector<double> matrix;  // row-major
    std::vector<double> init;
    std::size_t cycles = 1;
};

struct TwinCommand {
    std::vector<WorldlineSegment> legs;
};

struct ConsentSpec {
    Transaction txn;
    Rational exponent{1};
    std::string frame;
};

struct EvaluateSpec {
    std::string expression;
    std::string frame;
};

struct PartitionSpec {
    std::string frame;
    std::vector<std::string> objects;
};

struct AlgebraCommand {
    std::vector<EvaluateSpec> evaluate;
    std::vector<ConsentSpec> consents;
    std::vector<PartitionSpec> partitions;
    std::size_t law_draws = 0;
};

using Command = std::variant<TransformCommand, IntervalCommand, QuotesCommand,
                             TransportCommand, EconomyCommand, TwinCommand,
                             AlgebraCommand>;

struct ScenarioConfig {
    std::string version = kConfigVersion;
    std::vector<EconomicObject> objects;
    std::vector<ConsumerFrame> frames;
    std::vector<std::pair<std::string, MeasurementExpr>> expressions;
    std::vector<Command> commands;

    ObjectSet object_set() const {
        ObjectSet set;
        for (const auto& obj : objects) set[obj.id] = obj;
        return set;
    }

    const ConsumerFrame& frame(const std::string& label,
                               const std::string& path) const {
        for (const auto& f : frames) {
            if (f.label == label) return f;
        }
        throw validation_error(path + ": unknown frame '" + label + "'");
    }

    const MeasurementExpr& expression(const std::string& id,
                                      const std::string& path) const {
        for (const auto& [name, expr] : expressions) {
            if (name == id) return expr;
        }
        throw validation_error(path + ": unknown expression '" + id + "'");
    }
};

// ---------------------------------------------------------------------------
// Parsing. Errors always name the config path segment that failed.
// ---------------------------------------------------------------------------

namespace config_detail {

using nlohmann::json;

[[noreturn]] inline void fail(const std::string& path,
                              const std::string& message) {
    throw validation_error(path + ": " + message);
}

inline const json& expect(const json& node, const std::string& path,
                          const char* key) {
    if (!node.is_object()) fail(path, "expected an object");
    const auto it = node.find(key);
    if (it == node.end()) fail(path, std::string("missing field '") + key + "'");
    return *it;
}

inline void check_keys(const json& node, const std::string& path,
                       std::initializer_list<const char*> allowed) {
    if (!node.is_object()) fail(path, "expected an object");
    for (const auto& [key, value] : node.items()) {
        bool known = false;
        for (const char* a : allowed) known = known || key == a;
        if (!known) fail(path, "unknown field '" + key + "'");
    }
}

inline double number_at(const json& node, const std::string& path) {
    if (!node.is_number()) fail(path, "expected a number");
    return node.get<double>();
}

inline double field_number(const json& node, const std::string& path,
                           const char* key) {
    return number_at(expect(node, path, key), path + "." + key);
}

inline std::string field_string(const json& node, const std::string& path,
                                const char* key) {
    const json& value = expect(node, path, key);
    if (!value.is_string()) fail(path + "." + key, "expected a string");
    return value.get<std::string>();
}

inline const json& field_array(const json& node, const std::string& path,
                               const char* key) {
    const json& value = expect(node, path, key);
    if (!value.is_array()) fail(path + "." + key, "expected an array");
    return value;
}

inline Event parse_event(const json& node, const std::string& path) {
    check_keys(node, path, {"tau", "l"});
    return {field_number(node, path, "tau"), field_number(node, path, "l")};
}

inline Velocity parse_velocity(const json& node, const std::string& path) {
    const double v = number_at(node, path);
    try {
        return Velocity(v);
    } catch (const validation_error& e) {
        fail(path, e.what());
    }
}

inline Rational parse_rational(const json& node, const std::string& path) {
    try {
        if (node.is_number_integer()) {
            return Rational(node.get<std::int64_t>());
        }
        if (node.is_string()) {
            return Rational::parse(node.get<std::string>());
        }
    } catch (const validation_error& e) {
        fail(path, e.what());
    }
    fail(path, "expected an integer or a 'num/den' string");
}

inline LogBase parse_base(const json& node, const std::string& path) {
    if (node.is_string() && node.get<std::string>() == "e") return LogBase::E;
    if (node.is_string() && node.get<std::string>() == "2") return LogBase::Two;
    if (node.is_number_integer() && node.get<int>() == 2) return LogBase::Two;
    fail(path, "base must be \"2\" or \"e\"");
}

inline std::vector<WorldlineSegment> parse_segments(const json& node,
                                                    const std::string& path) {
    std::vector<WorldlineSegment> segments;
    for (std::size_t i = 0; i < node.size(); ++i) {
        const std::string at = path + "[" + std::to_string(i) + "]";
        check_keys(node[i], at, {"v", "dtau"});
        const double dtau = field_number(node[i], at, "dtau");
        if (!(dtau > 0.0)) fail(at + ".dtau", "must be positive");
        segments.push_back(
            {parse_velocity(expect(node[i], at, "v"), at + ".v"), dtau});
    }
    return segments;
}

inline MeasurementExpr parse_expr(const json& node, const std::string& path) {
    const std::string kind = field_string(node, path, "kind");
    try {
        if (kind == "zero") {
            check_keys(node, path, {"kind"});
            return MeasurementExpr::zero();
        }
        if (kind == "one") {
            check_keys(node, path, {"kind"});
            return MeasurementExpr::one();
        }
        if (kind == "leaf") {
            check_keys(node, path, {"kind", "receive", "deliver", "exponent"});
            Transaction txn{field_string(node, path, "receive"),
                            field_string(node, path, "deliver")};
            Rational exponent(1);
            if (node.contains("exponent")) {
                exponent = parse_rational(node["exponent"], path + ".exponent");
            }
            return MeasurementExpr::leaf(std::move(txn), exponent);
        }
        if (kind == "sum" || kind == "product") {
            check_keys(node, path, {"kind", "children"});
            const json& kids = field_array(node, path, "children");
            std::vector<MeasurementExpr> children;
            for (std::size_t i = 0; i < kids.size(); ++i) {
                children.push_back(parse_expr(
                    kids[i], path + ".children[" + std::to_string(i) + "]"));
            }
            return kind == "sum" ? MeasurementExpr::sum(std::move(children))
                                 : MeasurementExpr::product(std::move(children));
        }
    } catch (const validation_error& e) {
        const std::string what = e.what();
        if (what.rfind(path, 0) == 0) throw;  // already carries a path
        fail(path, what);
    }
    fail(path + ".kind", "unknown expression kind '" + kind + "'");
}

inline Command parse_command(const json& node, const std::string& path) {
    const std::string op = field_string(node, path, "op");

    if (op == "transform") {
        check_keys(node, path, {"op", "events", "objects", "offsets", "frames"});
        TransformCommand cmd;
        if (node.contains("events")) {
            const json& events = field_array(node, path, "events");
            for (std::size_t i = 0; i < events.size(); ++i) {
                cmd.events.push_back(parse_event(
                    events[i], path + ".events[" + std::to_string(i) + "]"));
            }
        }
        if (node.contains("objects")) {
            cmd.objects =
                field_array(node, path, "objects").get<std::vector<std::string>>();
        }
        if (node.contains("offsets")) {
            cmd.offsets =
                field_array(node, path, "offsets").get<std::vector<double>>();
        }
        const json& frames = field_array(node, path, "frames");
        cmd.frames = frames.get<std::vector<std::string>>();
        if (cmd.frames.empty()) fail(path + ".frames", "needs at least one frame");
        if (cmd.events.empty() && cmd.objects.empty()) {
            fail(path, "transform needs events or objects");
        }
        return cmd;
    }

    if (op == "interval") {
        check_keys(node, path, {"op", "pairs", "prices"});
        IntervalCommand cmd;
        if (node.contains("pairs")) {
            const json& pairs = field_array(node, path, "pairs");
            for (std::size_t i = 0; i < pairs.size(); ++i) {
                const std::string at = path + ".pairs[" + std::to_string(i) + "]";
                check_keys(pairs[i], at, {"a", "b"});
                cmd.pairs.push_back(
                    {parse_event(expect(pairs[i], at, "a"), at + ".a"),
                     parse_event(expect(pairs[i], at, "b"), at + ".b")});
            }
        }
        if (node.contains("prices")) {
            const json& prices = field_array(node, path, "prices");
            for (std::size_t i = 0; i < prices.size(); ++i) {
                const std::string at =
                    path + ".prices[" + std::to_string(i) + "]";
                check_keys(prices[i], at,
                           {"a_min", "a_max", "b_min", "b_max", "base"});
                IntervalPricesSpec spec;
                spec.a_min = field_number(prices[i], at, "a_min");
                spec.a_max = field_number(prices[i], at, "a_max");
                spec.b_min = field_number(prices[i], at, "b_min");
                spec.b_max = field_number(prices[i], at, "b_max");
                if (prices[i].contains("base")) {
                    spec.base = parse_base(prices[i]["base"], at + ".base");
                }
                cmd.prices.push_back(spec);
            }
        }
        if (cmd.pairs.empty() && cmd.prices.empty()) {
            fail(path, "interval needs pairs or prices");
        }
        return cmd;
    }

    if (op == "quotes") {
        check_keys(node, path, {"op", "csv", "inline"});
        QuotesCommand cmd;
        if (node.contains("csv")) cmd.csv_path = field_string(node, path, "csv");
        if (node.contains("inline")) {
            cmd.inline_csv = field_string(node, path, "inline");
        }
        if (cmd.csv_path.empty() == cmd.inline_csv.empty()) {
            fail(path, "quotes needs exactly one of 'csv' or 'inline'");
        }
        return cmd;
    }

    if (op == "transport") {
        check_keys(node, path,
                   {"op", "s0", "kt", "length", "n0", "step", "quality_rate"});
        TransportCommand cmd;
        cmd.params.s0 = field_number(node, path, "s0");
        cmd.params.kt = field_number(node, path, "kt");
        cmd.params.length = field_number(node, path, "length");
        cmd.params.n0 = field_number(node, path, "n0");
        if (node.contains("step")) {
            cmd.params.step = field_number(node, path, "step");
        }
        if (node.contains("quality_rate")) {
            cmd.quality_rate = field_number(node, path, "quality_rate");
        }
        return cmd;
    }

    if (op == "economy") {
        check_keys(node, path, {"op", "matrix", "init", "cycles"});
        EconomyCommand cmd;
        const json& matrix = field_array(node, path, "matrix");
        cmd.size = matrix.size();
        for (std::size_t i = 0; i < matrix.size(); ++i) {
            const std::string at = path + ".matrix[" + std::to_string(i) + "]";
            if (!matrix[i].is_array() || matrix[i].size() != cmd.size) {
                fail(at, "matrix must be square");
            }
            for (std::size_t j = 0; j < cmd.size; ++j) {
                cmd.matrix.push_back(
                    number_at(matrix[i][j], at + "[" + std::to_string(j) + "]"));
            }
        }
        cmd.init = field_array(node, path, "init").get<std::vector<double>>();
        const double cycles = field_number(node, path, "cycles");
        if (!(cycles >= 1.0)) fail(path + ".cycles", "must be at least 1");
        cmd.cycles = static_cast<std::size_t>(cycles);
        return cmd;
    }

    if (op == "twin") {
        check_keys(node, path, {"op", "legs"});
        TwinCommand cmd;
        cmd.legs = parse_segments(field_array(node, path, "legs"),
                                  path + ".legs");
        if (cmd.legs.empty()) fail(path + ".legs", "needs at least one leg");
        return cmd;
    }

    if (op == "algebra") {
        check_keys(node, path,
                   {"op", "evaluate", "consent", "partition", "law_draws"});
        AlgebraCommand cmd;
        if (node.contains("evaluate")) {
            const json& entries = field_array(node, path, "evaluate");
            for (std::size_t i = 0; i < entries.size(); ++i) {
                const std::string at =
                    path + ".evaluate[" + std::to_string(i) + "]";
                check_keys(entries[i], at, {"expression", "frame"});
                cmd.evaluate.push_back(
                    {field_string(entries[i], at, "expression"),
                     field_string(entries[i], at, "frame")});
            }
        }
        if (node.contains("consent")) {
            const json& entries = field_array(node, path, "consent");
            for (std::size_t i = 0; i < entries.size(); ++i) {
                const std::string at =
                    path + ".consent[" + std::to_string(i) + "]";
                check_keys(entries[i], at,
                           {"receive", "deliver", "exponent", "frame"});
                ConsentSpec spec;
                spec.txn = {field_string(entries[i], at, "receive"),
                            field_string(entries[i], at, "deliver")};
                if (entries[i].contains("exponent")) {
                    spec.exponent = parse_rational(entries[i]["exponent"],
                                                   at + ".exponent");
                }
                spec.frame = field_string(entries[i], at, "frame");
                cmd.consents.push_back(std::move(spec));
            }
        }
        if (node.contains("partition")) {
            const json& entries = field_array(node, path, "partition");
            for (std::size_t i = 0; i < entries.size(); ++i) {
                const std::string at =
                    path + ".partition[" + std::to_string(i) + "]";
                check_keys(entries[i], at, {"frame", "objects"});
                cmd.partitions.push_back(
                    {field_string(entries[i], at, "frame"),
                     field_array(entries[i], at, "objects")
                         .get<std::vector<std::string>>()});
            }
        }
        if (node.contains("law_draws")) {
            const double draws = field_number(node, path, "law_draws");
            if (draws < 0.0) fail(path + ".law_draws", "must be nonnegative");
            cmd.law_draws = static_cast<std::size_t>(draws);
        }
        return cmd;
    }

    fail(path + ".op", "unknown command '" + op + "'");
}

}  // namespace config_detail

namespace config_detail {

inline ScenarioConfig parse_config_impl(const std::string& text) {
    using config_detail::fail;
    using nlohmann::json;

    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw validation_error(std::string("config: invalid JSON: ") + e.what());
    }
    config_detail::check_keys(
        root, "config", {"version", "objects", "frames", "expressions",
                         "commands"});

    ScenarioConfig config;
    config.version = config_detail::field_string(root, "config", "version");
    if (config.version != kConfigVersion) {
        fail("config.version", "unrecognized version '" + config.version +
                                   "' (expected " + kConfigVersion + ")");
    }

    if (root.contains("objects")) {
        const json& objects = config_detail::field_array(root, "config", "objects");
        for (std::size_t i = 0; i < objects.size(); ++i) {
            const std::string at = "config.objects[" + std::to_string(i) + "]";
            config_detail::check_keys(objects[i], at, {"id", "base", "segments"});
            EconomicObject obj;
            obj.id = config_detail::field_string(objects[i], at, "id");
            const Event base = config_detail::parse_event(
                config_detail::expect(objects[i], at, "base"), at + ".base");
            std::vector<WorldlineSegment> segments;
            if (objects[i].contains("segments")) {
                segments = config_detail::parse_segments(
                    config_detail::field_array(objects[i], at, "segments"),
                    at + ".segments");
            }
            obj.worldline = Worldline(base, std::move(segments));
            for (const auto& existing : config.objects) {
                if (existing.id == obj.id) {
                    fail(at + ".id", "duplicate object id '" + obj.id + "'");
                }
            }
            config.objects.push_back(std::move(obj));
        }
    }

    if (root.contains("frames")) {
        const json& frames = config_detail::field_array(root, "config", "frames");
        for (std::size_t i = 0; i < frames.size(); ++i) {
            const std::string at = "config.frames[" + std::to_string(i) + "]";
            config_detail::check_keys(frames[i], at, {"label", "v", "origin"});
            ConsumerFrame frame;
            frame.label = config_detail::field_string(frames[i], at, "label");
            frame.v = config_detail::parse_velocity(
                config_detail::expect(frames[i], at, "v"), at + ".v");
            if (frames[i].contains("origin")) {
                frame.origin = config_detail::parse_event(frames[i]["origin"],
                                                          at + ".origin");
            }
            for (const auto& existing : config.frames) {
                if (existing.label == frame.label) {
                    fail(at + ".label",
                         "duplicate frame label '" + frame.label + "'");
                }
            }
            config.frames.push_back(std::move(frame));
        }
    }

    if (root.contains("expressions")) {
        const json& exprs =
            config_detail::field_array(root, "config", "expressions");
        for (std::size_t i = 0; i < exprs.size(); ++i) {
            const std::string at = "config.expressions[" + std::to_string(i) + "]";
            config_detail::check_keys(exprs[i], at, {"id", "expr"});
            const std::string id = config_detail::field_string(exprs[i], at, "id");
            for (const auto& [existing, unused] : config.expressions) {
                if (existing == id) {
                    fail(at + ".id", "duplicate expression id '" + id + "'");
                }
            }
            config.expressions.emplace_back(
                id, config_detail::parse_expr(
                        config_detail::expect(exprs[i], at, "expr"),
                        at + ".expr"));
        }
    }

    const nlohmann::json& commands =
        config_detail::field_array(root, "config", "commands");
    for (std::size_t i = 0; i < commands.size(); ++i) {
        config.commands.push_back(config_detail::parse_command(
            commands[i], "config.commands[" + std::to_string(i) + "]"));
    }
    return config;
}

}  // namespace config_detail

/// Parses and validates a scenario config. Every reported problem names
/// the config path segment where it occurred.
inline ScenarioConfig parse_config(const std::string& text) {
    try {
        return config_detail::parse_config_impl(text);
    } catch (const nlohmann::json::exception& e) {
        throw validation_error(std::string("config: ") + e.what());
    }
}

// ---------------------------------------------------------------------------
// Canonical serialization: sorted keys, minimal whitespace. parse followed
// by serialize is the canonical form of any accepted config.
// ---------------------------------------------------------------------------

namespace config_detail {

inline json event_json(const Event& e) {
    return {{"tau", e.tau}, {"l", e.l}};
}

inline json segments_json(const std::vector<WorldlineSegment>& segments) {
    json out = json::array();
    for (const auto& s : segments) {
        out.push_back({{"v", s.v.value()}, {"dtau", s.dtau}});
    }
    return out;
}

inline json expr_json(const MeasurementExpr& e) {
    using Kind = MeasurementExpr::Kind;
    switch (e.kind()) {
        case Kind::Zero: return {{"kind", "zero"}};
        case Kind::One: return {{"kind", "one"}};
        case Kind::Leaf:
            return {{"kind", "leaf"},
                    {"receive", e.txn().receive},
                    {"deliver", e.txn().deliver},
                    {"exponent", e.exponent().str()}};
        case Kind::Sum:
        case Kind::Product: {
            json children = json::array();
            for (const auto& child : e.children()) {
                children.push_back(expr_json(child));
            }
            return {{"kind", e.kind() == Kind::Sum ? "sum" : "product"},
                    {"children", children}};
        }
    }
    return nullptr;
}

inline json command_json(const Command& command) {
    return std::visit(
        [](const auto& cmd) -> json {
            using T = std::decay_t<decltype(cmd)>;
            if constexpr (std::is_same_v<T, TransformCommand>) {
                json out{{"op", "transform"}, {"frames", cmd.frames}};
                if (!cmd.events.empty()) {
                    json events = json::array();
                    for (const auto& e : cmd.events) events.push_back(event_json(e));
                    out["events"] = events;
                }
                if (!cmd.objects.empty()) {
                    out["objects"] = cmd.objects;
                    out["offsets"] = cmd.offsets;
                }
                return out;
            } else if constexpr (std::is_same_v<T, IntervalCommand>) {
                json out{{"op", "interval"}};
                if (!cmd.pairs.empty()) {
                    json pairs = json::array();
                    for (const auto& p : cmd.pairs) {
                        pairs.push_back(
                            {{"a", event_json(p.a)}, {"b", event_json(p.b)}});
                    }
                    out["pairs"] = pairs;
                }
                if (!cmd.prices.empty()) {
                    json prices = json::array();
                    for (const auto& p : cmd.prices) {
                        json entry{{"a_min", p.a_min},
                                   {"a_max", p.a_max},
                                   {"b_min", p.b_min},
                                   {"b_max", p.b_max}};
                        if (p.base) {
                            entry["base"] = *p.base == LogBase::E ? "e" : "2";
                        }
                        prices.push_back(entry);
                    }
                    out["prices"] = prices;
                }
                return out;
            } else if constexpr (std::is_same_v<T, QuotesCommand>) {
                json out{{"op", "quotes"}};
                if (!cmd.csv_path.empty()) out["csv"] = cmd.csv_path;
                if (!cmd.inline_csv.empty()) out["inline"] = cmd.inline_csv;
                return out;
            } else if constexpr (std::is_same_v<T, TransportCommand>) {
                json out{{"op", "transport"},
                         {"s0", cmd.params.s0},
                         {"kt", cmd.params.kt},
                         {"length", cmd.params.length},
                         {"n0", cmd.params.n0}};
                if (cmd.params.step != 0.0) out["step"] = cmd.params.step;
                if (cmd.quality_rate) out["quality_rate"] = *cmd.quality_rate;
                return out;
            } else if constexpr (std::is_same_v<T, EconomyCommand>) {
                json matrix = json::array();
                for (std::size_t i = 0; i < cmd.size; ++i) {
                    json row = json::array();
                    for (std::size_t j = 0; j < cmd.size; ++j) {
                        row.push_back(cmd.matrix[i * cmd.size + j]);
                    }
                    matrix.push_back(row);
                }
                return {{"op", "economy"},
                        {"matrix", matrix},
                        {"init", cmd.init},
                        {"cycles", cmd.cycles}};
            } else if constexpr (std::is_same_v<T, TwinCommand>) {
                return {{"op", "twin"}, {"legs", segments_json(cmd.legs)}};
            } else {
                const AlgebraCommand& a = cmd;
                json out{{"op", "algebra"}};
                if (!a.evaluate.empty()) {
                    json entries = json::array();
                    for (const auto& e : a.evaluate) {
                        entries.push_back({{"expression", e.expression},
                                           {"frame", e.frame}});
                    }
                    out["evaluate"] = entries;
                }
                if (!a.consents.empty()) {
                    json entries = json::array();
                    for (const auto& c : a.consents) {
                        entries.push_back({{"receive", c.txn.receive},
                                           {"deliver", c.txn.deliver},
                                           {"exponent", c.exponent.str()},
                                           {"frame", c.frame}});
                    }
                    out["consent"] = entries;
                }
                if (!a.partitions.empty()) {
                    json entries = json::array();
                    for (const auto& p : a.partitions) {
                        entries.push_back(
                            {{"frame", p.frame}, {"objects", p.objects}});
                    }
                    out["partition"] = entries;
                }
                if (a.law_draws > 0) out["law_draws"] = a.law_draws;
                return out;
            }
        },
        command);
}

}  // namespace config_detail

inline std::string command_echo(const Command& command) {
    return config_detail::command_json(command).dump();
}

inline std::string canonical_config_json(const ScenarioConfig& config) {
    using nlohmann::json;
    json root{{"version", config.version}};
    if (!config.objects.empty()) {
        json objects = json::array();
        for (const auto& obj : config.objects) {
            json entry{{"id", obj.id},
                       {"base", config_detail::event_json(obj.worldline.base())}};
            if (!obj.worldline.segments().empty()) {
                entry["segments"] =
                    config_detail::segments_json(obj.worldline.segments());
            }
            objects.push_back(entry);
        }
        root["objects"] = objects;
    }
    if (!config.frames.empty()) {
        json frames = json::array();
        for (const auto& frame : config.frames) {
            frames.push_back({{"label", frame.label},
                              {"v", frame.v.value()},
                              {"origin", config_detail::event_json(frame.origin)}});
        }
        root["frames"] = frames;
    }
    if (!config.expressions.empty()) {
        json exprs = json::array();
        for (const auto& [id, expr] : config.expressions) {
            exprs.push_back({{"id", id},
                             {"expr", config_detail::expr_json(expr)}});
        }
        root["expressions"] = exprs;
    }
    json commands = json::array();
    for (const auto& command : config.commands) {
        commands.push_back(config_detail::command_json(command));
    }
    root["commands"] = commands;
    return root.dump(2) + "\n";
}

}  // namespace ecokin
