#pragma once

#include <cmath>
#include <cstdint>
#include <fstream>
#include <future>
#include <sstream>
#include <string>
#include <vector>

#include "ecokin/benefit.hpp"
#include "ecokin/economy.hpp"
#include "ecokin/interval.hpp"
#include "ecokin/lawcheck.hpp"
#include "ecokin/quotes.hpp"
#include "ecokin/report.hpp"
#include "ecokin/scenario.hpp"
#include "ecokin/transport.hpp"
#include "ecokin/twin.hpp"

namespace ecokin {

struct RunOptions {
    std::uint64_t seed = 0;
    LogBase default_base = LogBase::Two;
    ReportFormat format = ReportFormat::Csv;
    bool parallel = false;       // execute blocks concurrently
    bool collect_plot = false;   // gather (series, x, y) samples
    std::string base_dir = ".";  // resolves relative csv paths
};

struct ExecutionResult {
    ReportEnvelope envelope;
    std::vector<PlotPoint> plot;
};

namespace exec_detail {

struct BlockOutcome {
    std::vector<Row> rows;
    std::vector<std::string> warnings;
    std::vector<PlotPoint> plot;
};

inline std::string base_name(LogBase base) {
    return base == LogBase::E ? "e" : "2";
}

inline void interval_cells(Row& row, const IntervalResult& r) {
    row.emplace_back("squared", r.squared);
    row.emplace_back("magnitude", r.magnitude);
    row.emplace_back("classification", std::string(to_string(r.classification)));
}

inline std::string join_doubles(const std::vector<double>& values,
                                const char* separator = ";") {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += separator;
        out += format_double(values[i]);
    }
    return out;
}

inline BlockOutcome run_transform(const ScenarioConfig& config,
                                  const TransformCommand& cmd,
                                  const RunOptions& options,
                                  const std::string& path) {
    BlockOutcome out;
    const ObjectSet objects = config.object_set();
    for (const auto& label : cmd.frames) {
        const ConsumerFrame& frame = config.frame(label, path + ".frames");
        for (std::size_t i = 0; i < cmd.events.size(); ++i) {
            const Event moved = to_frame(cmd.events[i], frame);
            const RadarPair radar = radar_map(moved);
            Row row;
            row.emplace_back("source", "event[" + std::to_string(i) + "]");
            row.emplace_back("frame", label);
            row.emplace_back("offset", 0.0);
            row.emplace_back("tau", moved.tau);
            row.emplace_back("l", moved.l);
            row.emplace_back("tau_min", radar.tau_min);
            row.emplace_back("tau_max", radar.tau_max);
            out.rows.push_back(std::move(row));
        }
        for (const auto& id : cmd.objects) {
            const auto it = objects.find(id);
            if (it == objects.end()) {
                throw validation_error(path + ".objects: unknown object id '" +
                                       id + "'");
            }
            for (double offset : cmd.offsets) {
                const Event state = it->second.worldline.state_at(offset);
                const Event moved = to_frame(state, frame);
                const RadarPair radar = radar_map(moved);
                Row row;
                row.emplace_back("source", id);
                row.emplace_back("frame", label);
                row.emplace_back("offset", offset);
                row.emplace_back("tau", moved.tau);
                row.emplace_back("l", moved.l);
                row.emplace_back("tau_min", radar.tau_min);
                row.emplace_back("tau_max", radar.tau_max);
                out.rows.push_back(std::move(row));
                if (options.collect_plot) {
                    out.plot.push_back(
                        {"transform:" + label + ":" + id, moved.tau, moved.l});
                }
            }
        }
    }
    return out;
}

inline BlockOutcome run_interval(const IntervalCommand& cmd,
                                 const RunOptions& options) {
    BlockOutcome out;
    for (const auto& pair : cmd.pairs) {
        const IntervalResult r = interval(pair.a, pair.b);
        Row row;
        row.emplace_back("kind", "events");
        row.emplace_back("a_tau", pair.a.tau);
        row.emplace_back("a_l", pair.a.l);
        row.emplace_back("b_tau", pair.b.tau);
        row.emplace_back("b_l", pair.b.l);
        interval_cells(row, r);
        out.rows.push_back(std::move(row));
    }
    for (const auto& spec : cmd.prices) {
        const LogBase base = spec.base.value_or(options.default_base);
        const IntervalResult r = interval_from_prices(
            spec.a_min, spec.a_max, spec.b_min, spec.b_max, base);
        Row row;
        row.emplace_back("kind", "prices");
        row.emplace_back("a_min", spec.a_min);
        row.emplace_back("a_max", spec.a_max);
        row.emplace_back("b_min", spec.b_min);
        row.emplace_back("b_max", spec.b_max);
        row.emplace_back("base", base_name(base));
        interval_cells(row, r);
        out.rows.push_back(std::move(row));
    }
    return out;
}

inline BlockOutcome run_quotes(const QuotesCommand& cmd,
                               const RunOptions& options,
                               const std::string& path) {
    QuoteReport report;
    if (!cmd.inline_csv.empty()) {
        report = ingest_quotes_text(cmd.inline_csv, options.default_base);
    } else {
        const std::string resolved =
            cmd.csv_path.front() == '/'
                ? cmd.csv_path
                : options.base_dir + "/" + cmd.csv_path;
        std::ifstream in(resolved);
        if (!in) {
            throw io_error(path + ".csv: cannot read '" + resolved + "'");
        }
        report = ingest_quotes(in, options.default_base);
    }

    BlockOutcome out;
    out.warnings = report.warnings;
    for (const auto& q : report.outcomes) {
        Row row;
        row.emplace_back("pair_id", q.pair_id);
        row.emplace_back("base", base_name(q.base));
        row.emplace_back("side_a", q.side_a.squared);
        row.emplace_back("side_b", q.side_b.squared);
        row.emplace_back("mismatch", q.mismatch);
        interval_cells(row, q.combined);
        out.rows.push_back(std::move(row));
    }
    return out;
}

inline BlockOutcome run_transport(const TransportCommand& cmd,
                                  const RunOptions& options,
                                  const std::string& path) {
    const TransportReport report = simulate_transport(cmd.params);
    if (cmd.quality_rate &&
        !speed_limit_check(*cmd.quality_rate, report.c_econ)) {
        throw feasibility_error(
            path + ".quality_rate: quality rate " +
            format_double(*cmd.quality_rate) +
            " reaches the economic velocity of light " +
            format_double(report.c_econ) + "; transport infeasible");
    }

    BlockOutcome out;
    Row row;
    row.emplace_back("n_delivered", report.n_delivered);
    row.emplace_back("a_min", report.a_min);
    row.emplace_back("a_max", report.a_max);
    row.emplace_back("a0", report.a0);
    row.emplace_back("econ_distance", report.econ_distance);
    row.emplace_back("c_econ", report.c_econ);
    if (cmd.quality_rate) {
        row.emplace_back("quality_rate", *cmd.quality_rate);
        row.emplace_back("feasible", true);
    }
    out.rows.push_back(std::move(row));

    if (options.collect_plot && cmd.params.length > 0.0) {
        const double kappa = cmd.params.kt / cmd.params.s0;
        for (int i = 0; i <= 100; ++i) {
            const double x = cmd.params.length * i / 100.0;
            out.plot.push_back(
                {"transport:n", x, cmd.params.n0 * std::exp(kappa * x)});
        }
    }
    return out;
}

inline BlockOutcome run_economy(const EconomyCommand& cmd,
                                const RunOptions& options) {
    const TechnologyMatrix matrix(cmd.size, cmd.matrix);
    const EconomyTrajectory trajectory =
        simulate_economy(matrix, cmd.init, cmd.cycles);

    BlockOutcome out;
    {
        const BalancedState balanced = balanced_state(matrix);
        Row row;
        row.emplace_back("kind", "balanced");
        row.emplace_back("growth_factor", balanced.growth_factor);
        row.emplace_back("outputs", join_doubles(balanced.outputs));
        out.rows.push_back(std::move(row));
    }
    for (const auto& record : trajectory.cycles) {
        Row row;
        row.emplace_back("kind", "cycle");
        row.emplace_back("cycle", static_cast<std::int64_t>(record.cycle));
        row.emplace_back("volume", record.volume);
        row.emplace_back("log2_volume", record.log2_volume);
        row.emplace_back("outputs", join_doubles(record.outputs));
        row.emplace_back("proportions", join_doubles(record.proportions));
        out.rows.push_back(std::move(row));
        if (options.collect_plot) {
            out.plot.push_back({"economy:log2_volume",
                                static_cast<double>(record.cycle),
                                record.log2_volume});
            for (std::size_t i = 0; i < record.outputs.size(); ++i) {
                out.plot.push_back({"economy:output:" + std::to_string(i),
                                    static_cast<double>(record.cycle),
                                    record.outputs[i]});
            }
        }
    }
    {
        Row row;
        row.emplace_back("kind", "summary");
        row.emplace_back("collapsed", trajectory.collapsed);
        row.emplace_back("collapse_cycle",
                         static_cast<std::int64_t>(trajectory.collapse_cycle));
        row.emplace_back("cycles_run",
                         static_cast<std::int64_t>(trajectory.cycles.size()));
        out.rows.push_back(std::move(row));
    }
    return out;
}

inline BlockOutcome run_twin(const TwinCommand& cmd,
                             const RunOptions& options) {
    const TwinReport report = simulate_twin(cmd.legs);
    BlockOutcome out;
    Row row;
    row.emplace_back("home", report.home);
    row.emplace_back("traveler", report.traveler);
    row.emplace_back("lag", report.lag);
    row.emplace_back("quality_residual", report.quality_residual);
    out.rows.push_back(std::move(row));

    if (options.collect_plot) {
        double tau = 0.0;
        double l = 0.0;
        out.plot.push_back({"twin:traveler", tau, l});
        for (const auto& leg : cmd.legs) {
            tau += leg.dtau;
            l += leg.v.value() * leg.dtau;
            out.plot.push_back({"twin:traveler", tau, l});
        }
    }
    return out;
}

inline BlockOutcome run_algebra(const ScenarioConfig& config,
                                const AlgebraCommand& cmd,
                                std::uint64_t block_seed,
                                const std::string& path) {
    BlockOutcome out;
    const ObjectSet objects = config.object_set();

    for (const auto& entry : cmd.evaluate) {
        const MeasurementExpr& expr =
            config.expression(entry.expression, path + ".evaluate");
        const ConsumerFrame& frame = config.frame(entry.frame, path + ".evaluate");
        const MeasurementExpr canonical = canonicalize(expr);
        Row row;
        row.emplace_back("kind", "evaluate");
        row.emplace_back("expression", entry.expression);
        row.emplace_back("frame", entry.frame);
        row.emplace_back(
            "verdict",
            std::string(to_string(eval_expression(objects, frame, expr))));
        row.emplace_back("canonical", canonical.str());
        out.rows.push_back(std::move(row));
    }

    for (const auto& spec : cmd.consents) {
        const ConsumerFrame& frame = config.frame(spec.frame, path + ".consent");
        Row row;
        row.emplace_back("kind", "consent");
        row.emplace_back("receive", spec.txn.receive);
        row.emplace_back("deliver", spec.txn.deliver);
        row.emplace_back("exponent", spec.exponent.str());
        row.emplace_back("frame", spec.frame);
        row.emplace_back(
            "verdict",
            std::string(to_string(consent(objects, frame, spec.txn,
                                          spec.exponent))));
        out.rows.push_back(std::move(row));
    }

    for (const auto& spec : cmd.partitions) {
        const ConsumerFrame& frame = config.frame(spec.frame, path + ".partition");
        std::vector<EconomicObject> members;
        for (const auto& id : spec.objects) {
            members.push_back(resolve(objects, id));
        }
        const auto classes = partition_equivalents(frame, members);
        std::string rendered;
        for (const auto& group : classes) {
            rendered += "[";
            for (std::size_t i = 0; i < group.size(); ++i) {
                if (i) rendered += ",";
                rendered += members[group[i]].id;
            }
            rendered += "]";
        }
        Row row;
        row.emplace_back("kind", "partition");
        row.emplace_back("frame", spec.frame);
        row.emplace_back("classes", rendered);
        out.rows.push_back(std::move(row));
    }

    if (cmd.law_draws > 0) {
        for (const auto& result : run_law_checks(block_seed, cmd.law_draws)) {
            Row row;
            row.emplace_back("kind", "law");
            row.emplace_back("law", result.law);
            row.emplace_back("draws",
                             static_cast<std::int64_t>(result.draws));
            row.emplace_back("failures",
                             static_cast<std::int64_t>(result.failures));
            row.emplace_back("pass", result.failures == 0);
            out.rows.push_back(std::move(row));
        }
    }
    return out;
}

inline BlockOutcome run_block(const ScenarioConfig& config,
                              const Command& command, std::size_t index,
                              const RunOptions& options) {
    const std::string path = "config.commands[" + std::to_string(index) + "]";
    // Blocks draw from decoupled streams so concurrent execution cannot
    // change any block's output.
    const std::uint64_t block_seed =
        options.seed ^ (0x9E3779B97F4A7C15ULL * (index + 1));
    return std::visit(
        [&](const auto& cmd) -> BlockOutcome {
            using T = std::decay_t<decltype(cmd)>;
            if constexpr (std::is_same_v<T, TransformCommand>) {
                return run_transform(config, cmd, options, path);
            } else if constexpr (std::is_same_v<T, IntervalCommand>) {
                return run_interval(cmd, options);
            } else if constexpr (std::is_same_v<T, QuotesCommand>) {
                return run_quotes(cmd, options, path);
            } else if constexpr (std::is_same_v<T, TransportCommand>) {
                return run_transport(cmd, options, path);
            } else if constexpr (std::is_same_v<T, EconomyCommand>) {
                return run_economy(cmd, options);
            } else if constexpr (std::is_same_v<T, TwinCommand>) {
                return run_twin(cmd, options);
            } else {
                return run_algebra(config, cmd, block_seed, path);
            }
        },
        command);
}

}  // namespace exec_detail

/// Executes every command block of the config in order. Output is a pure
/// function of (config text, seed): block results land in the envelope in
/// config order whether or not they run concurrently.
inline ExecutionResult execute_scenario(const ScenarioConfig& config,
                                        const std::string& config_text,
                                        const RunOptions& options) {
    ExecutionResult result;
    result.envelope.digest = fnv1a64_hex(config_text);
    result.envelope.seed = options.seed;

    std::vector<exec_detail::BlockOutcome> outcomes(config.commands.size());
    if (options.parallel) {
        std::vector<std::future<exec_detail::BlockOutcome>> futures;
        futures.reserve(config.commands.size());
        for (std::size_t i = 0; i < config.commands.size(); ++i) {
            futures.push_back(std::async(std::launch::async, [&, i] {
                return exec_detail::run_block(config, config.commands[i], i,
                                              options);
            }));
        }
        for (std::size_t i = 0; i < futures.size(); ++i) {
            outcomes[i] = futures[i].get();
        }
    } else {
        for (std::size_t i = 0; i < config.commands.size(); ++i) {
            outcomes[i] =
                exec_detail::run_block(config, config.commands[i], i, options);
        }
    }

    for (std::size_t i = 0; i < config.commands.size(); ++i) {
        BlockReport block;
        block.index = i;
        block.command = command_echo(config.commands[i]);
        block.rows = std::move(outcomes[i].rows);
        block.warnings = std::move(outcomes[i].warnings);
        result.envelope.blocks.push_back(std::move(block));
        for (auto& point : outcomes[i].plot) {
            result.plot.push_back(std::move(point));
        }
    }
    return result;
}

/// File-level entry point: reads the config, executes it, and returns the
/// rendered report. The digest covers the file bytes exactly as read.
inline std::string run_scenario(const std::string& config_path,
                                RunOptions options) {
    std::ifstream in(config_path, std::ios::binary);
    if (!in) {
        throw io_error("cannot read config '" + config_path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();

    const auto slash = config_path.find_last_of('/');
    options.base_dir =
        slash == std::string::npos ? "." : config_path.substr(0, slash);

    const ScenarioConfig config = parse_config(text);
    return render(execute_scenario(config, text, options).envelope,
                  options.format);
}

}  // namespace ecokin
