// Command-line front end: runs scenario configs and one-shot commands
// against the ecokin library and prints deterministic reports.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ecokin/ecokin.hpp"

namespace {

using ecokin::Command;
using ecokin::RunOptions;
using ecokin::ScenarioConfig;

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("ECOKIN_SEED")) {
        try {
            std::size_t pos = 0;
            const unsigned long long value = std::stoull(env, &pos);
            if (pos != std::string(env).size()) throw std::invalid_argument("");
            return value;
        } catch (const std::exception&) {
            throw ecokin::validation_error(
                std::string("ECOKIN_SEED must be an unsigned integer, got '") +
                env + "'");
        }
    }
    return 0;
}

std::vector<double> parse_double_list(const std::string& text,
                                      const std::string& what) {
    std::vector<double> values;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        try {
            std::size_t pos = 0;
            values.push_back(std::stod(token, &pos));
            if (pos != token.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw ecokin::validation_error(what + ": bad number '" + token +
                                           "'");
        }
    }
    if (values.empty()) {
        throw ecokin::validation_error(what + ": empty list");
    }
    return values;
}

// "0.6:1,-0.6:1" -> legs
std::vector<ecokin::WorldlineSegment> parse_legs(const std::string& text) {
    std::vector<ecokin::WorldlineSegment> legs;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        const auto colon = token.find(':');
        if (colon == std::string::npos) {
            throw ecokin::validation_error("--legs: expected v:dtau, got '" +
                                           token + "'");
        }
        const auto v = parse_double_list(token.substr(0, colon), "--legs");
        const auto d = parse_double_list(token.substr(colon + 1), "--legs");
        legs.push_back({ecokin::Velocity(v.front()), d.front()});
    }
    if (legs.empty()) throw ecokin::validation_error("--legs: empty list");
    return legs;
}

// "0.5,0.2;0.3,0.6" -> row-major square matrix
std::pair<std::size_t, std::vector<double>> parse_matrix(
    const std::string& text) {
    std::vector<std::vector<double>> rows;
    std::string row;
    std::istringstream in(text);
    while (std::getline(in, row, ';')) {
        rows.push_back(parse_double_list(row, "--matrix"));
    }
    const std::size_t m = rows.size();
    std::vector<double> flat;
    for (const auto& r : rows) {
        if (r.size() != m) {
            throw ecokin::validation_error("--matrix: must be square");
        }
        flat.insert(flat.end(), r.begin(), r.end());
    }
    return {m, flat};
}

/// Runs a synthesized single-command config through the same path as
/// `run`, so one-shot verbs inherit the determinism contract.
int emit(const ScenarioConfig& config, const RunOptions& options,
         const std::string& plot_path) {
    const std::string canonical = ecokin::canonical_config_json(config);
    const ecokin::ExecutionResult result =
        ecokin::execute_scenario(config, canonical, options);
    std::cout << ecokin::render(result.envelope, options.format);
    if (!plot_path.empty()) {
        std::ofstream out(plot_path);
        if (!out) {
            throw ecokin::io_error("cannot write plot data to '" + plot_path +
                                   "'");
        }
        out << "series,x,y\n";
        for (const auto& point : result.plot) {
            out << point.series << "," << ecokin::format_double(point.x) << ","
                << ecokin::format_double(point.y) << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ecokin: consumer-frame kinematics and scenario simulator "
                 "for exchange measurements"};
    app.require_subcommand(1);

    std::optional<std::uint64_t> seed_flag;
    std::string format_name = "csv";
    std::string log_base_name = "2";
    std::string plot_path;
    app.add_option("--seed", seed_flag,
                   "RNG seed (falls back to ECOKIN_SEED, then 0)");
    app.add_option("--format", format_name, "Report format: csv | json-lines")
        ->check(CLI::IsMember({"csv", "json-lines"}));
    app.add_option("--log-base", log_base_name,
                   "Default logarithm base for price intervals: 2 | e")
        ->check(CLI::IsMember({"2", "e"}));
    app.add_option("--emit-plot-data", plot_path,
                   "Write (series,x,y) plot samples to this file");

    // run
    auto* run_cmd = app.add_subcommand("run", "Execute a scenario config");
    std::string config_path;
    bool parallel = false;
    run_cmd->add_option("config", config_path, "Scenario config (JSON)")
        ->required();
    run_cmd->add_flag("--parallel", parallel,
                      "Execute independent blocks concurrently (output "
                      "ordering is unchanged)");

    // quotes
    auto* quotes_cmd =
        app.add_subcommand("quotes", "Ingest a quote CSV and report intervals");
    std::string quotes_path;
    quotes_cmd->add_option("csv", quotes_path, "Quote CSV file")->required();

    // transport
    auto* transport_cmd =
        app.add_subcommand("transport", "Run the transportation model");
    ecokin::TransportCommand transport;
    double quality_rate = 0.0;
    bool has_quality_rate = false;
    transport_cmd->add_option("--s0", transport.params.s0, "Unit cost at a co-located exchange")
        ->required();
    transport_cmd->add_option("--kt", transport.params.kt, "Transport cost per unit per distance")
        ->required();
    transport_cmd->add_option("--length", transport.params.length, "Route length")
        ->required();
    transport_cmd->add_option("--n0", transport.params.n0, "Initial quantity")
        ->required();
    transport_cmd->add_option("--step", transport.params.step,
                              "Integration step (default length/1000)");
    transport_cmd
        ->add_option("--quality-rate", quality_rate,
                     "Quality change per unit log-quantity to check against "
                     "the speed limit")
        ->each([&](const std::string&) { has_quality_rate = true; });

    // economy
    auto* economy_cmd =
        app.add_subcommand("economy", "Run the technology-matrix economy");
    std::string matrix_text;
    std::string init_text;
    std::size_t cycles = 1;
    economy_cmd
        ->add_option("--matrix", matrix_text,
                     "Row-major technology matrix, e.g. \"0.5,0.2;0.3,0.6\"")
        ->required();
    economy_cmd->add_option("--init", init_text, "Initial outputs, e.g. \"0.4,0.6\"")
        ->required();
    economy_cmd->add_option("--cycles", cycles, "Number of cycles")->required();

    // twin
    auto* twin_cmd = app.add_subcommand("twin", "Run a twin itinerary");
    std::string legs_text;
    twin_cmd->add_option("--legs", legs_text, "Legs as v:dtau pairs, e.g. \"0.6:1,-0.6:1\"")
        ->required();

    // interval
    auto* interval_cmd =
        app.add_subcommand("interval", "Interval between two states or from prices");
    std::string a_text;
    std::string b_text;
    std::string prices_text;
    interval_cmd->add_option("--a", a_text, "First state as tau,l");
    interval_cmd->add_option("--b", b_text, "Second state as tau,l");
    interval_cmd->add_option("--prices", prices_text,
                             "Extreme prices as a_min,a_max,b_min,b_max");

    // algebra-check
    auto* algebra_cmd = app.add_subcommand(
        "algebra-check", "Check the measurement-algebra laws on random draws");
    std::size_t draws = 1000;
    algebra_cmd->add_option("--draws", draws, "Number of random draws");

    try {
        app.parse(argc, argv);

        RunOptions options;
        options.seed = resolve_seed(seed_flag);
        options.format = ecokin::parse_format(format_name);
        options.default_base =
            log_base_name == "e" ? ecokin::LogBase::E : ecokin::LogBase::Two;
        options.collect_plot = !plot_path.empty();

        if (*run_cmd) {
            options.parallel = parallel;
            std::ifstream in(config_path, std::ios::binary);
            if (!in) {
                throw ecokin::io_error("cannot read config '" + config_path +
                                       "'");
            }
            std::ostringstream buffer;
            buffer << in.rdbuf();
            const std::string text = buffer.str();
            const auto slash = config_path.find_last_of('/');
            options.base_dir =
                slash == std::string::npos ? "." : config_path.substr(0, slash);

            const ScenarioConfig config = ecokin::parse_config(text);
            const ecokin::ExecutionResult result =
                ecokin::execute_scenario(config, text, options);
            std::cout << ecokin::render(result.envelope, options.format);
            if (!plot_path.empty()) {
                std::ofstream out(plot_path);
                if (!out) {
                    throw ecokin::io_error("cannot write plot data to '" +
                                           plot_path + "'");
                }
                out << "series,x,y\n";
                for (const auto& point : result.plot) {
                    out << point.series << ","
                        << ecokin::format_double(point.x) << ","
                        << ecokin::format_double(point.y) << "\n";
                }
            }
            return 0;
        }

        ScenarioConfig config;
        if (*quotes_cmd) {
            std::ifstream in(quotes_path);
            if (!in) {
                throw ecokin::io_error("cannot read quotes '" + quotes_path +
                                       "'");
            }
            std::ostringstream buffer;
            buffer << in.rdbuf();
            ecokin::QuotesCommand cmd;
            cmd.inline_csv = buffer.str();
            config.commands.emplace_back(std::move(cmd));
        } else if (*transport_cmd) {
            if (has_quality_rate) transport.quality_rate = quality_rate;
            config.commands.emplace_back(transport);
        } else if (*economy_cmd) {
            ecokin::EconomyCommand cmd;
            const auto [size, flat] = parse_matrix(matrix_text);
            cmd.size = size;
            cmd.matrix = flat;
            cmd.init = parse_double_list(init_text, "--init");
            cmd.cycles = cycles;
            config.commands.emplace_back(std::move(cmd));
        } else if (*twin_cmd) {
            ecokin::TwinCommand cmd;
            cmd.legs = parse_legs(legs_text);
            config.commands.emplace_back(std::move(cmd));
        } else if (*interval_cmd) {
            ecokin::IntervalCommand cmd;
            if (!a_text.empty() || !b_text.empty()) {
                const auto a = parse_double_list(a_text, "--a");
                const auto b = parse_double_list(b_text, "--b");
                if (a.size() != 2 || b.size() != 2) {
                    throw ecokin::validation_error(
                        "--a/--b: expected tau,l pairs");
                }
                cmd.pairs.push_back({{a[0], a[1]}, {b[0], b[1]}});
            }
            if (!prices_text.empty()) {
                const auto p = parse_double_list(prices_text, "--prices");
                if (p.size() != 4) {
                    throw ecokin::validation_error(
                        "--prices: expected a_min,a_max,b_min,b_max");
                }
                ecokin::IntervalPricesSpec spec;
                spec.a_min = p[0];
                spec.a_max = p[1];
                spec.b_min = p[2];
                spec.b_max = p[3];
                cmd.prices.push_back(spec);
            }
            if (cmd.pairs.empty() && cmd.prices.empty()) {
                throw ecokin::validation_error(
                    "interval: provide --a/--b or --prices");
            }
            config.commands.emplace_back(std::move(cmd));
        } else if (*algebra_cmd) {
            ecokin::AlgebraCommand cmd;
            cmd.law_draws = draws;
            config.commands.emplace_back(std::move(cmd));
        }
        return emit(config, options, plot_path);

    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ecokin::validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ecokin::io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const ecokin::feasibility_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
