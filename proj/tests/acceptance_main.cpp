// Acceptance suite: runs every release criterion at its stated tolerance
// and prints one pass/fail line per criterion. Exits nonzero if any fails.

#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "ecokin/ecokin.hpp"

namespace {

using namespace ecokin;

struct Criterion {
    std::string name;
    std::function<bool(std::string&)> run;
};

Event random_event(std::mt19937_64& gen) {
    return {uniform_in(gen, -3.0, 3.0), uniform_in(gen, -3.0, 3.0)};
}

std::string fmt(double v) { return format_double(v); }

// 1. Interval invariance under boosts, 1e4 draws, relative 1e-12.
bool interval_invariance(std::string& detail) {
    std::mt19937_64 gen(0x1001);
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const Event a = random_event(gen);
        const Event b = random_event(gen);
        const Velocity v(uniform_in(gen, -0.9, 0.9));
        const double before = interval(a, b).squared;
        const double after =
            interval(boost_event(a, v), boost_event(b, v)).squared;
        worst = std::max(worst, std::abs(before - after) /
                                    std::max(1.0, std::abs(before)));
    }
    detail = "10000 draws, worst relative drift " + fmt(worst);
    return worst <= 1e-12;
}

// 2. The two-currency spread comparison around the quoted references.
bool currency_example(std::string& detail) {
    const IntervalResult side1 =
        interval_from_prices(0.702, 0.710, 0.705, 0.705, LogBase::E);
    const IntervalResult side2 =
        interval_from_prices(0.996, 1.007, 1.001, 1.001, LogBase::E);
    const double agreement = std::abs(side1.squared / side2.squared - 1.0);

    const QuoteReport ingested = ingest_quotes_text(
        "pair_id,a_min,a_max,b_min,b_max,base\n"
        "eurusd,0.702,0.710,0.996,1.007,e\n");

    detail = "sides " + fmt(side1.squared) + " / " + fmt(side2.squared) +
             ", agreement " + fmt(agreement) + ", ingested " +
             fmt(ingested.outcomes.at(0).combined.squared);
    bool pass = side1.squared > -3.1e-5 && side1.squared < -2.9e-5;
    pass = pass && side2.squared > -3.1e-5 && side2.squared < -2.9e-5;
    pass = pass && agreement < 0.02;
    pass = pass && side1.classification == Separation::QualityLike;
    pass = pass && side2.classification == Separation::QualityLike;
    pass = pass && ingested.outcomes.size() == 1;
    pass = pass && ingested.outcomes.at(0).combined.classification ==
                       Separation::QualityLike;
    pass = pass && ingested.outcomes.at(0).combined.squared > -3.5e-5 &&
           ingested.outcomes.at(0).combined.squared < -2.7e-5;
    return pass;
}

// 3. Velocity composition against the closed form; k multiplicativity.
bool velocity_arithmetic(std::string& detail) {
    std::mt19937_64 gen(0x1003);
    double worst_v = 0.0;
    double worst_k = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const Velocity u(uniform_in(gen, -0.95, 0.95));
        const Velocity v(uniform_in(gen, -0.95, 0.95));
        const double composed = compose_velocities(u, v).value();
        const double direct =
            (u.value() + v.value()) / (1.0 + u.value() * v.value());
        worst_v = std::max(worst_v, std::abs(composed - direct));

        const double k_chain = k_factor(compose_velocities(u, v)).value();
        const double k_product = k_factor(u).value() * k_factor(v).value();
        worst_k = std::max(worst_k, std::abs(k_chain - k_product) /
                                        std::max(1.0, k_product));
    }
    detail = "10000 draws, worst velocity gap " + fmt(worst_v) +
             ", worst k drift " + fmt(worst_k);
    return worst_v <= 1e-12 && worst_k <= 1e-12;
}

// 4. Event-boost and radar-boost routes commute with the radar map.
bool route_consistency(std::string& detail) {
    std::mt19937_64 gen(0x1004);
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const Event e = random_event(gen);
        const Velocity v(uniform_in(gen, -0.9, 0.9));
        const RadarPair via_event = radar_map(boost_event(e, v));
        const RadarPair via_radar = boost_radar(radar_map(e), v);
        worst = std::max(worst,
                         std::abs(via_event.tau_min - via_radar.tau_min) /
                             std::max(1.0, std::abs(via_radar.tau_min)));
        worst = std::max(worst,
                         std::abs(via_event.tau_max - via_radar.tau_max) /
                             std::max(1.0, std::abs(via_radar.tau_max)));
    }
    detail = "10000 draws, worst relative gap " + fmt(worst);
    return worst <= 1e-12;
}

// 5. The tenth-of-light preference drift and its lag correction.
bool small_velocity_estimate(std::string& detail) {
    const double v = std::log2(2.0) / std::log2(1000.0);
    const TwinReport twin =
        simulate_twin({{Velocity(v), 1.0}, {Velocity(-v), 1.0}});
    const double correction = 1.0 - twin.lag;
    detail = "v = " + fmt(v) + ", correction = " + fmt(correction);
    return std::abs(v - 0.1003) <= 1e-4 &&
           std::abs(correction - 0.00504) <= 1e-5;
}

// 6. Transport: RK4 vs closed form, price-bound identities.
bool transport_model(std::string& detail) {
    std::mt19937_64 gen(0x1006);
    double worst_rk4 = 0.0;
    double worst_a0 = 0.0;
    double worst_span = 0.0;
    for (int i = 0; i < 100; ++i) {
        TransportParams params;
        params.s0 = uniform_in(gen, 0.5, 5.0);
        params.kt = uniform_in(gen, 0.05, 0.5);
        params.length = uniform_in(gen, 0.1, 20.0);
        params.n0 = uniform_in(gen, 0.5, 10.0);
        const TransportReport report = simulate_transport(params);

        const double kappa_l = params.kt / params.s0 * params.length;
        const double closed = params.n0 * std::exp(kappa_l);
        worst_rk4 = std::max(
            worst_rk4, std::abs(report.n_delivered - closed) / closed);
        worst_a0 = std::max(
            worst_a0, std::abs(report.a0 * report.a0 -
                               report.a_min * report.a_max) /
                          (report.a_min * report.a_max));
        worst_span = std::max(
            worst_span, std::abs(std::log(report.a_max / report.a_min) -
                                 2.0 * kappa_l) /
                            std::max(1.0, 2.0 * kappa_l));
    }
    detail = "100 draws, worst RK4 gap " + fmt(worst_rk4) + ", a0 drift " +
             fmt(worst_a0) + ", span drift " + fmt(worst_span);
    return worst_rk4 < 1e-9 && worst_a0 <= 1e-12 && worst_span <= 1e-12;
}

// 7. Twin lag sqrt(1 - v^2); quality separation restored at reunion.
bool twin_paradox(std::string& detail) {
    std::mt19937_64 gen(0x1007);
    double worst_lag = 0.0;
    double worst_residual = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double v = uniform_in(gen, 0.01, 0.95);
        const double leg = uniform_in(gen, 0.1, 4.0);
        const TwinReport report =
            simulate_twin({{Velocity(v), leg}, {Velocity(-v), leg}});
        worst_lag = std::max(worst_lag,
                             std::abs(report.lag - std::sqrt(1.0 - v * v)));
        worst_residual =
            std::max(worst_residual, std::abs(report.quality_residual));
    }
    detail = "100 draws, worst lag gap " + fmt(worst_lag) +
             ", worst reunion residual " + fmt(worst_residual);
    return worst_lag <= 1e-9 && worst_residual <= 1e-12;
}

// 8. Balanced growth of the two-company fixture.
bool balanced_economy(std::string& detail) {
    const TechnologyMatrix fixture(2, {0.5, 0.2, 0.3, 0.6});

    // Oracle: characteristic polynomial x^2 - 1.1x + 0.24 = 0.
    const double oracle = 0.5 * (1.1 + std::sqrt(1.1 * 1.1 - 4.0 * 0.24));
    const BalancedState balanced = balanced_state(fixture);

    const EconomyTrajectory trajectory =
        simulate_economy(fixture, balanced.outputs, 50);
    if (trajectory.collapsed || trajectory.cycles.size() != 50) {
        detail = "balanced run collapsed";
        return false;
    }
    double worst_factor = 0.0;
    double worst_proportion = 0.0;
    const auto& first = trajectory.cycles.front();
    for (std::size_t t = 1; t < trajectory.cycles.size(); ++t) {
        const auto& prev = trajectory.cycles[t - 1];
        const auto& cur = trajectory.cycles[t];
        worst_factor = std::max(
            worst_factor,
            std::abs(cur.volume / prev.volume - balanced.growth_factor));
        worst_proportion =
            std::max(worst_proportion,
                     std::abs(cur.proportions[1] - first.proportions[1]));
    }
    detail = "lambda = " + fmt(balanced.growth_factor) + " (oracle " +
             fmt(oracle) + "), worst cycle factor gap " + fmt(worst_factor) +
             ", proportion drift " + fmt(worst_proportion);
    return std::abs(balanced.growth_factor - oracle) <= 1e-9 &&
           std::abs(balanced.growth_factor - 0.8) <= 1e-9 &&
           worst_factor <= 1e-9 && worst_proportion <= 1e-9;
}

// 9. Algebra laws on random draws plus the crossing-fixture witnesses.
bool algebra_laws(std::string& detail) {
    std::size_t failures = 0;
    for (const auto& result : run_law_checks(0x1009, 1000)) {
        failures += result.failures;
    }

    ObjectSet objects;
    objects["A"] = {"A", Worldline({1.0, 0.0}, {{Velocity(0.6), 1.0}})};
    objects["B"] = {"B", Worldline({1.2, 0.0}, {})};
    const ConsumerFrame frame{"canonical", Velocity(0.0), {0.0, 0.0}};
    using E = MeasurementExpr;
    const E ab = E::leaf({"A", "B"}, Rational(1));
    const E ab2 = E::leaf({"A", "B"}, Rational(2));

    const bool square_witness =
        eval_expression(objects, frame, ab2) !=
        eval_expression(objects, frame, ab);
    const bool sum_witness =
        eval_expression(objects, frame, E::sum({ab, ab})) !=
        eval_expression(objects, frame, ab);

    detail = "1000 draws, " + std::to_string(failures) +
             " law failures; witnesses " +
             (square_witness && sum_witness ? "found" : "missing");
    return failures == 0 && square_witness && sum_witness;
}

// 10. Exact one-dimensional price composition.
bool price_chain(std::string& detail) {
    const Rational composed =
        exchange_chain({Rational(7, 6), Rational(3, 2)});
    detail = "7/6 * 3/2 = " + composed.str();
    return composed == Rational(7, 4);
}

// 11. The straight segment strictly beats kinked alternatives.
bool maximum_benefit(std::string& detail) {
    std::mt19937_64 gen(0x100B);
    std::size_t beaten = 0;
    for (int i = 0; i < 1000; ++i) {
        const double tau_b = uniform_in(gen, 1.0, 3.0);
        const double v_straight = uniform_in(gen, -0.8, 0.8);
        const Event a{0.0, 0.0};
        const Event b{tau_b, v_straight * tau_b};

        const Worldline straight = max_benefit_path(a, b);

        const double tau_w = tau_b * uniform_in(gen, 0.2, 0.8);
        const double room = 0.18 * std::min(tau_w, tau_b - tau_w);
        const double kick = uniform_in(gen, 0.01, room) *
                            (uniform_index(gen, 2) == 0 ? 1.0 : -1.0);
        const double l_w = v_straight * tau_w + kick;
        const double kinked = proper_quantity(
            {{Velocity(l_w / tau_w), tau_w},
             {Velocity((b.l - l_w) / (tau_b - tau_w)), tau_b - tau_w}});

        if (kinked < straight.proper_quantity()) ++beaten;
    }
    detail = std::to_string(beaten) + "/1000 kinked paths strictly beaten";
    return beaten == 1000;
}

// 12. Byte-identical reruns of a scenario.
bool determinism(std::string& detail) {
    const char* config_text = R"({
      "version": "ecokin/1",
      "commands": [
        {"op": "twin", "legs": [{"v": 0.6, "dtau": 1}, {"v": -0.6, "dtau": 1}]},
        {"op": "algebra", "law_draws": 100},
        {"op": "economy", "matrix": [[0.5, 0.2], [0.3, 0.6]],
         "init": [0.4, 0.6], "cycles": 10}
      ]
    })";
    const ScenarioConfig config = parse_config(config_text);

    bool pass = true;
    for (const ReportFormat format :
         {ReportFormat::Csv, ReportFormat::JsonLines}) {
        RunOptions options;
        options.seed = 42;
        options.format = format;
        const std::string first =
            render(execute_scenario(config, config_text, options).envelope,
                   format);
        const std::string second =
            render(execute_scenario(config, config_text, options).envelope,
                   format);
        pass = pass && first == second && !first.empty();
    }
    detail = pass ? "csv and json-lines reruns byte-identical"
                  : "outputs differ";
    return pass;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"interval-invariance", interval_invariance},
        {"currency-example", currency_example},
        {"velocity-arithmetic", velocity_arithmetic},
        {"route-consistency", route_consistency},
        {"small-velocity-estimate", small_velocity_estimate},
        {"transport-model", transport_model},
        {"twin-paradox", twin_paradox},
        {"balanced-economy", balanced_economy},
        {"algebra-laws", algebra_laws},
        {"price-chain", price_chain},
        {"maximum-benefit", maximum_benefit},
        {"determinism", determinism},
    };

    std::size_t passed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        std::string detail;
        bool ok = false;
        try {
            ok = criteria[i].run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::printf("%s %2zu %s: %s\n", ok ? "PASS" : "FAIL", i + 1,
                    criteria[i].name.c_str(), detail.c_str());
        if (ok) ++passed;
    }
    std::printf("acceptance: %zu/%zu criteria passed\n", passed,
                criteria.size());
    return passed == criteria.size() ? 0 : 1;
}
