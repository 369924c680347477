#pragma once

#include <cmath>
#include <string>

#include "ecokin/errors.hpp"

namespace ecokin {

/// Inputs of the transportation model: a good produced at one point and
/// consumed at another, with transport paid for in the good itself.
struct TransportParams {
    double s0 = 1.0;      // unit cost of the good at a co-located exchange
    double kt = 0.1;      // transport cost per unit good per unit distance
    double length = 0.0;  // route length
    double n0 = 1.0;      // initial quantity at the production point
    double step = 0.0;    // integration step; 0 selects length/1000
};

/// Price bounds and the compromise quantity seen by the consumer, plus the
/// model's own distance and speed-of-light analogues.
struct TransportReport {
    double n_delivered = 0.0;   // quantity equivalent at the consumer
    double a_min = 0.0;         // seller pays the whole route
    double a_max = 0.0;         // buyer pays the whole route
    double a0 = 0.0;            // compromise: each pays half the route
    double econ_distance = 0.0; // (ln a_max - ln a_min) / 2
    double c_econ = 0.0;        // s0 / kt, the economic velocity of light
};

/// Integrates d(ln n)/dx = kt / S(x) along the route with uniform
/// S(x) = s0 by fixed-step RK4 and derives the price bounds around the
/// compromise quantity. A zero-length route degenerates to the co-located
/// exchange and skips integration entirely.
inline TransportReport simulate_transport(const TransportParams& p) {
    if (!(p.s0 > 0.0) || !(p.kt > 0.0) || !(p.n0 > 0.0) || p.length < 0.0) {
        throw validation_error("transport parameters must satisfy s0 > 0, "
                               "kt > 0, n0 > 0, length >= 0");
    }
    const double kappa = p.kt / p.s0;

    TransportReport report;
    report.c_econ = p.s0 / p.kt;
    report.econ_distance = kappa * p.length;

    if (p.length == 0.0) {
        report.n_delivered = p.n0;
        report.a_min = report.a_max = report.a0 = p.n0;
        return report;
    }

    const double step = p.step == 0.0 ? p.length / 1000.0 : p.step;
    if (!(step > 0.0) || step > p.length) {
        throw validation_error("integration step must lie in (0, length]");
    }

    // RK4 on y = ln n over the route. The slope field depends on x only,
    // so the stages reduce to Simpson weights.
    const auto slope = [&](double) { return kappa; };
    const auto steps = static_cast<std::size_t>(std::ceil(p.length / step));
    double y = std::log(p.n0);
    for (std::size_t i = 0; i < steps; ++i) {
        const double x = static_cast<double>(i) * step;
        const double h = std::min(step, p.length - x);
        const double k1 = slope(x);
        const double k2 = slope(x + 0.5 * h);
        const double k3 = slope(x + 0.5 * h);
        const double k4 = slope(x + h);
        y += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    report.n_delivered = std::exp(y);

    report.a0 = report.n_delivered;
    report.a_min = report.a0 * std::exp(-report.econ_distance);
    report.a_max = report.a0 * std::exp(report.econ_distance);
    return report;
}

/// A quality change per unit of log-quantity is sustainable only strictly
/// below the economic velocity of light; at the boundary the transport
/// consumes the entire cargo, so it counts as infeasible.
inline bool speed_limit_check(double quality_per_logquantity, double c_econ) {
    if (!(c_econ > 0.0)) {
        throw validation_error("economic velocity of light must be positive");
    }
    return std::abs(quality_per_logquantity) < c_econ;
}

}  // namespace ecokin
