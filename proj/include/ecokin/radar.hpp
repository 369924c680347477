#pragma once

#include <cmath>
#include <string>

#include "ecokin/errors.hpp"
#include "ecokin/event.hpp"

namespace ecokin {

/// Primary result of a generalized measurement: the ideal-purchase
/// coordinate tau_min (the buyer is a monopolist) and the ideal-sale
/// coordinate tau_max (the seller is a monopolist).
///
/// A well-formed measurement satisfies tau_max >= tau_min. The null-map of
/// an event with negative quality coordinate comes out inverted; such pairs
/// are allowed as intermediate values but rejected by from_radar.
struct RadarPair {
    double tau_min = 0.0;
    double tau_max = 0.0;

    double midpoint() const { return 0.5 * (tau_min + tau_max); }
    double width() const { return tau_max - tau_min; }
};

/// Event -> radar coordinates: tau_min = tau - l, tau_max = tau + l.
inline RadarPair radar_map(const Event& e) {
    return {e.tau - e.l, e.tau + e.l};
}

/// Radar coordinates -> event: tau is the midpoint, l the half-width.
inline Event from_radar(const RadarPair& r) {
    if (r.tau_max < r.tau_min) {
        throw validation_error("radar pair has tau_max < tau_min");
    }
    return {r.midpoint(), 0.5 * r.width()};
}

/// Scale ratio sqrt((1+v)/(1-v)) by which ideal-sale coordinates stretch
/// between scales in relative motion. The square of this factor is the
/// k-factor below; keeping them distinct avoids conflating the two.
inline double bondi_factor(Velocity v) {
    return std::sqrt((1.0 + v.value()) / (1.0 - v.value()));
}

/// Boost acting directly on primary measurement results: tau_max stretches
/// by the bondi factor, tau_min shrinks by it. Reversing the sign of v
/// swaps the two roles symmetrically.
inline RadarPair boost_radar(const RadarPair& r, Velocity v) {
    const double f = bondi_factor(v);
    return {r.tau_min / f, r.tau_max * f};
}

/// Ratio of ideal-sale to ideal-purchase increments between two scales,
/// k = (1+v)/(1-v). Multiplicative along chains of scales.
class KFactor {
public:
    explicit KFactor(double k) : k_(k) {
        if (!(k > 0.0)) {
            throw validation_error("k-factor must be positive, got " +
                                   std::to_string(k));
        }
    }

    double value() const { return k_; }

private:
    double k_;
};

inline KFactor k_factor(Velocity v) {
    return KFactor((1.0 + v.value()) / (1.0 - v.value()));
}

inline Velocity velocity_from_k(KFactor k) {
    return Velocity((k.value() - 1.0) / (k.value() + 1.0));
}

/// Relativistic velocity composition through the k-calculus: k-factors
/// multiply, so the result equals (u+v)/(1+uv) and stays inside (-1, 1).
inline Velocity compose_velocities(Velocity u, Velocity v) {
    return velocity_from_k(KFactor(k_factor(u).value() * k_factor(v).value()));
}

}  // namespace ecokin
