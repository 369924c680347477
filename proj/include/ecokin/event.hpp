#pragma once

#include <cmath>
#include <string>

#include "ecokin/errors.hpp"

namespace ecokin {

/// A point in the state plane. Both coordinates are logarithmic and
/// dimensionless: tau is the quantity coordinate (log2 of transaction
/// volume), l the quality coordinate in the same units (c = 1).
struct Event {
    double tau = 0.0;
    double l = 0.0;
};

/// Relative velocity of one consumer scale with respect to another.
/// Confined to the open interval (-1, 1); quality can never change faster
/// than one unit per unit of log-quantity.
class Velocity {
public:
    Velocity() = default;

    explicit Velocity(double v) : v_(v) {
        if (!(std::abs(v) < 1.0)) {
            throw validation_error("velocity must lie in (-1, 1), got " +
                                   std::to_string(v));
        }
    }

    double value() const { return v_; }

    Velocity operator-() const {
        Velocity r;
        r.v_ = -v_;
        return r;
    }

private:
    double v_ = 0.0;
};

/// Standard-form boost: maps coordinates measured against a scale moving
/// with velocity v into the reference scale (synchronized origins).
inline Event boost_event(const Event& e, Velocity v) {
    const double g = std::sqrt((1.0 - v.value()) * (1.0 + v.value()));
    return {(e.tau + v.value() * e.l) / g, (e.l + v.value() * e.tau) / g};
}

/// Classical-limit transform: the quantity coordinate is absolute and only
/// quality shears. No speed bound applies in this limit.
inline Event galilean_boost(const Event& e, double v) {
    return {e.tau, e.l + v * e.tau};
}

}  // namespace ecokin
