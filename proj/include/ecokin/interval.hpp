#pragma once

#include <algorithm>
#include <cassert>
#include <cmath>
#include <string>

#include "ecokin/errors.hpp"
#include "ecokin/radar.hpp"

namespace ecokin {

/// Sign classification of a squared interval. Quantity-like pairs can be
/// equal in quality for some consumer but never equal in value;
/// quality-like pairs the other way around.
enum class Separation { QuantityLike, QualityLike, Null };

inline const char* to_string(Separation s) {
    switch (s) {
        case Separation::QuantityLike: return "quantity-like";
        case Separation::QualityLike: return "quality-like";
        case Separation::Null: return "null";
    }
    return "?";
}

/// Signed squared interval together with its magnitude and classification.
struct IntervalResult {
    double squared = 0.0;
    double magnitude = 0.0;
    Separation classification = Separation::Null;
};

namespace detail {

/// |squared| within 1e-12 of the squared input scale counts as null.
inline Separation classify(double squared, double input_scale) {
    const double tol = 1e-12 * std::max(1.0, input_scale * input_scale);
    if (std::abs(squared) <= tol) return Separation::Null;
    return squared > 0.0 ? Separation::QuantityLike : Separation::QualityLike;
}

inline IntervalResult make_interval(double squared, double input_scale) {
    return {squared, std::sqrt(std::abs(squared)),
            classify(squared, input_scale)};
}

}  // namespace detail

/// Frame-invariant squared interval between two states:
/// (dtau)^2 - (dl)^2, identically the product of radar-coordinate
/// differences (tau_a_min - tau_b_min)(tau_a_max - tau_b_max).
inline IntervalResult interval(const Event& a, const Event& b) {
    const double dtau = a.tau - b.tau;
    const double dl = a.l - b.l;
    const double direct = dtau * dtau - dl * dl;

    const RadarPair ra = radar_map(a);
    const RadarPair rb = radar_map(b);
    const double via_radar =
        (ra.tau_min - rb.tau_min) * (ra.tau_max - rb.tau_max);
    const double scale = std::max(std::abs(dtau), std::abs(dl));
    // The two routes are the same identity factored differently.
    assert(std::abs(direct - via_radar) <=
           1e-9 * std::max(1.0, scale * scale));
    (void)via_radar;

    return detail::make_interval(direct, scale);
}

/// Logarithm base used for price coordinates. Base 2 matches the volume
/// scale tau = log2 n; natural log is accepted because quoted spreads are
/// conventionally compared that way. Classification never depends on the
/// base, and squared intervals change only by a positive constant.
enum class LogBase { Two, E };

inline double log_in(LogBase base, double x) {
    return base == LogBase::Two ? std::log2(x) : std::log(x);
}

/// Squared interval straight from two objects' extreme prices on a common
/// scale: log(a_min/b_min) * log(a_max/b_max).
inline IntervalResult interval_from_prices(double a_min, double a_max,
                                           double b_min, double b_max,
                                           LogBase base = LogBase::Two) {
    const double prices[] = {a_min, a_max, b_min, b_max};
    for (double p : prices) {
        if (!(p > 0.0) || !std::isfinite(p)) {
            throw validation_error("prices must be positive, got " +
                                   std::to_string(p));
        }
    }
    const double lo = log_in(base, a_min / b_min);
    const double hi = log_in(base, a_max / b_max);
    return detail::make_interval(lo * hi,
                                 std::max(std::abs(lo), std::abs(hi)));
}

}  // namespace ecokin
