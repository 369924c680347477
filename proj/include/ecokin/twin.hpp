#pragma once

#include <cmath>
#include <vector>

#include "ecokin/errors.hpp"
#include "ecokin/radar.hpp"
#include "ecokin/worldline.hpp"

namespace ecokin {

/// Outcome of comparing a traveling object's proper quantity with the
/// stay-at-home line over one closed round trip.
struct TwinReport {
    double home = 0.0;              // coordinate quantity elapsed at home
    double traveler = 0.0;          // proper quantity along the itinerary
    double lag = 0.0;               // traveler / home, <= 1
    double quality_residual = 0.0;  // net quality displacement at reunion
};

/// Runs a twin itinerary: the traveler follows the legs while the home
/// object stays at rest. The itinerary must close spatially (net quality
/// displacement zero) so the two states actually re-meet; the traveler's
/// clock then lags by the accumulated proper-quantity deficit.
inline TwinReport simulate_twin(const std::vector<WorldlineSegment>& legs) {
    if (legs.empty()) {
        throw validation_error("twin itinerary needs at least one leg");
    }
    double home = 0.0;
    double displacement = 0.0;
    double travel_scale = 0.0;
    for (std::size_t i = 0; i < legs.size(); ++i) {
        if (!(legs[i].dtau > 0.0)) {
            throw validation_error("twin leg #" + std::to_string(i) +
                                   " must have positive extent");
        }
        home += legs[i].dtau;
        displacement += legs[i].v.value() * legs[i].dtau;
        travel_scale += std::abs(legs[i].v.value()) * legs[i].dtau;
    }
    if (std::abs(displacement) > 1e-9 * std::max(1.0, travel_scale)) {
        throw feasibility_error("twin itinerary does not close: net quality "
                                "displacement " + std::to_string(displacement));
    }

    TwinReport report;
    report.home = home;
    report.traveler = proper_quantity(legs);
    report.lag = report.traveler / home;
    report.quality_residual = displacement;
    return report;
}

/// One-way frequency/scale ratio between two objects in relative motion,
/// sqrt((1+v)/(1-v)). Depends only on the relative velocity, not on any
/// motion with respect to an "environment".
inline double doppler_ratio(Velocity v) {
    return bondi_factor(v);
}

}  // namespace ecokin
