#pragma once

#include <string>

#include "ecokin/errors.hpp"
#include "ecokin/interval.hpp"
#include "ecokin/worldline.hpp"

namespace ecokin {

/// The path of maximum benefit between two states: the single inertial
/// segment. Any detour through an off-segment waypoint accumulates
/// strictly less proper quantity, so the straight line maximizes the ratio
/// of own quantity between the final and initial states.
///
/// Requires a quantity-like separation with increasing quantity
/// coordinate; otherwise no quantity-like path exists at all.
inline Worldline max_benefit_path(const Event& a, const Event& b) {
    const IntervalResult sep = interval(a, b);
    if (sep.classification != Separation::QuantityLike) {
        throw feasibility_error(
            std::string("no quantity-like path exists between the states (") +
            to_string(sep.classification) + " separation)");
    }
    if (!(b.tau > a.tau)) {
        throw feasibility_error("final state must have the larger quantity "
                                "coordinate");
    }
    const double dtau = b.tau - a.tau;
    return Worldline(a, {{Velocity((b.l - a.l) / dtau), dtau}});
}

}  // namespace ecokin
