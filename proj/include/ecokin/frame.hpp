#pragma once

#include <string>

#include "ecokin/event.hpp"
#include "ecokin/radar.hpp"
#include "ecokin/worldline.hpp"

namespace ecokin {

/// One set of consumer preferences: a velocity relative to the canonical
/// scale plus origin offsets. A frame fixes which objects count as equal
/// (same quantity coordinate) and what each object is worth.
struct ConsumerFrame {
    std::string label;
    Velocity v;
    Event origin;
};

/// Canonical-frame coordinates -> this frame's coordinates.
inline Event to_frame(const Event& e, const ConsumerFrame& f) {
    return boost_event({e.tau - f.origin.tau, e.l - f.origin.l}, -f.v);
}

/// This frame's coordinates -> canonical-frame coordinates.
inline Event from_frame(const Event& e, const ConsumerFrame& f) {
    const Event g = boost_event(e, f.v);
    return {g.tau + f.origin.tau, g.l + f.origin.l};
}

/// Quantity coordinate the frame assigns to the worldline state at the
/// given proper-quantity offset from its base event. This is the frame's
/// valuation of the object at that volume.
inline double valuation(const ConsumerFrame& f, const Worldline& w,
                        double proper_offset) {
    return to_frame(w.state_at(proper_offset), f).tau;
}

/// Ideal-purchase / ideal-sale pair the frame's scale assigns to a state:
/// the event transformed into the frame, then read off in radar
/// coordinates. The midpoint is the object's quantity coordinate in the
/// frame by construction.
inline RadarPair ideal_measure(const Event& e, const ConsumerFrame& f) {
    return radar_map(to_frame(e, f));
}

}  // namespace ecokin
