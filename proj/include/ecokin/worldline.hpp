#pragma once

#include <cmath>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ecokin/errors.hpp"
#include "ecokin/event.hpp"

namespace ecokin {

/// One inertial stretch of a worldline: constant velocity over a positive
/// extent of the coordinate quantity axis.
struct WorldlineSegment {
    Velocity v;
    double dtau = 0.0;
};

inline double proper_factor(Velocity v) {
    return std::sqrt((1.0 - v.value()) * (1.0 + v.value()));
}

/// Proper quantity accumulated along a sequence of inertial legs:
/// sum of dtau * sqrt(1 - v^2). Additive over concatenation.
inline double proper_quantity(const std::vector<WorldlineSegment>& segments) {
    double total = 0.0;
    for (const auto& s : segments) total += s.dtau * proper_factor(s.v);
    return total;
}

/// Piecewise-inertial trajectory in the state plane: how the quality
/// coordinate of a product depends on the traded volume. Outside the
/// recorded segments the line continues inertially with the nearest
/// segment's velocity; a worldline with no segments is stationary.
class Worldline {
public:
    Worldline() = default;

    Worldline(Event base, std::vector<WorldlineSegment> segments)
        : base_(base), segments_(std::move(segments)) {
        for (std::size_t i = 0; i < segments_.size(); ++i) {
            if (!(segments_[i].dtau > 0.0)) {
                throw validation_error("worldline segment #" +
                                       std::to_string(i) +
                                       " must have positive extent");
            }
        }
    }

    const Event& base() const { return base_; }
    const std::vector<WorldlineSegment>& segments() const { return segments_; }

    double proper_quantity() const { return ecokin::proper_quantity(segments_); }

    /// State reached after advancing the given amount of proper quantity
    /// from the base event. Negative offsets run backward along the first
    /// segment's direction.
    Event state_at(double proper_offset) const {
        if (segments_.empty()) {
            return {base_.tau + proper_offset, base_.l};
        }
        if (proper_offset < 0.0) {
            return advance(base_, segments_.front().v, proper_offset);
        }
        Event pos = base_;
        double remaining = proper_offset;
        for (const auto& seg : segments_) {
            const double length = seg.dtau * proper_factor(seg.v);
            if (remaining <= length) {
                return advance(pos, seg.v, remaining);
            }
            pos.tau += seg.dtau;
            pos.l += seg.v.value() * seg.dtau;
            remaining -= length;
        }
        return advance(pos, segments_.back().v, remaining);
    }

    /// Endpoint of the recorded segments.
    Event end() const {
        Event pos = base_;
        for (const auto& seg : segments_) {
            pos.tau += seg.dtau;
            pos.l += seg.v.value() * seg.dtau;
        }
        return pos;
    }

private:
    static Event advance(const Event& from, Velocity v, double proper_offset) {
        const double dtau = proper_offset / proper_factor(v);
        return {from.tau + dtau, from.l + v.value() * dtau};
    }

    Event base_;
    std::vector<WorldlineSegment> segments_;
};

/// An identified object moving through the state plane.
struct EconomicObject {
    std::string id;
    Worldline worldline;
};

using ObjectSet = std::map<std::string, EconomicObject>;

inline const EconomicObject& resolve(const ObjectSet& objects,
                                     const std::string& id) {
    const auto it = objects.find(id);
    if (it == objects.end()) {
        throw validation_error("unknown object id '" + id + "'");
    }
    return it->second;
}

}  // namespace ecokin
