#pragma once

#include <stdexcept>
#include <string>

namespace ecokin {

/// Malformed or out-of-domain input: unknown ids, bad config fields,
/// velocities outside (-1, 1), non-positive prices and the like.
class validation_error : public std::invalid_argument {
public:
    explicit validation_error(const std::string& what)
        : std::invalid_argument(what) {}
};

/// Structurally valid input that describes an impossible scenario:
/// speed-limit violations, no quantity-like path between two states,
/// a twin itinerary that never re-meets.
class feasibility_error : public std::runtime_error {
public:
    explicit feasibility_error(const std::string& what)
        : std::runtime_error(what) {}
};

/// Unreadable or unwritable files.
class io_error : public std::runtime_error {
public:
    explicit io_error(const std::string& what)
        : std::runtime_error(what) {}
};

}  // namespace ecokin
