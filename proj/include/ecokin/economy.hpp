#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "ecokin/errors.hpp"

namespace ecokin {

/// Square matrix of technology coefficients: entry (i, j) is the quantity
/// of resource i consumed per unit of product j in one production cycle.
class TechnologyMatrix {
public:
    TechnologyMatrix(std::size_t size, std::vector<double> coefficients)
        : m_(size), k_(std::move(coefficients)) {
        if (m_ < 2) {
            throw validation_error("technology matrix needs at least two "
                                   "companies");
        }
        if (k_.size() != m_ * m_) {
            throw validation_error("technology matrix storage must be m*m");
        }
        for (double c : k_) {
            if (!(c >= 0.0) || !std::isfinite(c)) {
                throw validation_error("technology coefficients must be "
                                       "finite and nonnegative");
            }
        }
    }

    std::size_t size() const { return m_; }
    double at(std::size_t i, std::size_t j) const { return k_[i * m_ + j]; }

    /// Output vector of the next cycle given the current one.
    std::vector<double> apply(const std::vector<double>& x) const {
        std::vector<double> y(m_, 0.0);
        for (std::size_t i = 0; i < m_; ++i) {
            for (std::size_t j = 0; j < m_; ++j) {
                y[i] += at(i, j) * x[j];
            }
        }
        return y;
    }

    /// Strong connectivity of the nonzero pattern; reducible matrices have
    /// no all-positive balanced state.
    bool irreducible() const {
        return reaches_all(false) && reaches_all(true);
    }

private:
    bool reaches_all(bool transpose) const {
        std::vector<bool> seen(m_, false);
        std::vector<std::size_t> queue{0};
        seen[0] = true;
        while (!queue.empty()) {
            const std::size_t i = queue.back();
            queue.pop_back();
            for (std::size_t j = 0; j < m_; ++j) {
                const double edge = transpose ? at(j, i) : at(i, j);
                if (edge > 0.0 && !seen[j]) {
                    seen[j] = true;
                    queue.push_back(j);
                }
            }
        }
        for (bool s : seen) {
            if (!s) return false;
        }
        return true;
    }

    std::size_t m_;
    std::vector<double> k_;
};

/// Per-cycle growth factor and the output mix that reproduces itself.
struct BalancedState {
    double growth_factor = 0.0;      // dominant eigenvalue
    std::vector<double> outputs;     // positive eigenvector, unit sum
};

/// Dominant eigenpair of the technology matrix by power iteration on the
/// unit-shifted matrix (the shift keeps periodic patterns converging and
/// moves no eigenvector). Residual driven to 1e-12.
inline BalancedState balanced_state(const TechnologyMatrix& K) {
    const std::size_t m = K.size();
    bool any_positive = false;
    for (std::size_t i = 0; i < m && !any_positive; ++i) {
        for (std::size_t j = 0; j < m && !any_positive; ++j) {
            any_positive = K.at(i, j) > 0.0;
        }
    }
    if (!any_positive) {
        throw validation_error("technology matrix is zero");
    }
    if (!K.irreducible()) {
        throw validation_error("technology matrix is reducible");
    }

    std::vector<double> x(m, 1.0 / static_cast<double>(m));
    double lambda = 0.0;
    for (std::size_t iter = 0; iter < 200000; ++iter) {
        const std::vector<double> z = K.apply(x);
        lambda = 0.0;
        for (double zi : z) lambda += zi;  // x has unit sum

        double residual = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            residual = std::max(residual, std::abs(z[i] - lambda * x[i]));
        }
        if (residual <= 1e-12 * std::max(1.0, std::abs(lambda))) {
            return {lambda, x};
        }

        double total = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            x[i] = z[i] + x[i];  // (K + I) x
            total += x[i];
        }
        for (double& xi : x) xi /= total;
    }
    throw feasibility_error("power iteration failed to reach the 1e-12 "
                            "residual");
}

/// One production-and-exchange cycle of the enclosed economy.
struct CycleRecord {
    std::size_t cycle = 0;              // 1-based
    std::vector<double> outputs;        // post-production volumes
    std::vector<double> exchanged;      // m*m, product i delivered to company j
    std::vector<double> proportions;    // m*m, exchanged(i,j)/exchanged(j,i)
    double volume = 0.0;                // total exchanged quantity
    double log2_volume = 0.0;           // economic time of the cycle
};

struct EconomyTrajectory {
    std::vector<double> initial;
    std::vector<CycleRecord> cycles;
    bool collapsed = false;
    std::size_t collapse_cycle = 0;  // 0 means the initial state itself
};

/// Runs the enclosed economy: each cycle the outputs transform under the
/// technology matrix, every company retains what its own next cycle
/// consumes and offers the rest, and offers are distributed in full,
/// proportionally to the other companies' input requirements. The
/// bilateral delivery ratios are the cycle's proportions of exchange.
/// A company whose stock (after retaining its own need) drops to or below
/// zero collapses the run; the trajectory truncates with the flag set.
///
/// Negative initial volumes are invalid; a zero component is a legal but
/// immediately collapsed state.
inline EconomyTrajectory simulate_economy(const TechnologyMatrix& K,
                                          const std::vector<double>& init,
                                          std::size_t cycles) {
    const std::size_t m = K.size();
    if (init.size() != m) {
        throw validation_error("initial outputs must have one entry per "
                               "company");
    }
    for (double v : init) {
        if (v < 0.0 || !std::isfinite(v)) {
            throw validation_error("initial outputs must be nonnegative and "
                                   "finite");
        }
    }
    if (cycles < 1) {
        throw validation_error("cycle count must be at least 1");
    }

    EconomyTrajectory trajectory;
    trajectory.initial = init;

    std::vector<double> x = init;
    for (double v : x) {
        if (v <= 0.0) {
            trajectory.collapsed = true;
            trajectory.collapse_cycle = 0;
            return trajectory;
        }
    }

    for (std::size_t cycle = 1; cycle <= cycles; ++cycle) {
        const std::vector<double> y = K.apply(x);

        // requirement(i, j): resource i needed by company j's production.
        std::vector<double> requirement(m * m, 0.0);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
                requirement[i * m + j] = K.at(i, j) * y[j];
            }
        }

        std::vector<double> offer(m, 0.0);
        bool collapsed = false;
        for (std::size_t i = 0; i < m; ++i) {
            offer[i] = x[i] - requirement[i * m + i];
            if (offer[i] <= 0.0) collapsed = true;
        }
        if (collapsed) {
            trajectory.collapsed = true;
            trajectory.collapse_cycle = cycle;
            return trajectory;
        }

        CycleRecord record;
        record.cycle = cycle;
        record.outputs = y;
        record.exchanged.assign(m * m, 0.0);
        for (std::size_t i = 0; i < m; ++i) {
            double demand = 0.0;
            for (std::size_t j = 0; j < m; ++j) {
                if (j != i) demand += requirement[i * m + j];
            }
            if (demand <= 0.0) continue;  // nobody needs resource i
            for (std::size_t j = 0; j < m; ++j) {
                if (j == i) continue;
                record.exchanged[i * m + j] =
                    offer[i] * requirement[i * m + j] / demand;
            }
        }

        record.proportions.assign(m * m, 0.0);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
                const double forward = record.exchanged[i * m + j];
                const double backward = record.exchanged[j * m + i];
                if (forward > 0.0 && backward > 0.0) {
                    record.proportions[i * m + j] = forward / backward;
                }
            }
        }

        record.volume = 0.0;
        for (double a : record.exchanged) record.volume += a;
        record.log2_volume = std::log2(record.volume);

        trajectory.cycles.push_back(std::move(record));
        x = y;
    }
    return trajectory;
}

}  // namespace ecokin
