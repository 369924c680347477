#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ecokin/algebra.hpp"
#include "ecokin/rng.hpp"

namespace ecokin {

/// Result of checking one algebraic law over random draws.
struct LawCheckResult {
    std::string law;
    std::size_t draws = 0;
    std::size_t failures = 0;
};

namespace lawgen {

inline ObjectSet random_world(std::mt19937_64& gen) {
    static const char* ids[] = {"A", "B", "C", "D"};
    ObjectSet world;
    for (const char* id : ids) {
        const Event base{uniform_in(gen, -2.0, 2.0), uniform_in(gen, -2.0, 2.0)};
        std::vector<WorldlineSegment> segments;
        const auto count = uniform_index(gen, 3);
        for (std::uint64_t s = 0; s < count; ++s) {
            segments.push_back({Velocity(uniform_in(gen, -0.9, 0.9)),
                                uniform_in(gen, 0.5, 2.0)});
        }
        world[id] = EconomicObject{id, Worldline(base, std::move(segments))};
    }
    return world;
}

inline ConsumerFrame random_frame(std::mt19937_64& gen) {
    return {"probe", Velocity(uniform_in(gen, -0.9, 0.9)),
            {uniform_in(gen, -1.0, 1.0), uniform_in(gen, -1.0, 1.0)}};
}

inline Transaction random_txn(std::mt19937_64& gen) {
    static const char* ids[] = {"A", "B", "C", "D"};
    const auto first = uniform_index(gen, 4);
    const auto shift = 1 + uniform_index(gen, 3);
    return {ids[first], ids[(first + shift) % 4]};
}

inline Rational random_exponent(std::mt19937_64& gen) {
    static const Rational choices[] = {Rational(1, 2), Rational(1),
                                       Rational(3, 2), Rational(2),
                                       Rational(3),    Rational(1, 4)};
    return choices[uniform_index(gen, 6)];
}

inline MeasurementExpr random_expr(std::mt19937_64& gen, int depth) {
    const auto roll = uniform_index(gen, 10);
    if (depth <= 0 || roll < 5) {
        return MeasurementExpr::leaf(random_txn(gen), random_exponent(gen));
    }
    if (roll == 9) return MeasurementExpr::zero();
    if (roll == 8) return MeasurementExpr::one();
    std::vector<MeasurementExpr> children;
    const auto arity = 2 + uniform_index(gen, 2);
    for (std::uint64_t i = 0; i < arity; ++i) {
        children.push_back(random_expr(gen, depth - 1));
    }
    return roll < 7 ? MeasurementExpr::sum(std::move(children))
                    : MeasurementExpr::product(std::move(children));
}

/// Three leaves over pairwise-distinct transactions; volume merging across
/// the distributed terms would otherwise change the verdict legitimately.
inline std::vector<MeasurementExpr> distinct_leaves(std::mt19937_64& gen) {
    std::vector<Transaction> txns;
    while (txns.size() < 3) {
        const Transaction t = random_txn(gen);
        bool fresh = true;
        for (const auto& seen : txns) fresh = fresh && !(seen == t);
        if (fresh) txns.push_back(t);
    }
    std::vector<MeasurementExpr> leaves;
    for (const auto& t : txns) {
        leaves.push_back(MeasurementExpr::leaf(t, random_exponent(gen)));
    }
    return leaves;
}

}  // namespace lawgen

/// Checks the algebra's laws over random worlds, frames and expressions:
/// commutativity, associativity, distributivity over distinct leaves, the
/// [0]/[1] identities, mirror annihilation and completeness, consent
/// antisymmetry, and idempotence of canonicalization. Deterministic for a
/// given seed.
inline std::vector<LawCheckResult> run_law_checks(std::uint64_t seed,
                                                  std::size_t draws) {
    using E = MeasurementExpr;
    std::mt19937_64 gen(seed);

    LawCheckResult sum_comm{"sum-commutativity", draws, 0};
    LawCheckResult sum_assoc{"sum-associativity", draws, 0};
    LawCheckResult prod_comm{"product-commutativity", draws, 0};
    LawCheckResult prod_assoc{"product-associativity", draws, 0};
    LawCheckResult distrib{"distributivity", draws, 0};
    LawCheckResult zero_identity{"zero-sum-identity", draws, 0};
    LawCheckResult one_identity{"one-product-identity", draws, 0};
    LawCheckResult annihilation{"mirror-annihilation", draws, 0};
    LawCheckResult completeness{"mirror-completeness", draws, 0};
    LawCheckResult antisym{"consent-antisymmetry", draws, 0};
    LawCheckResult idempotent{"canonicalize-idempotent", draws, 0};

    for (std::size_t draw = 0; draw < draws; ++draw) {
        const ObjectSet world = lawgen::random_world(gen);
        const ConsumerFrame frame = lawgen::random_frame(gen);
        const auto eval = [&](const E& e) {
            return eval_expression(world, frame, e);
        };

        const E a = lawgen::random_expr(gen, 2);
        const E b = lawgen::random_expr(gen, 2);
        const E c = lawgen::random_expr(gen, 2);

        if (eval(E::sum({a, b})) != eval(E::sum({b, a}))) sum_comm.failures++;
        if (eval(E::sum({E::sum({a, b}), c})) !=
            eval(E::sum({a, E::sum({b, c})}))) {
            sum_assoc.failures++;
        }
        if (eval(E::product({a, b})) != eval(E::product({b, a}))) {
            prod_comm.failures++;
        }
        if (eval(E::product({E::product({a, b}), c})) !=
            eval(E::product({a, E::product({b, c})}))) {
            prod_assoc.failures++;
        }

        const auto leaves = lawgen::distinct_leaves(gen);
        const E lhs = E::product({E::sum({leaves[0], leaves[1]}), leaves[2]});
        const E rhs = E::sum({E::product({leaves[0], leaves[2]}),
                              E::product({leaves[1], leaves[2]})});
        if (eval(lhs) != eval(rhs)) distrib.failures++;

        if (eval(E::sum({a, E::zero()})) != eval(a)) zero_identity.failures++;
        if (eval(E::product({a, E::one()})) != eval(a)) one_identity.failures++;

        const Transaction txn = lawgen::random_txn(gen);
        const Rational volume = lawgen::random_exponent(gen);
        const E forward = E::leaf(txn, volume);
        const E backward = E::leaf(mirror(txn), volume);
        if (eval(E::product({forward, backward})) != Verdict::Refusal) {
            annihilation.failures++;
        }
        const Verdict vf = consent(world, frame, txn, volume);
        const Verdict vb = consent(world, frame, mirror(txn), volume);
        if (vf == Verdict::Consent && vb != Verdict::Refusal) {
            antisym.failures++;
        }
        // Completeness holds off exact valuation ties, where both strict
        // comparisons fail and the sum is refused.
        const bool tied = vf == Verdict::Refusal && vb == Verdict::Refusal;
        if (!tied && eval(E::sum({forward, backward})) != Verdict::Consent) {
            completeness.failures++;
        }

        const E once = canonicalize(a);
        if (canonicalize(once) != once) idempotent.failures++;
    }

    return {sum_comm,      sum_assoc,  prod_comm,    prod_assoc,
            distrib,       zero_identity, one_identity, annihilation,
            completeness,  antisym,    idempotent};
}

}  // namespace ecokin
