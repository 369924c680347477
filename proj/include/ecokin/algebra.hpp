#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ecokin/errors.hpp"
#include "ecokin/frame.hpp"
#include "ecokin/rational.hpp"
#include "ecokin/worldline.hpp"

namespace ecokin {

/// Outcome of offering a transaction to a subject.
enum class Verdict { Consent, Refusal };

inline const char* to_string(Verdict v) {
    return v == Verdict::Consent ? "consent" : "refusal";
}

/// An offered exchange: deliver one object and receive the other.
struct Transaction {
    std::string receive;
    std::string deliver;

    friend bool operator==(const Transaction& a, const Transaction& b) {
        return a.receive == b.receive && a.deliver == b.deliver;
    }
    friend bool operator<(const Transaction& a, const Transaction& b) {
        return std::tie(a.receive, a.deliver) < std::tie(b.receive, b.deliver);
    }
};

inline Transaction mirror(const Transaction& t) {
    return {t.deliver, t.receive};
}

/// Expression over fundamental transactions. A Sum consents when at least
/// one child consents, a Product when all children do. Repeating one
/// transaction inside a Product is not idempotent: the repeats aggregate
/// into a single transaction of larger volume, which a subject may judge
/// differently.
class MeasurementExpr {
public:
    enum class Kind { Zero, One, Leaf, Sum, Product };

    /// The transaction that is always refused.
    static MeasurementExpr zero() { return MeasurementExpr(Kind::Zero); }

    /// The transaction that is always accepted.
    static MeasurementExpr one() { return MeasurementExpr(Kind::One); }

    static MeasurementExpr leaf(Transaction txn, Rational exponent) {
        if (txn.receive == txn.deliver) {
            throw validation_error("transaction must exchange two distinct "
                                   "objects, got '" + txn.receive + "'");
        }
        if (!exponent.is_positive()) {
            throw validation_error("volume exponent must be positive, got " +
                                   exponent.str());
        }
        MeasurementExpr e(Kind::Leaf);
        e.txn_ = std::move(txn);
        e.exponent_ = exponent;
        return e;
    }

    static MeasurementExpr sum(std::vector<MeasurementExpr> children) {
        return composite(Kind::Sum, std::move(children));
    }

    static MeasurementExpr product(std::vector<MeasurementExpr> children) {
        return composite(Kind::Product, std::move(children));
    }

    Kind kind() const { return kind_; }
    const Transaction& txn() const { return txn_; }
    const Rational& exponent() const { return exponent_; }
    const std::vector<MeasurementExpr>& children() const { return children_; }

    /// Stable ordering key; doubles as a canonical serialization, so equal
    /// keys mean structurally equal expressions.
    std::string key() const {
        switch (kind_) {
            case Kind::Zero: return "0";
            case Kind::One: return "1";
            case Kind::Leaf:
                return "L(" + txn_.receive + "," + txn_.deliver + "," +
                       exponent_.str() + ")";
            case Kind::Sum:
            case Kind::Product: {
                std::string out = kind_ == Kind::Sum ? "S(" : "P(";
                for (std::size_t i = 0; i < children_.size(); ++i) {
                    if (i) out += ";";
                    out += children_[i].key();
                }
                return out + ")";
            }
        }
        return "?";
    }

    /// Human-readable rendering, e.g. ([A,B]^2 + [B,A]^1/2).
    std::string str() const {
        switch (kind_) {
            case Kind::Zero: return "[0]";
            case Kind::One: return "[1]";
            case Kind::Leaf:
                return "[" + txn_.receive + "," + txn_.deliver + "]^" +
                       exponent_.str();
            case Kind::Sum:
            case Kind::Product: {
                const char* op = kind_ == Kind::Sum ? " + " : " * ";
                std::string out = "(";
                for (std::size_t i = 0; i < children_.size(); ++i) {
                    if (i) out += op;
                    out += children_[i].str();
                }
                return out + ")";
            }
        }
        return "?";
    }

    friend bool operator==(const MeasurementExpr& a, const MeasurementExpr& b) {
        if (a.kind_ != b.kind_) return false;
        switch (a.kind_) {
            case Kind::Zero:
            case Kind::One: return true;
            case Kind::Leaf:
                return a.txn_ == b.txn_ && a.exponent_ == b.exponent_;
            case Kind::Sum:
            case Kind::Product: return a.children_ == b.children_;
        }
        return false;
    }
    friend bool operator!=(const MeasurementExpr& a, const MeasurementExpr& b) {
        return !(a == b);
    }

private:
    explicit MeasurementExpr(Kind kind) : kind_(kind) {}

    static MeasurementExpr composite(Kind kind,
                                     std::vector<MeasurementExpr> children) {
        if (children.empty()) {
            throw validation_error("sum/product needs at least one child");
        }
        MeasurementExpr e(kind);
        e.children_ = std::move(children);
        return e;
    }

    Kind kind_;
    Transaction txn_;
    Rational exponent_{1};
    std::vector<MeasurementExpr> children_;
};

/// Verdict of a subject on one transaction at the given volume. Each side
/// is valued as the quantity coordinate (in the subject's frame) of its
/// worldline state at proper offset log2(volume) from the base event;
/// consent requires the received side to be strictly dearer. Exact ties
/// are refusals.
inline Verdict consent(const ObjectSet& objects, const ConsumerFrame& frame,
                       const Transaction& txn, const Rational& volume) {
    if (!volume.is_positive()) {
        throw validation_error("transaction volume must be positive, got " +
                               volume.str());
    }
    if (txn.receive == txn.deliver) {
        throw validation_error("transaction must exchange two distinct "
                               "objects, got '" + txn.receive + "'");
    }
    const double offset = volume.log2();
    const double received = valuation(frame, resolve(objects, txn.receive).worldline, offset);
    const double delivered = valuation(frame, resolve(objects, txn.deliver).worldline, offset);
    return received > delivered ? Verdict::Consent : Verdict::Refusal;
}

namespace detail {

/// Splices children of nested nodes of the same kind into the parent.
inline void flatten_into(MeasurementExpr::Kind kind, MeasurementExpr child,
                         std::vector<MeasurementExpr>& out) {
    if (child.kind() == kind) {
        for (const auto& grandchild : child.children()) {
            out.push_back(grandchild);
        }
    } else {
        out.push_back(std::move(child));
    }
}

inline MeasurementExpr rebuild(MeasurementExpr::Kind kind,
                               std::vector<MeasurementExpr> children) {
    using Kind = MeasurementExpr::Kind;
    if (children.empty()) {
        return kind == Kind::Sum ? MeasurementExpr::zero()
                                 : MeasurementExpr::one();
    }
    if (children.size() == 1) return children.front();
    std::sort(children.begin(), children.end(),
              [](const MeasurementExpr& a, const MeasurementExpr& b) {
                  return a.key() < b.key();
              });
    return kind == Kind::Sum ? MeasurementExpr::sum(std::move(children))
                             : MeasurementExpr::product(std::move(children));
}

}  // namespace detail

/// Normal form of an expression. Rules, applied recursively:
///   - nested sums/products flatten; children sort by a stable key
///   - [0] drops out of sums and annihilates products
///   - [1] drops out of products; a sum containing [1] is [1]
///   - product factors over one transaction merge by adding exponents
///   - a product containing a transaction and its mirror at equal volume
///     is [0] (consent both ways at one volume is impossible; at unequal
///     volumes both can hold, so those pairs stay)
///   - m identical offers in a sum become the choice among aggregate
///     volumes q, 2q, ..., mq; per transaction the offered volumes form
///     a set
/// The result is idempotent under repeated canonicalization.
inline MeasurementExpr canonicalize(const MeasurementExpr& expr) {
    using Kind = MeasurementExpr::Kind;
    switch (expr.kind()) {
        case Kind::Zero:
        case Kind::One:
        case Kind::Leaf:
            return expr;

        case Kind::Sum: {
            std::vector<MeasurementExpr> flat;
            for (const auto& child : expr.children()) {
                detail::flatten_into(Kind::Sum, canonicalize(child), flat);
            }
            std::map<Transaction, std::map<Rational, std::size_t>> offers;
            std::vector<MeasurementExpr> kept;
            for (auto& child : flat) {
                if (child.kind() == Kind::Zero) continue;
                if (child.kind() == Kind::One) return MeasurementExpr::one();
                if (child.kind() == Kind::Leaf) {
                    offers[child.txn()][child.exponent()]++;
                } else {
                    kept.push_back(std::move(child));
                }
            }
            for (const auto& [txn, volumes] : offers) {
                std::set<Rational> aggregate;
                for (const auto& [exponent, count] : volumes) {
                    Rational total(0);
                    for (std::size_t i = 0; i < count; ++i) {
                        total = total + exponent;
                        aggregate.insert(total);
                    }
                }
                for (const auto& volume : aggregate) {
                    kept.push_back(MeasurementExpr::leaf(txn, volume));
                }
            }
            return detail::rebuild(Kind::Sum, std::move(kept));
        }

        case Kind::Product: {
            std::vector<MeasurementExpr> flat;
            for (const auto& child : expr.children()) {
                detail::flatten_into(Kind::Product, canonicalize(child), flat);
            }
            std::map<Transaction, Rational> factors;
            std::vector<MeasurementExpr> kept;
            for (auto& child : flat) {
                if (child.kind() == Kind::Zero) return MeasurementExpr::zero();
                if (child.kind() == Kind::One) continue;
                if (child.kind() == Kind::Leaf) {
                    const auto it = factors.find(child.txn());
                    if (it == factors.end()) {
                        factors.emplace(child.txn(), child.exponent());
                    } else {
                        it->second = it->second + child.exponent();
                    }
                } else {
                    kept.push_back(std::move(child));
                }
            }
            for (const auto& [txn, exponent] : factors) {
                const auto rev = factors.find(mirror(txn));
                if (rev != factors.end() && rev->second == exponent) {
                    return MeasurementExpr::zero();
                }
            }
            for (const auto& [txn, exponent] : factors) {
                kept.push_back(MeasurementExpr::leaf(txn, exponent));
            }
            return detail::rebuild(Kind::Product, std::move(kept));
        }
    }
    throw validation_error("malformed expression");
}

namespace detail {

inline Verdict eval_canonical(const ObjectSet& objects,
                              const ConsumerFrame& frame,
                              const MeasurementExpr& e) {
    using Kind = MeasurementExpr::Kind;
    switch (e.kind()) {
        case Kind::Zero: return Verdict::Refusal;
        case Kind::One: return Verdict::Consent;
        case Kind::Leaf: return consent(objects, frame, e.txn(), e.exponent());
        case Kind::Sum:
            for (const auto& child : e.children()) {
                if (eval_canonical(objects, frame, child) == Verdict::Consent) {
                    return Verdict::Consent;
                }
            }
            return Verdict::Refusal;
        case Kind::Product:
            for (const auto& child : e.children()) {
                if (eval_canonical(objects, frame, child) == Verdict::Refusal) {
                    return Verdict::Refusal;
                }
            }
            return Verdict::Consent;
    }
    throw validation_error("malformed expression");
}

}  // namespace detail

/// Verdict of a subject on a composite offer. Canonicalizes first, so
/// repeated identical factors are judged at their aggregate volume.
inline Verdict eval_expression(const ObjectSet& objects,
                               const ConsumerFrame& frame,
                               const MeasurementExpr& expr) {
    return detail::eval_canonical(objects, frame, canonicalize(expr));
}

/// Sampled indistinguishability: the two objects receive matching consent
/// verdicts against every probe object, in every probe frame, in both
/// transaction directions at unit volume. Probes that coincide with either
/// object are skipped (self-exchange is undefined).
inline bool indistinguishable(const EconomicObject& a, const EconomicObject& b,
                              const std::vector<ConsumerFrame>& probe_frames,
                              const std::vector<EconomicObject>& probe_objects) {
    if (probe_frames.empty() || probe_objects.empty()) {
        throw validation_error("indistinguishability needs non-empty probe sets");
    }
    for (const auto& frame : probe_frames) {
        const double va = valuation(frame, a.worldline, 0.0);
        const double vb = valuation(frame, b.worldline, 0.0);
        for (const auto& probe : probe_objects) {
            if (probe.id == a.id || probe.id == b.id) continue;
            const double vx = valuation(frame, probe.worldline, 0.0);
            if ((va > vx) != (vb > vx)) return false;
            if ((vx > va) != (vx > vb)) return false;
        }
    }
    return true;
}

/// Partition of objects into classes of equal quantity coordinate in the
/// frame (relative tolerance 1e-9, chained over sorted neighbours so the
/// relation is transitive by construction). Classes are returned as index
/// groups ordered by coordinate; indices within a group ascend.
inline std::vector<std::vector<std::size_t>> partition_equivalents(
    const ConsumerFrame& frame, const std::vector<EconomicObject>& objects) {
    if (objects.empty()) {
        throw validation_error("cannot partition an empty object list");
    }
    std::vector<std::pair<double, std::size_t>> coords;
    coords.reserve(objects.size());
    for (std::size_t i = 0; i < objects.size(); ++i) {
        coords.emplace_back(valuation(frame, objects[i].worldline, 0.0), i);
    }
    std::sort(coords.begin(), coords.end());

    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        const bool joins =
            !classes.empty() &&
            std::abs(coords[i].first - coords[i - 1].first) <=
                1e-9 * std::max({1.0, std::abs(coords[i].first),
                                 std::abs(coords[i - 1].first)});
        if (!joins) classes.emplace_back();
        classes.back().push_back(coords[i].second);
    }
    for (auto& group : classes) std::sort(group.begin(), group.end());
    return classes;
}

}  // namespace ecokin
