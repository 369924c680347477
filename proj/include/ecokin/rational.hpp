#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "ecokin/errors.hpp"

namespace ecokin {

/// Exact rational number kept in canonical form (gcd-reduced, denominator
/// positive). Arithmetic throws instead of silently wrapping on 64-bit
/// overflow; volume exponents and exchange proportions stay small in
/// practice, so hitting the limit indicates a modelling mistake.
class Rational {
public:
    Rational() = default;

    Rational(std::int64_t num, std::int64_t den = 1) : num_(num), den_(den) {
        if (den_ == 0) {
            throw validation_error("rational denominator must be nonzero");
        }
        normalize();
    }

    /// Parses "7/6" or "3". Whitespace is not accepted.
    static Rational parse(const std::string& text) {
        const auto slash = text.find('/');
        try {
            if (slash == std::string::npos) {
                return Rational(parse_int(text));
            }
            return Rational(parse_int(text.substr(0, slash)),
                            parse_int(text.substr(slash + 1)));
        } catch (const validation_error&) {
            throw validation_error("invalid rational literal '" + text + "'");
        }
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_positive() const { return num_ > 0; }
    bool is_zero() const { return num_ == 0; }

    double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    /// log2 of the value; computed as log2(num) - log2(den) so large
    /// numerators and denominators do not lose precision in the quotient.
    double log2() const {
        if (!is_positive()) {
            throw validation_error("log2 of a non-positive rational");
        }
        return std::log2(static_cast<double>(num_)) -
               std::log2(static_cast<double>(den_));
    }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(checked_add(checked_mul(a.num_, b.den_),
                                    checked_mul(b.num_, a.den_)),
                        checked_mul(a.den_, b.den_));
    }

    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(checked_mul(a.num_, b.num_),
                        checked_mul(a.den_, b.den_));
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) {
        return !(a == b);
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num_) * b.den_ <
               static_cast<__int128>(b.num_) * a.den_;
    }
    friend bool operator<=(const Rational& a, const Rational& b) {
        return !(b < a);
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }

private:
    static std::int64_t parse_int(const std::string& text) {
        if (text.empty()) throw validation_error("empty integer");
        std::size_t pos = 0;
        long long value = 0;
        try {
            value = std::stoll(text, &pos);
        } catch (const std::exception&) {
            throw validation_error("bad integer");
        }
        if (pos != text.size()) throw validation_error("bad integer");
        return value;
    }

    static std::int64_t narrow(__int128 v) {
        if (v > INT64_MAX || v < INT64_MIN) {
            throw validation_error("rational arithmetic overflow");
        }
        return static_cast<std::int64_t>(v);
    }
    static std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
        return narrow(static_cast<__int128>(a) * b);
    }
    static std::int64_t checked_add(std::int64_t a, std::int64_t b) {
        return narrow(static_cast<__int128>(a) + b);
    }

    void normalize() {
        if (den_ < 0) {
            num_ = narrow(-static_cast<__int128>(num_));
            den_ = narrow(-static_cast<__int128>(den_));
        }
        const std::int64_t g = std::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

/// Composes a chain of exchange proportions into the end-to-end proportion:
/// the product of the ratios (equivalently, log-prices add along the chain).
/// An empty chain composes to the identity proportion 1.
inline Rational exchange_chain(const std::vector<Rational>& ratios) {
    Rational product(1);
    for (std::size_t i = 0; i < ratios.size(); ++i) {
        if (!ratios[i].is_positive()) {
            throw validation_error("exchange ratio #" + std::to_string(i) +
                                   " must be positive");
        }
        product = product * ratios[i];
    }
    return product;
}

}  // namespace ecokin
