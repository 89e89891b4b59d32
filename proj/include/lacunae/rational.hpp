#pragma once

#include <string>

#include "lacunae/words.hpp"

namespace lacunae {

/// Exact ratio of unbounded integers, kept in lowest terms with a positive
/// denominator.  Used for lacunarity constants when psi is integer-valued.
struct Rational {
    Integer num = 0;
    Integer den = 1;

    Rational() = default;
    Rational(Integer n, Integer d);
    explicit Rational(Integer n) : num(std::move(n)), den(1) {}

    double value() const;
    /// "p/q", or just "p" when the denominator is 1.
    std::string str() const;

    friend bool operator==(const Rational&, const Rational&) = default;
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num * b.den < b.num * a.den;
    }
};

}  // namespace lacunae
