#pragma once

#include "indec/integer.hpp"

#include <optional>
#include <string>

namespace indec {

/// Closed interval [lo, hi] with exact rational endpoints. Arithmetic is
/// exact, so every result encloses all pointwise results with no rounding.
class RationalInterval {
public:
    RationalInterval() = default;
    explicit RationalInterval(const Rational& point) : lo_(point), hi_(point) {}
    RationalInterval(const Rational& lo, const Rational& hi);

    const Rational& lo() const noexcept { return lo_; }
    const Rational& hi() const noexcept { return hi_; }
    Rational width() const { return hi_ - lo_; }
    Rational midpoint() const { return (lo_ + hi_) / 2; }

    bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
    bool contains(const RationalInterval& other) const { return lo_ <= other.lo_ && other.hi_ <= hi_; }
    bool contains_zero() const { return sgn(lo_) <= 0 && sgn(hi_) >= 0; }

    /// +1 or -1 when the whole interval is strictly on one side of zero, 0 otherwise.
    int certified_sign() const;

    RationalInterval operator-() const { return {Rational(-hi_), Rational(-lo_)}; }
    friend RationalInterval operator+(const RationalInterval& x, const RationalInterval& y);
    friend RationalInterval operator-(const RationalInterval& x, const RationalInterval& y);
    friend RationalInterval operator*(const RationalInterval& x, const RationalInterval& y);
    friend RationalInterval operator*(const Rational& k, const RationalInterval& x);
    friend RationalInterval operator*(const Integer& k, const RationalInterval& x);
    friend RationalInterval operator+(const RationalInterval& x, const Rational& k);
    /// Division by an interval not containing zero; throws std::domain_error otherwise.
    friend RationalInterval operator/(const RationalInterval& x, const RationalInterval& y);

    /// Tighter than x * x when x straddles zero.
    RationalInterval square() const;

    friend bool operator==(const RationalInterval&, const RationalInterval&) = default;

    std::string to_string() const;

private:
    Rational lo_{0};
    Rational hi_{0};
};

/// Intersection, or nullopt when empty.
std::optional<RationalInterval> intersect(const RationalInterval& x, const RationalInterval& y);

/// Smallest closed interval containing both.
RationalInterval hull(const RationalInterval& x, const RationalInterval& y);

} // namespace indec
