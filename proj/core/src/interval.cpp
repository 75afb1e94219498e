#include "indec/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace indec {

RationalInterval::RationalInterval(const Rational& lo, const Rational& hi) : lo_(lo), hi_(hi)
{
    if (hi_ < lo_) throw std::invalid_argument("interval with hi < lo");
}

int RationalInterval::certified_sign() const
{
    if (sgn(lo_) > 0) return 1;
    if (sgn(hi_) < 0) return -1;
    return 0;
}

RationalInterval operator+(const RationalInterval& x, const RationalInterval& y)
{
    return {Rational(x.lo_ + y.lo_), Rational(x.hi_ + y.hi_)};
}

RationalInterval operator-(const RationalInterval& x, const RationalInterval& y)
{
    return {Rational(x.lo_ - y.hi_), Rational(x.hi_ - y.lo_)};
}

RationalInterval operator*(const RationalInterval& x, const RationalInterval& y)
{
    Rational p[4] = {x.lo_ * y.lo_, x.lo_ * y.hi_, x.hi_ * y.lo_, x.hi_ * y.hi_};
    auto [mn, mx] = std::minmax_element(std::begin(p), std::end(p));
    return {*mn, *mx};
}

RationalInterval operator*(const Rational& k, const RationalInterval& x)
{
    if (sgn(k) >= 0) return {Rational(k * x.lo_), Rational(k * x.hi_)};
    return {Rational(k * x.hi_), Rational(k * x.lo_)};
}

RationalInterval operator*(const Integer& k, const RationalInterval& x)
{
    if (sgn(k) >= 0) return {Rational(k * x.lo_), Rational(k * x.hi_)};
    return {Rational(k * x.hi_), Rational(k * x.lo_)};
}

RationalInterval operator+(const RationalInterval& x, const Rational& k)
{
    return {Rational(x.lo_ + k), Rational(x.hi_ + k)};
}

RationalInterval operator/(const RationalInterval& x, const RationalInterval& y)
{
    if (y.contains_zero()) throw std::domain_error("interval division by an interval containing zero");
    const RationalInterval inv(Rational(1 / y.hi_), Rational(1 / y.lo_));
    return x * inv;
}

RationalInterval RationalInterval::square() const
{
    if (sgn(lo_) >= 0) return {Rational(lo_ * lo_), Rational(hi_ * hi_)};
    if (sgn(hi_) <= 0) return {Rational(hi_ * hi_), Rational(lo_ * lo_)};
    return {Rational(0), Rational(std::max(Rational(lo_ * lo_), Rational(hi_ * hi_)))};
}

std::string RationalInterval::to_string() const { return "[" + lo_.get_str() + ", " + hi_.get_str() + "]"; }

std::optional<RationalInterval> intersect(const RationalInterval& x, const RationalInterval& y)
{
    Rational lo = std::max(x.lo(), y.lo());
    Rational hi = std::min(x.hi(), y.hi());
    if (hi < lo) return std::nullopt;
    return RationalInterval(lo, hi);
}

RationalInterval hull(const RationalInterval& x, const RationalInterval& y)
{
    return {std::min(x.lo(), y.lo()), std::max(x.hi(), y.hi())};
}

} // namespace indec
