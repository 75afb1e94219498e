#pragma once

// Exact arithmetic in the monogenic order Z[rho] of the three cubic families:
//
//   simplest cubic   x^3 - a x^2 - (a+3) x - 1,         a >= -1
//   Ennola           x^3 + (a-1) x^2 - a x - 1,          a >= 3
//   Thomas           x^3 - (a+b) x^2 + a b x - 1,        2 <= a <= b-2
//
// Elements are stored in the power basis {1, rho, rho^2} with GMP integers.

#include "indec/detail/cubic_arith.hpp"
#include "indec/integer.hpp"

#include <array>
#include <cstdint>
#include <compare>
#include <optional>
#include <stdexcept>
#include <string>

namespace indec {

enum class Family { SimplestCubic, Ennola, Thomas };

std::string to_string(Family f);

/// Parses "simplest", "ennola" or "thomas" (case-insensitive).
std::optional<Family> parse_family(const std::string& name);

class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class IncompatibleOrderError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class UnsupportedFamilyError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Monic cubic x^3 + c2 x^2 + c1 x + c0.
struct MinimalPoly {
    Integer c0;
    Integer c1;
    Integer c2;

    Integer eval(const Integer& x) const { return ((x + c2) * x + c1) * x + c0; }
    Rational eval(const Rational& x) const { return ((x + c2) * x + c1) * x + c0; }
    Rational eval_derivative(const Rational& x) const { return (3 * x + 2 * c2) * x + c1; }
    Integer discriminant() const;

    friend bool operator==(const MinimalPoly&, const MinimalPoly&) = default;
};

class OrderParams {
public:
    static OrderParams simplest(std::int64_t a);
    static OrderParams ennola(std::int64_t a);
    static OrderParams thomas(std::int64_t a, std::int64_t b);
    /// Validating factory; b is ignored for the one-parameter families.
    static OrderParams make(Family family, std::int64_t a, std::int64_t b = 0);

    Family family() const noexcept { return family_; }
    std::int64_t a() const noexcept { return a_; }
    std::int64_t b() const noexcept { return b_; }

    const MinimalPoly& minimal_poly() const noexcept { return poly_; }
    const detail::Reduction<Integer>& reduction() const noexcept { return reduction_; }

    std::string describe() const;

    friend bool operator==(const OrderParams& x, const OrderParams& y) noexcept
    {
        return x.family_ == y.family_ && x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend auto operator<=>(const OrderParams& x, const OrderParams& y) noexcept
    {
        if (auto c = x.family_ <=> y.family_; c != 0) return c;
        if (auto c = x.a_ <=> y.a_; c != 0) return c;
        return x.b_ <=> y.b_;
    }

private:
    OrderParams(Family family, std::int64_t a, std::int64_t b);

    Family family_;
    std::int64_t a_;
    std::int64_t b_;
    MinimalPoly poly_;
    detail::Reduction<Integer> reduction_;
};

/// Minimal polynomial of rho; throws ParameterError on out-of-range parameters.
MinimalPoly minimal_poly(Family family, std::int64_t a, std::int64_t b = 0);

using Coords = std::array<Integer, 3>;

class OrderElement {
public:
    OrderElement(OrderParams params, Coords coords);
    OrderElement(OrderParams params, long x1, long x2, long x3);

    static OrderElement zero(const OrderParams& p) { return {p, 0, 0, 0}; }
    static OrderElement one(const OrderParams& p) { return {p, 1, 0, 0}; }
    static OrderElement rho(const OrderParams& p) { return {p, 0, 1, 0}; }
    static OrderElement from_integer(const OrderParams& p, const Integer& n) { return {p, {n, 0, 0}}; }

    const OrderParams& params() const noexcept { return params_; }
    const Coords& coords() const noexcept { return coords_; }
    const Integer& operator[](std::size_t i) const { return coords_[i]; }

    bool is_zero() const { return coords_[0] == 0 && coords_[1] == 0 && coords_[2] == 0; }

    OrderElement operator-() const;
    friend OrderElement operator+(const OrderElement& x, const OrderElement& y);
    friend OrderElement operator-(const OrderElement& x, const OrderElement& y);
    friend OrderElement operator*(const OrderElement& x, const OrderElement& y);
    friend OrderElement operator*(const Integer& k, const OrderElement& x);

    friend bool operator==(const OrderElement& x, const OrderElement& y)
    {
        return x.params_ == y.params_ && x.coords_ == y.coords_;
    }

    /// Lexicographic order on coordinates; params must agree.
    friend bool lex_less(const OrderElement& x, const OrderElement& y);

    std::string to_string() const;

private:
    OrderParams params_;
    Coords coords_;
};

OrderElement add(const OrderElement& x, const OrderElement& y);
OrderElement neg(const OrderElement& x);
OrderElement mul(const OrderElement& x, const OrderElement& y);
OrderElement pow(const OrderElement& x, unsigned n);

/// Coefficients of x^3 - e1 x^2 + e2 x - e3, the characteristic polynomial.
struct CharPoly {
    Integer e1;
    Integer e2;
    Integer e3;

    Integer discriminant() const;
    friend bool operator==(const CharPoly&, const CharPoly&) = default;
};

CharPoly char_poly(const OrderElement& x);
Integer trace(const OrderElement& x);
Integer norm(const OrderElement& x);

/// All conjugates positive. Decided from the signs of e1, e2, e3: for a
/// cubic with only real roots this is exactly Descartes' rule.
bool is_totally_positive(const OrderElement& x);

bool is_unit(const OrderElement& x);

/// x^{-1} for a unit x; throws std::domain_error otherwise.
OrderElement inverse_unit(const OrderElement& x);

/// y / x when the quotient lies in Z[rho].
std::optional<OrderElement> exact_quotient(const OrderElement& y, const OrderElement& x);

/// The order-3 automorphism rho -> -1 - 1/rho = (a+2) + a rho - rho^2 of
/// the simplest cubic field. Throws UnsupportedFamilyError for other families.
OrderElement galois_conjugate(const OrderElement& x);

/// A cubic with integer coefficients and no rational root is irreducible.
bool has_rational_root(const MinimalPoly& f);

/// Exact arithmetic in Q(rho) on rational coordinates.
using RationalCoords = std::array<Rational, 3>;

RationalCoords to_rational(const Coords& c);
RationalCoords mul(const OrderParams& p, const RationalCoords& x, const RationalCoords& y);
RationalCoords inverse(const OrderParams& p, const RationalCoords& x);
/// (e1, e2, e3) of a rational field element.
std::array<Rational, 3> char_poly(const OrderParams& p, const RationalCoords& x);

} // namespace indec
