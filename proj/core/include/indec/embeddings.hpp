#pragma once

// Certified rational enclosures of the three real roots of the minimal
// polynomial and interval evaluation of the three real embeddings.

#include "indec/interval.hpp"
#include "indec/order.hpp"

#include <array>
#include <memory>
#include <optional>
#include <stdexcept>
#include <type_traits>

namespace indec {

/// An internal consistency check failed (e.g. a root interval lost its sign change).
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// 2^-32; small enough that enumeration boxes are tight at desk-scale coordinates.
Rational default_enclosure_width();

/// 2^-64, the hard floor of the automatic refinement loop.
Rational minimum_enclosure_width();

struct RootEnclosures {
    OrderParams params;
    /// Pairwise disjoint, sorted ascending; f changes sign across each one.
    std::array<RationalInterval, 3> intervals;

    Rational max_width() const;
};

/// Three disjoint sign-certified intervals of width <= width. Ennola and
/// Thomas start from their known closed-form brackets; the simplest cubic
/// family is bracketed by a sign scan on a grid that is halved until three
/// sign changes show up.
RootEnclosures isolate_roots(const OrderParams& params, const Rational& width);

/// Bisects every interval until its width is <= width. Never widens.
RootEnclosures refine(const RootEnclosures& enc, const Rational& width);

/// Memoised enclosures at default_enclosure_width(). Safe to call concurrently.
std::shared_ptr<const RootEnclosures> cached_enclosures(const OrderParams& params);

/// The i-th interval contains the conjugate of x at the i-th smallest root.
std::array<RationalInterval, 3> embed_interval(const OrderElement& x, const RootEnclosures& enc);

/// Runs attempt(enc) at the cached width, halving the width until it returns
/// a value; throws InvariantViolation below minimum_enclosure_width().
template <class Attempt>
auto with_refinement(const OrderParams& params, Attempt&& attempt)
    -> typename std::invoke_result_t<Attempt&, const RootEnclosures&>::value_type
{
    RootEnclosures enc = *cached_enclosures(params);
    Rational width = enc.max_width();
    const Rational floor = minimum_enclosure_width();
    while (true) {
        if (auto result = attempt(enc)) return *std::move(result);
        width /= 2;
        if (width < floor) throw InvariantViolation("enclosure refinement cap reached for " + params.describe());
        enc = refine(enc, width);
    }
}

/// Signs of the three conjugates (ascending root order), refined until
/// certified. All zero for x = 0.
std::array<int, 3> conjugate_signs(const OrderElement& x);

/// Interval enclosures of the three conjugates with certified signs.
std::array<RationalInterval, 3> certified_embedding(const OrderElement& x);

/// Enclosures of f'(rho_i) with certified signs.
std::array<RationalInterval, 3> derivative_at_roots(const RootEnclosures& enc);

struct IntegerRange {
    Integer lo;
    Integer hi;

    bool empty() const { return hi < lo; }
    Integer size() const { return empty() ? Integer(0) : Integer(hi - lo + 1); }
};

struct CoefficientBox {
    std::array<IntegerRange, 3> ranges;

    bool empty() const { return ranges[0].empty() || ranges[1].empty() || ranges[2].empty(); }
    bool contains(const Coords& c) const;
    Integer volume() const;
};

/// Integer box containing every (x1, x2, x3) whose i-th conjugate lies in
/// targets[i]. Obtained by inverting the Vandermonde system of the roots
/// with interval Lagrange coefficients, then rounding outward.
CoefficientBox coefficient_box(const std::array<RationalInterval, 3>& targets, const RootEnclosures& enc);

/// As above, where an empty optional stands for an empty target.
CoefficientBox coefficient_box(const std::array<std::optional<RationalInterval>, 3>& targets,
                               const RootEnclosures& enc);

} // namespace indec
