#pragma once

// Additively indecomposable totally positive elements of Z[rho]: the
// two-parallelepiped candidate method, an exhaustive indecomposability
// decision, and the closed-form families with their symmetry maps.

#include "indec/order.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace indec {

class DescriptorError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DegeneracyError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class DescriptorKind {
    One,                 // 1
    OnePlusRhoPlusRhoSq, // 1 + rho + rho^2 (simplest cubic)
    W,                   // 1 + w rho + rho^2 (Ennola)
    VW,                  // simplest: -v - w rho + (v+1) rho^2; Thomas: -v + (bw+1) rho - w rho^2
};

/// Names one closed-form indecomposable, up to totally positive unit multiples.
struct IndecDescriptor {
    OrderParams params;
    DescriptorKind kind;
    std::int64_t v = 0;
    std::int64_t w = 0;

    static IndecDescriptor one(const OrderParams& p) { return {p, DescriptorKind::One}; }
    static IndecDescriptor one_plus_rho_plus_rho_sq(const OrderParams& p);
    static IndecDescriptor ennola_w(const OrderParams& p, std::int64_t w);
    static IndecDescriptor vw(const OrderParams& p, std::int64_t v, std::int64_t w);
    /// Simplest cubic alpha(v, W) with w = v(a+2) + 1 + W.
    static IndecDescriptor simplest_vW(const OrderParams& p, std::int64_t v, std::int64_t W);
    /// Thomas alpha(v, W) with w = a v + W.
    static IndecDescriptor thomas_vW(const OrderParams& p, std::int64_t v, std::int64_t W);

    /// W coordinate of a simplest-cubic or Thomas VW descriptor.
    std::int64_t big_w() const;

    /// Whether the family's range constraints hold.
    bool valid() const;

    /// Short label, e.g. "1", "1+rho+rho^2", "w=2", "v=1,w=3".
    std::string label() const;

    friend bool operator==(const IndecDescriptor& x, const IndecDescriptor& y)
    {
        return x.params == y.params && x.kind == y.kind && x.v == y.v && x.w == y.w;
    }
    friend bool operator<(const IndecDescriptor& x, const IndecDescriptor& y)
    {
        if (!(x.params == y.params)) return x.params < y.params;
        if (x.kind != y.kind) return x.kind < y.kind;
        if (x.v != y.v) return x.v < y.v;
        return x.w < y.w;
    }
};

struct UnitPair {
    OrderElement first;
    OrderElement second;
};

/// Totally positive unit pair feeding the parallelepiped method:
///   Thomas   rho, rho (rho - a)^2
///   simplest rho^2, -a-1-(a^2+3a+3) rho + (a+2) rho^2
///   Ennola   rho^2, rho (rho - 1)
UnitPair standard_unit_pair(const OrderParams& params);

/// Nonzero integer points of the closed parallelepiped spanned by the
/// coordinate vectors of the given elements. Membership is decided exactly
/// by Cramer's rule. Throws DegeneracyError if the vectors are dependent.
std::vector<OrderElement> parallelepiped_points(const OrderElement& e0, const OrderElement& e1,
                                                const OrderElement& e2);

/// Union of the points of the bodies spanned by (1, e1, e2) and
/// (1, e1, e1/e2), sorted lexicographically without duplicates.
std::vector<OrderElement> parallelepiped_candidates(const OrderParams& params, const UnitPair& pair);

/// A decomposition x = y + z into totally positive y, z, if one exists.
/// Throws PreconditionError unless x is totally positive.
std::optional<std::pair<OrderElement, OrderElement>> find_decomposition(const OrderElement& x);

bool is_indecomposable(const OrderElement& x);

/// The complete closed-form list in lexicographic descriptor order.
std::vector<IndecDescriptor> closed_form_indecomposables(const OrderParams& params);

OrderElement descriptor_to_element(const IndecDescriptor& d);

/// Orbit maps on the simplest-cubic set: t1(alpha(v,W)) = alpha(W, a-v-W),
/// t2(alpha(v,W)) = alpha(a-v-W, v). Element-wise they are
/// alpha -> sigma(alpha) * u and alpha -> sigma^2(alpha) * rho^2.
IndecDescriptor t1(const IndecDescriptor& d);
IndecDescriptor t2(const IndecDescriptor& d);

struct TriangleSets {
    std::vector<IndecDescriptor> full;        // all alpha(v, W), 0 <= v <= a, 0 <= W <= a - v
    std::vector<IndecDescriptor> fundamental; // the reduced domain under t1 and t2
};

TriangleSets triangle_sets(std::int64_t a);

/// x / y is a totally positive unit of Z[rho].
bool same_unit_class(const OrderElement& x, const OrderElement& y);

/// One representative per unit-multiple class, the lexicographically least
/// coordinate vector among the inputs of that class; output sorted.
std::vector<OrderElement> dedup_up_to_units(const std::vector<OrderElement>& elems, const OrderParams& params);

/// Indecomposable parallelepiped candidates, reduced to unit classes.
std::vector<OrderElement> indecomposable_classes(const OrderParams& params);

/// Every totally positive element whose conjugates are all <= cap and which
/// is indecomposable; exhaustive.
std::vector<OrderElement> indecomposables_below(const OrderParams& params, const Integer& cap);

/// Every element of xs is a totally positive unit multiple of some element of reps.
bool covered_by(const std::vector<OrderElement>& xs, const std::vector<OrderElement>& reps);

/// Whether two lists describe the same set of unit classes.
bool same_classes(const std::vector<OrderElement>& x, const std::vector<OrderElement>& y);

} // namespace indec
