#pragma once

// The codifferent (1/f'(rho)) Z[rho] of Z[rho], its trace pairing with the
// order, and exhaustive minimal traces Tr(alpha delta) over totally
// positive delta.

#include "indec/order.hpp"

#include <cstdint>
#include <stdexcept>

namespace indec {

class NotFoundError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// delta = num / f'(rho).
struct CodifferentElement {
    OrderElement num;

    const OrderParams& params() const noexcept { return num.params(); }
    RationalCoords as_field_element() const;

    friend bool operator==(const CodifferentElement&, const CodifferentElement&) = default;
};

/// f'(rho) in the power basis.
OrderElement derivative_element(const OrderParams& params);

/// Tr(alpha * delta), computed in Q(rho) and checked to be an integer.
Integer pairing_trace(const CodifferentElement& delta, const OrderElement& alpha);

/// Tr(delta) = pairing_trace(delta, 1).
Integer trace(const CodifferentElement& delta);

bool is_totally_positive_codiff(const CodifferentElement& delta);

// Thomas family only; UnsupportedFamilyError otherwise.
CodifferentElement delta_v(const OrderParams& params);
CodifferentElement delta_w(const OrderParams& params);
/// The general numerator with Tr(delta_t * alpha(v, w)) = t for all k, l.
CodifferentElement delta_t(const OrderParams& params, const Integer& t, std::int64_t v, std::int64_t w,
                           const Integer& k, const Integer& l);

struct MinTrace {
    std::int64_t value;
    CodifferentElement witness;
};

/// Least t in [1, upper] with Tr(alpha delta) = t for a totally positive
/// codifferent delta, with a delta attaining it. Throws NotFoundError when
/// no such t <= upper exists and PreconditionError unless alpha is totally
/// positive.
///
/// For each t the conjugates satisfy alpha_i delta_i > 0 with sum t, so
/// 0 < delta_i < t / alpha_i; multiplying by f'(rho_i) bounds the numerator
/// conjugates, and the box is scanned exhaustively.
MinTrace min_trace_with_witness(const OrderElement& alpha, std::int64_t upper);

std::int64_t min_trace(const OrderElement& alpha, std::int64_t upper);

} // namespace indec
