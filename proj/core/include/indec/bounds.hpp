#pragma once

// Closed-form norms, sharp norm bounds and minimal-trace formulas of the
// three families, plus the large-minimal-trace witness construction.

#include "indec/indecomposable.hpp"
#include "indec/order.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

namespace indec {

/// N(alpha(v, W)) for the simplest cubic family, alpha(v, W) = -v - w rho + (v+1) rho^2
/// with w = v(a+2) + 1 + W, written in a = 3A + a0.
Integer norm_formula_simplest(std::int64_t v, std::int64_t W, std::int64_t a);

/// N(1 + w rho + rho^2) for the Ennola family.
Integer norm_formula_ennola(std::int64_t w, std::int64_t a);

/// N(-v + (bw+1) rho - w rho^2) for the Thomas family with w = a v + W.
Integer norm_formula_thomas(std::int64_t v, std::int64_t W, std::int64_t a, std::int64_t b);

/// The family's closed-form norm of a descriptor (char_poly-free).
Integer norm_formula(const IndecDescriptor& d);

struct NormBound {
    Integer value;
    /// False when a Thomas pair falls outside the ranges where the closed
    /// form is proven and the value comes from the argmax scan instead.
    bool closed_form = true;
};

NormBound norm_bound_detail(const OrderParams& params);
Integer norm_bound(const OrderParams& params);

struct BoundReport {
    OrderParams params;
    Integer claimed_bound;
    Integer attained_norm;
    IndecDescriptor attaining_descriptor;
    bool closed_form = true;
    bool matches = false;
};

/// Compares norm_bound with the largest char_poly norm over the closed-form list.
BoundReport bound_report(const OrderParams& params);

std::int64_t min_trace_formula_thomas(std::int64_t v, std::int64_t w, std::int64_t a, std::int64_t b);
/// min{b - a + 1, a}.
std::int64_t min_trace_cap_thomas(std::int64_t a, std::int64_t b);

/// Upper bound handed to min_trace for a closed-form descriptor: the Thomas
/// formula, and 2 for the other families.
std::int64_t min_trace_upper(const IndecDescriptor& d);

struct LargeMinTraceWitness {
    OrderParams params;
    IndecDescriptor descriptor;
    std::int64_t formula_value;
    std::optional<std::int64_t> confirmed; // exhaustive min_trace, when requested
    std::int64_t achieved() const { return confirmed.value_or(formula_value); }
};

/// Thomas order (a, b) = (n+1, 2n+2) and descriptor (v, w) = (0, a-1), whose
/// minimal trace min{b-a+1, a} = n+1 exceeds n.
LargeMinTraceWitness witness_large_min_trace(std::int64_t n, bool confirm = false);

/// Formula versus char_poly over a descriptor list; the first mismatch, if any.
using NormFormula = std::function<Integer(const IndecDescriptor&)>;

struct FormulaMismatch {
    IndecDescriptor descriptor;
    Integer formula;
    Integer oracle;
    std::string describe() const;
};

std::optional<FormulaMismatch> check_norm_formula(const std::vector<IndecDescriptor>& descriptors,
                                                  const NormFormula& formula = norm_formula);

} // namespace indec
