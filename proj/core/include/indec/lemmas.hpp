#pragma once

// Falsification harnesses for the structural lemmas behind the bounds. Each
// checks a universally quantified claim on a finite window and records
// every counterexample it meets.

#include "indec/order.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace indec {

struct LemmaReport {
    std::string name;
    std::uint64_t cases = 0;
    std::vector<std::string> counterexamples;

    bool passed() const { return counterexamples.empty(); }
    void check(bool ok, const std::string& witness);
};

/// The Thomas elements beta(t, v2, v3) = t - (b-a+1) v2 - (b-a+1) b v3 + v2 rho + v3 rho^2.
OrderElement thomas_beta(const OrderParams& params, const Integer& t, const Integer& v2, const Integer& v3);

/// Norm monotonicity on the simplest-cubic set for a >= 5 (four parts);
/// returns an empty report with zero cases for smaller a.
LemmaReport simplest_norm_monotonicity(std::int64_t a);

/// Orbit maps t1 and t2 on the simplest-cubic set: closure, t1^3 = id,
/// t2 = t1^2, fixed points exactly at v = W = a/3, coverage and exclusivity
/// of the fundamental domain, element-level identities with the Galois
/// action and norm invariance.
LemmaReport simplest_orbit_properties(std::int64_t a);

/// The four sign cases in which beta(t, v2, v3) is not totally positive,
/// over 1 <= t <= b-a and |v2|, |v3| <= window. Case 4 only when b <= 2a-3.
LemmaReport thomas_beta_exclusion(const OrderParams& params, std::int64_t window);

/// For b >= 2a-2, v2 < 0, v3 >= 0 and (a,b) not in {(2,4),(2,5),(3,5)}:
/// a totally positive beta has smallest conjugate > 1.
LemmaReport thomas_beta_smallest_conjugate(const OrderParams& params, std::int64_t window);

/// Every Thomas descriptor element has smallest conjugate < 1.
LemmaReport thomas_descriptors_below_one(const OrderParams& params);

/// Norm comparisons on the Thomas descriptors alpha(v, W), (a,b) != (2,4).
LemmaReport thomas_norm_comparison(const OrderParams& params);

} // namespace indec
