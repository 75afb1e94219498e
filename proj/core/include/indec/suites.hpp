#pragma once

// Named verification checks over the parameter grids, shared by the CLI
// `verify` command and the acceptance binary.

#include "indec/bounds.hpp"
#include "indec/lemmas.hpp"
#include "indec/order.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace indec {

struct CheckResult {
    std::string name;
    bool passed = false;
    /// Witness tuple on failure, a short summary otherwise.
    std::string detail;
};

bool all_passed(const std::vector<CheckResult>& results);

/// Parallelepiped classes equal the closed-form list, every listed element
/// is indecomposable, and for the simplest cubic family with a >= 0 the
/// count is (a+1)(a+2)/2 + 2.
CheckResult check_classes(const OrderParams& params);

/// Maximal class norm equals norm_bound.
CheckResult check_norm_bound(const OrderParams& params);

/// Exhaustive min_trace of every closed-form class: the Thomas formula, 2
/// for the non-unit Ennola classes, and for Thomas also the count of
/// trace-one classes (>= b-a) and the maximum min{b-a+1, a}.
CheckResult check_min_traces(const OrderParams& params);

/// The witness for n, confirmed exhaustively, exceeds n.
CheckResult check_witness(std::int64_t n);

/// Formula norms equal char_poly norms on the full descriptor range.
CheckResult check_formula(const OrderParams& params, const NormFormula& formula = norm_formula);

/// Symmetric-function and interval-sign positivity verdicts agree on
/// `samples` random elements with coordinates in [-20, 20].
CheckResult check_positivity(Family family, std::uint64_t samples, std::uint64_t seed);

/// Runs one lemma harness and folds it into a CheckResult.
CheckResult check_lemma(const LemmaReport& report);

struct SuiteOptions {
    /// Restricts the suite to one family / order when set.
    std::optional<Family> family;
    std::optional<std::int64_t> a;
    std::optional<std::int64_t> b;
    std::optional<std::int64_t> a_max;
    std::int64_t window = 5;
    std::uint64_t samples = 10000;
    std::uint64_t seed = 20240607;
    /// Corrupts the norm formulas by +1 to exercise the failure path.
    bool mutate = false;
};

/// Suite names: simplest, ennola, thomas, witness, formulas, lemmas,
/// positivity, all.
const std::vector<std::string>& suite_names();

/// Runs the named suite; throws std::invalid_argument for an unknown name
/// or parameters outside the family's range.
std::vector<CheckResult> run_suite(const std::string& name, const SuiteOptions& options);

/// Default grids of the acceptance criteria.
std::vector<std::int64_t> simplest_grid();
std::vector<std::int64_t> simplest_bound_grid();
std::vector<std::int64_t> ennola_grid();
std::vector<std::pair<std::int64_t, std::int64_t>> thomas_grid();

} // namespace indec
