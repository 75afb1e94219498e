#include "indec/suites.hpp"

#include "indec/codifferent.hpp"
#include "indec/embeddings.hpp"
#include "indec/indecomposable.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace indec {

namespace {

std::vector<OrderElement> closed_form_elements(const OrderParams& p)
{
    std::vector<OrderElement> out;
    for (const auto& d : closed_form_indecomposables(p)) out.push_back(descriptor_to_element(d));
    return out;
}

std::optional<OrderElement> first_uncovered(const std::vector<OrderElement>& xs, const std::vector<OrderElement>& reps)
{
    for (const auto& x : xs) {
        if (!covered_by({x}, reps)) return x;
    }
    return std::nullopt;
}

bool squarefree(Integer n)
{
    n = abs(n);
    for (Integer d = 2; d * d <= n; ++d) {
        if (n % (d * d) == 0) return false;
    }
    return true;
}

std::vector<std::int64_t> range(std::int64_t lo, std::int64_t hi)
{
    std::vector<std::int64_t> out;
    for (std::int64_t a = lo; a <= hi; ++a) out.push_back(a);
    return out;
}

CheckResult pass(std::string name, std::string detail) { return {std::move(name), true, std::move(detail)}; }
CheckResult fail(std::string name, std::string detail) { return {std::move(name), false, std::move(detail)}; }

} // namespace

bool all_passed(const std::vector<CheckResult>& results)
{
    return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

CheckResult check_classes(const OrderParams& p)
{
    const std::string name = "classes " + p.describe();
    const auto classes = indecomposable_classes(p);
    const auto closed = closed_form_elements(p);
    if (auto x = first_uncovered(classes, closed)) return fail(name, "class " + x->to_string() + " not in closed-form list");
    if (auto x = first_uncovered(closed, classes)) return fail(name, "closed-form " + x->to_string() + " not found");
    if (classes.size() != closed.size()) {
        return fail(name, std::to_string(classes.size()) + " classes vs " + std::to_string(closed.size()) + " descriptors");
    }
    for (const auto& x : closed) {
        if (!is_indecomposable(x)) return fail(name, x.to_string() + " decomposes");
    }
    if (p.family() == Family::SimplestCubic && p.a() >= 0) {
        const auto expected = static_cast<std::size_t>((p.a() + 1) * (p.a() + 2) / 2 + 2);
        if (classes.size() != expected) {
            return fail(name, "count " + std::to_string(classes.size()) + " != " + std::to_string(expected));
        }
    }
    return pass(name, std::to_string(classes.size()) + " classes");
}

CheckResult check_norm_bound(const OrderParams& p)
{
    const std::string name = "norm bound " + p.describe();
    const BoundReport r = bound_report(p);
    std::string detail = "bound " + to_string(r.claimed_bound) + ", attained " + to_string(r.attained_norm) + " at " +
                         r.attaining_descriptor.label();
    return r.matches ? pass(name, detail) : fail(name, detail);
}

CheckResult check_min_traces(const OrderParams& p)
{
    const std::string name = "min traces " + p.describe();
    const auto descriptors = closed_form_indecomposables(p);
    const bool pattern = p.family() != Family::SimplestCubic || squarefree(Integer(p.a() * p.a() + 3 * p.a() + 9));
    std::int64_t ones = 0;
    std::int64_t largest = 0;
    for (const auto& d : descriptors) {
        const std::int64_t upper = min_trace_upper(d);
        std::int64_t m = 0;
        try {
            m = min_trace(descriptor_to_element(d), upper);
        } catch (const NotFoundError&) {
            return fail(name, d.label() + ": no totally positive delta with trace <= " + std::to_string(upper));
        }
        std::int64_t expected = m;
        switch (p.family()) {
        case Family::SimplestCubic:
            if (pattern) expected = d.kind == DescriptorKind::OnePlusRhoPlusRhoSq ? 2 : 1;
            break;
        case Family::Ennola: expected = d.kind == DescriptorKind::One ? 1 : 2; break;
        case Family::Thomas: expected = min_trace_formula_thomas(d.v, d.w, p.a(), p.b()); break;
        }
        if (m != expected) {
            return fail(name, d.label() + ": min_trace " + std::to_string(m) + " != " + std::to_string(expected));
        }
        ones += m == 1;
        largest = std::max(largest, m);
    }
    if (p.family() == Family::Thomas) {
        if (ones < p.b() - p.a()) {
            return fail(name, std::to_string(ones) + " trace-one classes < b-a = " + std::to_string(p.b() - p.a()));
        }
        const std::int64_t cap = min_trace_cap_thomas(p.a(), p.b());
        if (largest != cap) return fail(name, "max " + std::to_string(largest) + " != " + std::to_string(cap));
    }
    return pass(name, std::to_string(descriptors.size()) + " classes, max " + std::to_string(largest) + ", " +
                          std::to_string(ones) + " with trace 1");
}

CheckResult check_witness(std::int64_t n)
{
    const std::string name = "witness n=" + std::to_string(n);
    const auto w = witness_large_min_trace(n, true);
    std::string detail = w.params.describe() + " " + w.descriptor.label() + " achieved " + std::to_string(w.achieved());
    if (w.confirmed != w.formula_value) return fail(name, detail + ", formula " + std::to_string(w.formula_value));
    return w.achieved() > n ? pass(name, detail) : fail(name, detail);
}

CheckResult check_formula(const OrderParams& p, const NormFormula& formula)
{
    const std::string name = "norm formula " + p.describe();
    const auto descriptors = closed_form_indecomposables(p);
    if (auto m = check_norm_formula(descriptors, formula)) return fail(name, m->describe());
    return pass(name, std::to_string(descriptors.size()) + " descriptors");
}

CheckResult check_positivity(Family family, std::uint64_t samples, std::uint64_t seed)
{
    const std::string name = "positivity " + to_string(family);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coord(-20, 20);
    std::uniform_int_distribution<std::int64_t> small(0, 11);
    std::uint64_t positive = 0;
    for (std::uint64_t i = 0; i < samples; ++i) {
        std::int64_t a = 0;
        std::int64_t b = 0;
        switch (family) {
        case Family::SimplestCubic: a = small(rng) - 1; break;
        case Family::Ennola: a = small(rng) + 3; break;
        case Family::Thomas:
            a = small(rng) % 5 + 2;
            b = a + 2 + small(rng) % 6;
            break;
        }
        const OrderParams p = OrderParams::make(family, a, b);
        const long x1 = coord(rng);
        const long x2 = coord(rng);
        const long x3 = coord(rng);
        const OrderElement x(p, x1, x2, x3);
        if (x.is_zero()) continue;
        const auto signs = conjugate_signs(x);
        const bool by_intervals = signs[0] > 0 && signs[1] > 0 && signs[2] > 0;
        const bool by_symmetric = is_totally_positive(x);
        if (by_intervals != by_symmetric) {
            return fail(name, p.describe() + " " + x.to_string() + ": symmetric " + std::to_string(by_symmetric) +
                                  ", intervals " + std::to_string(by_intervals));
        }
        positive += by_symmetric;
    }
    return pass(name, std::to_string(samples) + " samples, " + std::to_string(positive) + " totally positive");
}

CheckResult check_lemma(const LemmaReport& report)
{
    std::string detail = std::to_string(report.cases) + " cases";
    if (report.passed()) return pass(report.name, detail);
    return fail(report.name, detail + ", counterexample " + report.counterexamples.front());
}

std::vector<std::int64_t> simplest_grid() { return range(-1, 6); }
std::vector<std::int64_t> simplest_bound_grid() { return range(-1, 10); }
std::vector<std::int64_t> ennola_grid() { return range(3, 8); }

std::vector<std::pair<std::int64_t, std::int64_t>> thomas_grid()
{
    return {{2, 4}, {2, 5}, {3, 5}, {3, 6}, {4, 6}, {4, 7}, {4, 8}};
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"simplest", "ennola",     "thomas", "witness",
                                                "formulas", "positivity", "lemmas", "all"};
    return names;
}

namespace {

bool wants(const SuiteOptions& o, Family f) { return !o.family || *o.family == f; }

std::vector<OrderParams> simplest_orders(const SuiteOptions& o, std::vector<std::int64_t> grid)
{
    if (o.a) return {OrderParams::simplest(*o.a)};
    if (o.a_max) grid = range(-1, *o.a_max);
    std::vector<OrderParams> out;
    for (auto a : grid) out.push_back(OrderParams::simplest(a));
    return out;
}

std::vector<OrderParams> ennola_orders(const SuiteOptions& o)
{
    if (o.a) return {OrderParams::ennola(*o.a)};
    auto grid = o.a_max ? range(3, *o.a_max) : ennola_grid();
    std::vector<OrderParams> out;
    for (auto a : grid) out.push_back(OrderParams::ennola(a));
    return out;
}

std::vector<OrderParams> thomas_orders(const SuiteOptions& o)
{
    if (o.a || o.b) {
        if (!o.a || !o.b) throw std::invalid_argument("thomas needs both --a and --b");
        return {OrderParams::thomas(*o.a, *o.b)};
    }
    std::vector<OrderParams> out;
    for (auto [a, b] : thomas_grid()) {
        if (!o.a_max || a <= *o.a_max) out.push_back(OrderParams::thomas(a, b));
    }
    return out;
}

void append(std::vector<CheckResult>& out, std::vector<CheckResult> more)
{
    out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
}

std::vector<CheckResult> simplest_suite(const SuiteOptions& o)
{
    std::vector<CheckResult> out;
    for (const auto& p : simplest_orders(o, simplest_grid())) {
        out.push_back(check_classes(p));
        out.push_back(check_min_traces(p));
    }
    auto bound_grid = simplest_bound_grid();
    if (o.a_max && *o.a_max > bound_grid.back()) bound_grid = range(-1, *o.a_max);
    for (const auto& p : simplest_orders(o, bound_grid)) out.push_back(check_norm_bound(p));
    return out;
}

std::vector<CheckResult> one_parameter_suite(const std::vector<OrderParams>& orders)
{
    std::vector<CheckResult> out;
    for (const auto& p : orders) {
        out.push_back(check_classes(p));
        out.push_back(check_min_traces(p));
        out.push_back(check_norm_bound(p));
    }
    return out;
}

std::vector<CheckResult> witness_suite(const SuiteOptions& o)
{
    std::vector<CheckResult> out;
    const std::int64_t n_max = o.a_max.value_or(3);
    for (std::int64_t n = 1; n <= n_max; ++n) out.push_back(check_witness(n));
    return out;
}

std::vector<CheckResult> formulas_suite(const SuiteOptions& o)
{
    NormFormula formula = norm_formula;
    if (o.mutate) formula = [](const IndecDescriptor& d) { return Integer(norm_formula(d) + 1); };
    std::vector<CheckResult> out;
    std::vector<OrderParams> orders;
    if (wants(o, Family::SimplestCubic)) {
        for (const auto& p : simplest_orders(o, simplest_bound_grid())) orders.push_back(p);
    }
    if (wants(o, Family::Ennola)) {
        for (const auto& p : ennola_orders(o)) orders.push_back(p);
    }
    if (wants(o, Family::Thomas)) {
        for (const auto& p : thomas_orders(o)) orders.push_back(p);
    }
    for (const auto& p : orders) out.push_back(check_formula(p, formula));
    if (wants(o, Family::Thomas) && !o.a) {
        const Integer bound = norm_bound(OrderParams::thomas(2, 4));
        out.push_back(bound == 16 ? pass("thomas(a=2, b=4) bound", "16")
                                  : fail("thomas(a=2, b=4) bound", to_string(bound) + " != 16"));
    }
    return out;
}

std::vector<CheckResult> positivity_suite(const SuiteOptions& o)
{
    std::vector<CheckResult> out;
    for (Family f : {Family::SimplestCubic, Family::Ennola, Family::Thomas}) {
        if (wants(o, f)) out.push_back(check_positivity(f, o.samples, o.seed));
    }
    return out;
}

std::vector<CheckResult> lemmas_suite(const SuiteOptions& o)
{
    if (o.window < 1) throw std::invalid_argument("lemma window must be positive");
    std::vector<CheckResult> out;
    if (wants(o, Family::SimplestCubic)) {
        std::vector<std::int64_t> mono = range(5, 9);
        std::vector<std::int64_t> orbit{3, 6, 9};
        if (o.a) mono = orbit = {*o.a};
        for (auto a : mono) out.push_back(check_lemma(simplest_norm_monotonicity(a)));
        for (auto a : orbit) out.push_back(check_lemma(simplest_orbit_properties(a)));
    }
    if (wants(o, Family::Thomas)) {
        std::vector<OrderParams> beta_orders;
        std::vector<OrderParams> descriptor_orders;
        if (o.a || o.b) {
            beta_orders = descriptor_orders = thomas_orders(o);
        } else {
            for (auto [a, b] : std::vector<std::pair<int, int>>{{3, 6}, {4, 7}, {5, 7}}) {
                beta_orders.push_back(OrderParams::thomas(a, b));
            }
            descriptor_orders = thomas_orders(o);
        }
        for (const auto& p : beta_orders) {
            out.push_back(check_lemma(thomas_beta_exclusion(p, o.window)));
            out.push_back(check_lemma(thomas_beta_smallest_conjugate(p, o.window)));
        }
        for (const auto& p : descriptor_orders) {
            out.push_back(check_lemma(thomas_descriptors_below_one(p)));
            out.push_back(check_lemma(thomas_norm_comparison(p)));
        }
    }
    return out;
}

} // namespace

std::vector<CheckResult> run_suite(const std::string& name, const SuiteOptions& o)
{
    if (name == "simplest") return simplest_suite(o);
    if (name == "ennola") return one_parameter_suite(ennola_orders(o));
    if (name == "thomas") return one_parameter_suite(thomas_orders(o));
    if (name == "witness") return witness_suite(o);
    if (name == "formulas") return formulas_suite(o);
    if (name == "positivity") return positivity_suite(o);
    if (name == "lemmas") return lemmas_suite(o);
    if (name == "all") {
        SuiteOptions base = o;
        base.a.reset();
        base.b.reset();
        base.a_max.reset();
        std::vector<CheckResult> out;
        if (wants(o, Family::SimplestCubic)) append(out, simplest_suite(base));
        if (wants(o, Family::Ennola)) append(out, one_parameter_suite(ennola_orders(base)));
        if (wants(o, Family::Thomas)) append(out, one_parameter_suite(thomas_orders(base)));
        if (wants(o, Family::Thomas)) append(out, witness_suite(base));
        append(out, formulas_suite(base));
        append(out, positivity_suite(base));
        append(out, lemmas_suite(base));
        return out;
    }
    throw std::invalid_argument("unknown suite '" + name + "'");
}

} // namespace indec
