#include "indec/bounds.hpp"

#include "indec/codifferent.hpp"

#include <algorithm>
#include <sstream>

namespace indec {

namespace {

Integer big(std::int64_t x) { return Integer(static_cast<long>(x)); }

struct Split {
    Integer q; // quotient
    Integer r; // remainder in [0, d)
};

Split split(std::int64_t x, std::int64_t d)
{
    std::int64_t r = ((x % d) + d) % d;
    return {big((x - r) / d), big(r)};
}

} // namespace

Integer norm_formula_simplest(std::int64_t v_, std::int64_t W_, std::int64_t a)
{
    const auto [A, a0] = split(a, 3);
    const Integer v = big(v_);
    const Integer W = big(W_);
    const Integer A2 = A * A;
    const Integer a02 = a0 * a0;
    const Integer v2 = v * v;
    const Integer W2 = W * W;
    return 3 + 6 * A + 2 * a0 + 9 * A * v + 9 * A2 * v + 3 * a0 * v + 6 * A * a0 * v + a02 * v - 3 * v2 -
           6 * A * v2 - 2 * a0 * v2 + v2 * v + 9 * A * W + 3 * a0 * W - 3 * v * W + 3 * A * v * W +
           9 * A2 * v * W + a0 * v * W + 6 * A * a0 * v * W + a02 * v * W - 3 * A * v2 * W - a0 * v2 * W -
           3 * W2 + 3 * A * W2 + a0 * W2 - 3 * v * W2 - 3 * A * v * W2 - a0 * v * W2 - W2 * W;
}

Integer norm_formula_ennola(std::int64_t w_, std::int64_t a_)
{
    const Integer a = big(a_);
    const Integer w = big(w_);
    return 2 * a * a + 2 * a + 1 + (a * a - 3 * a - 2) * w - (2 * a - 1) * w * w + w * w * w;
}

Integer norm_formula_thomas(std::int64_t v_, std::int64_t W_, std::int64_t a_, std::int64_t b_)
{
    const Integer a = big(a_);
    const Integer b = big(b_);
    const Integer v = big(v_);
    const Integer W = big(W_);
    return 1 - a * a * v + a * b * v - 2 * a * v * v + b * v * v - v * v * v - a * W + 2 * b * W - 3 * v * W -
           a * a * b * v * W + a * b * b * v * W - a * b * v * v * W - a * b * W * W + b * b * W * W -
           a * v * W * W - b * v * W * W - W * W * W;
}

Integer norm_formula(const IndecDescriptor& d)
{
    const OrderParams& p = d.params;
    switch (d.kind) {
    case DescriptorKind::One: return 1;
    case DescriptorKind::OnePlusRhoPlusRhoSq: {
        const Integer a = big(p.a());
        return a * a + 3 * a + 9;
    }
    case DescriptorKind::W: return norm_formula_ennola(d.w, p.a());
    case DescriptorKind::VW:
        if (p.family() == Family::SimplestCubic) return norm_formula_simplest(d.v, d.big_w(), p.a());
        return norm_formula_thomas(d.v, d.big_w(), p.a(), p.b());
    }
    throw DescriptorError("unknown descriptor kind");
}

NormBound norm_bound_detail(const OrderParams& p)
{
    const std::int64_t a_ = p.a();
    const Integer a = big(a_);
    switch (p.family()) {
    case Family::SimplestCubic: {
        if (a_ <= 3) return {a * a + 3 * a + 9};
        const auto [A, a0] = split(a_, 3);
        const Integer A2 = A * A, A3 = A2 * A, A4 = A3 * A;
        if (a0 == 2) return {3 * A4 + 14 * A3 + 28 * A2 + 27 * A + 11};
        if (a0 == 1) return {3 * A4 + 10 * A3 + 16 * A2 + 13 * A + 5};
        return {3 * A4 + 6 * A3 + 9 * A2 + 6 * A + 3};
    }
    case Family::Ennola: {
        if (a_ <= 4) return {3 * a * a - 3 * a + 1};
        const auto [A, a0] = split(a_, 3);
        const Integer A2 = A * A, A3 = A2 * A;
        if (a0 == 2) return {4 * A3 + 18 * A2 + 26 * A + 13};
        if (a0 == 1) return {4 * A3 + 14 * A2 + 16 * A + 7};
        return {4 * A3 + 10 * A2 + 8 * A + 3};
    }
    case Family::Thomas: {
        const std::int64_t b_ = p.b();
        if (a_ == 2 && b_ == 4) return {16};
        const auto [Lq, l0] = split(b_ - a_, 2);
        const Integer& L = Lq;
        const std::int64_t L_ = L.get_si();
        const Integer L2 = L * L, L3 = L2 * L;
        const Integer a2 = a * a, a3 = a2 * a;
        if (l0 == 0 && L_ >= 1 && L_ <= a_ - 2) {
            return {L2 * a3 + (2 * L3 + L2 + 1) * a2 - (2 * L3 + 3 * L2 + L) * a + L3 + L2};
        }
        if (l0 == 1 && L_ >= 1 && L_ <= a_ + 1) {
            return {(L2 + L) * a3 + (2 * L3 + 4 * L2 + 3 * L + 3) * a2 - (2 * L3 + 6 * L2 + 5 * L + 3) * a + L3 +
                    3 * L2 + 2 * L + 1};
        }
        const std::int64_t v_lo = l0 == 0 ? L_ - 1 : L_;
        const std::int64_t v_hi = l0 == 0 ? 2 * L_ - 1 : 2 * L_;
        Integer best = norm_formula_thomas(v_lo, a_ - 1, a_, b_);
        for (std::int64_t v = v_lo + 1; v <= v_hi; ++v) best = std::max(best, norm_formula_thomas(v, a_ - 1, a_, b_));
        return {best, false};
    }
    }
    throw ParameterError("unknown family");
}

Integer norm_bound(const OrderParams& p) { return norm_bound_detail(p).value; }

BoundReport bound_report(const OrderParams& p)
{
    const auto descriptors = closed_form_indecomposables(p);
    const NormBound claimed = norm_bound_detail(p);
    const IndecDescriptor* best = nullptr;
    Integer best_norm;
    for (const auto& d : descriptors) {
        Integer n = norm(descriptor_to_element(d));
        if (best == nullptr || n > best_norm) {
            best = &d;
            best_norm = n;
        }
    }
    return {p, claimed.value, best_norm, *best, claimed.closed_form, claimed.value == best_norm};
}

std::int64_t min_trace_formula_thomas(std::int64_t v, std::int64_t w, std::int64_t a, std::int64_t b)
{
    return std::min(b - a - v + 1, w - a * v + 1);
}

std::int64_t min_trace_cap_thomas(std::int64_t a, std::int64_t b) { return std::min(b - a + 1, a); }

std::int64_t min_trace_upper(const IndecDescriptor& d)
{
    if (d.params.family() == Family::Thomas && d.kind == DescriptorKind::VW) {
        return min_trace_formula_thomas(d.v, d.w, d.params.a(), d.params.b());
    }
    return 2;
}

LargeMinTraceWitness witness_large_min_trace(std::int64_t n, bool confirm)
{
    if (n < 1) throw std::invalid_argument("witness requires n >= 1");
    const OrderParams p = OrderParams::thomas(n + 1, 2 * n + 2);
    const IndecDescriptor d = IndecDescriptor::vw(p, 0, p.a() - 1);
    LargeMinTraceWitness w{p, d, min_trace_formula_thomas(d.v, d.w, p.a(), p.b()), std::nullopt};
    if (confirm) w.confirmed = min_trace(descriptor_to_element(d), min_trace_cap_thomas(p.a(), p.b()));
    return w;
}

std::string FormulaMismatch::describe() const
{
    std::ostringstream os;
    os << descriptor.params.describe() << " " << descriptor.label() << ": formula " << formula << " != norm "
       << oracle;
    return os.str();
}

std::optional<FormulaMismatch> check_norm_formula(const std::vector<IndecDescriptor>& descriptors,
                                                  const NormFormula& formula)
{
    for (const auto& d : descriptors) {
        Integer f = formula(d);
        Integer n = norm(descriptor_to_element(d));
        if (f != n) return FormulaMismatch{d, f, n};
    }
    return std::nullopt;
}

} // namespace indec
