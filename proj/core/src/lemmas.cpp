#include "indec/lemmas.hpp"

#include "indec/embeddings.hpp"
#include "indec/indecomposable.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace indec {

namespace {

Integer big(std::int64_t x) { return Integer(static_cast<long>(x)); }

std::string tuple(std::initializer_list<std::int64_t> xs)
{
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (auto x : xs) {
        if (!first) os << ",";
        os << x;
        first = false;
    }
    os << ")";
    return os.str();
}

// Sign of (x - 1) at the smallest root.
int smallest_conjugate_minus_one(const OrderElement& x)
{
    return conjugate_signs(x - OrderElement::one(x.params()))[0];
}

} // namespace

void LemmaReport::check(bool ok, const std::string& witness)
{
    ++cases;
    if (!ok) counterexamples.push_back(witness);
}

OrderElement thomas_beta(const OrderParams& p, const Integer& t, const Integer& v2, const Integer& v3)
{
    const Integer a = big(p.a());
    const Integer b = big(p.b());
    const Integer m = b - a + 1;
    return {p, {Integer(t - m * v2 - m * b * v3), v2, v3}};
}

LemmaReport simplest_norm_monotonicity(std::int64_t a)
{
    LemmaReport r{"simplest norm monotonicity a=" + std::to_string(a), 0, {}};
    if (a < 5) return r;
    const OrderParams p = OrderParams::simplest(a);
    const std::int64_t a0 = a % 3;
    const std::int64_t A = (a - a0) / 3;
    auto N = [&](std::int64_t v, std::int64_t W) { return norm(descriptor_to_element(IndecDescriptor::simplest_vW(p, v, W))); };

    for (std::int64_t v = 0; v <= A - 1; ++v) {
        for (std::int64_t W = v + 1; W <= 3 * A + a0 - 2 * v - 3; ++W) {
            r.check(N(v, W) < N(v + 1, W), "part1 (a,v,W)=" + tuple({a, v, W}));
        }
        r.check(N(v, v) < N(v + 1, v + 1), "part2 (a,v)=" + tuple({a, v}));
    }
    for (std::int64_t v = 0; v <= A - 2; ++v) {
        r.check(N(v, a - 2 * v - 1) < N(v + 1, a - 2 * (v + 1) - 1), "part3 (a,v)=" + tuple({a, v}));
        r.check(N(v, a - 2 * v - 2) < N(v + 1, a - 2 * (v + 1) - 2), "part4 (a,v)=" + tuple({a, v}));
    }
    return r;
}

LemmaReport simplest_orbit_properties(std::int64_t a)
{
    LemmaReport r{"simplest orbit maps a=" + std::to_string(a), 0, {}};
    const OrderParams p = OrderParams::simplest(a);
    const TriangleSets sets = triangle_sets(a);
    const std::set<IndecDescriptor> full(sets.full.begin(), sets.full.end());
    const std::set<IndecDescriptor> fundamental(sets.fundamental.begin(), sets.fundamental.end());
    const OrderElement u = standard_unit_pair(p).second;
    const OrderElement rho2 = OrderElement::rho(p) * OrderElement::rho(p);

    r.check(full.size() == static_cast<std::size_t>((a + 1) * (a + 2) / 2), "size of full set");
    for (const auto& d : sets.full) {
        const std::string tag = "(a,v,W)=" + tuple({a, d.v, d.big_w()});
        const IndecDescriptor d1 = t1(d);
        const IndecDescriptor d2 = t2(d);
        r.check(full.count(d1) == 1 && full.count(d2) == 1, "closure " + tag);
        r.check(t1(t1(d1)) == d, "t1^3 = id " + tag);
        r.check(t1(d1) == d2, "t2 = t1^2 " + tag);
        const bool fixed = d1 == d && d2 == d;
        const bool predicted = a % 3 == 0 && d.v == a / 3 && d.big_w() == a / 3;
        r.check(fixed == predicted, "fixed point " + tag);
        r.check(fundamental.count(d) + fundamental.count(d1) + fundamental.count(d2) >= 1, "coverage " + tag);
        if (fundamental.count(d) && !predicted) {
            r.check(fundamental.count(d1) == 0 && fundamental.count(d2) == 0, "exclusivity " + tag);
        }
        const OrderElement x = descriptor_to_element(d);
        const OrderElement x1 = descriptor_to_element(d1);
        const OrderElement x2 = descriptor_to_element(d2);
        const OrderElement s1 = galois_conjugate(x);
        r.check(s1 * u == x1, "t1 = conjugate times unit " + tag);
        r.check(galois_conjugate(s1) * rho2 == x2, "t2 = second conjugate times rho^2 " + tag);
        r.check(norm(x1) == norm(x) && norm(x2) == norm(x), "norm invariance " + tag);
    }
    return r;
}

LemmaReport thomas_beta_exclusion(const OrderParams& p, std::int64_t window)
{
    LemmaReport r{"thomas beta exclusion " + p.describe(), 0, {}};
    const std::int64_t a = p.a();
    const std::int64_t b = p.b();
    for (std::int64_t t = 1; t <= b - a; ++t) {
        for (std::int64_t v2 = -window; v2 <= window; ++v2) {
            for (std::int64_t v3 = -window; v3 <= window; ++v3) {
                int part = 0;
                if (v2 == 0 && v3 != 0) part = 1;
                else if (v2 < 0 && v3 < 0) part = 2;
                else if (v2 > 0 && v3 >= 0) part = 3;
                else if (v2 < 0 && v3 >= 0 && b <= 2 * a - 3) part = 4;
                if (part == 0) continue;
                const OrderElement beta = thomas_beta(p, big(t), big(v2), big(v3));
                r.check(!is_totally_positive(beta),
                        "part" + std::to_string(part) + " (a,b,t,v2,v3)=" + tuple({a, b, t, v2, v3}));
            }
        }
    }
    return r;
}

LemmaReport thomas_beta_smallest_conjugate(const OrderParams& p, std::int64_t window)
{
    LemmaReport r{"thomas beta smallest conjugate " + p.describe(), 0, {}};
    const std::int64_t a = p.a();
    const std::int64_t b = p.b();
    const bool excluded = (a == 2 && b == 4) || (a == 2 && b == 5) || (a == 3 && b == 5);
    if (b < 2 * a - 2 || excluded) return r;
    for (std::int64_t t = 1; t <= b - a; ++t) {
        for (std::int64_t v2 = -window; v2 < 0; ++v2) {
            for (std::int64_t v3 = 0; v3 <= window; ++v3) {
                const OrderElement beta = thomas_beta(p, big(t), big(v2), big(v3));
                if (!is_totally_positive(beta)) continue;
                r.check(smallest_conjugate_minus_one(beta) > 0, "(a,b,t,v2,v3)=" + tuple({a, b, t, v2, v3}));
            }
        }
    }
    return r;
}

LemmaReport thomas_descriptors_below_one(const OrderParams& p)
{
    LemmaReport r{"thomas descriptors below one " + p.describe(), 0, {}};
    for (const auto& d : closed_form_indecomposables(p)) {
        r.check(smallest_conjugate_minus_one(descriptor_to_element(d)) < 0,
                "(a,b,v,w)=" + tuple({p.a(), p.b(), d.v, d.w}));
    }
    return r;
}

LemmaReport thomas_norm_comparison(const OrderParams& p)
{
    LemmaReport r{"thomas norm comparison " + p.describe(), 0, {}};
    const std::int64_t a = p.a();
    const std::int64_t b = p.b();
    if (a == 2 && b == 4) return r;
    const std::int64_t A = a / 2;
    const std::int64_t l0 = (b - a) % 2;
    const std::int64_t L = (b - a - l0) / 2;
    auto N = [&](std::int64_t v, std::int64_t W) { return norm(descriptor_to_element(IndecDescriptor::thomas_vW(p, v, W))); };
    auto tag = [&](const char* part, std::int64_t v, std::int64_t W) {
        return std::string(part) + " (a,b,v,W)=" + tuple({a, b, v, W});
    };

    for (std::int64_t v = 0; v <= b - a - 2; ++v) {
        for (std::int64_t W = 0; W <= a - 2; ++W) r.check(N(v, W) < N(v, W + 1), tag("part1", v, W));
    }
    const std::int64_t top = b - a - 1;
    if (a != 2) {
        for (std::int64_t W = 0; W <= A; ++W) r.check(N(top, W) < N(top, W + 1), tag("part2a", top, W));
        for (std::int64_t W = A + 1; W <= a - 1; ++W) {
            if (top >= 1) r.check(N(top, W) < N(top - 1, W), tag("part2b", top, W));
        }
    } else if (b - 4 >= 0) {
        r.check(N(b - 3, 0) < N(b - 3, 1), tag("part3", b - 3, 0));
        r.check(N(b - 3, 1) < N(b - 4, 1), tag("part3", b - 3, 1));
    }
    const std::int64_t v_end = l0 == 0 ? L - 2 : L - 1;
    if (l0 == 1 || L >= 2) {
        for (std::int64_t v = 0; v <= v_end; ++v) r.check(N(v, a - 1) < N(v + 1, a - 1), tag("part4", v, a - 1));
    }
    return r;
}

} // namespace indec
