#include "indec/indecomposable.hpp"

#include "indec/embeddings.hpp"
#include "indec/lattice.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace indec {

namespace {

Integer big(std::int64_t x) { return Integer(static_cast<long>(x)); }

void sort_unique(std::vector<OrderElement>& v)
{
    std::sort(v.begin(), v.end(), [](const OrderElement& x, const OrderElement& y) { return lex_less(x, y); });
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

const IndecDescriptor& require_simplest_vw(const IndecDescriptor& d)
{
    if (d.params.family() != Family::SimplestCubic || d.kind != DescriptorKind::VW || !d.valid()) {
        throw DescriptorError("orbit maps apply to simplest-cubic descriptors alpha(v, W) only");
    }
    return d;
}

} // namespace

IndecDescriptor IndecDescriptor::one_plus_rho_plus_rho_sq(const OrderParams& p)
{
    IndecDescriptor d{p, DescriptorKind::OnePlusRhoPlusRhoSq};
    if (!d.valid()) throw DescriptorError("1+rho+rho^2 is a simplest-cubic descriptor");
    return d;
}

IndecDescriptor IndecDescriptor::ennola_w(const OrderParams& p, std::int64_t w)
{
    IndecDescriptor d{p, DescriptorKind::W, 0, w};
    if (!d.valid()) throw DescriptorError("Ennola descriptor requires 1 <= w <= a-1");
    return d;
}

IndecDescriptor IndecDescriptor::vw(const OrderParams& p, std::int64_t v, std::int64_t w)
{
    IndecDescriptor d{p, DescriptorKind::VW, v, w};
    if (!d.valid()) throw DescriptorError("(v, w) outside the descriptor range for " + p.describe());
    return d;
}

IndecDescriptor IndecDescriptor::simplest_vW(const OrderParams& p, std::int64_t v, std::int64_t W)
{
    if (p.family() != Family::SimplestCubic) throw DescriptorError("alpha(v, W) here is a simplest-cubic descriptor");
    return vw(p, v, v * (p.a() + 2) + 1 + W);
}

IndecDescriptor IndecDescriptor::thomas_vW(const OrderParams& p, std::int64_t v, std::int64_t W)
{
    if (p.family() != Family::Thomas) throw DescriptorError("alpha(v, W) here is a Thomas descriptor");
    return vw(p, v, p.a() * v + W);
}

std::int64_t IndecDescriptor::big_w() const
{
    if (kind != DescriptorKind::VW) throw DescriptorError("W is defined for (v, w) descriptors only");
    if (params.family() == Family::SimplestCubic) return w - v * (params.a() + 2) - 1;
    return w - params.a() * v;
}

bool IndecDescriptor::valid() const
{
    const std::int64_t a = params.a();
    const std::int64_t b = params.b();
    switch (kind) {
    case DescriptorKind::One: return true;
    case DescriptorKind::OnePlusRhoPlusRhoSq: return params.family() == Family::SimplestCubic;
    case DescriptorKind::W: return params.family() == Family::Ennola && w >= 1 && w <= a - 1;
    case DescriptorKind::VW:
        if (params.family() == Family::SimplestCubic) {
            return v >= 0 && v <= a && w >= v * (a + 2) + 1 && w <= (v + 1) * (a + 1);
        }
        if (params.family() == Family::Thomas) {
            return v >= 0 && v <= b - a - 1 && w >= v * a && w <= (v + 1) * a - 1;
        }
        return false;
    }
    return false;
}

std::string IndecDescriptor::label() const
{
    std::ostringstream os;
    switch (kind) {
    case DescriptorKind::One: os << "1"; break;
    case DescriptorKind::OnePlusRhoPlusRhoSq: os << "1+rho+rho^2"; break;
    case DescriptorKind::W: os << "w=" << w; break;
    case DescriptorKind::VW: os << "v=" << v << ",w=" << w; break;
    }
    return os.str();
}

UnitPair standard_unit_pair(const OrderParams& p)
{
    const OrderElement rho = OrderElement::rho(p);
    const long a = static_cast<long>(p.a());
    switch (p.family()) {
    case Family::Thomas: {
        const OrderElement shifted = rho - OrderElement(p, a, 0, 0);
        return {rho, rho * shifted * shifted};
    }
    case Family::SimplestCubic: {
        const OrderElement u(p, {Integer(-a - 1), Integer(-(big(a) * a + 3 * a + 3)), Integer(a + 2)});
        return {rho * rho, u};
    }
    case Family::Ennola: {
        const OrderElement shifted = rho - OrderElement::one(p);
        return {rho * rho, rho * shifted};
    }
    }
    throw ParameterError("unknown family");
}

std::vector<OrderElement> parallelepiped_points(const OrderElement& e0, const OrderElement& e1,
                                                const OrderElement& e2)
{
    const OrderParams& p = e0.params();
    detail::Mat3<Integer> m;
    const OrderElement* cols[3] = {&e0, &e1, &e2};
    for (int j = 0; j < 3; ++j) {
        for (int i = 0; i < 3; ++i) m[i][j] = (*cols[j])[i];
    }
    const Integer det = detail::determinant(m);
    if (det == 0) throw DegeneracyError("parallelepiped spanning vectors are linearly dependent");
    const auto adj = detail::adjugate(m);
    const Integer abs_det = abs(det);
    const int det_sign = sgn(det);

    std::array<Integer, 3> lo, hi;
    for (int i = 0; i < 3; ++i) {
        lo[i] = 0;
        hi[i] = 0;
        for (int j = 0; j < 3; ++j) {
            if (m[i][j] < 0) lo[i] += m[i][j];
            else hi[i] += m[i][j];
        }
    }

    std::vector<OrderElement> out;
    detail::Vec3<Integer> x;
    for (x[0] = lo[0]; x[0] <= hi[0]; ++x[0]) {
        for (x[1] = lo[1]; x[1] <= hi[1]; ++x[1]) {
            for (x[2] = lo[2]; x[2] <= hi[2]; ++x[2]) {
                if (x[0] == 0 && x[1] == 0 && x[2] == 0) continue;
                bool inside = true;
                for (int j = 0; j < 3 && inside; ++j) {
                    Integer t = adj[j][0] * x[0] + adj[j][1] * x[1] + adj[j][2] * x[2];
                    if (det_sign < 0) t = -t;
                    inside = t >= 0 && t <= abs_det;
                }
                if (inside) out.emplace_back(p, Coords{x[0], x[1], x[2]});
            }
        }
    }
    return out;
}

std::vector<OrderElement> parallelepiped_candidates(const OrderParams& params, const UnitPair& pair)
{
    for (const OrderElement* e : {&pair.first, &pair.second}) {
        if (!(e->params() == params) || !is_unit(*e) || !is_totally_positive(*e)) {
            throw PreconditionError("unit pair must consist of totally positive units of " + params.describe());
        }
    }
    const OrderElement one = OrderElement::one(params);
    std::vector<OrderElement> out = parallelepiped_points(one, pair.first, pair.second);
    std::vector<OrderElement> second =
        parallelepiped_points(one, pair.first, pair.first * inverse_unit(pair.second));
    out.insert(out.end(), second.begin(), second.end());
    sort_unique(out);
    return out;
}

std::optional<std::pair<OrderElement, OrderElement>> find_decomposition(const OrderElement& x)
{
    if (!is_totally_positive(x)) throw PreconditionError("indecomposability is defined for totally positive elements");
    const OrderParams& p = x.params();
    const auto conj = certified_embedding(x);
    const std::array<RationalInterval, 3> targets{RationalInterval(Rational(0), conj[0].hi()),
                                                  RationalInterval(Rational(0), conj[1].hi()),
                                                  RationalInterval(Rational(0), conj[2].hi())};
    std::optional<std::pair<OrderElement, OrderElement>> found;
    for_each_lattice_point(targets, *cached_enclosures(p), [&](const Coords& c) {
        OrderElement y(p, c);
        if (y.is_zero() || y == x) return true;
        if (!is_totally_positive(y)) return true;
        OrderElement z = x - y;
        if (!is_totally_positive(z)) return true;
        found.emplace(std::move(y), std::move(z));
        return false;
    });
    return found;
}

bool is_indecomposable(const OrderElement& x) { return !find_decomposition(x).has_value(); }

std::vector<IndecDescriptor> closed_form_indecomposables(const OrderParams& p)
{
    std::vector<IndecDescriptor> out;
    const std::int64_t a = p.a();
    switch (p.family()) {
    case Family::SimplestCubic:
        out.push_back(IndecDescriptor::one(p));
        out.push_back(IndecDescriptor::one_plus_rho_plus_rho_sq(p));
        for (std::int64_t v = 0; v <= a; ++v) {
            for (std::int64_t w = v * (a + 2) + 1; w <= (v + 1) * (a + 1); ++w) out.push_back(IndecDescriptor::vw(p, v, w));
        }
        break;
    case Family::Ennola:
        out.push_back(IndecDescriptor::one(p));
        for (std::int64_t w = 1; w <= a - 1; ++w) out.push_back(IndecDescriptor::ennola_w(p, w));
        break;
    case Family::Thomas:
        for (std::int64_t v = 0; v <= p.b() - a - 1; ++v) {
            for (std::int64_t w = v * a; w <= (v + 1) * a - 1; ++w) out.push_back(IndecDescriptor::vw(p, v, w));
        }
        break;
    }
    return out;
}

OrderElement descriptor_to_element(const IndecDescriptor& d)
{
    if (!d.valid()) throw DescriptorError("descriptor " + d.label() + " is outside its range for " + d.params.describe());
    const OrderParams& p = d.params;
    const Integer v = big(d.v);
    const Integer w = big(d.w);
    switch (d.kind) {
    case DescriptorKind::One: return OrderElement::one(p);
    case DescriptorKind::OnePlusRhoPlusRhoSq: return {p, 1, 1, 1};
    case DescriptorKind::W: return {p, {Integer(1), w, Integer(1)}};
    case DescriptorKind::VW:
        if (p.family() == Family::SimplestCubic) return {p, {Integer(-v), Integer(-w), Integer(v + 1)}};
        return {p, {Integer(-v), Integer(big(p.b()) * w + 1), Integer(-w)}};
    }
    throw DescriptorError("unknown descriptor kind");
}

IndecDescriptor t1(const IndecDescriptor& d)
{
    require_simplest_vw(d);
    const std::int64_t W = d.big_w();
    return IndecDescriptor::simplest_vW(d.params, W, d.params.a() - d.v - W);
}

IndecDescriptor t2(const IndecDescriptor& d)
{
    require_simplest_vw(d);
    const std::int64_t W = d.big_w();
    return IndecDescriptor::simplest_vW(d.params, d.params.a() - d.v - W, d.v);
}

TriangleSets triangle_sets(std::int64_t a)
{
    const OrderParams p = OrderParams::simplest(a);
    TriangleSets sets;
    for (std::int64_t v = 0; v <= a; ++v) {
        for (std::int64_t W = 0; W <= a - v; ++W) sets.full.push_back(IndecDescriptor::simplest_vW(p, v, W));
    }
    // a = 3A + a0 with a0 in {0, 1, 2}
    const std::int64_t a0 = ((a % 3) + 3) % 3;
    const std::int64_t A = (a - a0) / 3;
    const std::int64_t v_max = a0 == 0 ? A - 1 : A;
    for (std::int64_t v = 0; v <= v_max; ++v) {
        for (std::int64_t W = v; W <= a - 2 * v - 1; ++W) sets.fundamental.push_back(IndecDescriptor::simplest_vW(p, v, W));
    }
    if (a0 == 0 && A >= 0) sets.fundamental.push_back(IndecDescriptor::simplest_vW(p, A, A));
    std::sort(sets.fundamental.begin(), sets.fundamental.end());
    return sets;
}

bool same_unit_class(const OrderElement& x, const OrderElement& y)
{
    if (x.is_zero() || y.is_zero()) return x == y;
    if (norm(x) != norm(y)) return false;
    auto q = exact_quotient(x, y);
    return q && is_unit(*q) && is_totally_positive(*q);
}

std::vector<OrderElement> dedup_up_to_units(const std::vector<OrderElement>& elems, const OrderParams& params)
{
    std::vector<OrderElement> sorted;
    sorted.reserve(elems.size());
    for (const auto& e : elems) {
        if (!(e.params() == params)) throw IncompatibleOrderError("dedup input from a different order");
        sorted.push_back(e);
    }
    sort_unique(sorted);

    // Equal norms are necessary for equivalence, so classes are searched per norm.
    std::map<Integer, std::vector<OrderElement>> reps_by_norm;
    std::vector<OrderElement> reps;
    for (const auto& e : sorted) {
        auto& bucket = reps_by_norm[norm(e)];
        const bool known = std::any_of(bucket.begin(), bucket.end(),
                                       [&](const OrderElement& r) { return same_unit_class(e, r); });
        if (!known) {
            bucket.push_back(e);
            reps.push_back(e);
        }
    }
    return reps;
}

std::vector<OrderElement> indecomposable_classes(const OrderParams& params)
{
    std::vector<OrderElement> indecomposables;
    for (const auto& c : parallelepiped_candidates(params, standard_unit_pair(params))) {
        if (is_indecomposable(c)) indecomposables.push_back(c);
    }
    return dedup_up_to_units(indecomposables, params);
}

std::vector<OrderElement> indecomposables_below(const OrderParams& params, const Integer& cap)
{
    const RationalInterval box(Rational(0), Rational(cap));
    std::vector<OrderElement> out;
    for_each_lattice_point({box, box, box}, *cached_enclosures(params), [&](const Coords& c) {
        OrderElement x(params, c);
        if (!x.is_zero() && is_totally_positive(x) && is_indecomposable(x)) out.push_back(std::move(x));
        return true;
    });
    return out;
}

bool covered_by(const std::vector<OrderElement>& xs, const std::vector<OrderElement>& reps)
{
    return std::all_of(xs.begin(), xs.end(), [&](const OrderElement& e) {
        return std::any_of(reps.begin(), reps.end(), [&](const OrderElement& r) { return same_unit_class(e, r); });
    });
}

bool same_classes(const std::vector<OrderElement>& x, const std::vector<OrderElement>& y)
{
    return covered_by(x, y) && covered_by(y, x);
}

} // namespace indec
