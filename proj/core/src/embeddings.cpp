#include "indec/embeddings.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <vector>

namespace indec {

namespace {

Rational power_of_two(int exponent)
{
    Rational r(1);
    if (exponent >= 0) {
        mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(exponent));
    } else {
        mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-exponent));
    }
    return r;
}

int sign_at(const MinimalPoly& f, const Rational& x) { return sgn(f.eval(x)); }

bool brackets_root(const MinimalPoly& f, const RationalInterval& iv)
{
    const int s_lo = sign_at(f, iv.lo());
    const int s_hi = sign_at(f, iv.hi());
    return s_lo != 0 && s_hi != 0 && s_lo != s_hi;
}

RationalInterval bisect_to(const MinimalPoly& f, RationalInterval iv, const Rational& width)
{
    Rational lo = iv.lo();
    Rational hi = iv.hi();
    const int s_lo = sign_at(f, lo);
    while (hi - lo > width) {
        Rational mid = (lo + hi) / 2;
        const int s = sign_at(f, mid);
        if (s == 0) throw InvariantViolation("minimal polynomial has a rational root");
        if (s == s_lo) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return {lo, hi};
}

std::array<RationalInterval, 3> scan_brackets(const MinimalPoly& f)
{
    Integer bound = 1 + std::max({Integer(abs(f.c0)), Integer(abs(f.c1)), Integer(abs(f.c2))});
    const Rational lo(-bound);
    const Rational hi(bound);
    Rational step(1);
    for (int attempt = 0; attempt < 80; ++attempt, step /= 2) {
        std::vector<RationalInterval> found;
        Rational prev = lo;
        int prev_sign = sign_at(f, prev);
        for (Rational x = lo + step; x <= hi; x += step) {
            const int s = sign_at(f, x);
            if (s == 0) throw InvariantViolation("minimal polynomial has a rational root");
            if (s != prev_sign) found.emplace_back(prev, x);
            prev = x;
            prev_sign = s;
        }
        if (found.size() == 3) return {found[0], found[1], found[2]};
    }
    throw InvariantViolation("could not separate the three real roots");
}

std::array<RationalInterval, 3> seeds(const OrderParams& p)
{
    const Integer a(static_cast<long>(p.a()));
    const Integer b(static_cast<long>(p.b()));
    switch (p.family()) {
    case Family::Ennola:
        return {RationalInterval(Rational(-a + Rational(1, a * a + a)), Rational(-a + Rational(1, a * a))),
                RationalInterval(Rational(-1, a), Rational(-1, a + 1)),
                RationalInterval(Rational(1 + Rational(1, a + 3)), Rational(1 + Rational(1, a + 2)))};
    case Family::Thomas:
        return {RationalInterval(Rational(1, a * b), Rational(1, a * b - 1)),
                RationalInterval(Rational(a - 1), Rational(a)),
                RationalInterval(Rational(b), Rational(b + 1))};
    case Family::SimplestCubic:
        break;
    }
    return scan_brackets(p.minimal_poly());
}

} // namespace

Rational default_enclosure_width() { return power_of_two(-32); }
Rational minimum_enclosure_width() { return power_of_two(-64); }

Rational RootEnclosures::max_width() const
{
    return std::max({intervals[0].width(), intervals[1].width(), intervals[2].width()});
}

RootEnclosures isolate_roots(const OrderParams& params, const Rational& width)
{
    if (sgn(width) <= 0) throw std::invalid_argument("enclosure width must be positive");
    const MinimalPoly& f = params.minimal_poly();
    auto brackets = seeds(params);
    for (std::size_t i = 0; i < 3; ++i) {
        if (!brackets_root(f, brackets[i])) {
            throw InvariantViolation("root bracket " + brackets[i].to_string() + " is not sign-certified for " +
                                     params.describe());
        }
        if (i > 0 && brackets[i - 1].hi() > brackets[i].lo()) {
            throw InvariantViolation("root brackets overlap for " + params.describe());
        }
    }
    RootEnclosures enc = refine(RootEnclosures{params, brackets}, width);
    // Scan brackets may share an endpoint; shrink until strictly separated.
    for (std::size_t i = 1; i < 3; ++i) {
        while (!(enc.intervals[i - 1].hi() < enc.intervals[i].lo())) {
            enc.intervals[i - 1] = bisect_to(f, enc.intervals[i - 1], enc.intervals[i - 1].width() / 2);
            enc.intervals[i] = bisect_to(f, enc.intervals[i], enc.intervals[i].width() / 2);
        }
    }
    return enc;
}

RootEnclosures refine(const RootEnclosures& enc, const Rational& width)
{
    RootEnclosures out = enc;
    for (auto& iv : out.intervals) {
        if (iv.width() > width) iv = bisect_to(enc.params.minimal_poly(), iv, width);
    }
    return out;
}

std::shared_ptr<const RootEnclosures> cached_enclosures(const OrderParams& params)
{
    static std::shared_mutex mutex;
    static std::map<OrderParams, std::shared_ptr<const RootEnclosures>> memo;
    {
        std::shared_lock lock(mutex);
        if (auto it = memo.find(params); it != memo.end()) return it->second;
    }
    auto enc = std::make_shared<const RootEnclosures>(isolate_roots(params, default_enclosure_width()));
    std::unique_lock lock(mutex);
    auto [it, inserted] = memo.emplace(params, std::move(enc));
    return it->second;
}

std::array<RationalInterval, 3> embed_interval(const OrderElement& x, const RootEnclosures& enc)
{
    if (!(x.params() == enc.params)) throw IncompatibleOrderError("enclosures belong to a different order");
    std::array<RationalInterval, 3> out;
    for (std::size_t i = 0; i < 3; ++i) {
        const RationalInterval& r = enc.intervals[i];
        out[i] = (x[1] * r + x[2] * r.square()) + Rational(x[0]);
    }
    return out;
}

std::array<int, 3> conjugate_signs(const OrderElement& x)
{
    if (x.is_zero()) return {0, 0, 0};
    return with_refinement(x.params(), [&](const RootEnclosures& enc) -> std::optional<std::array<int, 3>> {
        auto iv = embed_interval(x, enc);
        std::array<int, 3> s{iv[0].certified_sign(), iv[1].certified_sign(), iv[2].certified_sign()};
        if (s[0] == 0 || s[1] == 0 || s[2] == 0) return std::nullopt;
        return s;
    });
}

std::array<RationalInterval, 3> certified_embedding(const OrderElement& x)
{
    if (x.is_zero()) throw std::invalid_argument("zero has no sign-certified embedding");
    return with_refinement(x.params(),
                           [&](const RootEnclosures& enc) -> std::optional<std::array<RationalInterval, 3>> {
                               auto iv = embed_interval(x, enc);
                               for (const auto& c : iv) {
                                   if (c.certified_sign() == 0) return std::nullopt;
                               }
                               return iv;
                           });
}

std::array<RationalInterval, 3> derivative_at_roots(const RootEnclosures& enc)
{
    const MinimalPoly& f = enc.params.minimal_poly();
    std::array<RationalInterval, 3> out;
    for (std::size_t i = 0; i < 3; ++i) {
        const RationalInterval& r = enc.intervals[i];
        out[i] = (Integer(3) * r.square() + Integer(2 * f.c2) * r) + Rational(f.c1);
    }
    return out;
}

bool CoefficientBox::contains(const Coords& c) const
{
    for (std::size_t i = 0; i < 3; ++i) {
        if (c[i] < ranges[i].lo || c[i] > ranges[i].hi) return false;
    }
    return true;
}

Integer CoefficientBox::volume() const
{
    return ranges[0].size() * ranges[1].size() * ranges[2].size();
}

CoefficientBox coefficient_box(const std::array<RationalInterval, 3>& targets, const RootEnclosures& enc)
{
    const auto& r = enc.intervals;
    RationalInterval sum1(0), sum2(0), sum3(0);
    for (std::size_t i = 0; i < 3; ++i) {
        const std::size_t k = (i + 1) % 3;
        const std::size_t m = (i + 2) % 3;
        // Lagrange basis polynomial of root i: (X - r_k)(X - r_m) / ((r_i - r_k)(r_i - r_m)).
        const RationalInterval denom = (r[i] - r[k]) * (r[i] - r[m]);
        sum3 = sum3 + targets[i] / denom;
        sum2 = sum2 + (-(targets[i] * (r[k] + r[m]))) / denom;
        sum1 = sum1 + (targets[i] * (r[k] * r[m])) / denom;
    }
    CoefficientBox box;
    box.ranges[0] = {ceil_of(sum1.lo()), floor_of(sum1.hi())};
    box.ranges[1] = {ceil_of(sum2.lo()), floor_of(sum2.hi())};
    box.ranges[2] = {ceil_of(sum3.lo()), floor_of(sum3.hi())};
    return box;
}

CoefficientBox coefficient_box(const std::array<std::optional<RationalInterval>, 3>& targets,
                               const RootEnclosures& enc)
{
    if (!targets[0] || !targets[1] || !targets[2]) {
        CoefficientBox empty;
        for (auto& range : empty.ranges) range = {Integer(1), Integer(0)};
        return empty;
    }
    return coefficient_box(std::array<RationalInterval, 3>{*targets[0], *targets[1], *targets[2]}, enc);
}

} // namespace indec
