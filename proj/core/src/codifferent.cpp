#include "indec/codifferent.hpp"

#include "indec/embeddings.hpp"
#include "indec/indecomposable.hpp"
#include "indec/lattice.hpp"

#include <optional>

namespace indec {

namespace {

Integer big(std::int64_t x) { return Integer(static_cast<long>(x)); }

void require_thomas(const OrderParams& p)
{
    if (p.family() != Family::Thomas) {
        throw UnsupportedFamilyError("the named codifferent elements belong to the Thomas family");
    }
}

RationalCoords derivative_inverse(const OrderParams& p)
{
    return inverse(p, to_rational(derivative_element(p).coords()));
}

Rational rational_trace(const OrderParams& p, const RationalCoords& x) { return char_poly(p, x)[0]; }

} // namespace

OrderElement derivative_element(const OrderParams& p)
{
    const MinimalPoly& f = p.minimal_poly();
    return {p, {f.c1, Integer(2 * f.c2), Integer(3)}};
}

RationalCoords CodifferentElement::as_field_element() const
{
    const OrderParams& p = params();
    return mul(p, to_rational(num.coords()), derivative_inverse(p));
}

Integer pairing_trace(const CodifferentElement& delta, const OrderElement& alpha)
{
    const OrderParams& p = delta.params();
    if (!(p == alpha.params())) throw IncompatibleOrderError("pairing across different orders");
    const RationalCoords product = mul(p, to_rational((alpha * delta.num).coords()), derivative_inverse(p));
    const Rational tr = rational_trace(p, product);
    if (tr.get_den() != 1) {
        throw InvariantViolation("non-integral codifferent trace " + tr.get_str() + " for " + p.describe());
    }
    return tr.get_num();
}

Integer trace(const CodifferentElement& delta) { return pairing_trace(delta, OrderElement::one(delta.params())); }

bool is_totally_positive_codiff(const CodifferentElement& delta)
{
    const auto e = char_poly(delta.params(), delta.as_field_element());
    return sgn(e[0]) > 0 && sgn(e[1]) > 0 && sgn(e[2]) > 0;
}

CodifferentElement delta_v(const OrderParams& p)
{
    require_thomas(p);
    const Integer a = big(p.a());
    return {OrderElement(p, {Integer(a * a - a), Integer(-(2 * a - 1)), Integer(1)})};
}

CodifferentElement delta_w(const OrderParams& p)
{
    require_thomas(p);
    const Integer a = big(p.a());
    const Integer b = big(p.b());
    return {OrderElement(p, {Integer(a * a * b - a - 1), Integer(-(a * b + a * a - 1)), a})};
}

CodifferentElement delta_t(const OrderParams& p, const Integer& t, std::int64_t v, std::int64_t w, const Integer& k,
                           const Integer& l)
{
    require_thomas(p);
    if (!IndecDescriptor{p, DescriptorKind::VW, v, w}.valid()) {
        throw DescriptorError("delta_t requires (v, w) in the Thomas descriptor range");
    }
    const Integer a = big(p.a());
    const Integer b = big(p.b());
    const Integer V = big(v);
    const Integer W = big(w);
    return {OrderElement(p, {Integer(-a * t - a * (V - b) * l + (1 - a * W) * k),
                             Integer(t + (V - b - a) * l + W * k), l})};
}

MinTrace min_trace_with_witness(const OrderElement& alpha, std::int64_t upper)
{
    if (!is_totally_positive(alpha)) throw PreconditionError("min_trace requires a totally positive element");
    if (upper < 1) throw std::invalid_argument("min_trace upper bound must be >= 1");
    const OrderParams& p = alpha.params();

    // Tr(alpha gamma / f') is linear in the numerator gamma.
    std::array<Integer, 3> functional;
    for (int j = 0; j < 3; ++j) {
        Coords basis{Integer(0), Integer(0), Integer(0)};
        basis[j] = 1;
        functional[j] = pairing_trace({OrderElement(p, basis)}, alpha);
    }

    struct Bounds {
        RootEnclosures enc;
        std::array<RationalInterval, 3> alpha_conj;
        std::array<RationalInterval, 3> derivative;
    };
    const Bounds bounds = with_refinement(p, [&](const RootEnclosures& enc) -> std::optional<Bounds> {
        Bounds b{enc, embed_interval(alpha, enc), derivative_at_roots(enc)};
        for (std::size_t i = 0; i < 3; ++i) {
            if (b.alpha_conj[i].certified_sign() <= 0 || b.derivative[i].certified_sign() == 0) return std::nullopt;
        }
        return b;
    });

    for (std::int64_t t = 1; t <= upper; ++t) {
        std::array<RationalInterval, 3> targets;
        for (std::size_t i = 0; i < 3; ++i) {
            const RationalInterval& d = bounds.derivative[i];
            const Rational scale = Rational(big(t)) / bounds.alpha_conj[i].lo();
            if (d.certified_sign() > 0) {
                targets[i] = RationalInterval(Rational(0), Rational(scale * d.hi()));
            } else {
                targets[i] = RationalInterval(Rational(scale * d.lo()), Rational(0));
            }
        }
        std::optional<CodifferentElement> witness;
        const Integer target = big(t);
        for_each_lattice_point(targets, bounds.enc, [&](const Coords& c) {
            if (functional[0] * c[0] + functional[1] * c[1] + functional[2] * c[2] != target) return true;
            CodifferentElement delta{OrderElement(p, c)};
            if (!is_totally_positive_codiff(delta)) return true;
            witness = std::move(delta);
            return false;
        });
        if (witness) return {t, *std::move(witness)};
    }
    throw NotFoundError("no totally positive codifferent element with trace <= " + std::to_string(upper));
}

std::int64_t min_trace(const OrderElement& alpha, std::int64_t upper)
{
    return min_trace_with_witness(alpha, upper).value;
}

} // namespace indec
