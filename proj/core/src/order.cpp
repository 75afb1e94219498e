#include "indec/order.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace indec {

namespace {

void require_same(const OrderElement& x, const OrderElement& y)
{
    if (!(x.params() == y.params())) {
        throw IncompatibleOrderError("elements belong to different orders: " + x.params().describe() +
                                     " vs " + y.params().describe());
    }
}

detail::Vec3<Integer> as_vec(const Coords& c) { return {c[0], c[1], c[2]}; }

} // namespace

std::string to_string(Family f)
{
    switch (f) {
    case Family::SimplestCubic: return "simplest";
    case Family::Ennola: return "ennola";
    case Family::Thomas: return "thomas";
    }
    return "?";
}

std::optional<Family> parse_family(const std::string& name)
{
    std::string s = name;
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    if (s == "simplest" || s == "simplestcubic" || s == "simplest-cubic") return Family::SimplestCubic;
    if (s == "ennola") return Family::Ennola;
    if (s == "thomas") return Family::Thomas;
    return std::nullopt;
}

Integer MinimalPoly::discriminant() const
{
    return 18 * c2 * c1 * c0 - 4 * c2 * c2 * c2 * c0 + c2 * c2 * c1 * c1 - 4 * c1 * c1 * c1 - 27 * c0 * c0;
}

MinimalPoly minimal_poly(Family family, std::int64_t a, std::int64_t b)
{
    const Integer A(static_cast<long>(a));
    const Integer B(static_cast<long>(b));
    switch (family) {
    case Family::SimplestCubic:
        if (a < -1) throw ParameterError("simplest cubic family requires a >= -1");
        return {Integer(-1), Integer(-(A + 3)), Integer(-A)};
    case Family::Ennola:
        if (a < 3) throw ParameterError("Ennola family requires a >= 3");
        return {Integer(-1), Integer(-A), Integer(A - 1)};
    case Family::Thomas:
        if (a < 2 || a > b - 2) throw ParameterError("Thomas family requires 2 <= a <= b - 2");
        return {Integer(-1), Integer(A * B), Integer(-(A + B))};
    }
    throw ParameterError("unknown family");
}

bool has_rational_root(const MinimalPoly& f)
{
    if (f.c0 == 0) return true;
    Integer n = abs(f.c0);
    for (Integer d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        for (const Integer& q : {d, Integer(n / d)}) {
            if (f.eval(q) == 0 || f.eval(Integer(-q)) == 0) return true;
        }
    }
    return false;
}

OrderParams::OrderParams(Family family, std::int64_t a, std::int64_t b)
    : family_(family),
      a_(a),
      b_(family == Family::Thomas ? b : 0),
      poly_(indec::minimal_poly(family, a, b)),
      reduction_(detail::Reduction<Integer>::from_poly(poly_.c0, poly_.c1, poly_.c2))
{
    if (has_rational_root(poly_)) throw ParameterError("minimal polynomial is reducible for " + describe());
}

OrderParams OrderParams::simplest(std::int64_t a) { return {Family::SimplestCubic, a, 0}; }
OrderParams OrderParams::ennola(std::int64_t a) { return {Family::Ennola, a, 0}; }
OrderParams OrderParams::thomas(std::int64_t a, std::int64_t b) { return {Family::Thomas, a, b}; }

OrderParams OrderParams::make(Family family, std::int64_t a, std::int64_t b) { return {family, a, b}; }

std::string OrderParams::describe() const
{
    std::ostringstream os;
    os << to_string(family_) << "(a=" << a_;
    if (family_ == Family::Thomas) os << ", b=" << b_;
    os << ")";
    return os.str();
}

OrderElement::OrderElement(OrderParams params, Coords coords)
    : params_(std::move(params)), coords_(std::move(coords))
{
}

OrderElement::OrderElement(OrderParams params, long x1, long x2, long x3)
    : params_(std::move(params)), coords_{Integer(x1), Integer(x2), Integer(x3)}
{
}

OrderElement OrderElement::operator-() const
{
    return {params_, {Integer(-coords_[0]), Integer(-coords_[1]), Integer(-coords_[2])}};
}

OrderElement operator+(const OrderElement& x, const OrderElement& y)
{
    require_same(x, y);
    return {x.params_, {Integer(x.coords_[0] + y.coords_[0]), Integer(x.coords_[1] + y.coords_[1]),
                        Integer(x.coords_[2] + y.coords_[2])}};
}

OrderElement operator-(const OrderElement& x, const OrderElement& y)
{
    require_same(x, y);
    return {x.params_, {Integer(x.coords_[0] - y.coords_[0]), Integer(x.coords_[1] - y.coords_[1]),
                        Integer(x.coords_[2] - y.coords_[2])}};
}

OrderElement operator*(const OrderElement& x, const OrderElement& y)
{
    require_same(x, y);
    auto z = detail::mul(x.params_.reduction(), as_vec(x.coords_), as_vec(y.coords_));
    return {x.params_, {z[0], z[1], z[2]}};
}

OrderElement operator*(const Integer& k, const OrderElement& x)
{
    return {x.params_, {Integer(k * x.coords_[0]), Integer(k * x.coords_[1]), Integer(k * x.coords_[2])}};
}

bool lex_less(const OrderElement& x, const OrderElement& y)
{
    require_same(x, y);
    return x.coords_ < y.coords_;
}

std::string OrderElement::to_string() const
{
    std::ostringstream os;
    os << "(" << coords_[0] << ", " << coords_[1] << ", " << coords_[2] << ")";
    return os.str();
}

OrderElement add(const OrderElement& x, const OrderElement& y) { return x + y; }
OrderElement neg(const OrderElement& x) { return -x; }
OrderElement mul(const OrderElement& x, const OrderElement& y) { return x * y; }

OrderElement pow(const OrderElement& x, unsigned n)
{
    OrderElement result = OrderElement::one(x.params());
    OrderElement base = x;
    while (n != 0) {
        if (n & 1U) result = result * base;
        n >>= 1U;
        if (n != 0) base = base * base;
    }
    return result;
}

Integer CharPoly::discriminant() const
{
    MinimalPoly p{Integer(-e3), e2, Integer(-e1)};
    return p.discriminant();
}

CharPoly char_poly(const OrderElement& x)
{
    auto m = detail::multiplication_matrix(x.params().reduction(), as_vec(x.coords()));
    auto e = detail::symmetric_functions(m);
    return {e[0], e[1], e[2]};
}

Integer trace(const OrderElement& x) { return char_poly(x).e1; }
Integer norm(const OrderElement& x) { return char_poly(x).e3; }

bool is_totally_positive(const OrderElement& x)
{
    const CharPoly cp = char_poly(x);
    return cp.e1 > 0 && cp.e2 > 0 && cp.e3 > 0;
}

bool is_unit(const OrderElement& x) { return abs(norm(x)) == 1; }

std::optional<OrderElement> exact_quotient(const OrderElement& y, const OrderElement& x)
{
    require_same(x, y);
    auto m = detail::multiplication_matrix(x.params().reduction(), as_vec(x.coords()));
    Integer det = detail::determinant(m);
    if (det == 0) throw std::domain_error("division by zero in Z[rho]");
    auto q = detail::apply(detail::adjugate(m), as_vec(y.coords()));
    Coords out;
    for (int i = 0; i < 3; ++i) {
        if (!mpz_divisible_p(q[i].get_mpz_t(), det.get_mpz_t())) return std::nullopt;
        mpz_divexact(out[i].get_mpz_t(), q[i].get_mpz_t(), det.get_mpz_t());
    }
    return OrderElement(x.params(), out);
}

OrderElement inverse_unit(const OrderElement& x)
{
    auto q = exact_quotient(OrderElement::one(x.params()), x);
    if (!q) throw std::domain_error("element " + x.to_string() + " is not a unit");
    return *q;
}

OrderElement galois_conjugate(const OrderElement& x)
{
    const OrderParams& p = x.params();
    if (p.family() != Family::SimplestCubic) {
        throw UnsupportedFamilyError("galois_conjugate is only defined for the simplest cubic family");
    }
    const long a = static_cast<long>(p.a());
    const OrderElement s(p, a + 2, a, -1);
    const OrderElement s2 = s * s;
    return OrderElement::from_integer(p, x[0]) + x[1] * s + x[2] * s2;
}

RationalCoords to_rational(const Coords& c) { return {Rational(c[0]), Rational(c[1]), Rational(c[2])}; }

RationalCoords mul(const OrderParams& p, const RationalCoords& x, const RationalCoords& y)
{
    return detail::mul(p.reduction(), x, y);
}

RationalCoords inverse(const OrderParams& p, const RationalCoords& x)
{
    auto m = detail::multiplication_matrix(p.reduction(), x);
    Rational det = detail::determinant(m);
    if (det == 0) throw std::domain_error("inverse of zero in Q(rho)");
    auto q = detail::apply(detail::adjugate(m), RationalCoords{Rational(1), Rational(0), Rational(0)});
    for (auto& c : q) c /= det;
    return q;
}

std::array<Rational, 3> char_poly(const OrderParams& p, const RationalCoords& x)
{
    return detail::symmetric_functions(detail::multiplication_matrix(p.reduction(), x));
}

} // namespace indec
