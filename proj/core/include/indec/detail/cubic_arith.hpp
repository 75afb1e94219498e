#pragma once

// Coefficient-level arithmetic in Q[x]/(f) for a monic cubic
// f = x^3 + c2 x^2 + c1 x + c0, shared by the integer and rational paths.

#include <array>

namespace indec::detail {

template <class T>
using Vec3 = std::array<T, 3>;

template <class T>
using Mat3 = std::array<std::array<T, 3>, 3>;

/// Powers rho^3 and rho^4 reduced into the basis {1, rho, rho^2}.
template <class T>
struct Reduction {
    Vec3<T> rho3;
    Vec3<T> rho4;

    template <class C>
    static Reduction from_poly(const C& c0, const C& c1, const C& c2)
    {
        Reduction r;
        r.rho3 = {T(-c0), T(-c1), T(-c2)};
        // rho^4 = rho * rho^3 = p0 rho + p1 rho^2 + p2 rho^3
        const T& p0 = r.rho3[0];
        const T& p1 = r.rho3[1];
        const T& p2 = r.rho3[2];
        r.rho4 = {T(p2 * p0), T(p0 + p2 * p1), T(p1 + p2 * p2)};
        return r;
    }
};

template <class T, class U>
Vec3<T> mul(const Reduction<U>& red, const Vec3<T>& x, const Vec3<T>& y)
{
    // Raw product coefficients of degree 0..4.
    T z0 = x[0] * y[0];
    T z1 = x[0] * y[1] + x[1] * y[0];
    T z2 = x[0] * y[2] + x[1] * y[1] + x[2] * y[0];
    T z3 = x[1] * y[2] + x[2] * y[1];
    T z4 = x[2] * y[2];
    Vec3<T> out;
    for (int i = 0; i < 3; ++i) {
        out[i] = (i == 0 ? z0 : (i == 1 ? z1 : z2)) + z3 * red.rho3[i] + z4 * red.rho4[i];
    }
    return out;
}

/// Matrix of multiplication by x: column j holds the coordinates of x * rho^j.
template <class T, class U>
Mat3<T> multiplication_matrix(const Reduction<U>& red, const Vec3<T>& x)
{
    Mat3<T> m;
    Vec3<T> col = x;
    const Vec3<T> rho{T(0), T(1), T(0)};
    for (int j = 0; j < 3; ++j) {
        for (int i = 0; i < 3; ++i) m[i][j] = col[i];
        col = mul(red, col, rho);
    }
    return m;
}

template <class T>
T determinant(const Mat3<T>& m)
{
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
         - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
         + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

template <class T>
Mat3<T> adjugate(const Mat3<T>& m)
{
    Mat3<T> a;
    a[0][0] = m[1][1] * m[2][2] - m[1][2] * m[2][1];
    a[0][1] = m[0][2] * m[2][1] - m[0][1] * m[2][2];
    a[0][2] = m[0][1] * m[1][2] - m[0][2] * m[1][1];
    a[1][0] = m[1][2] * m[2][0] - m[1][0] * m[2][2];
    a[1][1] = m[0][0] * m[2][2] - m[0][2] * m[2][0];
    a[1][2] = m[0][2] * m[1][0] - m[0][0] * m[1][2];
    a[2][0] = m[1][0] * m[2][1] - m[1][1] * m[2][0];
    a[2][1] = m[0][1] * m[2][0] - m[0][0] * m[2][1];
    a[2][2] = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    return a;
}

template <class T>
Vec3<T> apply(const Mat3<T>& m, const Vec3<T>& x)
{
    Vec3<T> y;
    for (int i = 0; i < 3; ++i) y[i] = m[i][0] * x[0] + m[i][1] * x[1] + m[i][2] * x[2];
    return y;
}

/// Elementary symmetric functions (e1, e2, e3) of the eigenvalues of m.
template <class T>
Vec3<T> symmetric_functions(const Mat3<T>& m)
{
    T e1 = m[0][0] + m[1][1] + m[2][2];
    T e2 = (m[0][0] * m[1][1] - m[0][1] * m[1][0])
         + (m[0][0] * m[2][2] - m[0][2] * m[2][0])
         + (m[1][1] * m[2][2] - m[1][2] * m[2][1]);
    T e3 = determinant(m);
    return {e1, e2, e3};
}

} // namespace indec::detail
