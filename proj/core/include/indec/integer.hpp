#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace indec {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer floor_of(const Rational& q)
{
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline Integer ceil_of(const Rational& q)
{
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline int sign_of(const Integer& z) { return sgn(z); }
inline int sign_of(const Rational& q) { return sgn(q); }

inline bool fits_int64(const Integer& z)
{
    return z >= Integer(INT64_MIN / 2) * 2 && z <= Integer(INT64_MAX / 2) * 2;
}

inline std::string to_string(const Integer& z) { return z.get_str(); }
inline std::string to_string(const Rational& q) { return q.get_str(); }

} // namespace indec
