#pragma once

#include <gmpxx.h>

#include <string>

namespace rank2 {

// Exact arbitrary-precision scalars. mpq_class keeps gcd(|num|,den)=1 and
// den >= 1 canonically, which is exactly the Rational contract.
using Rational = mpq_class;
using Integer = mpz_class;

inline std::string str(const Rational& q) { return q.get_str(); }
inline std::string str(const Integer& z) { return z.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline Rational rational_from(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// gcd over positive rationals: gcd(p1/q1, p2/q2) = gcd(p1,p2)/lcm(q1,q2).
// Used to scale a polynomial pair to a joint integer-primitive form.
inline Rational rational_gcd(const Rational& a, const Rational& b) {
    Integer num, den;
    mpz_gcd(num.get_mpz_t(), a.get_num().get_mpz_t(), b.get_num().get_mpz_t());
    mpz_lcm(den.get_mpz_t(), a.get_den().get_mpz_t(), b.get_den().get_mpz_t());
    Rational g(num, den);
    g.canonicalize();
    return g;
}

}  // namespace rank2
