/**
 * @file qarith.hpp
 * @brief q-integers, q-factorials, q-binomials (base q and q^2), and the
 *        c-binomial products, all exact and memoized.
 */
#ifndef IDP_QARITH_HPP
#define IDP_QARITH_HPP

#include "idp/laurent.hpp"
#include "idp/ratfunc.hpp"

namespace idp {

/// [n] = (q^n - q^-n)/(q - q^-1); [-n] = -[n].
const LaurentPoly& qint(int n);

/// [n] with q replaced by q^2.
const LaurentPoly& qint2(int n);

/// [n]! = [1][2]...[n]; rejects n < 0.
const LaurentPoly& qfact(int n);

/// Gaussian binomial [m choose n] = prod_{i=1..n} [m-i+1]/[i]; n >= 0,
/// m may be negative. Integral (denominator 1) whenever m >= 0.
RatFunc qbinom(int m, int n);

/// Same with q^2 in place of q.
RatFunc qbinom2(int m, int n);

/// prod_{i=1..c} (q^{4(m+i-1)} - 1)/(q^{-4i} - 1); always a Laurent
/// polynomial, asserted via exact division.
const LaurentPoly& cbinom(int m, int c);

/// binom(n, 2) = n(n-1)/2 as a plain integer (n may be negative).
long long binom2(long long n);

} // namespace idp

#endif // IDP_QARITH_HPP
