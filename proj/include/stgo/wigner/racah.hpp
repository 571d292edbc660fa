/** \file racah.hpp
 *
 *  \brief Single 3jm symbols from the Racah sum, exact until the final square root.
 */

#ifndef STGO_WIGNER_RACAH_HPP
#define STGO_WIGNER_RACAH_HPP

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "stgo/core/combinatorics.hpp"

namespace stgo {

/// sign * sqrt(square); square is an exact non-negative rational.
struct SignedSqrt
{
    int sign{0};
    Rational square{0};

    double value() const
    {
        return sign == 0 ? 0.0 : sign * std::sqrt(to_double(square));
    }
};

/// True iff (l1, l2, l3) satisfies the triangle inequality.
inline bool
triangle(int l1, int l2, int l3)
{
    return l3 >= std::abs(l1 - l2) && l3 <= l1 + l2;
}

/// 3j(l1 l2 l3; m1 m2 m3) as sign * sqrt(exact rational); zero on any selection-rule violation.
inline SignedSqrt
wigner3j_exact(int l1, int l2, int l3, int m1, int m2, int m3)
{
    if (l1 < 0 || l2 < 0 || l3 < 0 || std::abs(m1) > l1 || std::abs(m2) > l2 || std::abs(m3) > l3 ||
        m1 + m2 + m3 != 0 || !triangle(l1, l2, l3)) {
        return {};
    }
    if (m1 == 0 && m2 == 0 && (l1 + l2 + l3) % 2 != 0) {
        return {};
    }
    auto const& f = factorial;
    BigInt const outer = f(l1 + l2 - l3) * f(l1 - l2 + l3) * f(-l1 + l2 + l3) * f(l1 + m1) * f(l1 - m1) *
                         f(l2 + m2) * f(l2 - m2) * f(l3 + m3) * f(l3 - m3);
    int const kmin = std::max({0, l2 - l3 - m1, l1 - l3 + m2});
    int const kmax = std::min({l1 + l2 - l3, l1 - m1, l2 + m2});
    Rational sum   = 0;
    for (int k = kmin; k <= kmax; ++k) {
        BigInt const den = f(k) * f(l3 - l2 + k + m1) * f(l3 - l1 + k - m2) * f(l1 + l2 - l3 - k) * f(l1 - k - m1) *
                           f(l2 - k + m2);
        sum += Rational(parity_sign(k), den);
    }
    if (sum == 0) {
        return {};
    }
    SignedSqrt out;
    out.sign   = parity_sign(l1 - l2 - m3) * (sum > 0 ? 1 : -1);
    out.square = Rational(outer, f(l1 + l2 + l3 + 1)) * sum * sum;
    return out;
}

/// 3j(l1 l2 l3; m1 m2 m3) by the Racah formula.
inline double
wigner3j(int l1, int l2, int l3, int m1, int m2, int m3)
{
    return wigner3j_exact(l1, l2, l3, m1, m2, m3).value();
}

} // namespace stgo

#endif
