/** \file combinatorics.hpp
 *
 *  \brief Exact factorials, double factorials, binomials and Pochhammer symbols.
 *
 *  Integers and rationals are arbitrary precision (boost::multiprecision). Prefactors are kept exact
 *  and converted to floating point once, by the caller, at the outermost multiplication.
 */

#ifndef STGO_CORE_COMBINATORICS_HPP
#define STGO_CORE_COMBINATORICS_HPP

#include <cmath>
#include <mutex>
#include <shared_mutex>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "stgo/core/errors.hpp"

namespace stgo {

using BigInt   = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Nearest double to an exact rational.
inline double
to_double(Rational const& q)
{
    return q.convert_to<double>();
}

inline double
to_double(BigInt const& n)
{
    return n.convert_to<double>();
}

/// n! as an exact integer; values are memoized process-wide.
inline BigInt const&
factorial(int n)
{
    if (n < 0) {
        throw DomainError("factorial: negative argument " + std::to_string(n));
    }
    constexpr int capacity = 1024;
    /* fixed capacity: references handed out stay valid while the table grows */
    static std::vector<BigInt> table = [] {
        std::vector<BigInt> t;
        t.reserve(capacity);
        t.emplace_back(1);
        return t;
    }();
    static std::shared_mutex mtx;
    {
        std::shared_lock lock(mtx);
        if (n < static_cast<int>(table.size())) {
            return table[n];
        }
    }
    if (n >= capacity) {
        throw DomainError("factorial: argument too large for the memo table");
    }
    std::unique_lock lock(mtx);
    while (static_cast<int>(table.size()) <= n) {
        BigInt next = table.back() * static_cast<int>(table.size());
        table.push_back(std::move(next));
    }
    return table[n];
}

/// Double factorial with (-1)!! = 0!! = 1!! = 1.
inline BigInt
double_factorial(int n)
{
    if (n < -1) {
        throw DomainError("double_factorial: n must be >= -1, got " + std::to_string(n));
    }
    BigInt result = 1;
    for (int k = n; k > 1; k -= 2) {
        result *= k;
    }
    return result;
}

/// Binomial coefficient C(n, k) for 0 <= k <= n, zero otherwise.
inline BigInt
binomial(int n, int k)
{
    if (n < 0 || k < 0 || k > n) {
        return 0;
    }
    return factorial(n) / (factorial(k) * factorial(n - k));
}

/// Pochhammer symbol (a)_n = a (a+1) ... (a+n-1), (a)_0 = 1.
inline double
pochhammer(double a, int n)
{
    if (n < 0) {
        throw DomainError("pochhammer: n must be non-negative");
    }
    double result = 1.0;
    for (int k = 0; k < n; ++k) {
        result *= a + k;
    }
    return result;
}

inline Rational
pochhammer(Rational const& a, int n)
{
    if (n < 0) {
        throw DomainError("pochhammer: n must be non-negative");
    }
    Rational result = 1;
    for (int k = 0; k < n; ++k) {
        result *= a + k;
    }
    return result;
}

/// (1/2)_n as an exact rational, (2n-1)!!/2^n.
inline Rational
pochhammer_half(int n)
{
    return Rational(double_factorial(2 * n - 1), BigInt(1) << n);
}

/// n! as a double; exact conversion up to 170, log-space beyond (where it overflows anyway).
inline double
factorial_double(int n)
{
    if (n < 0) {
        throw DomainError("factorial: negative argument");
    }
    if (n <= 170) {
        return to_double(factorial(n));
    }
    return std::exp(std::lgamma(n + 1.0));
}

/// (-1)^n
inline constexpr int
parity_sign(int n)
{
    return (n % 2 == 0) ? 1 : -1;
}

} // namespace stgo

#endif
