/** \file hypergeometric.hpp
 *
 *  \brief Terminating confluent 1F1 and the Gauss 2F1 series.
 */

#ifndef STGO_CORE_HYPERGEOMETRIC_HPP
#define STGO_CORE_HYPERGEOMETRIC_HPP

#include <cmath>
#include <optional>
#include <vector>

#include "stgo/core/errors.hpp"

namespace stgo {

/// Parameters of a generalized hypergeometric series pFq(upper; lower; argument).
struct HypergeometricParams
{
    std::vector<double> upper;
    std::vector<double> lower;
    double argument{0};
};

namespace detail {

/// If x is a non-positive integer return -x, otherwise nothing.
inline std::optional<int>
nonpositive_integer(double x)
{
    double const r = std::round(x);
    if (r <= 0 && std::abs(x - r) <= 1e-12 * std::max(1.0, std::abs(x))) {
        return static_cast<int>(-r);
    }
    return std::nullopt;
}

} // namespace detail

/// Term coefficients c_k of 1F1(-n; b; z) = sum_k c_k z^k, k = 0..n.
/**
 *  The ratio (-n)_k/(b)_k is accumulated as a running product, so the indeterminate case b = -2n
 *  (both parameters non-positive integers) is evaluated as the finite n+1 term sum without ever
 *  forming 0/0.
 */
inline std::vector<double>
hyp1f1_terminating_coefficients(int n, double b)
{
    if (n < 0) {
        throw DomainError("hyp1f1_terminating: n must be non-negative");
    }
    if (auto nb = detail::nonpositive_integer(b); nb && *nb < n) {
        throw DomainError("hyp1f1_terminating: lower parameter is a non-positive integer reached before the "
                          "series terminates");
    }
    std::vector<double> c(n + 1);
    c[0] = 1.0;
    for (int k = 0; k < n; ++k) {
        c[k + 1] = c[k] * (k - n) / ((b + k) * (k + 1));
    }
    return c;
}

/// Finite sum 1F1(-n; b; z).
inline double
hyp1f1_terminating(int n, double b, double z)
{
    auto const c = hyp1f1_terminating_coefficients(n, b);
    /* Horner */
    double s = 0;
    for (int k = n; k >= 0; --k) {
        s = s * z + c[k];
    }
    return s;
}

namespace detail {

inline double
hyp2f1_series(double a, double b, double c, double x, int max_terms)
{
    double term = 1.0;
    double sum  = 1.0;
    double comp = 0.0;
    for (int k = 0; k < max_terms; ++k) {
        term *= (a + k) * (b + k) / ((c + k) * (k + 1)) * x;
        if (term == 0.0) {
            return sum;
        }
        /* Kahan summation: x close to 1 needs many terms */
        double const y = term - comp;
        double const t = sum + y;
        comp           = (t - sum) - y;
        sum            = t;
        if (std::abs(term) <= 1e-16 * std::abs(sum)) {
            /* require the tail to be geometrically small as well */
            double const ratio = std::abs((a + k + 1) * (b + k + 1) / ((c + k + 1) * (k + 2)) * x);
            if (ratio < 1.0 && std::abs(term) * ratio / (1.0 - ratio) <= 1e-15 * std::abs(sum)) {
                return sum;
            }
        }
    }
    throw ConvergenceError("hyp2f1: series did not converge within the term budget");
}

} // namespace detail

/// Gauss hypergeometric function 2F1(a, b; c; x) for |x| < 1, or any x when the series terminates.
/**
 *  For x < -1/2 the Pfaff transformation 2F1(a,b;c;x) = (1-x)^{-a} 2F1(a, c-b; c; x/(x-1)) brings the
 *  argument into [-1/2, 1/2). On [0, 1) the series is summed directly (x/(x-1) would leave the unit
 *  disk there).
 */
inline double
hyp2f1(double a, double b, double c, double x, int max_terms = 200000)
{
    auto const na = detail::nonpositive_integer(a);
    auto const nb = detail::nonpositive_integer(b);
    if (auto nc = detail::nonpositive_integer(c)) {
        /* rescued only if the series stops before (c)_k vanishes */
        bool const rescued = (na && *na <= *nc) || (nb && *nb <= *nc);
        if (!rescued) {
            throw DomainError("hyp2f1: c is a non-positive integer");
        }
    }
    if (na || nb) {
        int const terms = std::min(na ? *na : *nb, nb ? *nb : *na);
        double term     = 1.0;
        double sum      = 1.0;
        for (int k = 0; k < terms; ++k) {
            term *= (a + k) * (b + k) / ((c + k) * (k + 1)) * x;
            sum += term;
        }
        return sum;
    }
    if (!(std::abs(x) < 1.0)) {
        throw DomainError("hyp2f1: |x| must be < 1 for a non-terminating series");
    }
    if (x < -0.5) {
        return std::pow(1.0 - x, -a) * detail::hyp2f1_series(a, c - b, c, x / (x - 1.0), max_terms);
    }
    return detail::hyp2f1_series(a, b, c, x, max_terms);
}

} // namespace stgo

#endif
