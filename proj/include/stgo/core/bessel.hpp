/** \file bessel.hpp
 *
 *  \brief Reduced Bessel functions, Bessel polynomials and spherical Bessel functions.
 */

#ifndef STGO_CORE_BESSEL_HPP
#define STGO_CORE_BESSEL_HPP

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "stgo/core/combinatorics.hpp"
#include "stgo/core/errors.hpp"
#include "stgo/core/hypergeometric.hpp"

namespace stgo {

/// Coefficients of the Bessel polynomial Theta_n(z) = sum_k c_k z^k (ascending powers).
inline std::vector<double>
bessel_polynomial_coefficients(int n)
{
    if (n < 0) {
        throw DomainError("bessel_polynomial: n must be non-negative");
    }
    /* 2^n (1/2)_n 1F1(-n; -2n; 2z) */
    auto c            = hyp1f1_terminating_coefficients(n, -2.0 * n);
    double const pref = to_double(double_factorial(2 * n - 1));
    double pow2       = 1.0;
    for (auto& ck : c) {
        ck *= pref * pow2;
        pow2 *= 2.0;
    }
    return c;
}

/// Theta_n(z) = e^z khat_{n+1/2}(z).
inline double
bessel_polynomial_theta(int n, double z)
{
    auto const c = bessel_polynomial_coefficients(n);
    double s     = 0;
    for (int k = n; k >= 0; --k) {
        s = s * z + c[k];
    }
    return s;
}

/// Taylor coefficients t_0..t_order of Theta_n(z/2) / Theta_n(-z/2), the [n/n] Pade approximant of e^z.
inline std::vector<double>
bessel_pade_taylor(int n, int order)
{
    if (order < 0) {
        throw DomainError("bessel_pade_taylor: order must be non-negative");
    }
    auto const c = bessel_polynomial_coefficients(n);
    std::vector<double> num(order + 1, 0.0), den(order + 1, 0.0);
    for (int k = 0; k <= std::min(n, order); ++k) {
        double const h = std::ldexp(c[k], -k);
        num[k]         = h;
        den[k]         = (k % 2 == 0) ? h : -h;
    }
    /* power-series division num / den */
    std::vector<double> t(order + 1, 0.0);
    for (int k = 0; k <= order; ++k) {
        double s = num[k];
        for (int j = 1; j <= k; ++j) {
            s -= den[j] * t[k - j];
        }
        t[k] = s / den[0];
    }
    return t;
}

/// Reduced Bessel function (2/pi)^{1/2} z^nu K_nu(z).
/**
 *  Half-integral orders go through the Bessel polynomial; negative half-integral orders use
 *  khat_{-nu}(z) = z^{-2 nu} khat_nu(z). Other orders fall back to std::cyl_bessel_k.
 */
inline double
khat(double nu, double z)
{
    if (!(z > 0)) {
        throw DomainError("khat: argument must be positive");
    }
    double const twice = 2.0 * nu;
    double const r     = std::round(twice);
    bool const half    = std::abs(twice - r) < 1e-13 && static_cast<long>(r) % 2 != 0;
    if (half) {
        int const k2 = static_cast<int>(r); /* 2 nu */
        if (k2 > 0) {
            return std::exp(-z) * bessel_polynomial_theta((k2 - 1) / 2, z);
        }
        int const n = (-k2 - 1) / 2; /* nu = -(n + 1/2) */
        return std::pow(z, k2) * std::exp(-z) * bessel_polynomial_theta(n, z);
    }
    return std::sqrt(2.0 / std::numbers::pi) * std::pow(z, nu) * std::cyl_bessel_k(std::abs(nu), z);
}

/// Spherical Bessel function of the first kind j_l(x).
inline double
spherical_bessel_j(int l, double x)
{
    if (l < 0) {
        throw DomainError("spherical_bessel_j: l must be non-negative");
    }
    double const ax = std::abs(x);
    double sign     = (x < 0 && l % 2 == 1) ? -1.0 : 1.0;
    if (ax == 0.0) {
        return l == 0 ? 1.0 : 0.0;
    }
    if (ax < 1.0) {
        /* ascending series */
        double lead = 1.0;
        for (int k = 1; k <= l; ++k) {
            lead *= ax / (2 * k + 1);
        }
        double const h = -0.5 * ax * ax;
        double term    = 1.0;
        double sum     = 1.0;
        for (int k = 1; k < 60; ++k) {
            term *= h / (k * (2.0 * l + 2 * k + 1));
            sum += term;
            if (std::abs(term) < 1e-18 * std::abs(sum)) {
                break;
            }
        }
        return sign * lead * sum;
    }
    double const j0 = std::sin(ax) / ax;
    if (l == 0) {
        return j0;
    }
    double const j1 = std::sin(ax) / (ax * ax) - std::cos(ax) / ax;
    if (ax >= l) {
        double jm = j0, jc = j1;
        for (int k = 1; k < l; ++k) {
            double const jn = (2 * k + 1) / ax * jc - jm;
            jm              = jc;
            jc              = jn;
        }
        return sign * jc;
    }
    /* Miller: start well above l and recur down, normalize to j_0 */
    int const start = l + 20 + static_cast<int>(std::sqrt(40.0 * (l + 20)));
    double jp = 0.0, jc = 1e-300, jl = 0.0;
    for (int k = start; k > 0; --k) {
        double const jn = (2 * k + 1) / ax * jc - jp;
        jp              = jc;
        jc              = jn;
        if (std::abs(jc) > 1e250) {
            jp *= 1e-250;
            jc *= 1e-250;
            jl *= 1e-250;
        }
        if (k - 1 == l) {
            jl = jc;
        }
    }
    /* jc now holds the unnormalized j_0, jp the unnormalized j_1 */
    double const norm = (std::abs(j0) > std::abs(j1)) ? j0 / jc : j1 / jp;
    return sign * jl * norm;
}

} // namespace stgo

#endif
