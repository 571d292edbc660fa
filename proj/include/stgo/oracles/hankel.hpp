/** \file hankel.hpp
 *
 *  \brief Radial Fourier (Hankel-type) transforms by panel Gauss-Legendre quadrature.
 *
 *  For F(r) = f_l(r) Y_l^m(r/r) the transform with kernel (2 pi)^{-3/2} e^{-i p.r} is
 *  Fbar(p) = fbar_l(p) Y_l^m(p/p) with
 *      fbar_l(p) = (-i)^l p^{-1/2} int_0^inf r^{3/2} J_{l+1/2}(p r) f_l(r) dr
 *               = (-i)^l (2/pi)^{1/2} int_0^inf r^2 j_l(p r) f_l(r) dr,
 *  and the inverse swaps r and p and uses i^l.
 */

#ifndef STGO_ORACLES_HANKEL_HPP
#define STGO_ORACLES_HANKEL_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "stgo/core/bessel.hpp"
#include "stgo/harmonics/vec3.hpp"
#include "stgo/oracles/quadrature.hpp"

namespace stgo::oracles {

/// A quadrature value with its truncation estimate.
struct OracleValue
{
    Complex value;
    double tail_estimate{0};  ///< size of the neglected part of the integral
    bool accuracy_warning{false};
};

namespace detail {

/// int_0^upper r^2 j_l(k r) g(r) dr with panels no wider than a quarter oscillation.
inline double
bessel_weighted_integral(std::function<double(double)> const& g, int l, double k, double lo, double hi, int n,
                         double max_width)
{
    double width = max_width;
    if (k > 0) {
        width = std::min(width, std::numbers::pi / (2 * k));
    }
    int const panels = std::max(1, static_cast<int>(std::ceil((hi - lo) / width)));
    return panel_integrate([&](double r) { return r * r * spherical_bessel_j(l, k * r) * g(r); }, lo, hi, panels, n);
}

} // namespace detail

/// fbar_l(p) for a radial function f_l. The range [0, R] starts at R = r_max and doubles (at most four
/// times) while the integral over [R, 2R] exceeds 1e-12 of the result; that last chunk is the tail estimate.
inline OracleValue
hankel_radial_ft(std::function<double(double)> const& f_l, int l, double p, double r_max = 60.0, int n = 16)
{
    if (l < 0 || !(r_max > 0) || p < 0) {
        throw DomainError("hankel_radial_ft: need l >= 0, p >= 0 and r_max > 0");
    }
    double const width = r_max / 400;
    double body        = detail::bessel_weighted_integral(f_l, l, p, 0.0, r_max, n, width);
    double tail        = 0;
    double R           = r_max;
    for (int doubling = 0; doubling <= 4; ++doubling) {
        tail = detail::bessel_weighted_integral(f_l, l, p, R, 2 * R, n, width);
        if (std::abs(tail) <= 1e-12 * std::abs(body) || doubling == 4) {
            break;
        }
        body += tail;
        R *= 2;
    }
    Complex const phase = std::pow(Complex(0, -1), l) * std::sqrt(2 / std::numbers::pi);
    OracleValue out{phase * body, std::sqrt(2 / std::numbers::pi) * std::abs(tail), false};
    out.accuracy_warning = out.tail_estimate > 1e-12 * std::abs(out.value);
    return out;
}

/// f_l(r) = i^l (2/pi)^{1/2} int p^2 j_l(p r) fbar_l(p) dp, with fbar_l = (-i)^l g passed as the real g.
inline OracleValue
hankel_radial_inverse(std::function<double(double)> const& fbar_l_unphased, int l, double r, double p_max = 60.0,
                      int n = 16)
{
    OracleValue v = hankel_radial_ft(fbar_l_unphased, l, r, p_max, n);
    v.value *= std::pow(Complex(0, 1), l);
    return v;
}

} // namespace stgo::oracles

#endif
