/** \file fd.hpp
 *
 *  \brief Brute-force application of a polynomial differential operator by Cartesian central
 *         differences. This is the definitional route (replace x, y, z by partial derivatives) that
 *         the library otherwise avoids, so it serves as an independent check.
 */

#ifndef STGO_ORACLES_FD_HPP
#define STGO_ORACLES_FD_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <map>

#include "stgo/core/finite_difference.hpp"
#include "stgo/harmonics/polynomial.hpp"

namespace stgo::oracles {

/// Accuracy order (2, 4, 6 or 8) of each one-dimensional stencil, and the step.
struct FDScheme
{
    int order{4};
    double step{0.02};
};

struct FDResult
{
    Complex value;     ///< Richardson-extrapolated from steps h and h/2
    Complex coarse;    ///< step h
    Complex fine;      ///< step h/2
    double rel_change; ///< |fine - coarse| / |fine|
    bool unreliable;   ///< coarse and fine disagree by more than 10 %
};

namespace detail {

using LDComplex = std::complex<long double>;

/// p(nabla) f with one step; F returns f at a point given in extended precision.
template <typename F>
Complex
apply_with_step(HarmonicPolynomial const& p, F const& f, Vec3 at, int order, long double h)
{
    /* merge all monomials into one stencil first: cancellation then happens among exact weights,
       not among rounded function values */
    std::map<std::array<int, 3>, LDComplex> stencil;
    for (auto const& [e, c] : p.terms) {
        auto const& sx = central_stencil(e[0], order);
        auto const& sy = central_stencil(e[1], order);
        auto const& sz = central_stencil(e[2], order);
        LDComplex const cc(static_cast<long double>(to_double(c.re)), static_cast<long double>(to_double(c.im)));
        for (int i = -sx.half_width; i <= sx.half_width; ++i) {
            long double const wi = sx.weights[i + sx.half_width];
            for (int j = -sy.half_width; j <= sy.half_width; ++j) {
                long double const wj = sy.weights[j + sy.half_width];
                for (int k = -sz.half_width; k <= sz.half_width; ++k) {
                    long double const w = wi * wj * sz.weights[k + sz.half_width];
                    if (w != 0) {
                        stencil[{i, j, k}] += cc * w;
                    }
                }
            }
        }
    }
    LDComplex sum = 0;
    LDComplex comp = 0;
    for (auto const& [o, w] : stencil) {
        if (w == LDComplex(0)) {
            continue;
        }
        LDComplex const v = f(at.x + o[0] * h, at.y + o[1] * h, at.z + o[2] * h);
        LDComplex const y = w * v - comp;
        LDComplex const t = sum + y;
        comp              = (t - sum) - y;
        sum               = t;
    }
    sum /= std::pow(h, static_cast<long double>(p.degree));
    return Complex(static_cast<double>(sum.real()), static_cast<double>(sum.imag())) * p.scale();
}

} // namespace detail

/// A field sampled in extended precision, for derivative orders where double rounding dominates.
using ExtendedField = std::function<std::complex<long double>(long double, long double, long double)>;

namespace detail {

template <typename F>
FDResult
richardson(HarmonicPolynomial const& p, F const& f, Vec3 at, FDScheme scheme)
{
    if (scheme.order < 2 || scheme.order > 8 || scheme.order % 2) {
        throw DomainError("fd_apply_operator: order must be 2, 4, 6 or 8");
    }
    if (!(scheme.step > 0)) {
        throw DomainError("fd_apply_operator: step must be positive");
    }
    FDResult r;
    r.coarse       = apply_with_step(p, f, at, scheme.order, scheme.step);
    r.fine         = apply_with_step(p, f, at, scheme.order, scheme.step / 2.0L);
    double const k = std::pow(2.0, scheme.order);
    r.value        = (k * r.fine - r.coarse) / (k - 1);
    double const d = std::abs(r.fine - r.coarse);
    double const m = std::abs(r.fine);
    r.rel_change   = m > 0 ? d / m : d;
    r.unreliable   = p.degree > 0 && d > 0.1 * std::max(m, 1e-300);
    return r;
}

} // namespace detail

/// p(nabla) f at a point by tensor-product central differences, with a two-step Richardson check.
inline FDResult
fd_apply_operator(HarmonicPolynomial const& p, std::function<Complex(Vec3)> const& f, Vec3 at, FDScheme scheme = {})
{
    auto const g = [&f](long double x, long double y, long double z) {
        Complex const v = f(Vec3{static_cast<double>(x), static_cast<double>(y), static_cast<double>(z)});
        return detail::LDComplex(v.real(), v.imag());
    };
    return detail::richardson(p, g, at, scheme);
}

inline FDResult
fd_apply_operator(HarmonicPolynomial const& p, ExtendedField const& f, Vec3 at, FDScheme scheme = {})
{
    return detail::richardson(p, f, at, scheme);
}

} // namespace stgo::oracles

#endif
