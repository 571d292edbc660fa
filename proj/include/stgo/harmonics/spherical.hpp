/** \file spherical.hpp
 *
 *  \brief Spherical harmonics and regular/irregular solid harmonics.
 *
 *  Phase: Y_l^m carries i^{m+|m|} in front of the associated Legendre function P_l^{|m|} (no
 *  Condon-Shortley factor inside P). For m > 0 this is (-1)^m, for m <= 0 it is 1, so that
 *  [Y_l^m]^* = (-1)^m Y_l^{-m}.
 *
 *  Values are produced by a recurrence in z and r^2 acting on (x +/- iy)^{|m|}, which is the
 *  polynomial form itself: no angles are formed and r = 0 needs no special case.
 */

#ifndef STGO_HARMONICS_SPHERICAL_HPP
#define STGO_HARMONICS_SPHERICAL_HPP

#include <cmath>
#include <numbers>
#include <vector>

#include "stgo/core/errors.hpp"
#include "stgo/harmonics/vec3.hpp"

namespace stgo {

namespace detail {

/// sqrt((2m+1)/(4 pi) * prod_{k=1}^{m} (2k-1)/(2k))
template <typename R = double>
R
sectoral_norm(int m)
{
    R c = (2 * m + 1) / (4 * std::numbers::pi_v<R>);
    for (int k = 1; k <= m; ++k) {
        c *= R(2 * k - 1) / R(2 * k);
    }
    return std::sqrt(c);
}

/// Fill column |m| of the regular solid harmonics for l = |m| .. lmax into out[l]; T is a complex type.
template <typename T>
void
solid_column(int lmax, int m, T x, T y, T z, std::vector<T>& out)
{
    using R      = typename T::value_type;
    int const am = std::abs(m);
    T const r2   = x * x + y * y + z * z;
    T const w    = (m >= 0) ? T(x + T(0, 1) * y) : T(x - T(0, 1) * y);
    T p          = T(1);
    for (int k = 0; k < am; ++k) {
        p *= w;
    }
    out.assign(lmax + 1, T(0));
    if (am > lmax) {
        return;
    }
    R const sgn = (m > 0 && (m % 2)) ? -1 : 1;
    out[am]     = sgn * sectoral_norm<R>(am) * p;
    if (am + 1 <= lmax) {
        out[am + 1] = std::sqrt(R(2 * am + 3)) * z * out[am];
    }
    for (int l = am + 2; l <= lmax; ++l) {
        R const a = std::sqrt((R(4) * l * l - 1) / (R(l) * l - R(am) * am));
        R const b = std::sqrt((R(l - 1) * (l - 1) - R(am) * am) / (R(4) * (l - 1) * (l - 1) - 1));
        out[l]         = a * (z * out[l - 1] - b * r2 * out[l - 2]);
    }
}

} // namespace detail

/// All regular solid harmonics r^l Y_l^m(r) for l <= lmax, packed by lm_offset.
inline std::vector<Complex>
regular_solid_table(int lmax, Vec3 r)
{
    std::vector<Complex> out(lm_count(lmax));
    std::vector<Complex> col;
    for (int m = -lmax; m <= lmax; ++m) {
        detail::solid_column<Complex>(lmax, m, r.x, r.y, r.z, col);
        for (int l = std::abs(m); l <= lmax; ++l) {
            out[lm_offset(l, m)] = col[l];
        }
    }
    return out;
}

/// All irregular solid harmonics r^{-l-1} Y_l^m(r) for l <= lmax.
inline std::vector<Complex>
irregular_solid_table(int lmax, Vec3 r)
{
    double const r2 = r.norm2();
    if (r2 == 0) {
        throw SingularityError("irregular solid harmonic at the origin");
    }
    auto out            = regular_solid_table(lmax, r);
    double const inv_r2 = 1.0 / r2;
    double scale        = 1.0 / std::sqrt(r2);
    for (int l = 0; l <= lmax; ++l) {
        for (int m = -l; m <= l; ++m) {
            out[lm_offset(l, m)] *= scale;
        }
        scale *= inv_r2;
    }
    return out;
}

/// Regular solid harmonic r^l Y_l^m(r).
inline Complex
regular_solid(LMIndex idx, Vec3 r)
{
    std::vector<Complex> col;
    detail::solid_column<Complex>(idx.l, idx.m, r.x, r.y, r.z, col);
    return col[idx.l];
}

/// Regular solid harmonic at a vector with complex components (polynomial continuation).
inline Complex
regular_solid(LMIndex idx, CVec3 r)
{
    std::vector<Complex> col;
    detail::solid_column<Complex>(idx.l, idx.m, r.x, r.y, r.z, col);
    return col[idx.l];
}

/// Irregular solid harmonic r^{-l-1} Y_l^m(r).
inline Complex
irregular_solid(LMIndex idx, Vec3 r)
{
    double const r2 = r.norm2();
    if (r2 == 0) {
        throw SingularityError("irregular solid harmonic at the origin");
    }
    return regular_solid(idx, r) * std::pow(r2, -idx.l - 0.5);
}

/// Spherical harmonic Y_l^m(theta, phi).
inline Complex
ylm(LMIndex idx, double theta, double phi)
{
    double const s = std::sin(theta);
    return regular_solid(idx, Vec3{s * std::cos(phi), s * std::sin(phi), std::cos(theta)});
}

/// Spherical harmonic at the direction of a non-zero vector.
inline Complex
ylm(LMIndex idx, Vec3 dir)
{
    double const r = dir.norm();
    if (r == 0) {
        throw DomainError("ylm: direction of the zero vector");
    }
    return regular_solid(idx, (1.0 / r) * dir);
}

} // namespace stgo

#endif
