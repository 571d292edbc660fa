/** \file convolution.hpp
 *
 *  \brief Convolution of two B functions as the inverse Fourier integral
 *         int e^{i p.r} Bbar_a(p) Bbar_b(p) d^3 p, by product quadrature.
 *
 *  The plane wave is expanded as 4 pi sum_L i^L j_L(p r) sum_M [Y_L^M(p)]* Y_L^M(r). Each
 *  Bbar(p) is a radial factor times Y_l^m(-i p), so the angular integral reduces to coefficients
 *  int [Y_L^M]* Bbar_a Bbar_b dOmega taken by sphere quadrature at |p| = 1, independent of any
 *  coupling-coefficient code. The remaining radial integrals with j_L(p r) kernels are done on
 *  doubling chunks [P, 2P] until two successive chunks are negligible.
 */

#ifndef STGO_ORACLES_CONVOLUTION_HPP
#define STGO_ORACLES_CONVOLUTION_HPP

#include <cmath>
#include <numbers>
#include <vector>

#include "stgo/bfun/bfunction.hpp"
#include "stgo/oracles/hankel.hpp"
#include "stgo/oracles/quadrature.hpp"

namespace stgo::oracles {

inline OracleValue
momentum_convolution(BIndex const& a, BIndex const& b, Vec3 at, int n_radial = 16,
                     QuadratureGrid const& grid = lebedev_grid(110))
{
    if (a.alpha != b.alpha) {
        throw UnsupportedError("momentum_convolution: only equal scaling parameters are supported");
    }
    int const lsum = a.l + b.l;
    int const M    = a.m + b.m;
    if (2 * lsum > grid.exact_degree) {
        throw DomainError("momentum_convolution: quadrature grid is not exact enough");
    }
    double const alpha = a.alpha;
    double const r     = at.norm();

    /* angular coefficients at |p| = 1 */
    std::vector<Complex> coef(lsum + 1, 0.0);
    for (int L = std::abs(M); L <= lsum; ++L) {
        coef[L] = sphere_integrate(
            [&](Vec3 u) { return std::conj(ylm({L, M}, u)) * b_fourier(a, u) * b_fourier(b, u); }, grid);
    }

    /* Bbar_a(p u) Bbar_b(p u) = rho(p) Bbar_a(u) Bbar_b(u) */
    int const ka   = a.n + a.l + 1, kb = b.n + b.l + 1;
    double const q = alpha * alpha + 1;
    auto rho       = [&](double p) {
        return std::pow(p, lsum) * std::pow(q / (alpha * alpha + p * p), ka + kb);
    };

    double biggest = 0;
    for (auto const& c : coef) {
        biggest = std::max(biggest, std::abs(c));
    }
    double const max_width = 0.5 * alpha;
    Complex total          = 0;
    double last_tail       = 0;
    bool all_converged     = true;
    for (int L = std::abs(M); L <= lsum; ++L) {
        /* parity-forbidden shells come out of the quadrature as rounding dust */
        if (std::abs(coef[L]) < 1e-13 * biggest) {
            continue;
        }
        Complex const ang = 4 * std::numbers::pi * std::pow(Complex(0, 1), L) * coef[L] *
                            (r > 0 ? ylm({L, M}, at) : (L == 0 ? 1 / std::sqrt(4 * std::numbers::pi) : 0.0));
        if (ang == Complex(0)) {
            continue;
        }
        auto const g = [&](double p) { return rho(p); };
        double sum   = detail::bessel_weighted_integral(g, L, r, 0.0, 16 * alpha, n_radial, max_width);
        double lo    = 16 * alpha;
        int quiet      = 0;
        bool converged = false;
        double chunk   = 0;
        while (lo < 1e5 * alpha) {
            chunk = detail::bessel_weighted_integral(g, L, r, lo, 2 * lo, n_radial, std::max(max_width, lo / 64));
            sum += chunk;
            lo *= 2;
            quiet = std::abs(chunk) < 1e-14 * std::abs(sum) ? quiet + 1 : 0;
            if (quiet == 2) {
                converged = true;
                break;
            }
        }
        all_converged = all_converged && converged;
        total += ang * sum;
        last_tail = std::max(last_tail, std::abs(ang * chunk));
    }
    OracleValue out{total, last_tail, false};
    out.accuracy_warning = !all_converged && out.tail_estimate > 1e-10 * std::abs(total);
    return out;
}

} // namespace stgo::oracles

#endif
