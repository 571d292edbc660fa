/** \file addition.hpp
 *
 *  \brief Addition theorems: the finite one for regular solid harmonics and the two-range ones for
 *         1/|r +- r'|, |r_< + r_>|^nu and |r_< + r_>|^nu Y_l^m(r_< + r_>), with the coefficient table of
 *         the tensor form of the translation operator.
 *
 *  Two-range sums run over an outer shell index l1 (the rank of the [Y_l1^m1(r_<)]^* factor). Each
 *  shell is summed completely; truncation stops once two consecutive shells are negligible.
 */

#ifndef STGO_ADDITION_ADDITION_HPP
#define STGO_ADDITION_ADDITION_HPP

#include <cmath>
#include <numbers>
#include <optional>
#include <vector>

#include "stgo/core/combinatorics.hpp"
#include "stgo/core/errors.hpp"
#include "stgo/core/hypergeometric.hpp"
#include "stgo/harmonics/spherical.hpp"
#include "stgo/wigner/gaunt.hpp"

namespace stgo {

/// (r_<, r_>) ordered by magnitude; equal magnitudes are rejected.
struct SplitPair
{
    Vec3 r_lt;
    Vec3 r_gt;

    SplitPair(Vec3 r, Vec3 rp)
    {
        double const a = r.norm2(), b = rp.norm2();
        if (a == b) {
            throw BoundaryError("two-range expansion requested with |r| = |r'|");
        }
        r_lt = a < b ? r : rp;
        r_gt = a < b ? rp : r;
    }

    /// r_<^2 / r_>^2 from the squared magnitudes.
    double x() const
    {
        return r_lt.norm2() / r_gt.norm2();
    }
};

struct TruncationSpec
{
    int l_max_outer{60};
    double tol{1e-14};
    int max_terms{200000};  ///< term budget of each hypergeometric series
};

/// One outer shell of a two-range sum.
struct AdditionShell
{
    int l1;
    Complex partial;   ///< sum of shells 0..l1
    double contrib;    ///< |shell l1|
    double est_error;  ///< |shell l1| + |shell l1-1|
};

struct AdditionResult
{
    Complex value;
    int outer_l_used{0};
    double est_error{0};
    bool converged{false};
    bool exact{false};  ///< series terminated: every later shell vanishes identically
    std::vector<AdditionShell> shells;
};

/// Which Pochhammer cluster multiplies the 2F1 in the r^nu Y_l^m theorem.
enum class PochhammerCluster
{
    Printed,    ///< ((nu-2 Dl+2)/2)_{Dl2} ((nu-2 Dl+3)/2)_{Dl2}
    Rederived,  ///< ((nu-2 Dl+2)/2)_{Dl2} ((nu+2 Dl1+3)/2)_{Dl2}
};

namespace detail {

/// Accumulates shells and applies the two-shell stopping rule.
class ShellAccumulator
{
  public:
    explicit ShellAccumulator(TruncationSpec const& t)
        : trunc_(t)
    {
        if (!(t.tol > 0) || t.l_max_outer < 0) {
            throw DomainError("TruncationSpec: need tol > 0 and l_max_outer >= 0");
        }
    }

    /// Returns true when summation may stop.
    bool push(int l1, Complex shell)
    {
        res_.value += shell;
        double const c    = std::abs(shell);
        double const prev = res_.shells.empty() ? 0.0 : res_.shells.back().contrib;
        res_.shells.push_back({l1, res_.value, c, c + prev});
        res_.outer_l_used = l1;
        res_.est_error    = c + prev;
        double const lim  = trunc_.tol * std::max(std::abs(res_.value), 1e-300);
        res_.converged    = l1 >= 1 && c <= lim && prev <= lim;
        return res_.converged;
    }

    AdditionResult finish_exact()
    {
        res_.exact     = true;
        res_.converged = true;
        res_.est_error = 0.0;
        return res_;
    }

    AdditionResult finish()
    {
        return res_;
    }

  private:
    TruncationSpec trunc_;
    AdditionResult res_;
};

/// nu / 2 when nu is an even non-negative integer.
inline std::optional<int>
even_power(double nu)
{
    double const h = nu / 2;
    if (h >= 0 && h == std::floor(h) && h < 1e6) {
        return static_cast<int>(h);
    }
    return std::nullopt;
}

/// (a)_n / (b)_k, interleaved so that large orders do not overflow.
inline double
pochhammer_ratio(double a, int n, double b, int k)
{
    double r = 1.0;
    int i = 0, j = 0;
    while (i < n || j < k) {
        if (i < n && (std::abs(r) <= 1.0 || j >= k)) {
            r *= a + i++;
        } else {
            r /= b + j++;
        }
    }
    return r;
}

} // namespace detail

/// Y_l^m(r + r') as the finite double sum over lambda and mu.
/**
 *  The terms cancel heavily when r + r' is short, so harmonics and coefficients are formed in long
 *  double, the coefficients from their exact squares.
 */
inline Complex
solid_harmonic_shift(LMIndex idx, Vec3 r, Vec3 rp)
{
    int const l = idx.l, m = idx.m;
    if (l < 0 || std::abs(m) > l) {
        throw DomainError("solid_harmonic_shift: need l >= 0 and |m| <= l");
    }
    using LC   = std::complex<long double>;
    auto table = [l](Vec3 v) {
        std::vector<LC> out(lm_count(l)), col;
        for (int mm = -l; mm <= l; ++mm) {
            stgo::detail::solid_column<LC>(l, mm, v.x, v.y, v.z, col);
            for (int k = std::abs(mm); k <= l; ++k) {
                out[lm_offset(k, mm)] = col[k];
            }
        }
        return out;
    };
    auto const a = table(r);
    auto const b = table(rp);
    LC sum       = 0;
    for (int lam = 0; lam <= l; ++lam) {
        /* w G = sign sqrt(pi w'^2 square), w = 2 pi w', G = sign sqrt(square / (4 pi)) */
        Rational const w = pochhammer_half(l + 1) / (pochhammer_half(lam + 1) * pochhammer_half(l - lam + 1));
        for (int mu = -lam; mu <= lam; ++mu) {
            if (std::abs(m + mu) > l - lam) {
                continue;
            }
            auto const g = gaunt_exact({lam, -mu, l - lam, m + mu, l, m});
            if (g.sign != 0) {
                long double const c =
                    g.sign * std::sqrt(std::numbers::pi_v<long double> * (w * w * g.square).convert_to<long double>());
                sum += c * a[lm_offset(lam, -mu)] * b[lm_offset(l - lam, m + mu)];
            }
        }
    }
    return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

/// 1/|r + sign r'| = 4 pi sum_l (-sign)^l/(2l+1) sum_m [Y_l^m(r_<)]^* Z_l^m(r_>).
inline AdditionResult
laplace_expansion(Vec3 r, Vec3 rp, int sign, TruncationSpec const& trunc = {})
{
    if (sign != 1 && sign != -1) {
        throw DomainError("laplace_expansion: sign must be +1 or -1");
    }
    SplitPair const pair(r, rp);
    int const L = trunc.l_max_outer;
    auto const a = regular_solid_table(L, pair.r_lt);
    auto const z = irregular_solid_table(L, pair.r_gt);
    detail::ShellAccumulator acc(trunc);
    for (int lam = 0; lam <= L; ++lam) {
        Complex s = 0;
        for (int mu = -lam; mu <= lam; ++mu) {
            s += std::conj(a[lm_offset(lam, mu)]) * z[lm_offset(lam, mu)];
        }
        double const f = 4 * std::numbers::pi * (sign > 0 ? parity_sign(lam) : 1) / (2.0 * lam + 1);
        if (acc.push(lam, f * s)) {
            break;
        }
    }
    return acc.finish();
}

/// |r_< + r_>|^nu = 4 pi r_>^{nu+1} sum_l (-1)^l (-nu/2)_l/(3/2)_l 2F1(...; x) sum_m [Y_l^m(r_<)]^* Z_l^m(r_>).
inline AdditionResult
power_scalar_addition(double nu, SplitPair const& pair, TruncationSpec const& trunc = {})
{
    int const L   = trunc.l_max_outer;
    double const x = pair.x();
    auto const a  = regular_solid_table(L, pair.r_lt);
    auto const z  = irregular_solid_table(L, pair.r_gt);
    double const pre = 4 * std::numbers::pi * std::pow(pair.r_gt.norm(), nu + 1);
    auto const n_end = detail::even_power(nu);
    detail::ShellAccumulator acc(trunc);
    for (int lam = 0; lam <= L; ++lam) {
        if (n_end && lam > *n_end) {
            return acc.finish_exact();
        }
        Complex s = 0;
        for (int mu = -lam; mu <= lam; ++mu) {
            s += std::conj(a[lm_offset(lam, mu)]) * z[lm_offset(lam, mu)];
        }
        double const c = parity_sign(lam) * detail::pochhammer_ratio(-nu / 2, lam, 1.5, lam) *
                         hyp2f1((2 * lam - nu) / 2, (-nu - 1) / 2, (2 * lam + 3) / 2.0, x, trunc.max_terms);
        if (acc.push(lam, pre * c * s)) {
            break;
        }
    }
    if (n_end && L >= *n_end) {
        return acc.finish_exact();
    }
    return acc.finish();
}

/// Check (1 + nu/2)_l != 0, exactly at representable even integers and within 1e-12 otherwise.
inline void
check_power_parameter(double nu, int l)
{
    for (int j = 0; j < l; ++j) {
        if (std::abs(1 + nu / 2 + j) <= 1e-12) {
            throw ParameterSingularityError("power_solid_addition: (1 + nu/2)_l vanishes for this nu");
        }
    }
}

/// |r_< + r_>|^nu Y_l^m(r_< + r_>) by the two-range expansion over l1, m1 and l2 in coupled_range(l1, m1, l, m).
inline AdditionResult
power_solid_addition(double nu, LMIndex idx, SplitPair const& pair, TruncationSpec const& trunc = {},
                     PochhammerCluster cluster = PochhammerCluster::Rederived)
{
    int const l = idx.l, m = idx.m;
    if (l < 0 || std::abs(m) > l) {
        throw DomainError("power_solid_addition: need l >= 0 and |m| <= l");
    }
    check_power_parameter(nu, l);
    int const L      = trunc.l_max_outer;
    double const x   = pair.x();
    double const rg  = pair.r_gt.norm();
    auto const a     = regular_solid_table(L, pair.r_lt);
    auto const z     = irregular_solid_table(L + l, pair.r_gt);
    double const pre = 4 * std::numbers::pi / pochhammer(1 + nu / 2, l);
    /* nu = 2n: (-l-n)_{l2} = 0 for l2 > l + n, and l2 >= l1 - l */
    auto const n_end = detail::even_power(nu);
    detail::ShellAccumulator acc(trunc);
    for (int l1 = 0; l1 <= L; ++l1) {
        if (n_end && l1 > 2 * l + *n_end) {
            return acc.finish_exact();
        }
        Complex shell = 0;
        for (int m1 = -l1; m1 <= l1; ++m1) {
            Complex const y = std::conj(a[lm_offset(l1, m1)]);
            if (y == Complex(0)) {
                continue;
            }
            auto const range = coupled_range(l1, m1, l, m);
            for (int l2 = range.l_min; l2 <= range.l_max; l2 += 2) {
                double const g = gaunt_lin(l2, l1, m1, l, m);
                if (g == 0.0) {
                    continue;
                }
                auto const d   = delta_quantities(l1, l2, l);
                double const c1 = detail::pochhammer_ratio(-l - nu / 2, l2, 1.5, l1);
                double const second = cluster == PochhammerCluster::Printed ? (nu - 2 * d.delta_l + 3) / 2
                                                                            : (nu + 2 * d.delta_l1 + 3) / 2;
                double const c2 = pochhammer((nu - 2 * d.delta_l + 2) / 2, d.delta_l2) * pochhammer(second, d.delta_l2);
                if (c1 == 0.0 || c2 == 0.0) {
                    continue;
                }
                double const f = hyp2f1((2 * d.delta_l - nu) / 2, (-2 * d.delta_l1 - nu - 1) / 2, (2 * l1 + 3) / 2.0, x,
                                        trunc.max_terms);
                shell += y * (parity_sign(l2) * g * c1 * c2 * f * std::pow(rg, nu + 2 * d.delta_l1 + 1)) *
                         z[lm_offset(l2, m + m1)];
            }
        }
        if (acc.push(l1, pre * shell)) {
            break;
        }
    }
    if (n_end && L >= 2 * l + *n_end) {
        return acc.finish_exact();
    }
    return acc.finish();
}

/// Coefficients 2 pi / (2^{l+2k} k! (1/2)_{l+k+1}) of
/// e^{a.b} = sum_{l,k} c(l,k) (a b)^{2k} sum_m [Y_l^m(a)]^* Y_l^m(b).
struct TranslationTable
{
    int l_max{0};
    int k_max{0};
    std::vector<double> coeff;  ///< row-major in (l, k)

    double operator()(int l, int k) const
    {
        if (l < 0 || l > l_max || k < 0 || k > k_max) {
            throw DomainError("TranslationTable: index out of range");
        }
        return coeff[static_cast<std::size_t>(l) * (k_max + 1) + k];
    }
};

inline TranslationTable
translation_tensor_terms(int l_max, int k_max)
{
    if (l_max < 0 || k_max < 0) {
        throw DomainError("translation_tensor_terms: need l_max, k_max >= 0");
    }
    TranslationTable t{l_max, k_max, {}};
    t.coeff.reserve(static_cast<std::size_t>(l_max + 1) * (k_max + 1));
    for (int l = 0; l <= l_max; ++l) {
        for (int k = 0; k <= k_max; ++k) {
            double const d = std::ldexp(factorial_double(k), l + 2 * k) * pochhammer(0.5, l + k + 1);
            t.coeff.push_back(2 * std::numbers::pi / d);
        }
    }
    return t;
}

/// e^{a.b} from the translation table, truncated at l + 2k <= order.
inline double
exp_dot_expansion(Vec3 a, Vec3 b, int order)
{
    auto const t  = translation_tensor_terms(order, order / 2);
    auto const ya = regular_solid_table(order, a);
    auto const yb = regular_solid_table(order, b);
    double const s = a.norm2() * b.norm2();
    double sum     = 0;
    for (int l = 0; l <= order; ++l) {
        Complex ang = 0;
        for (int m = -l; m <= l; ++m) {
            ang += std::conj(ya[lm_offset(l, m)]) * yb[lm_offset(l, m)];
        }
        double pk = 1;
        for (int k = 0; l + 2 * k <= order; ++k) {
            sum += t(l, k) * pk * ang.real();
            pk *= s;
        }
    }
    return sum;
}

} // namespace stgo

#endif
