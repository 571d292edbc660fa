/** \file bfunction.hpp
 *
 *  \brief B functions B_{n,l}^m(alpha, r) = [2^{n+l} (n+l)!]^{-1} khat_{n-1/2}(alpha r) Y_l^m(alpha r),
 *         their Fourier transforms, and the identities that act on them by index arithmetic alone.
 *
 *  Indices with n + l < 0 are distributional: they are kept as symbols in expansions (the ladder
 *  and binomial identities hold for them too) but never evaluated pointwise.
 */

#ifndef STGO_BFUN_BFUNCTION_HPP
#define STGO_BFUN_BFUNCTION_HPP

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "stgo/core/bessel.hpp"
#include "stgo/core/combinatorics.hpp"
#include "stgo/gradient/tensor.hpp"
#include "stgo/harmonics/polynomial.hpp"
#include "stgo/harmonics/spherical.hpp"
#include "stgo/wigner/gaunt.hpp"

namespace stgo {

struct BIndex
{
    int n{0};
    int l{0};
    int m{0};
    double alpha{1};

    BIndex() = default;
    BIndex(int n_, int l_, int m_, double alpha_)
        : n(n_)
        , l(l_)
        , m(m_)
        , alpha(alpha_)
    {
        if (l < 0 || std::abs(m) > l) {
            throw DomainError("BIndex: need l >= 0 and |m| <= l");
        }
        if (!(alpha > 0)) {
            throw DomainError("BIndex: alpha must be positive");
        }
    }

    /// Classical function (n + l >= 0) as opposed to a derivative of the delta function.
    bool classical() const
    {
        return n + l >= 0;
    }

    friend bool operator==(BIndex const&, BIndex const&) = default;
};

namespace detail {

/// 1 / (2^k k!) for k >= 0, exact up to 170! and in log space beyond.
inline double
b_normalization(int k)
{
    if (k <= 170) {
        return std::ldexp(1.0 / factorial_double(k), -k);
    }
    return std::exp(-k * std::numbers::ln2 - std::lgamma(k + 1.0));
}

} // namespace detail

/// B_{n,l}^m(alpha, r).
inline Complex
b_value(BIndex const& b, Vec3 r)
{
    if (!b.classical()) {
        throw DistributionalError("b_value: B_{" + std::to_string(b.n) + "," + std::to_string(b.l) +
                                  "} with n + l < 0 has no pointwise value");
    }
    double const norm = detail::b_normalization(b.n + b.l);
    double const rr   = r.norm();
    if (rr == 0) {
        /* khat_{n-1/2}(z) Y_l(alpha r) behaves as r^{2n-1+l} when n <= 0 */
        if (b.n >= 1) {
            return b.l == 0 ? norm * bessel_polynomial_theta(b.n - 1, 0.0) / std::sqrt(4 * std::numbers::pi) : 0.0;
        }
        if (2 * b.n - 1 + b.l > 0) {
            return 0.0;
        }
        throw SingularityError("b_value: B function is singular or direction dependent at the origin");
    }
    return norm * khat(b.n - 0.5, b.alpha * rr) * regular_solid({b.l, b.m}, b.alpha * r);
}

/// Fourier transform (2/pi)^{1/2} alpha^{2n+l-1} / (alpha^2 + p^2)^{n+l+1} Y_l^m(-i p).
inline Complex
b_fourier(BIndex const& b, Vec3 p)
{
    double const a = b.alpha;
    CVec3 const mip{Complex(0, -p.x), Complex(0, -p.y), Complex(0, -p.z)};
    Complex const y = regular_solid_poly({b.l, b.m})(mip);
    return std::sqrt(2 / std::numbers::pi) * std::pow(a, 2 * b.n + b.l - 1) *
           std::pow(a * a + p.norm2(), -(b.n + b.l + 1)) * y;
}

struct BTerm
{
    double coeff;
    BIndex index;
};

/// Finite linear combination of B functions sharing one alpha.
class BExpansion
{
  public:
    std::vector<BTerm> terms;

    /// Add a term, merging with an identical index; exact zeros are dropped.
    void add(double c, BIndex const& b)
    {
        if (!terms.empty() && b.alpha != terms.front().index.alpha) {
            throw DomainError("BExpansion: all terms must share alpha");
        }
        for (auto it = terms.begin(); it != terms.end(); ++it) {
            if (it->index == b) {
                it->coeff += c;
                if (it->coeff == 0.0) {
                    terms.erase(it);
                }
                return;
            }
        }
        if (c != 0.0) {
            terms.push_back({c, b});
        }
    }

    void append(BExpansion const& o, double scale = 1.0)
    {
        for (auto const& t : o.terms) {
            add(scale * t.coeff, t.index);
        }
    }

    /// True when some term is a distributional B function.
    bool distributional() const
    {
        for (auto const& t : terms) {
            if (!t.index.classical()) {
                return true;
            }
        }
        return false;
    }

    Complex operator()(Vec3 r) const
    {
        Complex sum = 0;
        for (auto const& t : terms) {
            sum += t.coeff * b_value(t.index, r);
        }
        return sum;
    }

    Complex fourier(Vec3 p) const
    {
        Complex sum = 0;
        for (auto const& t : terms) {
            sum += t.coeff * b_fourier(t.index, p);
        }
        return sum;
    }

    /// The same function as a tensor expansion sum c khat_{n-1/2}(alpha r) r^l Y_l^m.
    TensorExpansion as_tensor() const
    {
        TensorExpansion out;
        for (auto const& t : terms) {
            BIndex const& b = t.index;
            if (!b.classical()) {
                throw DistributionalError("as_tensor: distributional B function");
            }
            double const c = t.coeff * detail::b_normalization(b.n + b.l) * std::pow(b.alpha, b.l);
            out.terms.push_back({c, RadialExpr::bessel(b.n - 0.5, b.alpha).times_power(b.l), {b.l, b.m}});
        }
        return out;
    }
};

/// [1 - alpha^{-2} nabla^2] B_{n,l}^m = B_{n-1,l}^m.
inline BExpansion
helmholtz_ladder(BIndex const& b)
{
    BExpansion out;
    out.add(1.0, {b.n - 1, b.l, b.m, b.alpha});
    return out;
}

inline BExpansion
helmholtz_ladder(BExpansion const& e)
{
    BExpansion out;
    for (auto const& t : e.terms) {
        out.append(helmholtz_ladder(t.index), t.coeff);
    }
    return out;
}

/// alpha^{-2 nu} nabla^{2 nu} B_{n,l}^m = sum_t (-1)^t C(nu, t) B_{n-t,l}^m.
inline BExpansion
laplacian_power(BIndex const& b, int nu)
{
    if (nu < 0) {
        throw DomainError("laplacian_power: nu must be non-negative");
    }
    BExpansion out;
    for (int t = 0; t <= nu; ++t) {
        out.add(parity_sign(t) * to_double(binomial(nu, t)), {b.n - t, b.l, b.m, b.alpha});
    }
    return out;
}

/// Y_l^m(nabla) B_{N,0}^0 = coeff * B_{N-l,l}^m with coeff = (-alpha)^l (4 pi)^{-1/2}.
inline BTerm
stgo_on_scalar_b(LMIndex op, int n_plus_l, double alpha)
{
    return {std::pow(-alpha, op.l) / std::sqrt(4 * std::numbers::pi), BIndex{n_plus_l - op.l, op.l, op.m, alpha}};
}

/// Y_{l1}^{m1}(nabla) B_{n2,l2}^{m2} as a B-function expansion.
inline BExpansion
stgo_on_b(LMIndex op, BIndex const& target)
{
    BExpansion out;
    double const pre = std::pow(-target.alpha, op.l);
    auto const g     = gaunt_string(op.l, op.m, target.l, target.m);
    for (int l = g->range.l_min; l <= g->range.l_max; l += 2) {
        double const G = (*g)(l);
        if (G == 0.0) {
            continue;
        }
        int const dl = (op.l + target.l - l) / 2;
        for (int t = 0; t <= dl; ++t) {
            out.add(pre * G * parity_sign(t) * to_double(binomial(dl, t)),
                    {target.n + target.l - l - t, l, op.m + target.m, target.alpha});
        }
    }
    return out;
}

/// Convolution  int B_a(r - r') B_b(r') d^3 r'  for equal scaling parameters.
inline BExpansion
convolve(BIndex const& a, BIndex const& b)
{
    if (a.alpha != b.alpha) {
        throw UnsupportedError("convolve: only equal scaling parameters are supported");
    }
    double const alpha = a.alpha;
    double const pre   = 4 * std::numbers::pi / (alpha * alpha * alpha);
    BExpansion out;
    auto const g = gaunt_string(a.l, a.m, b.l, b.m);
    for (int l = g->range.l_min; l <= g->range.l_max; l += 2) {
        double const G = (*g)(l);
        if (G == 0.0) {
            continue;
        }
        int const dl = (a.l + b.l - l) / 2;
        for (int t = 0; t <= dl; ++t) {
            out.add(pre * G * parity_sign(t) * to_double(binomial(dl, t)),
                    {a.n + b.n + a.l + b.l - l - t + 1, l, a.m + b.m, alpha});
        }
    }
    return out;
}

/// One side-by-side identity check; residual = |lhs - rhs| / max(|lhs|, |rhs|).
struct IdentityCheck
{
    Complex lhs;
    Complex rhs;
    double residual;
};

/// The three momentum-space functional equations.
struct FunctionalResiduals
{
    IdentityCheck lowering;  ///< Bbar_n = alpha^2/(alpha^2+p^2) Bbar_{n-1}
    IdentityCheck tensor;    ///< Bbar_{n,l} = (4 pi)^{1/2} alpha^{-l} Y_l^m(-ip) Bbar_{n+l,0}
    IdentityCheck delta;     ///< Bbar_{-1,0}^0 = alpha^{-3} (2 pi^2)^{-1/2}
};

inline FunctionalResiduals
b_fourier_functional_check(BIndex const& b, Vec3 p)
{
    auto check = [](Complex lhs, Complex rhs) {
        double const s = std::max(std::abs(lhs), std::abs(rhs));
        return IdentityCheck{lhs, rhs, s == 0 ? 0.0 : std::abs(lhs - rhs) / s};
    };
    double const a  = b.alpha;
    double const p2 = p.norm2();
    Complex const v = b_fourier(b, p);

    CVec3 const mip{Complex(0, -p.x), Complex(0, -p.y), Complex(0, -p.z)};
    Complex const y = regular_solid_poly({b.l, b.m})(mip);
    return {
        check(v, a * a / (a * a + p2) * b_fourier({b.n - 1, b.l, b.m, a}, p)),
        check(v, std::sqrt(4 * std::numbers::pi) * std::pow(a, -b.l) * y * b_fourier({b.n + b.l, 0, 0, a}, p)),
        check(b_fourier({-1, 0, 0, a}, p), std::pow(a, -3) / std::sqrt(2 * std::numbers::pi * std::numbers::pi)),
    };
}

} // namespace stgo

#endif
