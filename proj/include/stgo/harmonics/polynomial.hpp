/** \file polynomial.hpp
 *
 *  \brief Solid harmonics as explicit homogeneous polynomials with exact coefficients.
 */

#ifndef STGO_HARMONICS_POLYNOMIAL_HPP
#define STGO_HARMONICS_POLYNOMIAL_HPP

#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <shared_mutex>

#include "stgo/core/combinatorics.hpp"
#include "stgo/harmonics/vec3.hpp"

namespace stgo {

/// Gaussian rational a + ib with a, b exact.
struct ComplexRational
{
    Rational re{0};
    Rational im{0};

    bool is_zero() const
    {
        return re == 0 && im == 0;
    }

    ComplexRational& operator+=(ComplexRational const& o)
    {
        re += o.re;
        im += o.im;
        return *this;
    }
    friend ComplexRational operator*(ComplexRational const& a, ComplexRational const& b)
    {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend ComplexRational operator*(Rational const& s, ComplexRational const& a)
    {
        return {s * a.re, s * a.im};
    }
    Complex to_complex() const
    {
        return {to_double(re), to_double(im)};
    }
};

/// i^k as a Gaussian rational.
inline ComplexRational
i_power(int k)
{
    switch (((k % 4) + 4) % 4) {
        case 0:
            return {1, 0};
        case 1:
            return {0, 1};
        case 2:
            return {-1, 0};
        default:
            return {0, -1};
    }
}

using Exponents = std::array<int, 3>;

/// Homogeneous polynomial sum_{a+b+c=degree} c_abc x^a y^b z^c.
/**
 *  Every coefficient is scale() times an exact Gaussian rational, with
 *  scale() = sqrt(radicand) (4 pi)^{-inv_sqrt_4pi / 2}.
 */
class HarmonicPolynomial
{
  public:
    int degree{0};
    std::map<Exponents, ComplexRational> terms;
    Rational radicand{1};
    int inv_sqrt_4pi{0};

    HarmonicPolynomial() = default;

    explicit HarmonicPolynomial(int degree__)
        : degree(degree__)
    {
    }

    double scale() const
    {
        return std::sqrt(to_double(radicand)) * std::pow(4.0 * std::numbers::pi, -0.5 * inv_sqrt_4pi);
    }

    /// Add c x^a y^b z^c (exact part); the monomial must have the polynomial's degree.
    void add(Exponents e, ComplexRational const& c)
    {
        if (e[0] + e[1] + e[2] != degree || e[0] < 0 || e[1] < 0 || e[2] < 0) {
            throw DomainError("HarmonicPolynomial: monomial of wrong degree");
        }
        auto& slot = terms[e];
        slot += c;
        if (slot.is_zero()) {
            terms.erase(e);
        }
    }

    /// Floating-point coefficient of a monomial.
    Complex coefficient(Exponents e) const
    {
        auto it = terms.find(e);
        return it == terms.end() ? Complex(0) : it->second.to_complex() * scale();
    }

    template <typename T>
    Complex evaluate_at(T x, T y, T z) const
    {
        Complex sum = 0;
        for (auto const& [e, c] : terms) {
            Complex mono = c.to_complex();
            for (int k = 0; k < e[0]; ++k) {
                mono *= x;
            }
            for (int k = 0; k < e[1]; ++k) {
                mono *= y;
            }
            for (int k = 0; k < e[2]; ++k) {
                mono *= z;
            }
            sum += mono;
        }
        return sum * scale();
    }

    Complex operator()(Vec3 r) const
    {
        return evaluate_at(r.x, r.y, r.z);
    }
    Complex operator()(CVec3 r) const
    {
        return evaluate_at(r.x, r.y, r.z);
    }

    /// Formal Laplacian (degree - 2), exact.
    HarmonicPolynomial laplacian() const
    {
        HarmonicPolynomial out(std::max(degree - 2, 0));
        out.radicand     = radicand;
        out.inv_sqrt_4pi = inv_sqrt_4pi;
        if (degree < 2) {
            return out;
        }
        for (auto const& [e, c] : terms) {
            for (int d = 0; d < 3; ++d) {
                if (e[d] >= 2) {
                    Exponents f = e;
                    f[d] -= 2;
                    out.add(f, Rational(e[d] * (e[d] - 1)) * c);
                }
            }
        }
        return out;
    }

    bool is_zero() const
    {
        return terms.empty();
    }

    friend HarmonicPolynomial operator*(HarmonicPolynomial const& a, HarmonicPolynomial const& b)
    {
        HarmonicPolynomial out(a.degree + b.degree);
        out.radicand     = a.radicand * b.radicand;
        out.inv_sqrt_4pi = a.inv_sqrt_4pi + b.inv_sqrt_4pi;
        for (auto const& [ea, ca] : a.terms) {
            for (auto const& [eb, cb] : b.terms) {
                out.add({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
            }
        }
        return out;
    }
};

/// True iff the formal Laplacian of p vanishes identically (exact arithmetic).
inline bool
laplacian_check(HarmonicPolynomial const& p)
{
    return p.laplacian().is_zero();
}

namespace detail {

inline HarmonicPolynomial
build_regular_solid_poly(int l, int m)
{
    HarmonicPolynomial p(l);
    p.radicand     = Rational(BigInt(2 * l + 1) * factorial(l + m) * factorial(l - m));
    p.inv_sqrt_4pi = 1;
    /* (-x-iy)^{m+k} (x-iy)^k z^{l-m-2k} / (2^{m+2k} (m+k)! k! (l-m-2k)!) */
    for (int k = std::max(0, -m); l - m - 2 * k >= 0; ++k) {
        int const a = m + k;
        Rational const denom(BigInt(1) << (m + 2 * k));
        Rational const base = Rational(parity_sign(a)) /
                              (denom * Rational(factorial(a) * factorial(k) * factorial(l - m - 2 * k)));
        for (int j = 0; j <= a; ++j) {
            for (int jp = 0; jp <= k; ++jp) {
                /* x^{a-j} (iy)^j from (x+iy)^a, x^{k-jp} (-iy)^{jp} from (x-iy)^k */
                Rational const bin = Rational(binomial(a, j) * binomial(k, jp)) * base;
                ComplexRational c  = i_power(j) * i_power(3 * jp);
                p.add({a - j + k - jp, j + jp, l - m - 2 * k}, bin * c);
            }
        }
    }
    return p;
}

} // namespace detail

/// The regular solid harmonic as an explicit polynomial; cached process-wide.
inline HarmonicPolynomial const&
regular_solid_poly(LMIndex idx)
{
    static std::map<LMIndex, HarmonicPolynomial> cache;
    static std::shared_mutex mtx;
    {
        std::shared_lock lock(mtx);
        if (auto it = cache.find(idx); it != cache.end()) {
            return it->second;
        }
    }
    auto poly = detail::build_regular_solid_poly(idx.l, idx.m);
    std::unique_lock lock(mtx);
    /* std::map nodes are stable; a racing insert keeps the first one */
    return cache.emplace(idx, std::move(poly)).first->second;
}

} // namespace stgo

#endif
