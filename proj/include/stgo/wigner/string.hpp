/** \file string.hpp
 *
 *  \brief Whole strings of 3jm symbols by the Schulten-Gordon three-term recurrence.
 */

#ifndef STGO_WIGNER_STRING_HPP
#define STGO_WIGNER_STRING_HPP

#include <cmath>
#include <cstdlib>
#include <utility>
#include <vector>

#include "stgo/core/combinatorics.hpp"
#include "stgo/wigner/racah.hpp"

namespace stgo {

/// Values 3j(l1 l2 l3; m1 m2 m3) for l1 = l1_min .. l2 + l3, with m1 = -m2 - m3.
struct ThreeJString
{
    int l1_min{0};
    int l1_max{-1};
    std::vector<double> values;

    bool empty() const
    {
        return values.empty();
    }
    /// Value at l1, zero outside the stored range.
    double operator()(int l1) const
    {
        return (l1 < l1_min || l1 > l1_max) ? 0.0 : values[l1 - l1_min];
    }
};

namespace detail {

/* the runs are carried in long double: the match and normalization lose a few digits */
struct SchultenGordon
{
    long double l2, l3, m1, m2, m3;

    long double A(int l1) const
    {
        long double const j = l1;
        long double const v = (j * j - (l2 - l3) * (l2 - l3)) * ((l2 + l3 + 1) * (l2 + l3 + 1) - j * j) * (j * j - m1 * m1);
        return std::sqrt(std::max(v, 0.0L));
    }
    long double B(int l1) const
    {
        long double const j = l1;
        return -(2 * j + 1) * (l2 * (l2 + 1) * m1 - l3 * (l3 + 1) * m1 - j * (j + 1) * (m3 - m2));
    }
};

/// f(i)^2 + f(i-1)^2: a growth measure that is not fooled by parity zeros.
inline long double
envelope(std::vector<long double> const& f, int i)
{
    return f[i] * f[i] + f[i - 1] * f[i - 1];
}

inline void
rescale_if_large(std::vector<long double>& v, int from, int to)
{
    long double big = 0;
    for (int i = from; i <= to; ++i) {
        big = std::max(big, std::abs(v[i]));
    }
    if (big > 1e150) {
        for (int i = from; i <= to; ++i) {
            v[i] /= big;
        }
    }
}

} // namespace detail

/// All 3j(l1 l2 l3; -m2-m3, m2, m3) over the allowed l1 range.
/**
 *  The recurrence is launched from both ends, each run stopping once it enters the classically
 *  allowed region (where its magnitude stops growing). The two pieces are matched by least squares
 *  over a three-point overlap and normalized by sum (2 l1 + 1) f^2 = 1; the overall sign is fixed
 *  at l1 = l2 + l3. Strings shorter than three entries come from the Racah sum.
 */
inline ThreeJString
wigner3j_string(int l2, int l3, int m2, int m3)
{
    ThreeJString out;
    int const m1 = -m2 - m3;
    if (l2 < 0 || l3 < 0 || std::abs(m2) > l2 || std::abs(m3) > l3) {
        return out;
    }
    int const lmin = std::max(std::abs(l2 - l3), std::abs(m1));
    int const lmax = l2 + l3;
    if (lmin > lmax) {
        return out;
    }
    out.l1_min = lmin;
    out.l1_max = lmax;
    int const n = lmax - lmin + 1;
    out.values.assign(n, 0.0);
    if (n <= 2) {
        for (int l1 = lmin; l1 <= lmax; ++l1) {
            out.values[l1 - lmin] = wigner3j(l1, l2, l3, m1, m2, m3);
        }
        return out;
    }
    detail::SchultenGordon const sg{(long double)l2, (long double)l3, (long double)m1, (long double)m2, (long double)m3};

    /* forward run */
    std::vector<long double> fw(n, 0.0L);
    fw[0] = 1.0;
    if (lmin == 0) {
        /* the l1 = 0 equation is empty: seed the ratio f(1)/f(0) from exact values */
        long double const f0 = wigner3j(0, l2, l3, m1, m2, m3);
        long double const f1 = wigner3j(1, l2, l3, m1, m2, m3);
        fw[1]                = f1 / f0;
    } else {
        fw[1] = -sg.B(lmin) * fw[0] / (lmin * sg.A(lmin + 1));
    }
    int lf = lmin + 1;
    for (int l = lmin + 1; l < lmax; ++l) {
        if (l > lmin + 1 && detail::envelope(fw, l - lmin) < detail::envelope(fw, l - 1 - lmin)) {
            break;
        }
        fw[l + 1 - lmin] = -(sg.B(l) * fw[l - lmin] + (l + 1) * sg.A(l) * fw[l - 1 - lmin]) / (l * sg.A(l + 1));
        lf               = l + 1;
        detail::rescale_if_large(fw, 0, l + 1 - lmin);
    }

    /* backward run */
    std::vector<long double> bw(n, 0.0L);
    bw[n - 1] = 1.0;
    bw[n - 2] = -sg.B(lmax) * bw[n - 1] / ((lmax + 1) * sg.A(lmax));
    int lb    = lmax - 1;
    for (int l = lmax - 1; l > lmin; --l) {
        if (l < lmax - 1 && detail::envelope(bw, l - lmin + 1) < detail::envelope(bw, l - lmin + 2)) {
            break;
        }
        bw[l - 1 - lmin] = -(l * sg.A(l + 1) * bw[l + 1 - lmin] + sg.B(l) * bw[l - lmin]) / ((l + 1) * sg.A(l));
        lb               = l - 1;
        detail::rescale_if_large(bw, l - 1 - lmin, n - 1);
    }

    /* choose a match point with a three-point overlap and extend both runs to it */
    int lm = (lf + lb) / 2;
    lm     = std::clamp(lm, lmin + 1, lmax - 1);
    for (int l = lf; l <= lm; ++l) {
        fw[l + 1 - lmin] = -(sg.B(l) * fw[l - lmin] + (l + 1) * sg.A(l) * fw[l - 1 - lmin]) / (l * sg.A(l + 1));
        detail::rescale_if_large(fw, 0, l + 1 - lmin);
    }
    for (int l = lb; l >= lm; --l) {
        bw[l - 1 - lmin] = -(l * sg.A(l + 1) * bw[l + 1 - lmin] + sg.B(l) * bw[l - lmin]) / ((l + 1) * sg.A(l));
        detail::rescale_if_large(bw, l - 1 - lmin, n - 1);
    }
    long double num = 0, den = 0;
    for (int l = lm - 1; l <= lm + 1; ++l) {
        num += fw[l - lmin] * bw[l - lmin];
        den += bw[l - lmin] * bw[l - lmin];
    }
    long double const s = num / den;
    std::vector<long double> full(n);
    for (int l = lmin; l <= lmax; ++l) {
        full[l - lmin] = (l <= lm) ? fw[l - lmin] : s * bw[l - lmin];
    }
    long double norm = 0;
    for (int l = lmin; l <= lmax; ++l) {
        norm += (2 * l + 1) * full[l - lmin] * full[l - lmin];
    }
    long double scale = 1.0L / std::sqrt(norm);
    if ((full[n - 1] > 0) != (parity_sign(l2 - l3 + m2 + m3) > 0)) {
        scale = -scale;
    }
    for (int i = 0; i < n; ++i) {
        out.values[i] = static_cast<double>(full[i] * scale);
    }
    return out;
}

} // namespace stgo

#endif
