/** \file finite_difference.hpp
 *
 *  \brief Central finite-difference weights (Fornberg's algorithm).
 */

#ifndef STGO_CORE_FINITE_DIFFERENCE_HPP
#define STGO_CORE_FINITE_DIFFERENCE_HPP

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "stgo/core/errors.hpp"

namespace stgo {

/// Weights w_j, j = -s..s, such that f^(d)(0) ~ h^{-d} sum_j w_j f(j h) with error O(h^accuracy).
struct CentralStencil
{
    int half_width{0};
    std::vector<long double> weights;
};

namespace detail {

/// Fornberg (1988): weights for derivative order d at x0 = 0 on the grid nodes x.
inline std::vector<long double>
fornberg(int d, std::vector<long double> const& x)
{
    int const n = static_cast<int>(x.size());
    std::vector<std::vector<long double>> c(n, std::vector<long double>(d + 1, 0.0));
    long double c1 = 1.0;
    long double c4 = x[0];
    c[0][0]   = 1.0;
    for (int i = 1; i < n; ++i) {
        int const mn = std::min(i, d);
        long double c2    = 1.0;
        long double const c5 = c4;
        c4              = x[i];
        for (int j = 0; j < i; ++j) {
            long double const c3 = x[i] - x[j];
            c2 *= c3;
            if (j == i - 1) {
                for (int k = mn; k >= 1; --k) {
                    c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
                }
                c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
            }
            for (int k = mn; k >= 1; --k) {
                c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3;
            }
            c[j][0] = c4 * c[j][0] / c3;
        }
        c1 = c2;
    }
    std::vector<long double> w(n);
    for (int i = 0; i < n; ++i) {
        w[i] = c[i][d];
    }
    return w;
}

} // namespace detail

/// Central stencil for the d-th derivative with even accuracy order.
inline CentralStencil const&
central_stencil(int d, int accuracy)
{
    if (d < 0 || accuracy < 2 || accuracy % 2) {
        throw DomainError("central_stencil: need d >= 0 and an even accuracy >= 2");
    }
    static std::map<std::pair<int, int>, CentralStencil> cache;
    static std::mutex mtx;
    std::lock_guard lock(mtx);
    auto key = std::make_pair(d, accuracy);
    if (auto it = cache.find(key); it != cache.end()) {
        return it->second;
    }
    CentralStencil s;
    s.half_width = (d + 1) / 2 - 1 + accuracy / 2;
    if (d == 0) {
        s.half_width = 0;
    }
    std::vector<long double> x;
    for (int j = -s.half_width; j <= s.half_width; ++j) {
        x.push_back(j);
    }
    s.weights = detail::fornberg(d, x);
    return cache.emplace(key, std::move(s)).first->second;
}

} // namespace stgo

#endif
