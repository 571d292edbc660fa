/** \file bench.hpp
 *
 *  \brief Timing harness for Gaunt strings and the power-solid addition theorem. Report-only.
 */

#ifndef STGO_BENCH_BENCH_HPP
#define STGO_BENCH_BENCH_HPP

#include <array>
#include <chrono>
#include <cmath>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "stgo/addition/addition.hpp"
#include "stgo/wigner/gaunt.hpp"

namespace stgo::bench {

struct BenchResult
{
    std::string name;
    long long n_items{0};
    double total_ns{0};
    double ns_per_item{0};
    double checksum{0};              ///< depends only on the inputs and seed
    std::optional<double> speedup;   ///< reference time / measured time, when a reference path exists
};

namespace detail {

template <typename Body>
double
time_ns(Body&& body)
{
    auto const t0 = std::chrono::steady_clock::now();
    body();
    return std::chrono::duration<double, std::nano>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace detail

/// Gaunt strings for all l1, l2 <= l_max with one random (m1, m2) each, against per-entry Racah sums.
inline BenchResult
bench_gaunt_strings(int l_max, unsigned seed = 20240607)
{
    if (l_max < 0 || l_max > 60) {
        throw DomainError("bench_gaunt_strings: need 0 <= l_max <= 60");
    }
    std::mt19937 rng(seed);
    std::vector<std::array<int, 4>> queries;
    for (int l1 = 0; l1 <= l_max; ++l1) {
        for (int l2 = 0; l2 <= l_max; ++l2) {
            std::uniform_int_distribution<int> d1(-l1, l1), d2(-l2, l2);
            queries.push_back({l1, d1(rng), l2, d2(rng)});
        }
    }
    BenchResult r;
    r.name           = "gaunt_strings(l_max=" + std::to_string(l_max) + ")";
    double racah_sum = 0;
    r.total_ns       = detail::time_ns([&] {
        for (auto const& [l1, m1, l2, m2] : queries) {
            auto const g = stgo::detail::compute_gaunt_string(l1, m1, l2, m2);
            for (double v : g.values) {
                r.checksum += v;
            }
            r.n_items += static_cast<long long>(g.values.size());
        }
    });
    double const racah_ns = detail::time_ns([&] {
        for (auto const& [l1, m1, l2, m2] : queries) {
            auto const range = coupled_range(l1, m1, l2, m2);
            for (int l = range.l_min; !range.empty() && l <= range.l_max; l += 2) {
                racah_sum += gaunt({l1, m1, l2, m2, l, m1 + m2});
            }
        }
    });
    r.ns_per_item = r.n_items ? r.total_ns / r.n_items : 0;
    r.speedup     = r.total_ns > 0 ? racah_ns / r.total_ns : 0;
    if (std::abs(racah_sum - r.checksum) > 1e-8 * std::max(1.0, std::abs(racah_sum))) {
        throw ConvergenceError("bench_gaunt_strings: recurrence and Racah checksums disagree");
    }
    return r;
}

/// Time to tolerance of power_solid_addition at |r_<|/|r_>| = ratio (m = 0, fixed geometry).
inline BenchResult
bench_addition(double nu, int l, double ratio, double tol)
{
    if (!(ratio > 0 && ratio < 1)) {
        throw DomainError("bench_addition: need 0 < ratio < 1");
    }
    Vec3 const rg{0.36, 0.48, 0.8};
    Vec3 const rl{-0.6 * ratio, 0.0, 0.8 * ratio};
    SplitPair const pair(rl, rg);
    TruncationSpec const trunc{200, tol};
    BenchResult r;
    r.name = "addition(nu=" + std::to_string(nu) + ",l=" + std::to_string(l) + ",ratio=" + std::to_string(ratio) + ")";
    /* repeat until at least 50 ms have elapsed */
    while (r.total_ns < 5e7 && r.n_items < 100000) {
        r.total_ns += detail::time_ns([&] {
            auto const res = power_solid_addition(nu, {l, 0}, pair, trunc);
            r.checksum     = res.value.real() + res.outer_l_used;
        });
        ++r.n_items;
    }
    r.ns_per_item = r.total_ns / r.n_items;
    return r;
}

} // namespace stgo::bench

#endif
