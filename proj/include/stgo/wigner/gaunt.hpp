/** \file gaunt.hpp
 *
 *  \brief Gaunt coefficients, their selection-rule summation limits, and a bounded memo of strings.
 *
 *  Notation: <l3 m3|l2 m2|l1 m1> is the integral of [Y_l3^m3]^* Y_l2^m2 Y_l1^m1 over the unit
 *  sphere. A product of two spherical harmonics linearizes as
 *  Y_l1^m1 Y_l2^m2 = sum_l <l m1+m2|l1 m1|l2 m2> Y_l^{m1+m2}, l in coupled_range(l1, m1, l2, m2).
 */

#ifndef STGO_WIGNER_GAUNT_HPP
#define STGO_WIGNER_GAUNT_HPP

#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <shared_mutex>
#include <tuple>
#include <vector>

#include "stgo/core/errors.hpp"
#include "stgo/wigner/racah.hpp"
#include "stgo/wigner/string.hpp"

namespace stgo {

/// Arguments of <l3 m3|l2 m2|l1 m1>.
struct GauntQuery
{
    int l1{0}, m1{0}, l2{0}, m2{0}, l3{0}, m3{0};
};

/// l = l_min, l_min + 2, ..., l_max.
struct CoupledRange
{
    int l_min{0};
    int l_max{-1};
    int step{2};

    bool empty() const
    {
        return l_min > l_max;
    }
    bool contains(int l) const
    {
        return l >= l_min && l <= l_max && (l - l_min) % 2 == 0;
    }
    int size() const
    {
        return empty() ? 0 : (l_max - l_min) / 2 + 1;
    }
};

/// Summation limits of the coupled l in Y_l1^m1 Y_l2^m2 = sum_l ... Y_l^{m1+m2}.
inline CoupledRange
coupled_range(int l1, int m1, int l2, int m2)
{
    CoupledRange r;
    r.l_max           = l1 + l2;
    int const lam_min = std::max(std::abs(l1 - l2), std::abs(m1 + m2));
    r.l_min           = ((r.l_max + lam_min) % 2 == 0) ? lam_min : lam_min + 1;
    return r;
}

/// Delta l = (l1+l2-l)/2, Delta l1 = (l-l1+l2)/2, Delta l2 = (l+l1-l2)/2, sigma = (l1+l2+l)/2.
struct DeltaQuantities
{
    int delta_l{0};
    int delta_l1{0};
    int delta_l2{0};
    int sigma_l{0};
};

inline DeltaQuantities
delta_quantities(int l1, int l2, int l)
{
    if ((l1 + l2 + l) % 2 != 0) {
        throw DomainError("delta_quantities: l1 + l2 + l must be even");
    }
    if (!triangle(l1, l2, l)) {
        throw DomainError("delta_quantities: triangle condition violated");
    }
    return {(l1 + l2 - l) / 2, (l - l1 + l2) / 2, (l + l1 - l2) / 2, (l1 + l2 + l) / 2};
}

/// (4 pi)^{1/2} <l3 m3|l2 m2|l1 m1> as sign * sqrt(exact rational).
inline SignedSqrt
gaunt_exact(GauntQuery const& q)
{
    if (q.m3 != q.m1 + q.m2 || (q.l1 + q.l2 + q.l3) % 2 != 0 || !triangle(q.l1, q.l2, q.l3)) {
        return {};
    }
    auto const a = wigner3j_exact(q.l1, q.l2, q.l3, 0, 0, 0);
    auto const b = wigner3j_exact(q.l1, q.l2, q.l3, q.m1, q.m2, -q.m3);
    if (a.sign == 0 || b.sign == 0) {
        return {};
    }
    return {parity_sign(q.m3) * a.sign * b.sign,
            Rational((2 * q.l1 + 1) * (2 * q.l2 + 1) * (2 * q.l3 + 1)) * a.square * b.square};
}

/// <l3 m3|l2 m2|l1 m1>; zero on any selection-rule violation.
inline double
gaunt(GauntQuery const& q)
{
    auto const g = gaunt_exact(q);
    return g.sign == 0 ? 0.0 : g.sign * std::sqrt(to_double(g.square) / (4.0 * std::numbers::pi));
}

/// <l m1+m2|l1 m1|l2 m2> for all l in coupled_range(l1, m1, l2, m2).
struct GauntString
{
    CoupledRange range;
    std::vector<double> values; ///< values[k] belongs to l = range.l_min + 2k

    double operator()(int l) const
    {
        return range.contains(l) ? values[(l - range.l_min) / 2] : 0.0;
    }
};

namespace detail {

inline GauntString
compute_gaunt_string(int l1, int m1, int l2, int m2)
{
    GauntString g;
    g.range = coupled_range(l1, m1, l2, m2);
    if (g.range.empty()) {
        return g;
    }
    int const M = m1 + m2;
    /* 3j(l l1 l2; -M m1 m2) = 3j(l1 l2 l; m1 m2 -M) by cyclic symmetry */
    auto const s0 = wigner3j_string(l1, l2, 0, 0);
    auto const sm = wigner3j_string(l1, l2, m1, m2);
    double const c = std::sqrt((2 * l1 + 1) * (2 * l2 + 1) / (4.0 * std::numbers::pi)) * parity_sign(M);
    for (int l = g.range.l_min; l <= g.range.l_max; l += 2) {
        g.values.push_back(c * std::sqrt(2.0 * l + 1.0) * s0(l) * sm(l));
    }
    return g;
}

/// Bounded memo: readers share, writers serialize, eviction drops the least recently used entry.
class GauntMemo
{
  public:
    static constexpr std::size_t capacity = 4096;

    std::shared_ptr<GauntString const> get(int l1, int m1, int l2, int m2)
    {
        Key const key{l1, m1, l2, m2};
        {
            std::shared_lock lock(mtx_);
            if (auto it = table_.find(key); it != table_.end()) {
                it->second.tick->store(clock_.fetch_add(1, std::memory_order_relaxed), std::memory_order_relaxed);
                return it->second.value;
            }
        }
        auto value = std::make_shared<GauntString const>(compute_gaunt_string(l1, m1, l2, m2));
        std::unique_lock lock(mtx_);
        if (table_.size() >= capacity) {
            auto victim = table_.begin();
            for (auto it = table_.begin(); it != table_.end(); ++it) {
                if (it->second.tick->load(std::memory_order_relaxed) < victim->second.tick->load(std::memory_order_relaxed)) {
                    victim = it;
                }
            }
            table_.erase(victim);
        }
        Entry e{value, std::make_unique<std::atomic<std::uint64_t>>(clock_.fetch_add(1))};
        return table_.try_emplace(key, std::move(e)).first->second.value;
    }

    std::size_t size() const
    {
        std::shared_lock lock(mtx_);
        return table_.size();
    }

  private:
    using Key = std::tuple<int, int, int, int>;
    struct Entry
    {
        std::shared_ptr<GauntString const> value;
        std::unique_ptr<std::atomic<std::uint64_t>> tick;
    };
    mutable std::shared_mutex mtx_;
    std::map<Key, Entry> table_;
    std::atomic<std::uint64_t> clock_{0};
};

inline GauntMemo&
gaunt_memo()
{
    static GauntMemo memo;
    return memo;
}

} // namespace detail

/// All <l m1+m2|l1 m1|l2 m2> along coupled_range(l1, m1, l2, m2), built from two 3jm strings.
inline std::shared_ptr<GauntString const>
gaunt_string(int l1, int m1, int l2, int m2)
{
    if (l1 < 0 || l2 < 0 || std::abs(m1) > l1 || std::abs(m2) > l2) {
        throw DomainError("gaunt_string: invalid (l, m)");
    }
    return detail::gaunt_memo().get(l1, m1, l2, m2);
}

/// Linearization coefficient <l m1+m2|l1 m1|l2 m2> from the memoized string.
inline double
gaunt_lin(int l, int l1, int m1, int l2, int m2)
{
    return (*gaunt_string(l1, m1, l2, m2))(l);
}

} // namespace stgo

#endif
