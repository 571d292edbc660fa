#include <cmath>
#include <numbers>
#include <random>
#include <thread>

#include <gtest/gtest.h>

#include "stgo/harmonics/spherical.hpp"
#include "stgo/oracles/quadrature.hpp"
#include "stgo/wigner/gaunt.hpp"
#include "stgo/wigner/racah.hpp"
#include "stgo/wigner/string.hpp"

using namespace stgo;
using std::numbers::pi;

TEST(ThreeJ, SingleValues)
{
    EXPECT_DOUBLE_EQ(wigner3j(0, 0, 0, 0, 0, 0), 1.0);
    EXPECT_NEAR(wigner3j(1, 1, 0, 1, -1, 0), 1 / std::sqrt(3.0), 1e-15);
    EXPECT_EQ(wigner3j(1, 1, 3, 0, 0, 0), 0.0);
    EXPECT_EQ(wigner3j(2, 2, 2, 1, 1, 1), 0.0);
    /* 3j(1 1 2; 0 0 0) = sqrt(2/15) */
    EXPECT_NEAR(wigner3j(1, 1, 2, 0, 0, 0), std::sqrt(2.0 / 15.0), 1e-16);
    auto const e = wigner3j_exact(1, 1, 2, 0, 0, 0);
    EXPECT_EQ(e.square, Rational(2, 15));
}

TEST(ThreeJString, Trivial)
{
    auto const s = wigner3j_string(0, 0, 0, 0);
    ASSERT_EQ(s.values.size(), 1u);
    EXPECT_DOUBLE_EQ(s.values[0], 1.0);
}

TEST(ThreeJString, ParityWithZeroMRow)
{
    auto const s = wigner3j_string(5, 5, 0, 0);
    ASSERT_EQ(s.values.size(), 11u);
    for (int l1 = 0; l1 <= 10; ++l1) {
        double const ref = wigner3j(l1, 5, 5, 0, 0, 0);
        if (l1 % 2) {
            EXPECT_NEAR(s(l1), 0.0, 1e-15);
        } else {
            EXPECT_NE(s(l1), 0.0);
            EXPECT_NEAR(s(l1), ref, 1e-13 * std::abs(ref));
        }
    }
}

TEST(ThreeJString, MatchesRacahUpTo25)
{
    std::mt19937 rng(5);
    for (int l2 = 0; l2 <= 25; ++l2) {
        for (int l3 = 0; l3 <= 25; ++l3) {
            std::uniform_int_distribution<int> d2(-l2, l2), d3(-l3, l3);
            for (int trial = 0; trial < 2; ++trial) {
                int const m2 = d2(rng), m3 = d3(rng);
                auto const s = wigner3j_string(l2, l3, m2, m3);
                double sum   = 0;
                for (int l1 = s.l1_min; l1 <= s.l1_max; ++l1) {
                    double const ref = wigner3j(l1, l2, l3, -m2 - m3, m2, m3);
                    ASSERT_NEAR(s(l1), ref, 1e-12 * std::abs(ref) + 1e-15)
                        << l1 << " " << l2 << " " << l3 << " " << m2 << " " << m3;
                    sum += (2 * l1 + 1) * s(l1) * s(l1);
                }
                EXPECT_NEAR(sum, 1.0, 1e-12);
            }
        }
    }
}

TEST(ThreeJString, LongString)
{
    auto const s = wigner3j_string(20, 20, 3, -7);
    for (int l1 = s.l1_min; l1 <= s.l1_max; ++l1) {
        double const ref = wigner3j(l1, 20, 20, 4, 3, -7);
        EXPECT_NEAR(s(l1), ref, 1e-12 * std::abs(ref) + 1e-16) << l1;
    }
}

TEST(CoupledRange, Limits)
{
    auto a = coupled_range(1, 0, 1, 0);
    EXPECT_EQ(a.l_min, 0);
    EXPECT_EQ(a.l_max, 2);
    auto b = coupled_range(3, 3, 2, 2);
    EXPECT_EQ(b.l_min, 5);
    EXPECT_EQ(b.l_max, 5);
    auto c = coupled_range(2, 0, 2, 0);
    EXPECT_EQ(c.l_min, 0);
    EXPECT_EQ(c.l_max, 4);
    auto d = coupled_range(6, 2, 5, -1);
    EXPECT_EQ(d.l_min, 1);
    EXPECT_EQ(d.l_max, 11);
    EXPECT_EQ(d.step, 2);
}

TEST(DeltaQuantities, Values)
{
    auto a = delta_quantities(1, 1, 2);
    EXPECT_EQ(a.delta_l, 0);
    EXPECT_EQ(a.delta_l1, 1);
    EXPECT_EQ(a.delta_l2, 1);
    EXPECT_EQ(a.sigma_l, 2);
    auto b = delta_quantities(3, 3, 0);
    EXPECT_EQ(b.delta_l, 3);
    EXPECT_EQ(b.delta_l1, 0);
    EXPECT_EQ(b.delta_l2, 0);
    EXPECT_EQ(b.sigma_l, 3);
    auto c = delta_quantities(2, 1, 3);
    EXPECT_EQ(c.delta_l, 0);
    EXPECT_EQ(c.delta_l1, 1);
    EXPECT_EQ(c.delta_l2, 2);
    EXPECT_THROW(delta_quantities(1, 1, 1), DomainError);
}

TEST(Gaunt, SelectionRulesAndSimpleValues)
{
    EXPECT_NEAR(gaunt({0, 0, 0, 0, 0, 0}), 1 / std::sqrt(4 * pi), 1e-16);
    for (int l = 0; l <= 6; ++l) {
        for (int m = -l; m <= l; ++m) {
            EXPECT_NEAR(gaunt({l, m, 0, 0, l, m}), 1 / std::sqrt(4 * pi), 1e-15);
        }
    }
    EXPECT_EQ(gaunt({1, 0, 1, 0, 2, 1}), 0.0);
    EXPECT_EQ(gaunt({1, 0, 1, 0, 1, 0}), 0.0);
    EXPECT_EQ(gaunt({1, 0, 1, 0, 3, 0}), 0.0);
    /* <2 0|1 0|1 0> = sqrt(9*5/4pi) * (2/15) */
    EXPECT_NEAR(gaunt({1, 0, 1, 0, 2, 0}), std::sqrt(45 / (4 * pi)) * 2.0 / 15.0, 1e-15);
}

TEST(Gaunt, MatchesLebedevQuadrature)
{
    auto const& grid = oracles::lebedev_grid(590);
    for (int l1 = 0; l1 <= 6; ++l1) {
        for (int l2 = 0; l2 <= 6; ++l2) {
            for (int m1 = -l1; m1 <= l1; ++m1) {
                for (int m2 = -l2; m2 <= l2; ++m2) {
                    for (int l3 = std::abs(m1 + m2); l3 <= 6; ++l3) {
                        int const m3    = m1 + m2;
                        Complex const q = oracles::sphere_integrate(
                            [&](Vec3 d) {
                                return std::conj(regular_solid({l3, m3}, d)) * regular_solid({l2, m2}, d) *
                                       regular_solid({l1, m1}, d);
                            },
                            grid);
                        ASSERT_NEAR(std::abs(q - gaunt({l1, m1, l2, m2, l3, m3})), 0, 1e-10);
                    }
                }
            }
        }
    }
}

TEST(GauntString, MatchesSingleValues)
{
    for (int l1 = 0; l1 <= 25; l1 += 1) {
        for (int l2 = 0; l2 <= 25; l2 += 3) {
            for (int m1 : {-l1, 0, l1 / 2}) {
                for (int m2 : {-l2 / 3, l2}) {
                    auto const g = gaunt_string(l1, m1, l2, m2);
                    for (int l = g->range.l_min; l <= g->range.l_max; l += 2) {
                        double const ref = gaunt({l1, m1, l2, m2, l, m1 + m2});
                        ASSERT_NEAR((*g)(l), ref, 1e-12 * std::abs(ref) + 1e-16) << l1 << m1 << l2 << m2 << l;
                    }
                }
            }
        }
    }
}

TEST(GauntString, Examples)
{
    auto a = gaunt_string(0, 0, 0, 0);
    ASSERT_EQ(a->values.size(), 1u);
    EXPECT_NEAR(a->values[0], 1 / std::sqrt(4 * pi), 1e-16);
    auto b = gaunt_string(1, 1, 1, -1);
    EXPECT_EQ(b->range.l_min, 0);
    EXPECT_EQ(b->range.l_max, 2);
    EXPECT_NEAR((*b)(0), gaunt({1, 1, 1, -1, 0, 0}), 1e-16);
    EXPECT_NEAR((*b)(2), gaunt({1, 1, 1, -1, 2, 0}), 1e-16);
    auto c = gaunt_string(6, 2, 5, -1);
    EXPECT_EQ(c->range.l_min, 1);
    EXPECT_EQ(c->range.l_max, 11);
}

TEST(GauntString, LinearizesProducts)
{
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> ut(0, pi), up(0, 2 * pi);
    for (int l1 = 0; l1 <= 8; ++l1) {
        for (int l2 = 0; l2 <= 8; ++l2) {
            for (int m1 = -l1; m1 <= l1; m1 += 2) {
                for (int m2 = -l2; m2 <= l2; m2 += 3) {
                    double const th = ut(rng), ph = up(rng);
                    auto const g    = gaunt_string(l1, m1, l2, m2);
                    Complex sum     = 0;
                    for (int l = g->range.l_min; l <= g->range.l_max; l += 2) {
                        sum += (*g)(l)*ylm({l, m1 + m2}, th, ph);
                    }
                    Complex const ref = ylm({l1, m1}, th, ph) * ylm({l2, m2}, th, ph);
                    ASSERT_NEAR(std::abs(sum - ref), 0, 1e-11);
                }
            }
        }
    }
}

TEST(GauntMemo, ConcurrentReadersAgree)
{
    std::vector<std::thread> pool;
    std::atomic<int> mismatches{0};
    for (int t = 0; t < 4; ++t) {
        pool.emplace_back([&, t] {
            for (int l1 = 0; l1 <= 12; ++l1) {
                for (int l2 = 0; l2 <= 12; ++l2) {
                    int const m1 = (l1 + t) % (l1 + 1);
                    auto g       = gaunt_string(l1, m1, l2, 0);
                    auto h       = detail::compute_gaunt_string(l1, m1, l2, 0);
                    if (g->values != h.values) {
                        ++mismatches;
                    }
                }
            }
        });
    }
    for (auto& th : pool) {
        th.join();
    }
    EXPECT_EQ(mismatches.load(), 0);
    EXPECT_LE(detail::gaunt_memo().size(), detail::GauntMemo::capacity);
}
