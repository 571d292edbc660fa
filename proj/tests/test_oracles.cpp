#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "stgo/oracles/convolution.hpp"
#include "stgo/oracles/fd.hpp"
#include "stgo/oracles/hankel.hpp"

using namespace stgo;
using std::numbers::pi;

namespace {

double
rel(Complex a, Complex b)
{
    return std::abs(a - b) / std::max(std::abs(b), 1e-300);
}

} // namespace

TEST(Hankel, GaussianClosedForm)
{
    for (double a : {0.5, 1.0, 2.0}) {
        for (int l = 0; l <= 4; ++l) {
            auto const f = [&](double r) { return std::pow(r, l) * std::exp(-a * r * r); };
            for (double p : {0.0, 0.5, 1.5, 3.0}) {
                if (l > 0 && p == 0.0) {
                    continue;
                }
                Complex const closed =
                    std::pow(Complex(0, -1), l) * std::pow(p, l) * std::pow(2 * a, -l - 1.5) * std::exp(-p * p / (4 * a));
                auto const q = oracles::hankel_radial_ft(f, l, p);
                EXPECT_LT(rel(q.value, closed), 1e-11) << a << " " << l << " " << p;
                EXPECT_FALSE(q.accuracy_warning);
            }
        }
    }
}

TEST(Hankel, YukawaClosedForm)
{
    for (double alpha : {0.7, 1.0, 2.0}) {
        auto const f = [&](double r) { return std::exp(-alpha * r) / r; };
        for (double p : {0.2, 1.0, 4.0}) {
            auto const q = oracles::hankel_radial_ft(f, 0, p);
            EXPECT_LT(rel(q.value, std::sqrt(2 / pi) / (alpha * alpha + p * p)), 1e-10);
        }
    }
}

TEST(Hankel, ExponentialRoundTrip)
{
    double const alpha = 1.0;
    /* e^{-alpha r} has transform (2/pi)^{1/2} 2 alpha / (alpha^2 + p^2)^2 */
    auto const g = [&](double p) {
        return std::sqrt(2 / pi) * 2 * alpha / std::pow(alpha * alpha + p * p, 2);
    };
    for (double r : {0.5, 1.0, 2.0}) {
        auto const back = oracles::hankel_radial_inverse(g, 0, r);
        EXPECT_LT(rel(back.value, std::exp(-alpha * r)), 1e-6) << r;
    }
}

TEST(Hankel, InversePhase)
{
    /* r e^{-r^2/2} Y_1 transforms into (-i) p e^{-p^2/2} Y_1; the inverse restores the real profile */
    auto const g = [](double p) { return p * std::exp(-p * p / 2); };
    auto const back = oracles::hankel_radial_inverse(g, 1, 0.8);
    EXPECT_LT(rel(back.value, 0.8 * std::exp(-0.32)), 1e-11);
}

TEST(Hankel, Errors)
{
    auto const f = [](double r) { return std::exp(-r); };
    EXPECT_THROW(oracles::hankel_radial_ft(f, -1, 1.0), DomainError);
    EXPECT_THROW(oracles::hankel_radial_ft(f, 0, -1.0), DomainError);
    EXPECT_THROW(oracles::hankel_radial_ft(f, 0, 1.0, 0.0), DomainError);
}

TEST(Hankel, SlowDecayIsFlagged)
{
    auto const f = [](double r) { return 1 / (1 + r * r * r); };
    EXPECT_TRUE(oracles::hankel_radial_ft(f, 0, 0.5, 10.0).accuracy_warning);
}

TEST(FiniteDifference, PolynomialsAreExact)
{
    auto const field = [](Vec3 r) { return Complex(r.x * r.x * r.y + r.z * r.z * r.z); };
    HarmonicPolynomial lap(2);
    for (auto e : {Exponents{2, 0, 0}, Exponents{0, 2, 0}, Exponents{0, 0, 2}}) {
        lap.add(e, {Rational(1), Rational(0)});
    }
    auto const res = oracles::fd_apply_operator(lap, field, {0.3, -0.2, 0.5});
    Complex const expected = 2 * -0.2 + 6 * 0.5;
    EXPECT_LT(rel(res.value, expected), 1e-9);
    EXPECT_FALSE(res.unreliable);
}

TEST(FiniteDifference, SchemeValidation)
{
    auto const field = [](Vec3) { return Complex(1.0); };
    EXPECT_THROW(oracles::fd_apply_operator(regular_solid_poly({1, 0}), field, {1, 0, 0}, {3, 0.1}), DomainError);
    EXPECT_THROW(oracles::fd_apply_operator(regular_solid_poly({1, 0}), field, {1, 0, 0}, {4, 0.0}), DomainError);
}

TEST(FiniteDifference, ExtendedPrecisionField)
{
    /* Y_2^0(nabla) e^{-r^2} = 4 e^{-r^2} Y_2^0(r) */
    oracles::ExtendedField const f = [](long double x, long double y, long double z) {
        return std::complex<long double>(std::exp(-(x * x + y * y + z * z)), 0);
    };
    Vec3 const at{0.4, 0.5, -0.7};
    auto const res = oracles::fd_apply_operator(regular_solid_poly({2, 0}), f, at, {4, 0.02});
    EXPECT_LT(rel(res.value, 4.0 * std::exp(-at.norm2()) * regular_solid({2, 0}, at)), 1e-8);
}

TEST(MomentumConvolution, Errors)
{
    EXPECT_THROW(oracles::momentum_convolution({1, 0, 0, 1.0}, {1, 0, 0, 2.0}, {0, 0, 1}), UnsupportedError);
    EXPECT_THROW(oracles::momentum_convolution({1, 6, 0, 1.0}, {1, 6, 0, 1.0}, {0, 0, 1}), DomainError);
}

TEST(MomentumConvolution, ExponentialPairAtOrigin)
{
    /* B_{1,0} * B_{1,0} = (4 pi/alpha^3) (4 pi)^{-1/2} B_{3,0} */
    double const alpha = 1.0;
    auto const q       = oracles::momentum_convolution({1, 0, 0, alpha}, {1, 0, 0, alpha}, {0, 0, 0});
    double const b3    = detail::b_normalization(3) * bessel_polynomial_theta(2, 0.0) / std::sqrt(4 * pi);
    EXPECT_LT(rel(q.value, 4 * pi / std::sqrt(4 * pi) * b3), 1e-9);
}

TEST(FiniteDifference, HigherOrderStencils)
{
    /* Y_4^4(nabla) e^{-r^2} = 16 e^{-r^2} Y_4^4(r) */
    oracles::ExtendedField const f = [](long double x, long double y, long double z) {
        return std::complex<long double>(std::exp(-(x * x + y * y + z * z)), 0);
    };
    Vec3 const at{0.1, 0.05, 0.9};
    Complex const exact = 16.0 * std::exp(-at.norm2()) * regular_solid({4, 4}, at);
    auto const r4 = oracles::fd_apply_operator(regular_solid_poly({4, 4}), f, at, {4, 0.03});
    auto const r8 = oracles::fd_apply_operator(regular_solid_poly({4, 4}), f, at, {8, 0.03});
    EXPECT_LT(rel(r8.value, exact), rel(r4.value, exact));
    EXPECT_LT(rel(r8.value, exact), 1e-7);
    EXPECT_THROW(oracles::fd_apply_operator(regular_solid_poly({1, 0}), f, at, {10, 0.03}), DomainError);
}
