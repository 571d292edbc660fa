#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "stgo/gradient/operator.hpp"
#include "stgo/oracles/fd.hpp"

using namespace stgo;
using std::numbers::pi;

namespace {

Vec3
random_point(std::mt19937& rng, double r_min, double r_max = 2.0)
{
    std::uniform_real_distribution<double> u(-r_max, r_max);
    for (;;) {
        Vec3 const r{u(rng), u(rng), u(rng)};
        if (r.norm() > r_min && r.norm() < r_max) {
            return r;
        }
    }
}

double
rel(Complex a, Complex b)
{
    return std::abs(a - b) / std::max(std::abs(b), 1e-300);
}

oracles::FDScheme
scheme_at(Vec3 r)
{
    return {4, 0.04 * std::min(1.0, r.norm())};
}

std::function<Complex(Vec3)>
as_field(TensorTerm const& t)
{
    return [t](Vec3 q) { return t(q); };
}

} // namespace

TEST(Gamma, SixFormsAgree)
{
    std::vector<RadialProfile> const profiles{RadialProfile::gaussian(1.0), RadialProfile::power(-1.0),
                                              RadialProfile::power(2.5), RadialProfile::reduced_bessel_half(2, 1.0)};
    int pairs = 0;
    for (auto const& prof : profiles) {
        auto const f = prof.function();
        for (int l1 = 0; l1 <= 5; ++l1) {
            for (int l2 = 0; l2 <= 5; ++l2) {
                for (int l = std::abs(l1 - l2); l <= l1 + l2; l += 2) {
                    auto const forms = admissible_gamma_forms(l2, l);
                    for (double r : {0.5, 1.0, 2.3}) {
                        std::vector<double> v;
                        for (int form : forms) {
                            v.push_back(gamma_radial(form, l1, l2, l, f, r));
                        }
                        for (std::size_t i = 1; i < v.size(); ++i) {
                            double const scale = std::max(std::abs(v[0]), 1e-300);
                            EXPECT_LE(std::abs(v[i] - v[0]), 1e-10 * scale)
                                << l1 << ' ' << l2 << ' ' << l << " form " << forms[i];
                            ++pairs;
                        }
                    }
                }
            }
        }
    }
    EXPECT_GT(pairs, 1000);
}

TEST(Gamma, FormOrderingErrors)
{
    auto const f = RadialProfile::gaussian(1.0).function();
    EXPECT_THROW(gamma_radial(4, 1, 1, 2, f, 1.0), DomainError);
    EXPECT_THROW(gamma_radial(5, 1, 1, 0, f, 1.0), DomainError);
    EXPECT_THROW(gamma_radial(7, 1, 1, 0, f, 1.0), DomainError);
    EXPECT_THROW(gamma_radial(1, 1, 1, 1, f, 1.0), DomainError);
}

TEST(Gamma, ReducesToHobsonWhenTargetScalar)
{
    auto const f = RadialProfile::gaussian(0.7).function();
    for (int l1 = 0; l1 <= 5; ++l1) {
        for (double r : {0.4, 1.3}) {
            double const g = gamma_radial(1, l1, 0, l1, f, r);
            double const h = f.inv_r_ddr(l1)(r) * std::pow(r, l1);
            EXPECT_NEAR(g, h, 1e-13 * std::abs(h));
        }
    }
}

TEST(Gamma, MatchesFiniteDifferences)
{
    auto const f = RadialProfile::gaussian(1.0).function();
    TensorTerm const target{1.0, f, {1, 0}};
    Vec3 const at{0.3, -0.5, 0.8};
    for (int m1 = -1; m1 <= 1; ++m1) {
        auto const ex = apply_to_tensor({1, m1}, target);
        auto const fd = oracles::fd_apply_operator(regular_solid_poly({1, m1}), as_field(target), at, scheme_at(at));
        EXPECT_LT(rel(ex(at), fd.value), 1e-6) << m1;
    }
}

TEST(Hobson, GaussianClosedForm)
{
    double const a = 0.8;
    auto const phi = RadialProfile::gaussian(a);
    std::mt19937 rng(3);
    for (int l = 0; l <= 6; ++l) {
        for (int m = -l; m <= l; ++m) {
            auto const ex = hobson_harmonic({l, m}, phi);
            ASSERT_EQ(ex.terms.size(), 1u);
            Vec3 const r = random_point(rng, 0.1);
            Complex const ref = std::pow(-2 * a, l) * std::exp(-a * r.norm2()) * regular_solid({l, m}, r);
            EXPECT_LT(std::abs(ex(r) - ref), 1e-13 * std::max(1.0, std::abs(ref)));
        }
    }
}

TEST(Hobson, CoulombGivesIrregularSolid)
{
    auto const phi = RadialProfile::power(-1);
    std::mt19937 rng(4);
    for (int l = 0; l <= 6; ++l) {
        for (int m = -l; m <= l; ++m) {
            Vec3 const r   = random_point(rng, 0.3);
            Complex const ref =
                parity_sign(l) * to_double(double_factorial(2 * l - 1)) * irregular_solid({l, m}, r);
            EXPECT_LT(rel(hobson_harmonic({l, m}, phi)(r), ref), 1e-13);
        }
    }
}

TEST(Hobson, ScalarOperatorIsConstantFactor)
{
    auto const phi = RadialProfile::yukawa_like(1.3);
    Vec3 const r{0.2, 0.4, -0.9};
    EXPECT_NEAR(hobson_harmonic({0, 0}, phi)(r).real(), phi(r.norm()) / std::sqrt(4 * pi), 1e-15);
}

TEST(Hobson, MatchesFiniteDifferences)
{
    oracles::ExtendedField const gaussian = [](long double x, long double y, long double z) {
        return std::complex<long double>(std::exp(-(x * x + y * y + z * z)));
    };
    oracles::ExtendedField const yukawa = [](long double x, long double y, long double z) {
        long double const r = std::sqrt(x * x + y * y + z * z);
        return std::complex<long double>(std::exp(-r) / r);
    };
    std::mt19937 rng(1);
    for (auto const& [prof, field] : {std::pair{RadialProfile::gaussian(1.0), gaussian},
                                      std::pair{RadialProfile::yukawa_like(1.0), yukawa}}) {
        for (int l = 0; l <= 4; ++l) {
            for (int m = -l; m <= l; ++m) {
                auto const ex = hobson_harmonic({l, m}, prof);
                for (int k = 0; k < 10; ++k) {
                    Vec3 const r  = random_point(rng, 0.6, 1.2);
                    auto const fd = oracles::fd_apply_operator(regular_solid_poly({l, m}), field, r,
                                                               {4, 0.02 * std::min(1.0, r.norm())});
                    EXPECT_FALSE(fd.unreliable);
                    EXPECT_LT(rel(ex(r), fd.value), 1e-6) << l << ' ' << m;
                }
            }
        }
    }
}

TEST(Hobson, GeneralPolynomialLaplacian)
{
    HarmonicPolynomial r2(2);
    r2.add({2, 0, 0}, {1, 0});
    r2.add({0, 2, 0}, {1, 0});
    r2.add({0, 0, 2}, {1, 0});
    auto const F     = RadialProfile::gaussian(1.0).function();
    auto const lap   = hobson_general(r2, F);
    auto const field = [F](Vec3 q) { return Complex(F(q.norm())); };
    std::mt19937 rng(9);
    for (int k = 0; k < 10; ++k) {
        Vec3 const r     = random_point(rng, 0.2, 1.0);
        double const ref = (4 * r.norm2() - 6) * std::exp(-r.norm2());
        EXPECT_NEAR(lap(r).real(), ref, 1e-13 * std::max(1.0, std::abs(ref)));
        auto const fd = oracles::fd_apply_operator(r2, field, r, scheme_at(r));
        EXPECT_LT(rel(lap(r), fd.value), 1e-6);
    }
}

TEST(Hobson, GeneralEqualsHarmonicForSolidHarmonics)
{
    auto const F = RadialProfile::reduced_bessel_half(1, 1.4).function();
    Vec3 const r{0.7, -0.2, 0.5};
    for (int l = 0; l <= 5; ++l) {
        for (int m = -l; m <= l; ++m) {
            auto const g = hobson_general(regular_solid_poly({l, m}), F)(r);
            auto const h = hobson_harmonic({l, m}, F)(r);
            EXPECT_LT(std::abs(g - h), 1e-13 * std::max(1.0, std::abs(h)));
        }
    }
}

TEST(Hobson, IdentityOperator)
{
    HarmonicPolynomial one(0);
    one.add({0, 0, 0}, {1, 0});
    auto const F = RadialProfile::yukawa_like(0.5).function();
    Vec3 const r{1, 2, 2};
    EXPECT_DOUBLE_EQ(hobson_general(one, F)(r).real(), F(3.0));
}

TEST(Stgo, IrregularSolidClosure)
{
    for (int l1 = 0; l1 <= 5; ++l1) {
        for (int l2 = 0; l2 <= 5; ++l2) {
            for (int m1 = -l1; m1 <= l1; ++m1) {
                for (int m2 = -l2; m2 <= l2; ++m2) {
                    TensorTerm const z{1.0, RadialExpr::power(-l2 - 1), {l2, m2}};
                    auto const ex = apply_to_tensor({l1, m1}, z);
                    int const l   = l1 + l2;
                    double const G = gaunt_lin(l, l1, m1, l2, m2);
                    if (G == 0.0) {
                        EXPECT_TRUE(ex.terms.empty());
                        continue;
                    }
                    ASSERT_EQ(ex.terms.size(), 1u) << l1 << ' ' << l2 << ' ' << m1 << ' ' << m2;
                    auto const& t = ex.terms[0];
                    EXPECT_EQ(t.angular, (LMIndex{l, m1 + m2}));
                    double const ref = std::pow(-2.0, l1) *
                                       to_double(pochhammer_half(l) / pochhammer_half(l2)) * G;
                    double const r   = 1.7;
                    double const got = t.coeff.real() * t.radial(r) * std::pow(r, l + 1);
                    EXPECT_NEAR(got, ref, 1e-11 * std::abs(ref));
                }
            }
        }
    }
}

TEST(Stgo, ScalarTargetReducesToHobson)
{
    auto const f = RadialProfile::gaussian(1.1).function();
    Vec3 const r{0.4, 0.1, -0.6};
    for (int l = 0; l <= 4; ++l) {
        for (int m = -l; m <= l; ++m) {
            auto const ex = apply_to_tensor({l, m}, scalar_term(f));
            EXPECT_LT(std::abs(ex(r) - hobson_harmonic({l, m}, f)(r)), 1e-13);
        }
    }
}

TEST(Stgo, GaussianTensorTwoTerms)
{
    TensorTerm const target{1.0, RadialProfile::gaussian(1.0).function(), {1, 0}};
    auto const ex = apply_to_tensor({2, 1}, target);
    ASSERT_EQ(ex.terms.size(), 2u);
    EXPECT_EQ(ex.terms[0].angular.l + ex.terms[1].angular.l, 4);
    std::mt19937 rng(6);
    for (int k = 0; k < 10; ++k) {
        Vec3 const r  = random_point(rng, 0.5, 1.2);
        auto const fd = oracles::fd_apply_operator(regular_solid_poly({2, 1}), as_field(target), r, scheme_at(r));
        EXPECT_LT(rel(ex(r), fd.value), 1e-6);
    }
}

TEST(Stgo, CommutesWithLaplacian)
{
    for (double a : {0.5, 1.0, 2.0}) {
        auto const phi = RadialProfile::gaussian(a).function();
        for (int l = 0; l <= 5; ++l) {
            auto const after  = radial_laplacian_power(phi.inv_r_ddr(l), l, 1);
            auto const before = phi.expr().radial_laplacian(0);
            auto const b      = RadialFunction(before).inv_r_ddr(l);
            for (double r : {0.3, 1.0, 1.9}) {
                EXPECT_NEAR(after(r), b(r), 1e-10 * std::max(1e-300, std::abs(b(r))));
            }
        }
    }
}

TEST(Stgo, LinearizeExamples)
{
    auto t = stgo_product_linearize({0, 0}, {3, -2});
    ASSERT_EQ(t.size(), 1u);
    EXPECT_EQ(t[0].l, 3);
    EXPECT_EQ(t[0].laplacian_power, 0);
    EXPECT_NEAR(t[0].gaunt_coeff, 1 / std::sqrt(4 * pi), 1e-15);

    t = stgo_product_linearize({1, 0}, {1, 0});
    ASSERT_EQ(t.size(), 2u);
    EXPECT_EQ(t[0].l, 0);
    EXPECT_EQ(t[0].laplacian_power, 1);
    EXPECT_EQ(t[1].l, 2);
    EXPECT_EQ(t[1].laplacian_power, 0);

    t = stgo_product_linearize({1, 1}, {1, 1});
    ASSERT_EQ(t.size(), 1u);
    EXPECT_EQ(t[0].l, 2);
}

TEST(Stgo, LinearizedRouteEquivalence)
{
    auto const phi = RadialProfile::gaussian(0.9).function();
    std::mt19937 rng(8);
    for (int l1 = 0; l1 <= 3; ++l1) {
        for (int l2 = 0; l2 <= 3; ++l2) {
            for (int m1 = -l1; m1 <= l1; ++m1) {
                for (int m2 = -l2; m2 <= l2; ++m2) {
                    auto const seq = apply_to_tensor({l1, m1}, hobson_harmonic({l2, m2}, phi));
                    auto const lin = apply_via_generator({l1, m1}, {l2, m2}, phi);
                    Vec3 const r   = random_point(rng, 0.3, 1.5);
                    Complex const a = seq(r), b = lin(r);
                    EXPECT_LE(std::abs(a - b), 1e-9 * std::max(std::abs(b), 1e-3));
                }
            }
        }
    }
}

TEST(Stgo, GeneratorWithScalarGen)
{
    auto const phi = RadialProfile::yukawa_like(1.0).function();
    Vec3 const r{0.9, 0.3, -0.4};
    auto const a = apply_via_generator({2, -1}, {0, 0}, phi)(r);
    auto const b = hobson_harmonic({2, -1}, phi.scaled(1 / std::sqrt(4 * pi)))(r);
    EXPECT_LT(rel(a, b), 1e-13);
}

TEST(Leibniz, OrderZeroIsProduct)
{
    TensorExpansion const f{scalar_term(RadialProfile::gaussian(1.0).function())};
    TensorExpansion const g{scalar_term(RadialProfile::yukawa_like(1.0).function())};
    Vec3 const r{0.5, 0.5, 0.5};
    auto const out = leibniz({0, 0}, f, g);
    EXPECT_LT(rel(out(r), f(r) * g(r) / std::sqrt(4 * pi)), 1e-13);
}

TEST(Leibniz, GaussianProductRule)
{
    TensorExpansion const f{scalar_term(RadialProfile::gaussian(1.0).function())};
    Vec3 const r{0.3, -0.7, 0.2};
    for (int m = -1; m <= 1; ++m) {
        auto const out = leibniz({1, m}, f, f);
        auto const ref = hobson_harmonic({1, m}, RadialProfile::gaussian(2.0))(r);
        EXPECT_LT(rel(out(r), ref), 1e-10);
    }
}

TEST(Leibniz, SecondOrderMatchesFiniteDifferences)
{
    TensorExpansion const f{scalar_term(RadialProfile::gaussian(1.0).function())};
    TensorExpansion const g{scalar_term(RadialProfile::gaussian(2.0).function())};
    auto const product = [](Vec3 q) { return Complex(std::exp(-3 * q.norm2())); };
    std::mt19937 rng(2);
    for (int m = -2; m <= 2; ++m) {
        auto const out = leibniz({2, m}, f, g);
        Vec3 const r   = random_point(rng, 0.4, 0.9);
        auto const fd  = oracles::fd_apply_operator(regular_solid_poly({2, m}), product, r, scheme_at(r));
        EXPECT_LT(rel(out(r), fd.value), 1e-6);
    }
}

TEST(Leibniz, ShiftWeight)
{
    EXPECT_NEAR(shift_weight(0, 0), 2 * pi * 0.5 / 0.25, 1e-14);
    for (int l = 0; l <= 6; ++l) {
        EXPECT_NEAR(shift_weight(l, 0), shift_weight(l, l), 1e-13);
    }
}

TEST(Custom, CapabilityLimit)
{
    auto const prof = RadialProfile::custom([](double r) { return std::exp(-r * r); }, 2);
    EXPECT_NO_THROW(hobson_harmonic({2, 0}, prof));
    EXPECT_THROW(hobson_harmonic({3, 0}, prof), CapabilityError);
    HarmonicPolynomial cube(3);
    cube.add({0, 0, 3}, {1, 0});
    EXPECT_THROW(hobson_general(cube, prof.function()), CapabilityError);
}

TEST(Custom, FiniteDifferenceAccuracy)
{
    auto const prof  = RadialProfile::custom([](double r) { return std::exp(-r * r); }, 3);
    auto const exact = RadialProfile::gaussian(1.0);
    for (int k = 0; k <= 3; ++k) {
        for (double r : {0.5, 1.0, 1.5}) {
            double const a = prof.inv_r_ddr(k, r), b = exact.inv_r_ddr(k, r);
            EXPECT_NEAR(a, b, 1e-4 * std::max(1.0, std::abs(b))) << k << ' ' << r;
        }
    }
}

TEST(Radial, ProfileErrors)
{
    EXPECT_THROW(RadialProfile::gaussian(0.0), DomainError);
    EXPECT_THROW(RadialProfile::yukawa_like(-1.0), DomainError);
    EXPECT_THROW(RadialProfile::yukawa_like(1.0)(0.0), DomainError);
}

TEST(Radial, PowerDerivativePochhammer)
{
    /* D^k r^s = 2^k (s/2 - k + 1)_k r^{s - 2k} */
    auto const f = RadialFunction(RadialExpr::power(2.5));
    for (int k = 0; k <= 4; ++k) {
        double const ref = std::pow(2.0, k) * pochhammer(2.5 / 2 - k + 1, k) * std::pow(1.3, 2.5 - 2 * k);
        EXPECT_NEAR(f.inv_r_ddr(k)(1.3), ref, 1e-13 * std::abs(ref));
    }
}

TEST(Radial, YukawaClosedForm)
{
    auto const y = RadialProfile::yukawa_like(1.7);
    for (double r : {0.1, 1.0, 4.0}) {
        EXPECT_NEAR(y(r), std::exp(-1.7 * r) / r, 1e-14 * std::exp(-1.7 * r) / r);
    }
}
