/** \file operator.hpp
 *
 *  \brief The spherical tensor gradient operator Y_l^m(nabla): Hobson's theorem, the gamma radial
 *         functions, operator linearization, the route through a scalar generator, and the
 *         Leibniz rule.
 *
 *  Throughout, D = (1/r) d/dr.
 */

#ifndef STGO_GRADIENT_OPERATOR_HPP
#define STGO_GRADIENT_OPERATOR_HPP

#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include "stgo/core/combinatorics.hpp"
#include "stgo/gradient/radial.hpp"
#include "stgo/gradient/tensor.hpp"
#include "stgo/harmonics/polynomial.hpp"
#include "stgo/wigner/gaunt.hpp"

namespace stgo {

/// p(nabla) F(r) for a homogeneous polynomial p of degree n:
/// sum_nu 2^{-nu}/nu! [D^{n-nu} F](r) [nabla^{2 nu} p](r).
inline std::function<Complex(Vec3)>
hobson_general(HarmonicPolynomial const& p, RadialFunction const& F)
{
    int const n = p.degree;
    if (F.max_order() < n) {
        throw CapabilityError("hobson_general: profile supports D^" + std::to_string(F.max_order()) +
                              ", need D^" + std::to_string(n));
    }
    struct Piece
    {
        double weight;
        RadialFunction radial;
        HarmonicPolynomial lap;
    };
    std::vector<Piece> pieces;
    HarmonicPolynomial lap = p;
    for (int nu = 0; 2 * nu <= n; ++nu) {
        if (!lap.is_zero()) {
            pieces.push_back({std::pow(0.5, nu) / factorial_double(nu), F.inv_r_ddr(n - nu), lap});
        }
        lap = lap.laplacian();
    }
    return [pieces](Vec3 r) {
        Complex sum      = 0;
        double const rr  = r.norm();
        for (auto const& pc : pieces) {
            sum += pc.weight * pc.radial(rr) * pc.lap(r);
        }
        return sum;
    };
}

/// Y_l^m(nabla) phi(r) = [D^l phi](r) Y_l^m(r): a single term with radial r^l D^l phi.
inline TensorExpansion
hobson_harmonic(LMIndex idx, RadialFunction const& phi)
{
    if (phi.max_order() < idx.l) {
        throw CapabilityError("hobson_harmonic: derivative order not supported by the profile");
    }
    return {TensorTerm{1.0, phi.inv_r_ddr(idx.l).times_power(idx.l), idx}};
}

inline TensorExpansion
hobson_harmonic(LMIndex idx, RadialProfile const& phi)
{
    return hobson_harmonic(idx, phi.function());
}

/// Radial function gamma_{l1 l2}^l in Y_{l1}^{m1}(nabla)[f(r) Y_{l2}^{m2}] = sum_l <..> gamma(r) Y_l^{m1+m2}.
/**
 *  Six equivalent closed forms; forms 4 and 5 require l2 >= l and l >= l2 respectively.
 */
inline RadialFunction
gamma_function(int form, int l1, int l2, int l, RadialFunction const& f)
{
    auto const dq = delta_quantities(l1, l2, l);
    int const dl = dq.delta_l, dl1 = dq.delta_l1, dl2 = dq.delta_l2, sg = dq.sigma_l;
    auto D = [](RadialFunction const& g, int k) { return g.inv_r_ddr(k); };
    switch (form) {
        case 1: {
            RadialFunction const base = f.times_power(-l2);
            RadialFunction out;
            for (int q = 0; q <= dl; ++q) {
                Rational const c = pochhammer(Rational(-dl), q) * pochhammer(Rational(-2 * sg - 1, 2), q) *
                                   Rational(BigInt(1) << q, factorial(q));
                out = out + D(base, l1 - q).times_power(l1 + l2 - 2 * q).scaled(to_double(c));
            }
            return out;
        }
        case 2:
            return D(D(f.times_power(-l2), dl2).times_power(l1 + l2 + l + 1), dl).times_power(-l - 1);
        case 3:
            return D(D(f.times_power(l2 + 1), dl).times_power(l1 - l2 - l - 1), dl2).times_power(l);
        case 4:
            if (l2 < l) {
                throw DomainError("gamma form 4 requires l2 >= l");
            }
            return D(D(D(f.times_power(l2 + 1), l2 - l).times_power(-2 * l - 1), dl2).times_power(l1 - l2 + 3 * l + 1),
                     dl2)
                .times_power(-l - 1);
        case 5:
            if (l < l2) {
                throw DomainError("gamma form 5 requires l >= l2");
            }
            return D(D(D(f.times_power(-l2), l - l2).times_power(2 * l + 1), dl).times_power(l1 + l2 - 3 * l - 1), dl)
                .times_power(l);
        case 6: {
            RadialFunction const base = f.times_power(l2 + 1);
            RadialFunction out;
            for (int s = 0; s <= dl2; ++s) {
                Rational const c = pochhammer(Rational(-dl2), s) * pochhammer(Rational(2 * dl1 + 1, 2), s) *
                                   Rational(BigInt(1) << s, factorial(s));
                out = out + D(base, l1 - s).times_power(l1 - l2 - 2 * s - 1).scaled(to_double(c));
            }
            return out;
        }
        default:
            throw DomainError("gamma form must be 1..6");
    }
}

/// gamma_{l1 l2}^l(r) by the selected form.
inline double
gamma_radial(int form, int l1, int l2, int l, RadialFunction const& f, double r)
{
    if (!(r > 0)) {
        throw DomainError("gamma_radial: r must be positive");
    }
    return gamma_function(form, l1, l2, l, f)(r);
}

inline double
gamma_radial(int form, int l1, int l2, int l, RadialProfile const& f, double r)
{
    return gamma_radial(form, l1, l2, l, f.function(), r);
}

/// Forms admissible for (l2, l).
inline std::vector<int>
admissible_gamma_forms(int l2, int l)
{
    std::vector<int> forms{1, 2, 3};
    if (l2 >= l) {
        forms.push_back(4);
    }
    if (l >= l2) {
        forms.push_back(5);
    }
    forms.push_back(6);
    return forms;
}

/// Y_{l1}^{m1}(nabla) applied to one tensor term.
inline TensorExpansion
apply_to_tensor(LMIndex op, TensorTerm const& target, int form = 1)
{
    TensorExpansion out;
    int const l2 = target.angular.l, m2 = target.angular.m;
    auto const g = gaunt_string(op.l, op.m, l2, m2);
    for (int l = g->range.l_min; l <= g->range.l_max; l += 2) {
        double const G = (*g)(l);
        if (G == 0.0) {
            continue;
        }
        out.terms.push_back({target.coeff * G, gamma_function(form, op.l, l2, l, target.radial), {l, op.m + m2}});
    }
    out.prune();
    return out;
}

inline TensorExpansion
apply_to_tensor(LMIndex op, TensorExpansion const& target, int form = 1)
{
    TensorExpansion out;
    for (auto const& t : target.terms) {
        out.append(apply_to_tensor(op, t, form));
    }
    out.prune();
    return out;
}

/// Y_{l1}^{m1}(nabla) Y_{l2}^{m2}(nabla) = sum_l <l m1+m2|l1 m1|l2 m2> nabla^{2 Delta l} Y_l^{m1+m2}(nabla).
struct LinearizedOperatorTerm
{
    int l;
    double gaunt_coeff;
    int laplacian_power;
};

inline std::vector<LinearizedOperatorTerm>
stgo_product_linearize(LMIndex a, LMIndex b)
{
    std::vector<LinearizedOperatorTerm> out;
    auto const g = gaunt_string(a.l, a.m, b.l, b.m);
    for (int l = g->range.l_min; l <= g->range.l_max; l += 2) {
        double const G = (*g)(l);
        if (G != 0.0) {
            out.push_back({l, G, (a.l + b.l - l) / 2});
        }
    }
    return out;
}

/// nabla^{2k} [psi(r) Y_l^m(r)] = psi_k(r) Y_l^m(r), one step being psi -> r^2 D^2 psi + (2l+3) D psi.
inline RadialFunction
radial_laplacian_power(RadialFunction psi, int l, int k)
{
    for (int i = 0; i < k; ++i) {
        if (psi.closed_form()) {
            psi = RadialFunction(psi.expr().radial_laplacian(l));
        } else {
            psi = psi.inv_r_ddr(2).times_power(2) + psi.inv_r_ddr(1).scaled(2 * l + 3);
        }
    }
    return psi;
}

/// Y_{l1}^{m1}(nabla) applied to the tensor Y_{l2}^{m2}(nabla) Phi(r), via operator linearization.
inline TensorExpansion
apply_via_generator(LMIndex op, LMIndex gen, RadialFunction const& Phi)
{
    TensorExpansion out;
    for (auto const& t : stgo_product_linearize(op, gen)) {
        RadialFunction const psi = radial_laplacian_power(Phi.inv_r_ddr(t.l), t.l, t.laplacian_power);
        out.terms.push_back({t.gaunt_coeff, psi.times_power(t.l), {t.l, op.m + gen.m}});
    }
    out.prune();
    return out;
}

/// Pointwise product of two expansions, re-linearized by Gaunt coefficients.
inline TensorExpansion
multiply(TensorExpansion const& a, TensorExpansion const& b)
{
    TensorExpansion out;
    for (auto const& ta : a.terms) {
        for (auto const& tb : b.terms) {
            RadialFunction const rad = ta.radial * tb.radial;
            auto const g = gaunt_string(ta.angular.l, ta.angular.m, tb.angular.l, tb.angular.m);
            for (int L = g->range.l_min; L <= g->range.l_max; L += 2) {
                double const G = (*g)(L);
                if (G != 0.0) {
                    out.add({ta.coeff * tb.coeff * G, rad, {L, ta.angular.m + tb.angular.m}});
                }
            }
        }
    }
    out.prune();
    return out;
}

/// Weight 2 pi (1/2)_{l+1} / ((1/2)_{lam+1} (1/2)_{l-lam+1}) of the solid-harmonic shift and Leibniz sums.
inline double
shift_weight(int l, int lam)
{
    Rational const w = pochhammer_half(l + 1) / (pochhammer_half(lam + 1) * pochhammer_half(l - lam + 1));
    return 2 * std::numbers::pi * to_double(w);
}

/// Y_l^m(nabla) [f g] = sum_lam sum_mu w <l m|lam -mu|l-lam m+mu> [Y_lam^{-mu}(nabla) f][Y_{l-lam}^{m+mu}(nabla) g].
inline TensorExpansion
leibniz(LMIndex idx, TensorExpansion const& f, TensorExpansion const& g)
{
    int const l = idx.l, m = idx.m;
    TensorExpansion out;
    for (int lam = 0; lam <= l; ++lam) {
        double const w = shift_weight(l, lam);
        for (int mu = -lam; mu <= lam; ++mu) {
            if (std::abs(m + mu) > l - lam) {
                continue;
            }
            double const G = gaunt_lin(l, lam, -mu, l - lam, m + mu);
            if (G == 0.0) {
                continue;
            }
            TensorExpansion const df = apply_to_tensor({lam, -mu}, f);
            TensorExpansion const dg = apply_to_tensor({l - lam, m + mu}, g);
            out.append(multiply(df, dg), w * G);
        }
    }
    out.prune();
    return out;
}

} // namespace stgo

#endif
