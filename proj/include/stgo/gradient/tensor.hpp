/** \file tensor.hpp
 *
 *  \brief Finite expansions  sum_k coeff_k * radial_k(r) * Y_{l_k}^{m_k}(r/|r|).
 */

#ifndef STGO_GRADIENT_TENSOR_HPP
#define STGO_GRADIENT_TENSOR_HPP

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "stgo/gradient/radial.hpp"
#include "stgo/harmonics/spherical.hpp"
#include "stgo/harmonics/vec3.hpp"

namespace stgo {

struct TensorTerm
{
    Complex coeff{1.0};
    RadialFunction radial;
    LMIndex angular;

    Complex operator()(Vec3 r) const
    {
        return coeff * radial(r.norm()) * ylm(angular, r);
    }
};

/// A scalar f(r) written as a rank-0 tensor term: f = sqrt(4 pi) f Y_0^0.
inline TensorTerm
scalar_term(RadialFunction f)
{
    return {std::sqrt(4 * std::numbers::pi), std::move(f), {0, 0}};
}

class TensorExpansion
{
  public:
    std::vector<TensorTerm> terms;

    TensorExpansion() = default;
    TensorExpansion(std::initializer_list<TensorTerm> t)
        : terms(t)
    {
    }

    Complex operator()(Vec3 r) const
    {
        Complex sum = 0;
        for (auto const& t : terms) {
            sum += t(r);
        }
        return sum;
    }

    /// Append, folding into an existing term with the same angular index when the radials combine exactly.
    void add(TensorTerm t)
    {
        for (auto& u : terms) {
            if (u.angular == t.angular && u.radial.closed_form() && t.radial.closed_form()) {
                auto const& a = u.radial.expr();
                auto const& b = t.radial.expr();
                if (a.compatible(b) && u.coeff.imag() == 0 && t.coeff.imag() == 0) {
                    u.radial = u.radial.scaled(u.coeff.real()) + t.radial.scaled(t.coeff.real());
                    u.coeff  = 1.0;
                    return;
                }
            }
        }
        terms.push_back(std::move(t));
    }

    void append(TensorExpansion const& o, Complex scale = 1.0)
    {
        for (auto t : o.terms) {
            t.coeff *= scale;
            add(std::move(t));
        }
    }

    /// Drop terms whose coefficient is below rel_tol times the largest one.
    void prune(double rel_tol = 1e-14)
    {
        double big = 0;
        for (auto const& t : terms) {
            big = std::max(big, std::abs(t.coeff));
        }
        std::erase_if(terms, [&](TensorTerm const& t) {
            return std::abs(t.coeff) < rel_tol * big ||
                   (t.radial.closed_form() && t.radial.expr().terms().empty());
        });
    }
};

} // namespace stgo

#endif
