/** \file radial.hpp
 *
 *  \brief Radial functions with exact application of D = (1/r) d/dr.
 *
 *  Closed-form radials are finite sums  sum c * r^s * g_j(r)  over one base family:
 *    - power:     g_j = 1
 *    - gaussian:  g_j = exp(-alpha r^2)                 D g = -2 alpha g
 *    - bessel:    g_j = khat_{nu0 - j}(alpha r)          D g_j = -alpha^2 g_{j+1}
 *  so D maps the set into itself and every gamma form can be carried out symbolically.
 *  Sampled radials (closures) differentiate by central differences in u = r^2, where D = 2 d/du.
 */

#ifndef STGO_GRADIENT_RADIAL_HPP
#define STGO_GRADIENT_RADIAL_HPP

#include <climits>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include "stgo/core/bessel.hpp"
#include "stgo/core/errors.hpp"
#include "stgo/core/finite_difference.hpp"

namespace stgo {

/// Finite sum of c * r^s * g_j(r) over one base family.
class RadialExpr
{
  public:
    enum class Family
    {
        power,
        gaussian,
        bessel
    };

    RadialExpr() = default;

    static RadialExpr power(double sigma, double c = 1.0)
    {
        RadialExpr e(Family::power, 0.0, 0.0);
        e.add(sigma, 0, c);
        return e;
    }
    static RadialExpr gaussian(double alpha, double c = 1.0)
    {
        RadialExpr e(Family::gaussian, alpha, 0.0);
        e.add(0.0, 0, c);
        return e;
    }
    /// c * khat_nu(alpha r)
    static RadialExpr bessel(double nu, double alpha, double c = 1.0)
    {
        RadialExpr e(Family::bessel, alpha, nu);
        e.add(0.0, 0, c);
        return e;
    }

    Family family() const
    {
        return family_;
    }
    double alpha() const
    {
        return alpha_;
    }
    double nu0() const
    {
        return nu0_;
    }
    std::map<std::pair<double, int>, double> const& terms() const
    {
        return terms_;
    }

    bool compatible(RadialExpr const& o) const
    {
        return family_ == o.family_ && alpha_ == o.alpha_ && nu0_ == o.nu0_;
    }

    void add(double s, int j, double c)
    {
        if (c == 0.0) {
            return;
        }
        auto& slot = terms_[{s, j}];
        slot += c;
        if (slot == 0.0) {
            terms_.erase({s, j});
        }
    }

    double operator()(double r) const
    {
        if (terms_.empty()) {
            return 0.0;
        }
        if (!(r > 0)) {
            throw DomainError("radial function evaluated at r <= 0");
        }
        double sum = 0;
        std::map<int, double> base;
        for (auto const& [key, c] : terms_) {
            auto [it, fresh] = base.try_emplace(key.second, 0.0);
            if (fresh) {
                it->second = base_value(key.second, r);
            }
            sum += c * std::pow(r, key.first) * it->second;
        }
        return sum;
    }

    /// r^s * this
    RadialExpr times_power(double s) const
    {
        RadialExpr out(family_, alpha_, nu0_);
        for (auto const& [key, c] : terms_) {
            out.add(key.first + s, key.second, c);
        }
        return out;
    }

    RadialExpr scaled(double k) const
    {
        RadialExpr out(family_, alpha_, nu0_);
        for (auto const& [key, c] : terms_) {
            out.add(key.first, key.second, k * c);
        }
        return out;
    }

    /// D applied once: D(r^s g_j) = s r^{s-2} g_j + r^s D g_j.
    RadialExpr inv_r_ddr() const
    {
        RadialExpr out(family_, alpha_, nu0_);
        for (auto const& [key, c] : terms_) {
            auto const [s, j] = key;
            out.add(s - 2, j, s * c);
            switch (family_) {
                case Family::power:
                    break;
                case Family::gaussian:
                    out.add(s, j, -2 * alpha_ * c);
                    break;
                case Family::bessel:
                    out.add(s, j + 1, -alpha_ * alpha_ * c);
                    break;
            }
        }
        return out;
    }

    RadialExpr inv_r_ddr(int k) const
    {
        if (k < 0) {
            throw DomainError("inv_r_ddr: negative order");
        }
        RadialExpr out = *this;
        for (int i = 0; i < k; ++i) {
            out = out.inv_r_ddr();
        }
        return out;
    }

    /// psi -> psi'' + (2l+2)/r psi' = r^2 D^2 psi + (2l+3) D psi  (Laplacian of psi(r) r^l Y_l^m / r^l).
    RadialExpr radial_laplacian(int l) const
    {
        RadialExpr const d1 = inv_r_ddr();
        RadialExpr out      = d1.inv_r_ddr().times_power(2);
        out += d1.scaled(2 * l + 3);
        return out;
    }

    RadialExpr& operator+=(RadialExpr const& o)
    {
        if (terms_.empty() && family_ == Family::power && alpha_ == 0 && !o.terms_.empty()) {
            *this = o;
            return *this;
        }
        if (!compatible(o)) {
            throw DomainError("RadialExpr: adding expressions of different families");
        }
        for (auto const& [key, c] : o.terms_) {
            add(key.first, key.second, c);
        }
        return *this;
    }

    std::string describe() const
    {
        std::ostringstream os;
        os << (family_ == Family::power ? "power" : family_ == Family::gaussian ? "gaussian" : "bessel")
           << "[alpha=" << alpha_ << ", nu0=" << nu0_ << ", terms=" << terms_.size() << "]";
        return os.str();
    }

  private:
    RadialExpr(Family f, double alpha, double nu0)
        : family_(f)
        , alpha_(alpha)
        , nu0_(nu0)
    {
    }

    double base_value(int j, double r) const
    {
        switch (family_) {
            case Family::power:
                return 1.0;
            case Family::gaussian:
                return std::exp(-alpha_ * r * r);
            case Family::bessel:
                return khat(nu0_ - j, alpha_ * r);
        }
        return 0.0;
    }

    Family family_{Family::power};
    double alpha_{0};
    double nu0_{0};
    std::map<std::pair<double, int>, double> terms_;
};

/// A radial function: closed form when available, otherwise a sampled closure.
class RadialFunction
{
  public:
    using Sampler = std::function<double(double)>;

    RadialFunction()
        : expr_(RadialExpr())
    {
    }
    RadialFunction(RadialExpr e)
        : expr_(std::move(e))
    {
    }
    explicit RadialFunction(Sampler f, int max_order = 6)
        : fn_(std::make_shared<Sampler>(std::move(f)))
        , max_order_(max_order)
    {
    }

    bool closed_form() const
    {
        return expr_.has_value();
    }
    RadialExpr const& expr() const
    {
        if (!expr_) {
            throw CapabilityError("radial function has no closed form");
        }
        return *expr_;
    }
    int max_order() const
    {
        return expr_ ? INT_MAX : max_order_;
    }

    double operator()(double r) const
    {
        return expr_ ? (*expr_)(r) : (*fn_)(r);
    }

    /// D^k; exact for closed forms, central differences in u = r^2 for samplers.
    RadialFunction inv_r_ddr(int k) const
    {
        if (k == 0) {
            return *this;
        }
        if (expr_) {
            return RadialFunction(expr_->inv_r_ddr(k));
        }
        if (k > max_order_) {
            throw CapabilityError("sampled radial function: derivative order " + std::to_string(k) +
                                  " exceeds the supported " + std::to_string(max_order_));
        }
        auto f              = fn_;
        auto const& stencil = central_stencil(k, 2);
        RadialFunction out(
            [f, k, &stencil](double r) {
                double const u = r * r;
                double const h = std::pow(std::numeric_limits<double>::epsilon(), 1.0 / (k + 2)) * u;
                long double sum = 0;
                for (int j = -stencil.half_width; j <= stencil.half_width; ++j) {
                    long double const w = stencil.weights[j + stencil.half_width];
                    if (w != 0) {
                        sum += static_cast<long double>(w) * (*f)(std::sqrt(u + j * h));
                    }
                }
                /* D = 2 d/du */
                return static_cast<double>(sum) * std::pow(2.0 / h, k);
            },
            max_order_ - k);
        return out;
    }

    RadialFunction times_power(double s) const
    {
        if (expr_) {
            return RadialFunction(expr_->times_power(s));
        }
        auto f = fn_;
        return RadialFunction([f, s](double r) { return std::pow(r, s) * (*f)(r); }, max_order_);
    }

    RadialFunction scaled(double k) const
    {
        if (expr_) {
            return RadialFunction(expr_->scaled(k));
        }
        auto f = fn_;
        return RadialFunction([f, k](double r) { return k * (*f)(r); }, max_order_);
    }

    friend RadialFunction operator+(RadialFunction const& a, RadialFunction const& b)
    {
        if (a.expr_ && b.expr_ && (a.expr_->compatible(*b.expr_) || a.expr_->terms().empty() ||
                                   b.expr_->terms().empty())) {
            RadialExpr e = a.expr_->terms().empty() ? *b.expr_ : *a.expr_;
            if (!a.expr_->terms().empty() && !b.expr_->terms().empty()) {
                e += *b.expr_;
            }
            return RadialFunction(e);
        }
        auto fa = std::make_shared<RadialFunction>(a);
        auto fb = std::make_shared<RadialFunction>(b);
        return RadialFunction([fa, fb](double r) { return (*fa)(r) + (*fb)(r); },
                              std::min(a.max_order(), b.max_order()));
    }

    friend RadialFunction operator*(RadialFunction const& a, RadialFunction const& b)
    {
        if (a.expr_ && a.expr_->family() == RadialExpr::Family::power && b.expr_) {
            /* sum c r^s times an expression stays closed */
            RadialExpr e;
            bool first = true;
            for (auto const& [key, c] : a.expr_->terms()) {
                RadialExpr t = b.expr_->times_power(key.first).scaled(c);
                if (first) {
                    e     = t;
                    first = false;
                } else {
                    e += t;
                }
            }
            return RadialFunction(e);
        }
        if (b.expr_ && b.expr_->family() == RadialExpr::Family::power && a.expr_) {
            return b * a;
        }
        auto fa = std::make_shared<RadialFunction>(a);
        auto fb = std::make_shared<RadialFunction>(b);
        return RadialFunction([fa, fb](double r) { return (*fa)(r) * (*fb)(r); },
                              std::min(a.max_order(), b.max_order()));
    }

  private:
    std::optional<RadialExpr> expr_;
    std::shared_ptr<Sampler> fn_;
    int max_order_{INT_MAX};
};

/// Named radial profiles phi(r) used as inputs to the operator.
struct RadialProfile
{
    enum class Kind
    {
        power,              ///< r^sigma
        gaussian,           ///< exp(-alpha r^2)
        reduced_bessel_half, ///< khat_{n+1/2}(alpha r)
        yukawa_like,        ///< exp(-alpha r) / r
        custom              ///< sampled closure
    };

    Kind kind{Kind::power};
    double sigma{0};
    double alpha{1};
    int n{0};
    RadialFunction::Sampler sampler;
    int custom_max_order{6};

    static RadialProfile power(double sigma)
    {
        RadialProfile p;
        p.kind  = Kind::power;
        p.sigma = sigma;
        return p;
    }
    static RadialProfile gaussian(double alpha)
    {
        check_alpha(alpha);
        RadialProfile p;
        p.kind  = Kind::gaussian;
        p.alpha = alpha;
        return p;
    }
    static RadialProfile reduced_bessel_half(int n, double alpha)
    {
        check_alpha(alpha);
        RadialProfile p;
        p.kind  = Kind::reduced_bessel_half;
        p.n     = n;
        p.alpha = alpha;
        return p;
    }
    static RadialProfile yukawa_like(double alpha)
    {
        check_alpha(alpha);
        RadialProfile p;
        p.kind  = Kind::yukawa_like;
        p.alpha = alpha;
        return p;
    }
    static RadialProfile custom(RadialFunction::Sampler f, int max_order = 6)
    {
        RadialProfile p;
        p.kind             = Kind::custom;
        p.sampler          = std::move(f);
        p.custom_max_order = max_order;
        return p;
    }

    /// Highest supported power of D.
    int max_derivative_order() const
    {
        return kind == Kind::custom ? custom_max_order : INT_MAX;
    }

    RadialFunction function() const
    {
        switch (kind) {
            case Kind::power:
                return RadialExpr::power(sigma);
            case Kind::gaussian:
                return RadialExpr::gaussian(alpha);
            case Kind::reduced_bessel_half:
                return RadialExpr::bessel(n + 0.5, alpha);
            case Kind::yukawa_like:
                /* exp(-alpha r)/r = alpha khat_{-1/2}(alpha r) */
                return RadialExpr::bessel(-0.5, alpha, alpha);
            case Kind::custom:
                return RadialFunction(sampler, custom_max_order);
        }
        return {};
    }

    double operator()(double r) const
    {
        return function()(r);
    }

    /// (D^k phi)(r)
    double inv_r_ddr(int k, double r) const
    {
        return function().inv_r_ddr(k)(r);
    }

  private:
    static void check_alpha(double alpha)
    {
        if (!(alpha > 0)) {
            throw DomainError("radial profile: alpha must be positive");
        }
    }
};

} // namespace stgo

#endif
