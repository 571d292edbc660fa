/** \file suites.hpp
 *
 *  \brief Property suites that compare closed forms with independent oracles.
 *
 *  Suite names: gaunt, gamma-forms, hobson, bfun-fourier, functional-equations, pade, convolution,
 *  addition, and all (every suite, case ids prefixed by the suite name).
 */

#ifndef STGO_VERIFY_SUITES_HPP
#define STGO_VERIFY_SUITES_HPP

#include <chrono>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "stgo/addition/addition.hpp"
#include "stgo/bfun/bfunction.hpp"
#include "stgo/core/bessel.hpp"
#include "stgo/gradient/operator.hpp"
#include "stgo/oracles/convolution.hpp"
#include "stgo/oracles/fd.hpp"
#include "stgo/oracles/hankel.hpp"
#include "stgo/oracles/quadrature.hpp"
#include "stgo/verify/report.hpp"
#include "stgo/wigner/gaunt.hpp"

namespace stgo::verify {

namespace detail {

/// Concatenates the arguments into a case id.
template <typename... T>
std::string
id(T const&... parts)
{
    std::ostringstream s;
    s.precision(6);
    (s << ... << parts);
    return s.str();
}

inline Vec3
random_direction(std::mt19937& rng, double len)
{
    std::normal_distribution<double> n;
    Vec3 const v{n(rng), n(rng), n(rng)};
    double const s = len / v.norm();
    return {v.x * s, v.y * s, v.z * s};
}

inline Vec3
random_shell_point(std::mt19937& rng, double r_min, double r_max)
{
    std::uniform_real_distribution<double> u(-r_max, r_max);
    for (;;) {
        Vec3 const r{u(rng), u(rng), u(rng)};
        if (r.norm() > r_min && r.norm() < r_max) {
            return r;
        }
    }
}

template <typename Body>
VerifyReport
timed(std::string const& name, VerifyOptions const& opt, Body&& body)
{
    auto const t0 = std::chrono::steady_clock::now();
    auto cases    = body();
    double const ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return finish_report(name, std::move(cases), ms, opt);
}

} // namespace detail

/// Gaunt strings from the three-term recurrence against exact Racah values (l1, l2 <= gaunt_lmax,
/// two random m pairs each), and against Lebedev quadrature of three solid harmonics (l <= 6).
inline VerifyReport
suite_gaunt(VerifyOptions const& opt)
{
    return detail::timed("gaunt", opt, [&] {
        int const L = opt.gaunt_lmax;
        auto cases  = run_tasks(L + 1, opt.threads, [&](int l1) {
            std::vector<VerifyCase> out;
            std::mt19937 rng(opt.seed + l1);
            for (int l2 = 0; l2 <= L; ++l2) {
                std::uniform_int_distribution<int> d1(-l1, l1), d2(-l2, l2);
                for (int trial = 0; trial < 2; ++trial) {
                    int const m1 = d1(rng), m2 = d2(rng);
                    auto const gp = gaunt_string(l1, m1, l2, m2);
                    auto const& g  = *gp;
                    for (int l = g.range.l_min; l <= g.range.l_max; l += 2) {
                        out.push_back(make_case(detail::id("gaunt/string/", l1, ",", m1, ",", l2, ",", m2, "/", l), g(l),
                                                gaunt({l1, m1, l2, m2, l, m1 + m2}), 1e-12));
                    }
                }
            }
            return out;
        });

        int const Lq      = std::min(6, L);
        auto const& grid = oracles::lebedev_grid(590);
        std::vector<std::vector<Complex>> table;
        for (auto const& node : grid.nodes) {
            table.push_back(regular_solid_table(Lq, node.dir));
        }
        auto quad = run_tasks(Lq + 1, opt.threads, [&](int l1) {
            std::vector<VerifyCase> out;
            for (int l2 = 0; l2 <= Lq; ++l2) {
                for (int m1 = -l1; m1 <= l1; ++m1) {
                    for (int m2 = -l2; m2 <= l2; ++m2) {
                        int const m3 = m1 + m2;
                        for (int l3 = std::abs(m3); l3 <= Lq; ++l3) {
                            Complex q = 0;
                            for (std::size_t k = 0; k < grid.nodes.size(); ++k) {
                                auto const& y = table[k];
                                q += grid.nodes[k].weight * std::conj(y[lm_offset(l3, m3)]) * y[lm_offset(l2, m2)] *
                                     y[lm_offset(l1, m1)];
                            }
                            out.push_back(make_case(detail::id("gaunt/lebedev/", l1, ",", m1, ",", l2, ",", m2, "/", l3), q,
                                                    gaunt({l1, m1, l2, m2, l3, m3}), 1e-10));
                        }
                    }
                }
            }
            return out;
        });
        cases.insert(cases.end(), quad.begin(), quad.end());
        return cases;
    });
}

/// Every admissible pair of the six gamma forms, l1, l2 <= 5, four profiles, three radii.
inline VerifyReport
suite_gamma_forms(VerifyOptions const& opt)
{
    return detail::timed("gamma-forms", opt, [&] {
        std::vector<std::pair<std::string, RadialProfile>> const profiles{
            {"gaussian(1)", RadialProfile::gaussian(1.0)},
            {"power(-1)", RadialProfile::power(-1.0)},
            {"power(2.5)", RadialProfile::power(2.5)},
            {"bessel(2,1)", RadialProfile::reduced_bessel_half(2, 1.0)}};
        return run_tasks(static_cast<int>(profiles.size()), opt.threads, [&](int k) {
            std::vector<VerifyCase> out;
            auto const& [name, prof] = profiles[k];
            auto const f             = prof.function();
            for (int l1 = 0; l1 <= 5; ++l1) {
                for (int l2 = 0; l2 <= 5; ++l2) {
                    for (int l = std::abs(l1 - l2); l <= l1 + l2; l += 2) {
                        auto const forms = admissible_gamma_forms(l2, l);
                        for (double r : {0.5, 1.0, 2.3}) {
                            std::vector<double> v;
                            for (int form : forms) {
                                v.push_back(gamma_radial(form, l1, l2, l, f, r));
                            }
                            for (std::size_t i = 0; i < v.size(); ++i) {
                                for (std::size_t j = i + 1; j < v.size(); ++j) {
                                    out.push_back(make_case(detail::id("gamma-forms/", name, "/", l1, ",", l2, ",", l,
                                                                       "/r=", r, "/", forms[j], "-", forms[i]),
                                                            v[j], v[i], 1e-10));
                                }
                            }
                        }
                    }
                }
            }
            return out;
        });
    });
}

/// Hobson's theorem against Cartesian finite differences (Gaussian and Yukawa, l <= 4, ten random
/// points per (l, m)), and against the Gaussian and Coulomb closed forms.
inline VerifyReport
suite_hobson(VerifyOptions const& opt)
{
    return detail::timed("hobson", opt, [&] {
        oracles::ExtendedField const gaussian = [](long double x, long double y, long double z) {
            return std::complex<long double>(std::exp(-(x * x + y * y + z * z)));
        };
        oracles::ExtendedField const yukawa = [](long double x, long double y, long double z) {
            long double const r = std::sqrt(x * x + y * y + z * z);
            return std::complex<long double>(std::exp(-r) / r);
        };
        struct Job
        {
            std::string name;
            RadialProfile prof;
            oracles::ExtendedField field;
            int l;
        };
        std::vector<Job> jobs;
        for (int l = 0; l <= 4; ++l) {
            jobs.push_back({"gaussian", RadialProfile::gaussian(1.0), gaussian, l});
            jobs.push_back({"yukawa", RadialProfile::yukawa_like(1.0), yukawa, l});
        }
        auto cases = run_tasks(static_cast<int>(jobs.size()), opt.threads, [&](int k) {
            std::vector<VerifyCase> out;
            auto const& job = jobs[k];
            std::mt19937 rng(opt.seed + 101 * k);
            for (int m = -job.l; m <= job.l; ++m) {
                auto const ex = hobson_harmonic({job.l, m}, job.prof);
                for (int p = 0; p < 10; ++p) {
                    Vec3 const r  = detail::random_shell_point(rng, 0.6, 1.2);
                    auto const fd = oracles::fd_apply_operator(regular_solid_poly({job.l, m}), job.field, r,
                                                               {8, 0.03 * std::min(1.0, r.norm())});
                    out.push_back(
                        make_case(detail::id("hobson/fd/", job.name, "/", job.l, ",", m, "/", p), ex(r), fd.value, 1e-6));
                }
            }
            return out;
        });

        /* Y_l^m(nabla) e^{-a r^2} = (-2a)^l e^{-a r^2} Y_l^m(r);  Y_l^m(nabla) 1/r = (-1)^l (2l-1)!! Z_l^m(r) */
        std::mt19937 rng(opt.seed + 7);
        double const a = 0.8;
        for (int l = 0; l <= 4; ++l) {
            for (int m = -l; m <= l; ++m) {
                auto const g = hobson_harmonic({l, m}, RadialProfile::gaussian(a));
                auto const c = hobson_harmonic({l, m}, RadialProfile::power(-1.0));
                for (int p = 0; p < 3; ++p) {
                    Vec3 const r = detail::random_shell_point(rng, 0.3, 2.0);
                    cases.push_back(make_case(detail::id("hobson/gaussian-closed/", l, ",", m, "/", p), g(r),
                                              std::pow(-2 * a, l) * std::exp(-a * r.norm2()) * regular_solid({l, m}, r),
                                              1e-12));
                    cases.push_back(make_case(detail::id("hobson/coulomb-closed/", l, ",", m, "/", p), c(r),
                                              parity_sign(l) * to_double(double_factorial(2 * l - 1)) *
                                                  irregular_solid({l, m}, r),
                                              1e-12));
                }
            }
        }
        return cases;
    });
}

/// Closed-form B-function transforms against the Hankel quadrature of the radial part.
inline VerifyReport
suite_bfun_fourier(VerifyOptions const& opt)
{
    return detail::timed("bfun-fourier", opt, [&] {
        return run_tasks(3, opt.threads, [&](int n) {
            std::vector<VerifyCase> out;
            for (int l = 0; l <= 3; ++l) {
                for (double alpha : {0.7, 1.0, 2.0}) {
                    double const norm = stgo::detail::b_normalization(n + l);
                    auto const f_l    = [&](double r) { return norm * khat(n - 0.5, alpha * r) * std::pow(alpha * r, l); };
                    for (double p : {0.2, 1.0, 4.0}) {
                        /* radial part of Bbar: Y_l^m(-i p) = (-i)^l p^l Y_l^m(p/|p|) */
                        Complex const closed = b_fourier({n, l, 0, alpha}, {0, 0, p}) / ylm({l, 0}, {0, 0, 1});
                        out.push_back(make_case(detail::id("bfun-fourier/", n, ",", l, "/alpha=", alpha, "/p=", p), closed,
                                                oracles::hankel_radial_ft(f_l, l, p).value, 1e-8));
                    }
                }
            }
            return out;
        });
    });
}

/// The three momentum-space functional equations over n in [-2, 4], l <= 3, |p| in {0.3, 1, 5}.
inline VerifyReport
suite_functional_equations(VerifyOptions const& opt)
{
    return detail::timed("functional-equations", opt, [&] {
        std::vector<VerifyCase> out;
        for (double alpha : {0.7, 1.0, 2.0}) {
            for (double p : {0.3, 1.0, 5.0}) {
                Vec3 const pv{0.48 * p, -0.6 * p, 0.64 * p};
                for (int n = -2; n <= 4; ++n) {
                    for (int l = 0; l <= 3; ++l) {
                        for (int m = -l; m <= l; ++m) {
                            auto const r = b_fourier_functional_check({n, l, m, alpha}, pv);
                            auto const tag = detail::id(n, ",", l, ",", m, "/alpha=", alpha, "/p=", p);
                            out.push_back(make_case("functional-equations/lowering/" + tag, r.lowering.lhs, r.lowering.rhs,
                                                    1e-12));
                            out.push_back(make_case("functional-equations/tensor/" + tag, r.tensor.lhs, r.tensor.rhs,
                                                    1e-12));
                            if (n == -2 && l == 0) {
                                out.push_back(make_case(detail::id("functional-equations/delta/alpha=", alpha, "/p=", p),
                                                        r.delta.lhs, r.delta.rhs, 1e-12));
                            }
                        }
                    }
                }
            }
        }
        return out;
    });
}

/// Taylor coefficients of Theta_n(z/2)/Theta_n(-z/2) against those of e^z through order 2n, n <= 5.
inline VerifyReport
suite_pade(VerifyOptions const& opt)
{
    return detail::timed("pade", opt, [&] {
        std::vector<VerifyCase> out;
        for (int n = 0; n <= 5; ++n) {
            auto const t = bessel_pade_taylor(n, 2 * n);
            double inv_fact = 1;
            for (int k = 0; k <= 2 * n; ++k) {
                out.push_back(make_case(detail::id("pade/", n, "/", k), t[k], inv_fact, 1e-12));
                inv_fact /= k + 1;
            }
        }
        return out;
    });
}

/// Convolution theorem against momentum-space quadrature: n_i, l_i <= 2, every m_i, three radii.
inline VerifyReport
suite_convolution(VerifyOptions const& opt)
{
    return detail::timed("convolution", opt, [&] {
        double const alpha = 1.1;
        oracles::lebedev_grid(110);
        return run_tasks(9, opt.threads, [&](int k) {
            std::vector<VerifyCase> out;
            int const n1 = k / 3, n2 = k % 3;
            for (int l1 = 0; l1 <= 2; ++l1) {
                for (int l2 = 0; l2 <= 2; ++l2) {
                    for (int m1 = -l1; m1 <= l1; ++m1) {
                        for (int m2 = -l2; m2 <= l2; ++m2) {
                            BIndex const a{n1, l1, m1, alpha}, b{n2, l2, m2, alpha};
                            auto const e = convolve(a, b);
                            for (double r : {0.4, 1.0, 2.5}) {
                                Vec3 const at{0.48 * r, 0.6 * r, -0.64 * r};
                                out.push_back(make_case(detail::id("convolution/", n1, ",", l1, ",", m1, "*", n2, ",", l2,
                                                                   ",", m2, "/r=", r),
                                                        e(at), oracles::momentum_convolution(a, b, at).value, 1e-7));
                            }
                        }
                    }
                }
            }
            return out;
        });
    });
}

namespace detail {

/// |r_< + r_>|^nu Y_l^m against direct evaluation: nu in {-3, -1, 1.5} at ratio 0.4 with l1 <= 30, and the
/// terminating nu in {0, 2, 4} with a flag case each; the Coulomb case against the Laplace expansion.
inline std::vector<VerifyCase>
power_addition_cases(VerifyOptions const& opt, PochhammerCluster cluster)
{
    std::vector<double> const nus{-3.0, -1.0, 1.5, 0.0, 2.0, 4.0};
    auto cases = run_tasks(static_cast<int>(nus.size()), opt.threads, [&](int k) {
        std::vector<VerifyCase> out;
        double const nu = nus[k];
        bool const even = nu >= 0 && std::fmod(nu, 2.0) == 0;
        std::mt19937 rng(opt.seed + 31 * k);
        for (int l = 0; l <= 2; ++l) {
            for (int m = -l; m <= l; ++m) {
                for (int p = 0; p < 3; ++p) {
                    Vec3 const rl = random_direction(rng, 0.4), rg = random_direction(rng, 1.0);
                    auto const res = power_solid_addition(nu, {l, m}, SplitPair(rl, rg), {30, 1e-17}, cluster);
                    Vec3 const s   = rl + rg;
                    auto const tag = id("addition/power-solid/nu=", nu, "/", l, ",", m, "/", p);
                    out.push_back(make_case(tag, res.value, std::pow(s.norm(), nu) * regular_solid({l, m}, s),
                                            even ? 1e-13 : 1e-8));
                    if (even) {
                        out.push_back(make_case(tag + "/terminated", res.exact ? 1.0 : 0.0, 1.0, 0.0));
                    }
                }
            }
        }
        return out;
    });

    std::mt19937 rng(opt.seed + 3);
    for (int p = 0; p < 10; ++p) {
        Vec3 const rl = random_direction(rng, 0.4), rg = random_direction(rng, 1.0);
        auto const a  = power_solid_addition(-1, {0, 0}, SplitPair(rl, rg), {60, 1e-17}, cluster);
        auto const b  = laplace_expansion(rl, rg, 1, {60, 1e-17});
        cases.push_back(
            make_case(id("addition/laplace/", p), a.value * std::sqrt(4 * std::numbers::pi), b.value, 1e-11));
    }
    return cases;
}

/// The finite solid-harmonic addition theorem, l <= 6, 50 random pairs with lengths in [0.5, 1.5].
inline std::vector<VerifyCase>
solid_shift_cases(VerifyOptions const& opt)
{
    std::mt19937 rng(opt.seed + 5);
    std::uniform_real_distribution<double> len(0.5, 1.5);
    std::vector<VerifyCase> cases;
    for (int p = 0; p < 50; ++p) {
        Vec3 const r = random_direction(rng, len(rng)), rp = random_direction(rng, len(rng));
        for (int l = 0; l <= 6; ++l) {
            for (int m = -l; m <= l; ++m) {
                cases.push_back(make_case(id("addition/solid-shift/", p, "/", l, ",", m),
                                          solid_harmonic_shift({l, m}, r, rp), regular_solid({l, m}, r + rp), 1e-11));
            }
        }
    }
    return cases;
}

} // namespace detail

/// Power-times-harmonic addition theorem and its Coulomb case.
inline VerifyReport
suite_power_addition(VerifyOptions const& opt, PochhammerCluster cluster = PochhammerCluster::Rederived)
{
    return detail::timed("addition-power", opt, [&] { return detail::power_addition_cases(opt, cluster); });
}

/// Finite solid-harmonic addition theorem.
inline VerifyReport
suite_solid_shift(VerifyOptions const& opt)
{
    return detail::timed("addition-solid", opt, [&] { return detail::solid_shift_cases(opt); });
}

/// Both addition suites in one report.
inline VerifyReport
suite_addition(VerifyOptions const& opt)
{
    return detail::timed("addition", opt, [&] {
        auto cases = detail::power_addition_cases(opt, PochhammerCluster::Rederived);
        auto shift = detail::solid_shift_cases(opt);
        cases.insert(cases.end(), shift.begin(), shift.end());
        return cases;
    });
}

inline std::vector<std::string> const&
suite_names()
{
    static std::vector<std::string> const names{"gaunt",     "gamma-forms", "hobson",      "bfun-fourier",
                                                "functional-equations", "pade", "convolution", "addition"};
    return names;
}

/// Runs a suite by name; "all" runs every suite. Unknown names raise DomainError.
inline VerifyReport
run_suite(std::string const& name, VerifyOptions const& opt)
{
    if (name == "gaunt") {
        return suite_gaunt(opt);
    }
    if (name == "gamma-forms") {
        return suite_gamma_forms(opt);
    }
    if (name == "hobson") {
        return suite_hobson(opt);
    }
    if (name == "bfun-fourier") {
        return suite_bfun_fourier(opt);
    }
    if (name == "functional-equations") {
        return suite_functional_equations(opt);
    }
    if (name == "pade") {
        return suite_pade(opt);
    }
    if (name == "convolution") {
        return suite_convolution(opt);
    }
    if (name == "addition") {
        return suite_addition(opt);
    }
    if (name == "all") {
        std::vector<VerifyCase> cases;
        double ms = 0;
        for (auto const& s : suite_names()) {
            auto r = run_suite(s, opt);
            ms += r.runtime_ms;
            cases.insert(cases.end(), r.cases.begin(), r.cases.end());
        }
        return finish_report("all", std::move(cases), ms, opt);
    }
    throw DomainError("unknown verify suite: " + name);
}

} // namespace stgo::verify

#endif
