// Command-line front end: evaluation, tabulation, operator application, verification and benchmarks.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "stgo.hpp"

using json = nlohmann::json;
using namespace stgo;

namespace {

/// Bad flag values found after parsing; reported as usage errors.
struct UsageError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

/// Exit 1 after the normal output has been written.
struct SoftFailure
{
};

std::string
g17(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

json
cjson(Complex z)
{
    return {{"re", z.real()}, {"im", z.imag()}};
}

Vec3
parse_vec(std::string const& s, char const* flag)
{
    std::istringstream in(s);
    std::vector<double> v;
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            v.push_back(std::stod(item, &used));
            if (used != item.size()) {
                throw std::invalid_argument(item);
            }
        } catch (std::exception const&) {
            throw UsageError(std::string(flag) + ": expected x,y,z, got '" + s + "'");
        }
    }
    if (v.size() != 3) {
        throw UsageError(std::string(flag) + ": expected x,y,z, got '" + s + "'");
    }
    return {v[0], v[1], v[2]};
}

std::vector<int>
parse_ints(std::string const& s, std::size_t count, char const* flag)
{
    std::istringstream in(s);
    std::vector<int> v;
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            v.push_back(std::stoi(item, &used));
            if (used != item.size()) {
                throw std::invalid_argument(item);
            }
        } catch (std::exception const&) {
            throw UsageError(std::string(flag) + ": expected " + std::to_string(count) + " integers, got '" + s + "'");
        }
    }
    if (v.size() != count) {
        throw UsageError(std::string(flag) + ": expected " + std::to_string(count) + " integers, got '" + s + "'");
    }
    return v;
}

/// Profile spec: gaussian:alpha, power:sigma, bessel:n,alpha (khat_{n+1/2}(alpha r)), yukawa:alpha.
RadialProfile
parse_profile(std::string const& s)
{
    auto const colon = s.find(':');
    if (colon == std::string::npos) {
        throw UsageError("--target: expected kind:params, got '" + s + "'");
    }
    std::string const kind = s.substr(0, colon);
    std::istringstream in(s.substr(colon + 1));
    std::vector<double> p;
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            p.push_back(std::stod(item));
        } catch (std::exception const&) {
            throw UsageError("--target: bad parameter '" + item + "'");
        }
    }
    auto need = [&](std::size_t n) {
        if (p.size() != n) {
            throw UsageError("--target: " + kind + " takes " + std::to_string(n) + " parameter(s)");
        }
    };
    if (kind == "gaussian") {
        need(1);
        return RadialProfile::gaussian(p[0]);
    }
    if (kind == "power") {
        need(1);
        return RadialProfile::power(p[0]);
    }
    if (kind == "bessel") {
        need(2);
        return RadialProfile::reduced_bessel_half(static_cast<int>(p[0]), p[1]);
    }
    if (kind == "yukawa") {
        need(1);
        return RadialProfile::yukawa_like(p[0]);
    }
    throw UsageError("--target: unknown profile kind '" + kind + "'");
}

json
expansion_json(BExpansion const& e)
{
    json terms = json::array();
    for (auto const& t : e.terms) {
        terms.push_back({{"coeff", t.coeff}, {"n", t.index.n}, {"l", t.index.l}, {"m", t.index.m}, {"alpha", t.index.alpha}});
    }
    return terms;
}

json
report_json(verify::VerifyReport const& r)
{
    json cases = json::array();
    for (auto const& c : r.cases) {
        cases.push_back({{"id", c.id},
                         {"lhs", cjson(c.lhs)},
                         {"rhs", cjson(c.rhs)},
                         {"abs_err", c.abs_err},
                         {"rel_err", c.rel_err},
                         {"tol", c.tol},
                         {"pass", c.pass}});
    }
    return {{"suite", r.suite},
            {"cases", cases},
            {"summary", {{"total", r.summary.total}, {"passed", r.summary.passed}, {"max_rel_err", r.summary.max_rel_err}}},
            {"runtime_ms", r.runtime_ms}};
}

struct Globals
{
    std::string json_path;
    std::optional<double> tol;
    unsigned seed{20240607};
    int threads{1};
};

/// Writes JSON to --json when given (and a short note to stdout), to stdout otherwise.
void
emit(json const& j, Globals const& g, std::string const& note = "")
{
    if (g.json_path.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(g.json_path);
    if (!out) {
        throw UsageError("--json: cannot write " + g.json_path);
    }
    out << j.dump(2) << "\n";
    if (!note.empty()) {
        std::cout << note << "\n";
    }
}

} // namespace

int
main(int argc, char** argv)
{
    CLI::App app{"Spherical tensor gradient operator toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    double tol_flag = 0;
    app.add_option("--json", g.json_path, "write JSON output to this file");
    auto* tol_opt = app.add_option("--tol", tol_flag, "tolerance override")->check(CLI::PositiveNumber);
    app.add_option("--seed", g.seed, "seed for randomized cases");
    app.add_option("--threads", g.threads, "worker threads")->check(CLI::Range(1, 256));

    /* eval */
    auto* eval = app.add_subcommand("eval", "evaluate ylm, rsh, zlm, bfun or khat");
    std::string eval_kind;
    int l = 0, m = 0, n = 0;
    double theta = 0, phi = 0, alpha = 1, nu = 0, z = 1;
    std::string r_s, rp_s, p_s;
    bool dump_poly = false;
    eval->add_option("kind", eval_kind)->required()->check(CLI::IsMember({"ylm", "rsh", "zlm", "bfun", "khat"}));
    eval->add_option("--l", l);
    eval->add_option("--m", m);
    eval->add_option("--n", n);
    eval->add_option("--theta", theta);
    eval->add_option("--phi", phi);
    eval->add_option("--alpha", alpha);
    eval->add_option("--nu", nu);
    eval->add_option("--z", z);
    eval->add_option("--r", r_s, "point x,y,z");
    eval->add_flag("--dump-poly", dump_poly, "also print the Cartesian polynomial of Y_l^m");

    /* gaunt */
    auto* gaunt_cmd = app.add_subcommand("gaunt", "CSV of <l m1+m2|l1 m1|l2 m2> over the coupled range");
    int l1 = 0, m1 = 0, l2 = 0, m2 = 0;
    gaunt_cmd->add_option("--l1", l1)->required();
    gaunt_cmd->add_option("--m1", m1)->required();
    gaunt_cmd->add_option("--l2", l2)->required();
    gaunt_cmd->add_option("--m2", m2)->required();

    /* apply */
    auto* apply = app.add_subcommand("apply", "apply Y_l^m(nabla) to profile(r) Y_L^M");
    std::string op_s, target_s, target_lm_s = "0,0", at_s;
    int form = 1;
    apply->add_option("--op", op_s, "l,m")->required();
    apply->add_option("--target", target_s, "gaussian:a | power:s | bessel:n,a | yukawa:a")->required();
    apply->add_option("--target-lm", target_lm_s, "angular index L,M of the target (default 0,0)");
    apply->add_option("--at", at_s, "x,y,z")->required();
    apply->add_option("--form", form, "gamma form 1..6")->check(CLI::Range(1, 6));

    /* bfun */
    auto* bfun = app.add_subcommand("bfun", "B functions: value, fourier, convolve");
    std::string bfun_mode, a_s, b_s;
    bfun->add_option("mode", bfun_mode)->required()->check(CLI::IsMember({"value", "fourier", "convolve"}));
    bfun->add_option("--n", n);
    bfun->add_option("--l", l);
    bfun->add_option("--m", m);
    bfun->add_option("--alpha", alpha);
    bfun->add_option("--r", r_s, "x,y,z");
    bfun->add_option("--p", p_s, "x,y,z");
    bfun->add_option("--a", a_s, "n,l,m of the first factor");
    bfun->add_option("--b", b_s, "n,l,m of the second factor");

    /* addition */
    auto* addition = app.add_subcommand("addition", "two-range addition theorem of |r+r'|^nu Y_l^m(r+r')");
    int l_max_outer = 60;
    bool study      = false;
    std::string variant = "rederived";
    addition->add_option("--nu", nu)->required();
    addition->add_option("--l", l);
    addition->add_option("--m", m);
    addition->add_option("--r", r_s)->required();
    addition->add_option("--rp", rp_s)->required();
    addition->add_option("--lmax-outer", l_max_outer);
    addition->add_option("--variant", variant)->check(CLI::IsMember({"rederived", "printed"}));
    addition->add_flag("--study", study, "print the per-shell table as CSV");

    /* verify */
    auto* verify_cmd = app.add_subcommand("verify", "run a property suite and report");
    std::string suite;
    int gaunt_lmax = 25;
    std::vector<std::string> suites = verify::suite_names();
    suites.push_back("all");
    verify_cmd->add_option("suite", suite)->required()->check(CLI::IsMember(suites));
    verify_cmd->add_option("--lmax", gaunt_lmax, "largest l of the gaunt suite")->check(CLI::Range(0, 60));

    /* bench */
    auto* bench_cmd = app.add_subcommand("bench", "timings as CSV (report-only)");
    std::string bench_what;
    int bench_lmax = 10;
    double ratio = 0.5, bench_tol = 1e-10;
    bench_cmd->add_option("what", bench_what)->required()->check(CLI::IsMember({"gaunt", "addition"}));
    bench_cmd->add_option("--lmax", bench_lmax);
    bench_cmd->add_option("--nu", nu);
    bench_cmd->add_option("--l", l);
    bench_cmd->add_option("--ratio", ratio);
    bench_cmd->add_option("--bench-tol", bench_tol);

    try {
        app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
        int const code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    if (*tol_opt) {
        g.tol = tol_flag;
    }
    std::cout.precision(17);

    try {
        if (*eval) {
            json out{{"kind", eval_kind}};
            if (eval_kind == "khat") {
                out["value"] = cjson(khat(nu, z));
            } else if (eval_kind == "bfun") {
                out["value"] = cjson(b_value({n, l, m, alpha}, parse_vec(r_s, "--r")));
            } else {
                LMIndex const idx(l, m);
                if (eval_kind == "ylm") {
                    out["value"] = cjson(r_s.empty() ? ylm(idx, theta, phi) : ylm(idx, parse_vec(r_s, "--r")));
                } else if (eval_kind == "rsh") {
                    out["value"] = cjson(regular_solid(idx, parse_vec(r_s, "--r")));
                } else {
                    out["value"] = cjson(irregular_solid(idx, parse_vec(r_s, "--r")));
                }
                if (dump_poly) {
                    auto const& poly = regular_solid_poly(idx);
                    json terms       = json::array();
                    for (auto const& [e, c] : poly.terms) {
                        Complex const v = c.to_complex() * poly.scale();
                        terms.push_back({{"a", e[0]}, {"b", e[1]}, {"c", e[2]}, {"re", v.real()}, {"im", v.imag()}});
                    }
                    out["poly"] = terms;
                }
            }
            emit(out, g);
        } else if (*gaunt_cmd) {
            LMIndex const a(l1, m1), b(l2, m2);
            auto const s = gaunt_string(a.l, a.m, b.l, b.m);
            std::ostringstream csv;
            csv << "l1,m1,l2,m2,l,value\n";
            for (int L = s->range.l_min; !s->range.empty() && L <= s->range.l_max; L += 2) {
                csv << l1 << ',' << m1 << ',' << l2 << ',' << m2 << ',' << L << ',' << g17((*s)(L)) << '\n';
            }
            std::cout << csv.str();
        } else if (*apply) {
            auto const op = parse_ints(op_s, 2, "--op");
            auto const lm = parse_ints(target_lm_s, 2, "--target-lm");
            Vec3 const at = parse_vec(at_s, "--at");
            auto const profile = parse_profile(target_s);
            LMIndex const target_idx(lm[0], lm[1]);
            TensorTerm const target = (target_idx.l == 0) ? scalar_term(profile.function())
                                                          : TensorTerm{1.0, profile.function(), target_idx};
            auto const res = apply_to_tensor({op[0], op[1]}, target, form);
            json terms     = json::array();
            for (auto const& t : res.terms) {
                terms.push_back({{"l", t.angular.l},
                                 {"m", t.angular.m},
                                 {"radial_value", t.radial(at.norm())},
                                 {"coeff", cjson(t.coeff)}});
            }
            emit({{"terms", terms}, {"total", cjson(res(at))}}, g);
        } else if (*bfun) {
            json out{{"mode", bfun_mode}};
            if (bfun_mode == "convolve") {
                auto const a = parse_ints(a_s, 3, "--a");
                auto const b = parse_ints(b_s, 3, "--b");
                auto const e = convolve({a[0], a[1], a[2], alpha}, {b[0], b[1], b[2], alpha});
                out["expansion"] = expansion_json(e);
                if (!r_s.empty()) {
                    out["value"] = cjson(e(parse_vec(r_s, "--r")));
                }
            } else {
                BIndex const b{n, l, m, alpha};
                BExpansion e;
                e.add(1.0, b);
                out["expansion"] = expansion_json(e);
                if (bfun_mode == "value") {
                    out["value"] = cjson(b_value(b, parse_vec(r_s, "--r")));
                } else {
                    out["value"] = cjson(b_fourier(b, parse_vec(p_s, "--p")));
                }
            }
            emit(out, g);
        } else if (*addition) {
            TruncationSpec trunc;
            trunc.l_max_outer = l_max_outer;
            if (g.tol) {
                trunc.tol = *g.tol;
            }
            auto const cluster = variant == "printed" ? PochhammerCluster::Printed : PochhammerCluster::Rederived;
            auto const res = power_solid_addition(nu, {l, m}, SplitPair(parse_vec(r_s, "--r"), parse_vec(rp_s, "--rp")),
                                                  trunc, cluster);
            if (study) {
                std::cout << "shell_l1,partial_value_re,partial_value_im,shell_contrib,est_error\n";
                for (auto const& s : res.shells) {
                    std::cout << s.l1 << ',' << g17(s.partial.real()) << ',' << g17(s.partial.imag()) << ','
                              << g17(s.contrib) << ',' << g17(s.est_error) << '\n';
                }
                std::cout << "# exact=" << (res.exact ? "true" : "false")
                          << " converged=" << (res.converged ? "true" : "false") << '\n';
            }
            json shells = json::array();
            for (auto const& s : res.shells) {
                shells.push_back(
                    {{"l1", s.l1}, {"partial", cjson(s.partial)}, {"contrib", s.contrib}, {"est_error", s.est_error}});
            }
            json const out{{"value", cjson(res.value)},
                           {"outer_l_used", res.outer_l_used},
                           {"est_error", res.est_error},
                           {"converged", res.converged},
                           {"exact", res.exact},
                           {"shells", shells}};
            if (!study || !g.json_path.empty()) {
                emit(out, g);
            }
            if (!res.converged) {
                std::cerr << "addition: not converged within l1 <= " << l_max_outer << "\n";
                throw SoftFailure{};
            }
        } else if (*verify_cmd) {
            verify::VerifyOptions opt;
            opt.tol        = g.tol;
            opt.seed       = g.seed;
            opt.threads    = g.threads;
            opt.gaunt_lmax = gaunt_lmax;
            auto const r   = verify::run_suite(suite, opt);
            std::ostringstream note;
            note << r.suite << ": " << r.summary.passed << "/" << r.summary.total
                 << " passed, max_rel_err=" << g17(r.summary.max_rel_err);
            emit(report_json(r), g, note.str());
            if (!r.all_passed()) {
                throw SoftFailure{};
            }
        } else if (*bench_cmd) {
            auto const r = bench_what == "gaunt" ? bench::bench_gaunt_strings(bench_lmax, g.seed)
                                                 : bench::bench_addition(nu, l, ratio, bench_tol);
            std::cout << "name,n_items,total_ns,ns_per_item,checksum,speedup\n";
            std::cout << '"' << r.name << "\"," << r.n_items << ',' << g17(r.total_ns) << ',' << g17(r.ns_per_item) << ','
                      << g17(r.checksum) << ',' << (r.speedup ? g17(*r.speedup) : "") << '\n';
        }
    } catch (UsageError const& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (SoftFailure const&) {
        return 1;
    } catch (Error const& e) {
        std::cout << json{{"error", {{"kind", e.kind()}, {"message", e.what()}}}}.dump(2) << "\n";
        return 1;
    }
    return 0;
}
