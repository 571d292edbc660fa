/** \file report.hpp
 *
 *  \brief Verification cases and reports: each case compares a library value with an oracle value.
 */

#ifndef STGO_VERIFY_REPORT_HPP
#define STGO_VERIFY_REPORT_HPP

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "stgo/harmonics/vec3.hpp"

namespace stgo::verify {

struct VerifyCase
{
    std::string id;
    Complex lhs;
    Complex rhs;
    double abs_err{0};
    double rel_err{0};
    double tol{0};
    bool pass{false};
};

struct VerifySummary
{
    int total{0};
    int passed{0};
    double max_rel_err{0};
};

struct VerifyReport
{
    std::string suite;
    std::vector<VerifyCase> cases;
    VerifySummary summary;
    double runtime_ms{0};

    bool all_passed() const
    {
        return summary.passed == summary.total;
    }
};

struct VerifyOptions
{
    std::optional<double> tol;  ///< replaces every default tolerance when set
    unsigned seed{20240607};
    int threads{1};
    int gaunt_lmax{25};
};

/// Values below this magnitude are compared absolutely.
inline constexpr double rhs_floor = 1e-300;

inline VerifyCase
make_case(std::string id, Complex lhs, Complex rhs, double tol)
{
    VerifyCase c{std::move(id), lhs, rhs};
    c.abs_err = std::abs(lhs - rhs);
    double const s = std::abs(rhs);
    c.rel_err      = s < rhs_floor ? c.abs_err : c.abs_err / s;
    c.tol          = tol;
    c.pass         = c.rel_err <= tol;
    return c;
}

/// Sort by id, apply a tolerance override and fill the summary.
inline VerifyReport
finish_report(std::string suite, std::vector<VerifyCase> cases, double runtime_ms, VerifyOptions const& opt)
{
    std::sort(cases.begin(), cases.end(), [](auto const& a, auto const& b) { return a.id < b.id; });
    VerifyReport r{std::move(suite), std::move(cases), {}, runtime_ms};
    for (auto& c : r.cases) {
        if (opt.tol) {
            c.tol  = *opt.tol;
            c.pass = c.rel_err <= c.tol;
        }
        ++r.summary.total;
        r.summary.passed += c.pass ? 1 : 0;
        r.summary.max_rel_err = std::max(r.summary.max_rel_err, c.rel_err);
    }
    return r;
}

/// Runs task(i) for i < n on up to `threads` workers and concatenates the results in index order.
inline std::vector<VerifyCase>
run_tasks(int n, int threads, std::function<std::vector<VerifyCase>(int)> const& task)
{
    std::vector<std::vector<VerifyCase>> parts(n);
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    auto worker = [&] {
        for (int i = next++; i < n && !failed; i = next++) {
            try {
                parts[i] = task(i);
            } catch (...) {
                if (!failed.exchange(true)) {
                    error = std::current_exception();
                }
            }
        }
    };
    int const t = std::clamp(threads, 1, std::max(1, n));
    if (t == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int k = 0; k < t; ++k) {
            pool.emplace_back(worker);
        }
        for (auto& th : pool) {
            th.join();
        }
    }
    if (error) {
        std::rethrow_exception(error);
    }
    std::vector<VerifyCase> out;
    for (auto& p : parts) {
        out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
    }
    return out;
}

} // namespace stgo::verify

#endif
