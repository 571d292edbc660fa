/** \file quadrature.hpp
 *
 *  \brief Gauss-Legendre rules and unit-sphere grids (Lebedev data files, Gauss x trapezoid product).
 */

#ifndef STGO_ORACLES_QUADRATURE_HPP
#define STGO_ORACLES_QUADRATURE_HPP

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "stgo/core/errors.hpp"
#include "stgo/harmonics/vec3.hpp"

#ifndef STGO_DATA_DIR
#define STGO_DATA_DIR "data"
#endif

namespace stgo::oracles {

/// Nodes and weights of an n-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendre
{
    std::vector<double> x;
    std::vector<double> w;
};

inline GaussLegendre const&
gauss_legendre(int n)
{
    static std::map<int, GaussLegendre> cache;
    static std::mutex mtx;
    std::lock_guard lock(mtx);
    if (auto it = cache.find(n); it != cache.end()) {
        return it->second;
    }
    GaussLegendre g;
    g.x.resize(n);
    g.w.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        /* Newton on P_n from the Tricomi initial guess */
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double const p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0              = p1;
                p1              = p2;
            }
            if (n == 1) {
                p1 = x;
                p0 = 1;
            }
            dp              = n * (x * p1 - p0) / (x * x - 1);
            double const dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) {
                break;
            }
        }
        double p0 = 1, p1 = x;
        for (int k = 2; k <= n; ++k) {
            double const p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
            p0              = p1;
            p1              = p2;
        }
        dp               = n * (x * p1 - p0) / (x * x - 1);
        double const w   = 2 / ((1 - x * x) * dp * dp);
        g.x[i]           = -x;
        g.x[n - 1 - i]   = x;
        g.w[i]           = w;
        g.w[n - 1 - i]   = w;
    }
    if (n % 2 == 1) {
        g.x[n / 2] = 0;
    }
    return cache.emplace(n, std::move(g)).first->second;
}

/// Integral of f over [a, b] split into equal panels, each with an n-point Gauss rule.
template <typename F>
auto
panel_integrate(F&& f, double a, double b, int panels, int n = 16)
{
    auto const& g  = gauss_legendre(n);
    double const h = (b - a) / panels;
    decltype(f(a)) sum{};
    for (int p = 0; p < panels; ++p) {
        double const lo = a + p * h;
        for (int i = 0; i < n; ++i) {
            sum += f(lo + 0.5 * h * (g.x[i] + 1)) * (0.5 * h * g.w[i]);
        }
    }
    return sum;
}

struct SphereNode
{
    Vec3 dir;
    double weight;
};

/// Directions and weights on the unit sphere.
struct QuadratureGrid
{
    enum class Kind
    {
        lebedev,
        gauss_product
    };
    Kind kind{Kind::gauss_product};
    int exact_degree{0};
    std::vector<SphereNode> nodes;
};

inline std::string
data_dir()
{
    if (char const* env = std::getenv("STGO_KIT_DATA"); env && *env) {
        return env;
    }
    return STGO_DATA_DIR;
}

/// Lebedev grid with 110, 302 or 590 points, read from the shipped data files.
inline QuadratureGrid const&
lebedev_grid(int points)
{
    static std::map<int, QuadratureGrid> cache;
    static std::mutex mtx;
    std::lock_guard lock(mtx);
    if (auto it = cache.find(points); it != cache.end()) {
        return it->second;
    }
    static std::map<int, int> const degree{{110, 17}, {302, 29}, {590, 41}};
    if (!degree.count(points)) {
        throw DomainError("lebedev_grid: available sizes are 110, 302, 590");
    }
    std::string const path = data_dir() + "/lebedev/lebedev_" + std::to_string(points) + ".txt";
    std::ifstream in(path);
    if (!in) {
        throw DomainError("lebedev_grid: cannot open " + path);
    }
    QuadratureGrid g;
    g.kind         = QuadratureGrid::Kind::lebedev;
    g.exact_degree = degree.at(points);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') {
            continue;
        }
        std::istringstream ss(line);
        SphereNode n;
        ss >> n.dir.x >> n.dir.y >> n.dir.z >> n.weight;
        g.nodes.push_back(n);
    }
    if (static_cast<int>(g.nodes.size()) != points) {
        throw DomainError("lebedev_grid: " + path + " has the wrong number of nodes");
    }
    return cache.emplace(points, std::move(g)).first->second;
}

/// Gauss-Legendre in cos(theta) times the trapezoid rule in phi; exact through degree
/// min(2 n_theta - 1, n_phi - 1).
inline QuadratureGrid
gauss_product_grid(int n_theta, int n_phi)
{
    QuadratureGrid g;
    g.kind         = QuadratureGrid::Kind::gauss_product;
    g.exact_degree = std::min(2 * n_theta - 1, n_phi - 1);
    auto const& gl = gauss_legendre(n_theta);
    for (int i = 0; i < n_theta; ++i) {
        double const ct = gl.x[i];
        double const st = std::sqrt(1 - ct * ct);
        for (int j = 0; j < n_phi; ++j) {
            double const phi = 2 * std::numbers::pi * j / n_phi;
            g.nodes.push_back({{st * std::cos(phi), st * std::sin(phi), ct}, gl.w[i] * 2 * std::numbers::pi / n_phi});
        }
    }
    return g;
}

/// sum_i w_i f(dir_i)
template <typename F>
auto
sphere_integrate(F&& f, QuadratureGrid const& grid)
{
    decltype(f(Vec3{})) sum{};
    for (auto const& n : grid.nodes) {
        sum += n.weight * f(n.dir);
    }
    return sum;
}

} // namespace stgo::oracles

#endif
