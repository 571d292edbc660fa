/** \file vec3.hpp
 *
 *  \brief Cartesian vectors and angular-momentum indices.
 */

#ifndef STGO_HARMONICS_VEC3_HPP
#define STGO_HARMONICS_VEC3_HPP

#include <cmath>
#include <complex>
#include <cstdlib>
#include <string>

#include "stgo/core/errors.hpp"

namespace stgo {

using Complex = std::complex<double>;

struct Vec3
{
    double x{0}, y{0}, z{0};

    double norm2() const
    {
        return x * x + y * y + z * z;
    }
    double norm() const
    {
        return std::sqrt(norm2());
    }

    friend Vec3 operator+(Vec3 a, Vec3 b)
    {
        return {a.x + b.x, a.y + b.y, a.z + b.z};
    }
    friend Vec3 operator-(Vec3 a, Vec3 b)
    {
        return {a.x - b.x, a.y - b.y, a.z - b.z};
    }
    friend Vec3 operator*(double s, Vec3 a)
    {
        return {s * a.x, s * a.y, s * a.z};
    }
    friend Vec3 operator-(Vec3 a)
    {
        return {-a.x, -a.y, -a.z};
    }
};

inline double
dot(Vec3 a, Vec3 b)
{
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

/// Vector with complex components; used to evaluate solid harmonics at imaginary arguments.
struct CVec3
{
    Complex x, y, z;
};

/// Angular momentum pair (l, m).
struct LMIndex
{
    int l{0};
    int m{0};

    LMIndex() = default;
    LMIndex(int l__, int m__)
        : l(l__)
        , m(m__)
    {
        if (l < 0 || std::abs(m) > l) {
            throw DomainError("invalid (l, m) = (" + std::to_string(l) + ", " + std::to_string(m) + ")");
        }
    }

    auto operator<=>(LMIndex const&) const = default;
};

/// Packed position of (l, m) in an array holding all m for l = 0, 1, ...
inline constexpr int
lm_offset(int l, int m)
{
    return l * l + l + m;
}

inline constexpr int
lm_count(int lmax)
{
    return (lmax + 1) * (lmax + 1);
}

} // namespace stgo

#endif
