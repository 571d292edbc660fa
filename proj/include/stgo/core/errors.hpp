/** \file errors.hpp
 *
 *  \brief Exception types raised by the library.
 */

#ifndef STGO_CORE_ERRORS_HPP
#define STGO_CORE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace stgo {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;

    /// Short machine-readable category, used by the CLI error objects.
    virtual char const* kind() const noexcept
    {
        return "error";
    }
};

#define STGO_DEFINE_ERROR(Name, tag)                                                                          \
    class Name : public Error                                                                                 \
    {                                                                                                         \
      public:                                                                                                 \
        using Error::Error;                                                                                   \
        char const* kind() const noexcept override                                                            \
        {                                                                                                     \
            return tag;                                                                                       \
        }                                                                                                     \
    };

/// Argument outside the mathematical domain of a function.
STGO_DEFINE_ERROR(DomainError, "domain")
/// Evaluation at a point where the function is singular.
STGO_DEFINE_ERROR(SingularityError, "singularity")
/// A radial profile cannot supply the requested derivative order.
STGO_DEFINE_ERROR(CapabilityError, "capability")
/// A series failed to converge within its term budget.
STGO_DEFINE_ERROR(ConvergenceError, "convergence")
/// Two-range expansion requested exactly on the boundary |r_<| = |r_>|.
STGO_DEFINE_ERROR(BoundaryError, "boundary")
/// B function with n + l < 0 evaluated pointwise.
STGO_DEFINE_ERROR(DistributionalError, "distributional")
/// Parameter combination the library deliberately does not handle.
STGO_DEFINE_ERROR(UnsupportedError, "unsupported")
/// Prefactor of an expansion has a pole at the requested parameter.
STGO_DEFINE_ERROR(ParameterSingularityError, "parameter-singularity")

#undef STGO_DEFINE_ERROR

} // namespace stgo

#endif
