/** \file stgo.hpp
 *
 *  \brief Umbrella header.
 */

#ifndef STGO_HPP
#define STGO_HPP

#include "stgo/addition/addition.hpp"
#include "stgo/bench/bench.hpp"
#include "stgo/bfun/bfunction.hpp"
#include "stgo/core/bessel.hpp"
#include "stgo/core/combinatorics.hpp"
#include "stgo/core/errors.hpp"
#include "stgo/core/finite_difference.hpp"
#include "stgo/core/hypergeometric.hpp"
#include "stgo/gradient/operator.hpp"
#include "stgo/gradient/radial.hpp"
#include "stgo/gradient/tensor.hpp"
#include "stgo/harmonics/polynomial.hpp"
#include "stgo/harmonics/spherical.hpp"
#include "stgo/harmonics/vec3.hpp"
#include "stgo/oracles/convolution.hpp"
#include "stgo/oracles/fd.hpp"
#include "stgo/oracles/hankel.hpp"
#include "stgo/oracles/quadrature.hpp"
#include "stgo/verify/report.hpp"
#include "stgo/verify/suites.hpp"
#include "stgo/wigner/gaunt.hpp"
#include "stgo/wigner/racah.hpp"
#include "stgo/wigner/string.hpp"

#endif
