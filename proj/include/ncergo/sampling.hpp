#ifndef NCERGO_SAMPLING_HPP
#define NCERGO_SAMPLING_HPP

#include <cstdint>
#include <random>

#include "ncergo/tensor.hpp"
#include "ncergo/torus.hpp"

namespace ncergo {

// Deterministic element generators for the seeded randomized suites. All
// draws go through the fixed-width engine so a seed pins the sample exactly.
using SampleRng = std::mt19937_64;

// coefficients uniform in the complex unit square, exponents uniform in
// [-radius, radius]
TorusElement random_torus_element(SampleRng& rng, const SurdScalar& theta, int radius,
                                  int terms);
TensorElement random_tensor_element(SampleRng& rng, const SurdScalar& theta1,
                                    const SurdScalar& theta2, int radius, int terms);

// one-norm scaled to 1 (unless zero)
TorusElement normalized_one_norm(const TorusElement& a);

// uniform rational in [lo, hi) with the given denominator
SurdScalar random_rational(SampleRng& rng, long lo, long hi, long denominator);

}  // namespace ncergo

#endif  // NCERGO_SAMPLING_HPP
