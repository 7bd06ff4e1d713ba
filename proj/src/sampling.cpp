#include "ncergo/sampling.hpp"

namespace ncergo {

namespace {

Complex random_coeff(SampleRng& rng) {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  const double re = unit(rng);
  const double im = unit(rng);
  return {re, im};
}

int random_exponent(SampleRng& rng, int radius) {
  std::uniform_int_distribution<int> dist(-radius, radius);
  return dist(rng);
}

}  // namespace

TorusElement random_torus_element(SampleRng& rng, const SurdScalar& theta, int radius,
                                  int terms) {
  TorusElement out(theta);
  for (int i = 0; i < terms; ++i) {
    const Monomial w{random_exponent(rng, radius), random_exponent(rng, radius)};
    out.add_term(w, random_coeff(rng));
  }
  return out;
}

TensorElement random_tensor_element(SampleRng& rng, const SurdScalar& theta1,
                                    const SurdScalar& theta2, int radius, int terms) {
  TensorElement out(theta1, theta2);
  for (int i = 0; i < terms; ++i) {
    const TensorMonomial w{random_exponent(rng, radius), random_exponent(rng, radius),
                           random_exponent(rng, radius), random_exponent(rng, radius)};
    out.add_term(w, random_coeff(rng));
  }
  return out;
}

TorusElement normalized_one_norm(const TorusElement& a) {
  const double norm = one_norm(a);
  if (norm == 0.0) return a;
  return Complex{1.0 / norm, 0.0} * a;
}

SurdScalar random_rational(SampleRng& rng, long lo, long hi, long denominator) {
  std::uniform_int_distribution<long> dist(lo * denominator, hi * denominator - 1);
  return SurdScalar(make_rational(dist(rng), denominator));
}

}  // namespace ncergo
