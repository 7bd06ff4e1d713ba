#ifndef NCERGO_TESTS_QUADRATURE_HPP
#define NCERGO_TESTS_QUADRATURE_HPP

// Test-only quadrature oracle: composite Simpson approximations of the
// character averages, independent of the closed forms under test.

#include <complex>
#include <numbers>

namespace ncergo_test {

inline std::complex<double> character(double freq, double s) {
  return std::polar(1.0, 2.0 * std::numbers::pi * freq * s);
}

// (1/T) Int_a^{a+T} e^{2 pi i f s} ds, composite Simpson on `intervals`
// subintervals (forced even).
inline std::complex<double> simpson_char_average(double freq, double a, double T,
                                                 int intervals) {
  if (intervals % 2 != 0) ++intervals;
  const double h = T / intervals;
  std::complex<double> sum = character(freq, a) + character(freq, a + T);
  for (int i = 1; i < intervals; ++i) {
    sum += (i % 2 == 1 ? 4.0 : 2.0) * character(freq, a + i * h);
  }
  return sum * (h / 3.0) / T;
}

// (1/T^2) Int over [a,a+T]^2 of e^{2 pi i (f1 s + f2 t)}, composite Simpson
// per axis.
inline std::complex<double> simpson_box_average(double f1, double f2, double a, double T,
                                                int per_axis) {
  if (per_axis % 2 != 0) ++per_axis;
  const double h = T / per_axis;
  auto weight = [per_axis](int i) {
    if (i == 0 || i == per_axis) return 1.0;
    return i % 2 == 1 ? 4.0 : 2.0;
  };
  std::complex<double> sum{0.0, 0.0};
  for (int i = 0; i <= per_axis; ++i) {
    std::complex<double> row{0.0, 0.0};
    for (int j = 0; j <= per_axis; ++j) {
      row += weight(j) * character(f2, a + j * h);
    }
    sum += weight(i) * character(f1, a + i * h) * row;
  }
  return sum * (h / 3.0) * (h / 3.0) / (T * T);
}

}  // namespace ncergo_test

#endif  // NCERGO_TESTS_QUADRATURE_HPP
