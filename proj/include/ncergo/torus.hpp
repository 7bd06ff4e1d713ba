#ifndef NCERGO_TORUS_HPP
#define NCERGO_TORUS_HPP

#include <complex>
#include <map>
#include <utility>

#include "ncergo/surd.hpp"

namespace ncergo {

using Complex = std::complex<double>;

// Coefficients with modulus below this are dropped after every ring
// operation; keeps rounding dust from inflating supports without touching
// 1e-12 scale assertions.
inline constexpr double kPruneThreshold = 1e-15;

// u^m v^n over the integer lattice; (0,0) is the unit.
struct Monomial {
  int m = 0;
  int n = 0;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// Normal ordering: u^m v^n * u^m' v^n' = e^{-2 pi i theta n m'} u^{m+m'} v^{n+n'},
// derived from uv = e^{2 pi i theta} vu.
std::pair<Complex, Monomial> monomial_mul(const Monomial& a, const Monomial& b,
                                          const SurdScalar& theta);

// Finite complex combination of monomials at a fixed deformation parameter.
class TorusElement {
 public:
  explicit TorusElement(SurdScalar theta) : theta_(std::move(theta)) {}

  static TorusElement unit(const SurdScalar& theta) {
    return monomial_term(theta, Monomial{0, 0});
  }
  static TorusElement monomial_term(const SurdScalar& theta, const Monomial& w,
                                    Complex coeff = 1.0);

  const SurdScalar& theta() const { return theta_; }
  const std::map<Monomial, Complex>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  std::size_t term_count() const { return coeffs_.size(); }
  Complex coeff(const Monomial& w) const;

  // Accumulates and prunes; the only mutation path.
  TorusElement& add_term(const Monomial& w, Complex c);

  TorusElement& operator+=(const TorusElement& o);
  TorusElement& operator-=(const TorusElement& o);
  friend TorusElement operator+(TorusElement a, const TorusElement& b) { return a += b; }
  friend TorusElement operator-(TorusElement a, const TorusElement& b) { return a -= b; }
  friend TorusElement operator*(Complex c, const TorusElement& a);

 private:
  SurdScalar theta_;
  std::map<Monomial, Complex> coeffs_;
};

TorusElement mul(const TorusElement& a, const TorusElement& b);
TorusElement adjoint(const TorusElement& a);
Complex trace(const TorusElement& a);  // coefficient at the unit monomial

// Sum of coefficient moduli; upper-bounds the operator norm since u, v are
// unitary.
double one_norm(const TorusElement& a);

// Largest |m|, |n| over the support (0 for the zero element).
int support_radius(const TorusElement& a);

void require_same_theta(const SurdScalar& a, const SurdScalar& b);

}  // namespace ncergo

#endif  // NCERGO_TORUS_HPP
