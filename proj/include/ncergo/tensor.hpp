#ifndef NCERGO_TENSOR_HPP
#define NCERGO_TENSOR_HPP

#include <map>
#include <utility>

#include "ncergo/torus.hpp"

namespace ncergo {

// u^j v^k (x) w^l z^m over Z^4; (0,0,0,0) is the unit.
struct TensorMonomial {
  int j = 0;
  int k = 0;
  int l = 0;
  int m = 0;
  friend auto operator<=>(const TensorMonomial&, const TensorMonomial&) = default;

  Monomial left() const { return {j, k}; }
  Monomial right() const { return {l, m}; }
};

// Finite combination of tensor monomials over a pair of deformation
// parameters. Cross-factor letters commute; multiplication twists each
// factor by its own theta.
class TensorElement {
 public:
  TensorElement(SurdScalar theta1, SurdScalar theta2)
      : theta1_(std::move(theta1)), theta2_(std::move(theta2)) {}

  static TensorElement unit(const SurdScalar& theta1, const SurdScalar& theta2) {
    return monomial_term(theta1, theta2, TensorMonomial{});
  }
  static TensorElement monomial_term(const SurdScalar& theta1, const SurdScalar& theta2,
                                     const TensorMonomial& w, Complex coeff = 1.0);

  const SurdScalar& theta1() const { return theta1_; }
  const SurdScalar& theta2() const { return theta2_; }
  const std::map<TensorMonomial, Complex>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  Complex coeff(const TensorMonomial& w) const;

  TensorElement& add_term(const TensorMonomial& w, Complex c);

  TensorElement& operator+=(const TensorElement& o);
  TensorElement& operator-=(const TensorElement& o);
  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
  friend TensorElement operator*(Complex c, const TensorElement& a);

 private:
  SurdScalar theta1_, theta2_;
  std::map<TensorMonomial, Complex> coeffs_;
};

TensorElement tensor_mul(const TensorElement& a, const TensorElement& b);
TensorElement adjoint(const TensorElement& a);
TensorElement tensor_of(const TorusElement& a, const TorusElement& b);  // a (x) b
double one_norm(const TensorElement& a);
int support_radius(const TensorElement& a);

void require_same_thetas(const TensorElement& a, const TensorElement& b);

}  // namespace ncergo

#endif  // NCERGO_TENSOR_HPP
