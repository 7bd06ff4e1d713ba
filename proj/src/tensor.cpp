#include "ncergo/tensor.hpp"

#include <cmath>
#include <stdexcept>

namespace ncergo {

void require_same_thetas(const TensorElement& a, const TensorElement& b) {
  require_same_theta(a.theta1(), b.theta1());
  require_same_theta(a.theta2(), b.theta2());
}

TensorElement TensorElement::monomial_term(const SurdScalar& theta1, const SurdScalar& theta2,
                                           const TensorMonomial& w, Complex coeff) {
  TensorElement out(theta1, theta2);
  out.add_term(w, coeff);
  return out;
}

Complex TensorElement::coeff(const TensorMonomial& w) const {
  const auto it = coeffs_.find(w);
  return it == coeffs_.end() ? Complex{0.0, 0.0} : it->second;
}

TensorElement& TensorElement::add_term(const TensorMonomial& w, Complex c) {
  auto [it, inserted] = coeffs_.try_emplace(w, c);
  if (!inserted) it->second += c;
  if (std::abs(it->second) < kPruneThreshold) coeffs_.erase(it);
  return *this;
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  require_same_thetas(*this, o);
  for (const auto& [w, c] : o.coeffs_) add_term(w, c);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
  require_same_thetas(*this, o);
  for (const auto& [w, c] : o.coeffs_) add_term(w, -c);
  return *this;
}

TensorElement operator*(Complex c, const TensorElement& a) {
  TensorElement out(a.theta1(), a.theta2());
  for (const auto& [w, v] : a.coeffs()) out.add_term(w, c * v);
  return out;
}

TensorElement tensor_mul(const TensorElement& a, const TensorElement& b) {
  require_same_thetas(a, b);
  TensorElement out(a.theta1(), a.theta2());
  for (const auto& [wa, ca] : a.coeffs()) {
    for (const auto& [wb, cb] : b.coeffs()) {
      const auto [phase1, left] = monomial_mul(wa.left(), wb.left(), a.theta1());
      const auto [phase2, right] = monomial_mul(wa.right(), wb.right(), a.theta2());
      out.add_term(TensorMonomial{left.m, left.n, right.m, right.n}, ca * cb * phase1 * phase2);
    }
  }
  return out;
}

TensorElement adjoint(const TensorElement& a) {
  TensorElement out(a.theta1(), a.theta2());
  for (const auto& [w, c] : a.coeffs()) {
    const Complex phase1 = unit_phase(a.theta1().scaled(mpq_class(-static_cast<long>(w.j) * w.k)));
    const Complex phase2 = unit_phase(a.theta2().scaled(mpq_class(-static_cast<long>(w.l) * w.m)));
    out.add_term(TensorMonomial{-w.j, -w.k, -w.l, -w.m}, std::conj(c) * phase1 * phase2);
  }
  return out;
}

TensorElement tensor_of(const TorusElement& a, const TorusElement& b) {
  TensorElement out(a.theta(), b.theta());
  for (const auto& [wa, ca] : a.coeffs()) {
    for (const auto& [wb, cb] : b.coeffs()) {
      out.add_term(TensorMonomial{wa.m, wa.n, wb.m, wb.n}, ca * cb);
    }
  }
  return out;
}

double one_norm(const TensorElement& a) {
  double sum = 0.0;
  for (const auto& [w, c] : a.coeffs()) sum += std::abs(c);
  return sum;
}

int support_radius(const TensorElement& a) {
  int r = 0;
  for (const auto& [w, c] : a.coeffs()) {
    r = std::max({r, std::abs(w.j), std::abs(w.k), std::abs(w.l), std::abs(w.m)});
  }
  return r;
}

}  // namespace ncergo
