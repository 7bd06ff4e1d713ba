#include "ncergo/torus.hpp"

#include <cmath>
#include <stdexcept>

namespace ncergo {

void require_same_theta(const SurdScalar& a, const SurdScalar& b) {
  if (a != b) {
    throw std::invalid_argument("deformation parameters differ: theta = " + a.str() +
                                " vs " + b.str());
  }
}

std::pair<Complex, Monomial> monomial_mul(const Monomial& a, const Monomial& b,
                                          const SurdScalar& theta) {
  const long twist = -static_cast<long>(a.n) * b.m;
  const Complex phase = unit_phase(theta.scaled(mpq_class(twist)));
  return {phase, Monomial{a.m + b.m, a.n + b.n}};
}

TorusElement TorusElement::monomial_term(const SurdScalar& theta, const Monomial& w,
                                         Complex coeff) {
  TorusElement out(theta);
  out.add_term(w, coeff);
  return out;
}

Complex TorusElement::coeff(const Monomial& w) const {
  const auto it = coeffs_.find(w);
  return it == coeffs_.end() ? Complex{0.0, 0.0} : it->second;
}

TorusElement& TorusElement::add_term(const Monomial& w, Complex c) {
  auto [it, inserted] = coeffs_.try_emplace(w, c);
  if (!inserted) it->second += c;
  if (std::abs(it->second) < kPruneThreshold) coeffs_.erase(it);
  return *this;
}

TorusElement& TorusElement::operator+=(const TorusElement& o) {
  require_same_theta(theta_, o.theta_);
  for (const auto& [w, c] : o.coeffs_) add_term(w, c);
  return *this;
}

TorusElement& TorusElement::operator-=(const TorusElement& o) {
  require_same_theta(theta_, o.theta_);
  for (const auto& [w, c] : o.coeffs_) add_term(w, -c);
  return *this;
}

TorusElement operator*(Complex c, const TorusElement& a) {
  TorusElement out(a.theta());
  for (const auto& [w, v] : a.coeffs()) out.add_term(w, c * v);
  return out;
}

TorusElement mul(const TorusElement& a, const TorusElement& b) {
  require_same_theta(a.theta(), b.theta());
  TorusElement out(a.theta());
  for (const auto& [wa, ca] : a.coeffs()) {
    for (const auto& [wb, cb] : b.coeffs()) {
      const auto [phase, w] = monomial_mul(wa, wb, a.theta());
      out.add_term(w, ca * cb * phase);
    }
  }
  return out;
}

TorusElement adjoint(const TorusElement& a) {
  // (c u^m v^n)* = conj(c) e^{-2 pi i theta m n} u^{-m} v^{-n}
  TorusElement out(a.theta());
  for (const auto& [w, c] : a.coeffs()) {
    const long twist = -static_cast<long>(w.m) * w.n;
    const Complex phase = unit_phase(a.theta().scaled(mpq_class(twist)));
    out.add_term(Monomial{-w.m, -w.n}, std::conj(c) * phase);
  }
  return out;
}

Complex trace(const TorusElement& a) { return a.coeff(Monomial{0, 0}); }

double one_norm(const TorusElement& a) {
  double sum = 0.0;
  for (const auto& [w, c] : a.coeffs()) sum += std::abs(c);
  return sum;
}

int support_radius(const TorusElement& a) {
  int r = 0;
  for (const auto& [w, c] : a.coeffs()) {
    r = std::max({r, std::abs(w.m), std::abs(w.n)});
  }
  return r;
}

}  // namespace ncergo
