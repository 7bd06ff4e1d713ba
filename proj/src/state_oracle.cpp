#include "ncergo/state_oracle.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace ncergo {

namespace {

Complex component_at(const TruncatedRep::SparseVec& x, int index) {
  for (const auto& [idx, amp] : x) {
    if (idx == index) return amp;
  }
  return {0.0, 0.0};
}

// delta(c) Omega for the diagonal coupling: right factor first, then left,
// both on the same H.
TruncatedRep::SparseVec diag_vector(const TensorElement& c, int radius) {
  const TruncatedRep::SparseVec vacuum = basis_vector(0, 0, radius);
  TruncatedRep::SparseVec out;
  std::map<int, Complex> acc;
  for (const auto& [w, coeff] : c.coeffs()) {
    const auto right = apply_monomial(c.theta2(), w.right(), vacuum, radius);
    const auto full = apply_monomial(c.theta1(), w.left(), right, radius);
    for (const auto& [idx, amp] : full) acc[idx] += coeff * amp;
  }
  out.assign(acc.begin(), acc.end());
  return out;
}

// delta((D1 (.) D2)(c)) Omega: drop monomials with j != 0 or l != 0, keep the
// v^k z^m action on the shared H.
TruncatedRep::SparseVec projected_vector(const TensorElement& c, int radius) {
  const TruncatedRep::SparseVec vacuum = basis_vector(0, 0, radius);
  std::map<int, Complex> acc;
  for (const auto& [w, coeff] : c.coeffs()) {
    if (w.j != 0 || w.l != 0) continue;
    const auto right = apply_monomial(c.theta2(), Monomial{0, w.m}, vacuum, radius);
    const auto full = apply_monomial(c.theta1(), Monomial{0, w.k}, right, radius);
    for (const auto& [idx, amp] : full) acc[idx] += coeff * amp;
  }
  return {acc.begin(), acc.end()};
}

void require_support(const TensorElement& c, int radius) {
  if (support_radius(c) > radius) {
    throw std::out_of_range("tensor element support exceeds truncation radius " +
                            std::to_string(radius));
  }
}

}  // namespace

Complex state_eval_oracle(const StateFunctional& f, const TensorElement& c, int radius) {
  require_same_theta(f.theta1, c.theta1());
  require_same_theta(f.theta2, c.theta2());
  require_support(c, radius);
  const TruncatedRep::SparseVec vacuum = basis_vector(0, 0, radius);
  const int origin = TruncatedRep(radius).index_of(0, 0);

  switch (f.kind) {
    case StateKind::ProductTrace: {
      Complex out{0.0, 0.0};
      for (const auto& [w, coeff] : c.coeffs()) {
        const auto left = apply_monomial(c.theta1(), w.left(), vacuum, radius);
        const auto right = apply_monomial(c.theta2(), w.right(), vacuum, radius);
        out += coeff * component_at(left, origin) * component_at(right, origin);
      }
      return out;
    }
    case StateKind::KappaDiag:
      return component_at(diag_vector(c, radius), origin);
    case StateKind::KappaD:
    case StateKind::OmegaRel:
      return component_at(projected_vector(c, radius), origin);
  }
  return {0.0, 0.0};
}

double state_norm_sq_oracle(const StateFunctional& f, const TensorElement& c, int radius) {
  require_same_theta(f.theta1, c.theta1());
  require_same_theta(f.theta2, c.theta2());
  switch (f.kind) {
    case StateKind::ProductTrace: {
      require_support(c, radius);
      // c (Omega (x) Omega) as a sparse vector over index pairs
      const TruncatedRep::SparseVec vacuum = basis_vector(0, 0, radius);
      std::map<std::pair<int, int>, Complex> acc;
      for (const auto& [w, coeff] : c.coeffs()) {
        const auto left = apply_monomial(c.theta1(), w.left(), vacuum, radius);
        const auto right = apply_monomial(c.theta2(), w.right(), vacuum, radius);
        for (const auto& [i1, a1] : left) {
          for (const auto& [i2, a2] : right) {
            acc[{i1, i2}] += coeff * a1 * a2;
          }
        }
      }
      double norm_sq = 0.0;
      for (const auto& [idx, amp] : acc) norm_sq += std::norm(amp);
      return norm_sq;
    }
    case StateKind::KappaDiag: {
      // delta(c) Omega reaches indices up to twice the support radius
      require_support(c, radius / 2);
      double norm_sq = 0.0;
      for (const auto& [idx, amp] : diag_vector(c, radius)) norm_sq += std::norm(amp);
      return norm_sq;
    }
    case StateKind::KappaD:
    case StateKind::OmegaRel: {
      const Complex value = state_eval_oracle(f, tensor_mul(adjoint(c), c), radius);
      return value.real();
    }
  }
  return 0.0;
}

}  // namespace ncergo
