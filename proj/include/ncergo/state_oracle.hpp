#ifndef NCERGO_STATE_ORACLE_HPP
#define NCERGO_STATE_ORACLE_HPP

#include "ncergo/coupling.hpp"
#include "ncergo/torus_rep.hpp"

namespace ncergo {

// Operator-level evaluation of the four states through the truncated basis
// action, the source of truth for the hard-coded Kronecker rules:
//   product_trace: both factors act on their own copy of H,
//                  value = <Omega (x) Omega, c (Omega (x) Omega)>
//   kappa_diag:    both factors act on the same H (thetas theta and -theta),
//                  value = <Omega, delta(c) Omega>
//   kappa_D / omega_rel: project each factor to its v/z part, then multiply
//                  on the shared H and take the vacuum component.
// pre: support of c within the truncation radius.
Complex state_eval_oracle(const StateFunctional& f, const TensorElement& c, int radius);

// f(c* c) at operator level. For the vector states this is the squared norm
// of the represented vector (product_trace, kappa_diag); for the projected
// states it is the vacuum value on the symbolic product.
double state_norm_sq_oracle(const StateFunctional& f, const TensorElement& c, int radius);

}  // namespace ncergo

#endif  // NCERGO_STATE_ORACLE_HPP
