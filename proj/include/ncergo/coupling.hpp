#ifndef NCERGO_COUPLING_HPP
#define NCERGO_COUPLING_HPP

#include <functional>
#include <optional>
#include <vector>

#include "ncergo/action.hpp"
#include "ncergo/tensor.hpp"

namespace ncergo {

// The four states on the tensor algebra used by the convergence experiments.
// Each is given by a closed-form 0/1 rule on tensor monomials, derived once
// from the operator definitions and validated against the truncated
// representation oracle:
//   product_trace: 1 iff j = k = l = m = 0      (Tr (x) Tr)
//   kappa_d:       1 iff j = 0, l = 0, k+m = 0  (vacuum after projecting both
//                                                factors to their v/z parts)
//   kappa_diag:    1 iff j+l = 0 and k+m = 0    (diagonal coupling of the
//                                                theta and -theta copies)
//   omega_rel:     1 iff j = 0, l = 0, k+m = 0  (kappa_diag after the
//                                                fixed-point projection)
// kappa_diag and omega_rel live on the mirror pair and require
// theta2 = -theta1.
enum class StateKind { ProductTrace, KappaD, KappaDiag, OmegaRel };

const char* state_kind_name(StateKind kind);

struct StateFunctional {
  StateKind kind;
  SurdScalar theta1;
  SurdScalar theta2;

  static StateFunctional product_trace(SurdScalar theta1, SurdScalar theta2);
  static StateFunctional kappa_d(SurdScalar theta1, SurdScalar theta2);
  static StateFunctional kappa_diag(SurdScalar theta1, SurdScalar theta2);
  static StateFunctional omega_rel(SurdScalar theta1, SurdScalar theta2);
  static StateFunctional make(StateKind kind, SurdScalar theta1, SurdScalar theta2);

  double monomial_value(const TensorMonomial& w) const;  // the 0/1 rule
};

Complex state_eval(const StateFunctional& f, const TensorElement& c);

// Each convergence experiment pairs a coupling with the joining it averages
// to: the product trace for product-disjoint setups, omega_rel for the
// mirror-pair setup.
StateFunctional target_joining(const StateFunctional& f);

struct MarginalReport {
  double max_deviation = 0.0;
  std::optional<TensorMonomial> worst;  // as a (x) 1 or 1 (x) b
};

// Checks value(a (x) 1) and value(1 (x) b) against the canonical traces for
// every monomial with exponents within the window.
MarginalReport marginal_check(const StateFunctional& f, int window);

struct InvarianceReport {
  double max_deviation = 0.0;
  std::optional<TensorMonomial> worst_monomial;
  GroupPoint worst_sample;
};

// max over samples g and window monomials c of |value(alpha_g(c)) - value(c)|.
// Joinings come back with deviation <= 1e-12; for the non-invariant couplings
// the report names the monomial and group element witnessing the failure.
InvarianceReport invariance_check(const StateFunctional& f, const ActionSpec& spec,
                                  const std::vector<GroupPoint>& samples, int window);

// All tensor monomials with |indices| <= window whose frequency vanishes
// (exactly); the fixed-point set of the action on the windowed basis.
std::vector<TensorMonomial> kernel_certificate(const ActionSpec& spec, int window);

struct AverageRow {
  double size = 0.0;
  Complex value{0.0, 0.0};
  Complex limit{0.0, 0.0};
  double abs_error = 0.0;
};

using RegionFactory = std::function<FolnerRegion(const SurdScalar& size)>;

// Region of the canonical shape for the action's group: {1..N}, [0,T], or
// [0,T]^2.
RegionFactory standard_region(const ActionSpec& spec);

// For each size, the exact Bochner average (1/|L|) Int_L f((alpha (x) beta)_g(c)) dg
// via closed-form character averages, against the target joining's value.
std::vector<AverageRow> disjointness_average(const StateFunctional& f, const TensorElement& c,
                                             const ActionSpec& spec,
                                             const std::vector<SurdScalar>& sizes,
                                             const RegionFactory& make_region);
std::vector<AverageRow> disjointness_average(const StateFunctional& f, const TensorElement& c,
                                             const ActionSpec& spec,
                                             const std::vector<SurdScalar>& sizes);

}  // namespace ncergo

#endif  // NCERGO_COUPLING_HPP
