#ifndef NCERGO_ACTION_HPP
#define NCERGO_ACTION_HPP

#include <array>
#include <set>
#include <vector>

#include "ncergo/folner.hpp"
#include "ncergo/tensor.hpp"
#include "ncergo/torus.hpp"

namespace ncergo {

enum class GroupKind { Z, R, R2 };

// A group element; one entry for Z and R, two for R^2. Entries are exact so
// invariance checks at surd sample points stay exact.
using GroupPoint = std::vector<SurdScalar>;

// Character action on torus or tensor elements. A torus monomial (m, n) has
// frequency vector (m p, n q); a tensor monomial (j, k, l, m) has
// (j p + l c, k q + m d). One-parameter actions (Z, R) use only the first
// component: the action is g -> tau_{p g, 0} (x) tau_{c g, 0}.
struct ActionSpec {
  GroupKind group = GroupKind::R2;
  SurdScalar p{1};
  SurdScalar q{1};
  SurdScalar c{1};
  SurdScalar d{1};
  bool on_tensor = false;

  static ActionSpec torus_action(GroupKind g, SurdScalar p, SurdScalar q);
  static ActionSpec tensor_action(GroupKind g, SurdScalar p, SurdScalar q, SurdScalar c,
                                  SurdScalar d);

  int dimension() const { return group == GroupKind::R2 ? 2 : 1; }

  std::array<SurdScalar, 2> frequency(const Monomial& w) const;
  std::array<SurdScalar, 2> frequency(const TensorMonomial& w) const;

  // Fixed under every group element. For R and R^2 this means the active
  // frequency components vanish; for Z it means they are integers (the
  // characters n -> e^{2 pi i f n} are trivial exactly when f is integral).
  bool is_fixed(const Monomial& w) const;
  bool is_fixed(const TensorMonomial& w) const;
};

// Applies the *-automorphism alpha_g: each coefficient is multiplied by
// e^{2 pi i <freq, g>}; exponents are unchanged.
TorusElement apply_action(const TorusElement& a, const GroupPoint& g, const ActionSpec& spec);
TensorElement apply_action(const TensorElement& a, const GroupPoint& g, const ActionSpec& spec);

// Bochner average of g -> alpha_g(a) over the region, exact for finite
// character combinations: each coefficient is scaled by the closed-form
// character average of its frequency.
TorusElement ergodic_average(const TorusElement& a, const ActionSpec& spec,
                             const FolnerRegion& region);
TensorElement ergodic_average(const TensorElement& a, const ActionSpec& spec,
                              const FolnerRegion& region);

// The norm-one projection onto the fixed-point algebra: zeroes every
// non-fixed monomial (exact test), keeps fixed ones untouched. Realizes the
// limit of ergodic_average as the region grows.
TorusElement conditional_expectation(const TorusElement& a, const ActionSpec& spec);
TensorElement conditional_expectation(const TensorElement& a, const ActionSpec& spec);

// Exact frequency pairs {(m p, n q) : |m|, |n| <= window} of a torus system.
struct FrequencyPairLess {
  bool operator()(const std::array<SurdScalar, 2>& a, const std::array<SurdScalar, 2>& b) const {
    SurdScalar::KeyLess less;
    if (less(a[0], b[0])) return true;
    if (less(b[0], a[0])) return false;
    return less(a[1], b[1]);
  }
};
using FrequencySet = std::set<std::array<SurdScalar, 2>, FrequencyPairLess>;

FrequencySet point_spectrum(const ActionSpec& spec, int window);
FrequencySet spectrum_intersection(const FrequencySet& a, const FrequencySet& b);

void require_dimension(const GroupPoint& g, const ActionSpec& spec);

}  // namespace ncergo

#endif  // NCERGO_ACTION_HPP
