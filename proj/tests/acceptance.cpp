// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Every tolerance is pinned in code next to the check it guards.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "ncergo/action.hpp"
#include "ncergo/coupling.hpp"
#include "ncergo/dual_system.hpp"
#include "ncergo/folner.hpp"
#include "ncergo/sampling.hpp"
#include "ncergo/state_oracle.hpp"
#include "ncergo/tensor.hpp"
#include "ncergo/torus.hpp"
#include "ncergo/torus_rep.hpp"
#include "ncergo/verify.hpp"
#include "support/quadrature.hpp"

using namespace ncergo;

namespace {

constexpr double kPi = std::numbers::pi;

double norm_diff(const TorusElement& a, const TorusElement& b) {
  TorusElement d = a;
  d -= b;
  return one_norm(d);
}

struct Criterion {
  int id;
  const char* name;
  double deviation;
  double tolerance;
  bool pass() const { return deviation <= tolerance; }
};

// 1. uv = e^{2 pi i theta} vu at the four pinned deformation parameters.
Criterion commutation_relation() {
  double worst = 0.0;
  for (const char* literal : {"0", "1/4", "1/3", "1/2 + 1/5*sqrt(2)"}) {
    const SurdScalar theta = SurdScalar::parse(literal);
    const TorusElement u = TorusElement::monomial_term(theta, {1, 0});
    const TorusElement v = TorusElement::monomial_term(theta, {0, 1});
    worst = std::max(worst, norm_diff(mul(u, v), unit_phase(theta) * mul(v, u)));
  }
  return {1, "commutation-relation", worst, 1e-12};
}

// 2. Symbolic mul/adjoint/trace against the radius-16 representation,
//    100 seeded elements per theta, within ten seconds.
Criterion oracle_equivalence() {
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  const SurdScalar thetas[] = {SurdScalar::rational(1, 5),
                               SurdScalar::sqrt_of(2).scaled(make_rational(1, 2))};
  for (const SurdScalar& theta : thetas) {
    worst = std::max(worst, oracle_equivalence_deviation(20260809, theta, 100, 16, 4, 8));
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (seconds > 10.0) return {2, "oracle-equivalence", seconds, 10.0};
  return {2, "oracle-equivalence", worst, 1e-9};
}

// 3. Box averages of nonunit monomials decay at the 1/(pi max(|m|,|n|) T)
//    rate; the unit monomial is untouched.
Criterion unique_ergodicity() {
  const SurdScalar theta = SurdScalar::rational(1, 5);
  const ActionSpec spec = ActionSpec::torus_action(GroupKind::R2, SurdScalar(1), SurdScalar(1));
  const double T = 1000.0;
  const FolnerRegion box = FolnerRegion::box_from_zero(SurdScalar(1000));
  double worst = 0.0;
  for (int m = -4; m <= 4; ++m) {
    for (int n = -4; n <= 4; ++n) {
      const TorusElement a = TorusElement::monomial_term(theta, {m, n});
      const TorusElement avg = ergodic_average(a, spec, box);
      if (m == 0 && n == 0) {
        if (norm_diff(avg, a) != 0.0) worst = std::max(worst, 1.0);
        continue;
      }
      const double bound = 1.0 / (kPi * std::max(std::abs(m), std::abs(n)) * T) + 1e-12;
      worst = std::max(worst, one_norm(avg) - bound);
    }
  }
  return {3, "unique-ergodicity-rate", worst, 0.0};
}

// 4. Averaged kappa_D over growing boxes approaches the product trace at the
//    closed-form rate, cross-checked by 2d quadrature at T = 10.
Criterion coupling_convergence() {
  const SurdScalar t1 = SurdScalar::rational(1, 5);
  const SurdScalar t2 = SurdScalar::rational(1, 3);
  const ActionSpec spec = ActionSpec::tensor_action(
      GroupKind::R2, SurdScalar(1), SurdScalar(1), SurdScalar::sqrt_of(2),
      SurdScalar::sqrt_of(3));
  const StateFunctional kd = StateFunctional::kappa_d(t1, t2);
  const TensorElement c = TensorElement::monomial_term(t1, t2, {0, 1, 0, -1});

  const auto rows =
      disjointness_average(kd, c, spec, {SurdScalar(10), SurdScalar(1000)});
  double worst = 0.0;

  const double f = 1.0 - std::sqrt(3.0);
  for (const AverageRow& row : rows) {
    const Complex closed = (std::polar(1.0, 2.0 * kPi * f * row.size) - 1.0) /
                           (Complex{0.0, 2.0 * kPi} * f * row.size);
    worst = std::max(worst, std::abs(row.value - closed) - 1e-12);
    if (row.limit != Complex{0.0, 0.0}) worst = std::max(worst, 1.0);
  }
  // modulus bound at T = 1000
  worst = std::max(worst, std::abs(rows[1].value) - 1.0 / (kPi * (std::sqrt(3.0) - 1.0) * 1000.0));
  // quadrature cross-check at T = 10
  const Complex quad = ncergo_test::simpson_box_average(0.0, f, 0.0, 10.0, 4000);
  worst = std::max(worst, std::abs(rows[0].value - quad) - 1e-8);
  return {4, "coupling-convergence", worst, 0.0};
}

// 5. Mirror pair: v (x) v~^-1 is pinned at the nonproduct joining value 1;
//    u (x) u~^-1 decays to omega_rel = 0 at the 1/(pi (sqrt 2 - 1) T) rate.
Criterion relative_limit() {
  const SurdScalar t1 = SurdScalar::rational(1, 5);
  const ActionSpec spec = ActionSpec::tensor_action(GroupKind::R, SurdScalar(1), SurdScalar(1),
                                                    SurdScalar::sqrt_of(2), SurdScalar(1));
  const StateFunctional diag = StateFunctional::kappa_diag(t1, -t1);
  double worst = 0.0;

  const TensorElement fixed = TensorElement::monomial_term(t1, -t1, {0, 1, 0, -1});
  for (const AverageRow& row : disjointness_average(
           diag, fixed, spec, {SurdScalar(1), SurdScalar(10), SurdScalar(1000)})) {
    if (row.value != Complex{1.0, 0.0}) worst = std::max(worst, std::abs(row.value - 1.0));
    if (row.limit != Complex{1.0, 0.0}) worst = std::max(worst, 1.0);
  }
  if (state_eval(StateFunctional::product_trace(t1, -t1), fixed) != Complex{0.0, 0.0}) {
    worst = std::max(worst, 1.0);
  }

  const TensorElement moving = TensorElement::monomial_term(t1, -t1, {1, 0, -1, 0});
  const auto decay = disjointness_average(diag, moving, spec, {SurdScalar(1000)});
  if (decay[0].limit != Complex{0.0, 0.0}) worst = std::max(worst, 1.0);
  worst = std::max(worst,
                   std::abs(decay[0].value) - 1.0 / (kPi * (std::sqrt(2.0) - 1.0) * 1000.0));
  return {5, "relative-limit", worst, 0.0};
}

// 6. The averaged expectation at T = 10^4 sits within 1e-3 of the projection;
//    the projection is exactly idempotent, invariant, unital, with fixed set
//    {m = 0}.
Criterion expectation_consistency() {
  const SurdScalar theta = SurdScalar::rational(1, 5);
  const ActionSpec spec = ActionSpec::torus_action(GroupKind::R, SurdScalar(1), SurdScalar(1));
  const FolnerRegion region = FolnerRegion::interval_from_zero(SurdScalar(10000));
  SampleRng rng(61);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const TorusElement a = normalized_one_norm(random_torus_element(rng, theta, 4, 10));
    const TorusElement e = conditional_expectation(a, spec);
    worst = std::max(worst, norm_diff(ergodic_average(a, spec, region), e) - 1e-3);
    if (norm_diff(conditional_expectation(e, spec), e) != 0.0) worst = std::max(worst, 1.0);
    const GroupPoint g = {random_rational(rng, -3, 3, 16)};
    if (norm_diff(conditional_expectation(apply_action(a, g, spec), spec), e) != 0.0) {
      worst = std::max(worst, 1.0);
    }
    if (norm_diff(apply_action(e, g, spec), e) != 0.0) worst = std::max(worst, 1.0);
  }
  const TorusElement unit = TorusElement::unit(theta);
  if (norm_diff(conditional_expectation(unit, spec), unit) != 0.0) worst = std::max(worst, 1.0);
  for (int m = -4; m <= 4; ++m) {
    for (int n = -4; n <= 4; ++n) {
      if (spec.is_fixed(Monomial{m, n}) != (m == 0)) worst = std::max(worst, 1.0);
    }
  }
  return {6, "expectation-consistency", worst, 0.0};
}

// 7. One-parameter fixed-point certificate: exactly the (0,k,0,m) window.
Criterion fixed_point_certificate() {
  const ActionSpec spec = ActionSpec::tensor_action(GroupKind::R, SurdScalar(1), SurdScalar(1),
                                                    SurdScalar::sqrt_of(2), SurdScalar(1));
  const auto fixed = kernel_certificate(spec, 8);
  double worst = 0.0;
  if (fixed.size() != 17 * 17) worst = 1.0;
  for (const TensorMonomial& w : fixed) {
    if (w.j != 0 || w.l != 0) worst = 1.0;
  }
  return {7, "fixed-point-certificate", worst, 0.0};
}

// 8. Integer lattice vs (sqrt 2, sqrt 3) lattice: spectra meet only at the
//    origin.
Criterion spectrum_disjointness() {
  const ActionSpec a = ActionSpec::torus_action(GroupKind::R2, SurdScalar(1), SurdScalar(1));
  const ActionSpec b = ActionSpec::torus_action(GroupKind::R2, SurdScalar::sqrt_of(2),
                                                SurdScalar::sqrt_of(3));
  const FrequencySet common = spectrum_intersection(point_spectrum(a, 8), point_spectrum(b, 8));
  const bool only_origin = common.size() == 1 && common.begin()->at(0).is_zero() &&
                           common.begin()->at(1).is_zero();
  return {8, "spectrum-disjointness", only_origin ? 0.0 : 1.0, 0.0};
}

// 9. Dual-system correlation averages hit mu(D(a) D(b)) with zero error;
//    t0 meets t5 exactly once and the Cesaro sums stay below 1/N.
Criterion dual_system_limits() {
  const DualSystemConfig config = DualSystemConfig::increasing_cycles_example();
  const std::vector<long> sizes = {1, 10, 100};
  double worst = 0.0;

  const auto check_rows = [&](const GroupObservable& a, const GroupObservable& b) {
    for (const AverageRow& row : correlation_experiment(a, b, config, sizes)) {
      worst = std::max(worst, row.abs_error);
    }
  };
  const Word s1({Letter::s(1)});
  const Word t0({Letter::t(0)});
  check_rows(GroupObservable::basis(s1), GroupObservable::basis(s1.inverse()));
  check_rows(GroupObservable::basis(t0), GroupObservable::basis(t0.inverse()));
  const Word s1t0({Letter::s(1), Letter::t(0)});
  check_rows(GroupObservable::basis(s1t0), GroupObservable::basis(s1t0.inverse()));

  const std::vector<int> hits = mixing_decay(t0, Word({Letter::t(5)}), config, 100);
  long total = 0;
  for (std::size_t n = 0; n < hits.size(); ++n) {
    total += hits[n];
    worst = std::max(worst, static_cast<double>(total) / static_cast<double>(n + 1) -
                                1.0 / static_cast<double>(n + 1));
  }
  if (total != 1 || hits[4] != 1) worst = std::max(worst, 1.0);
  return {9, "dual-system-limits", worst, 0.0};
}

// 10. All four states are positive on c* c, and agree with the operator
//     oracle at radius 16.
Criterion state_positivity() {
  SampleRng rng(101);
  const SurdScalar t1 = SurdScalar::rational(1, 5);
  double worst_negative = 0.0;
  double worst_agreement = 0.0;
  for (int i = 0; i < 100; ++i) {
    const TensorElement pair_c = random_tensor_element(rng, t1, SurdScalar::rational(1, 3), 3, 5);
    const TensorElement mirror_c = random_tensor_element(rng, t1, -t1, 3, 5);
    for (const StateKind kind : {StateKind::ProductTrace, StateKind::KappaD,
                                 StateKind::KappaDiag, StateKind::OmegaRel}) {
      const bool mirror = kind == StateKind::KappaDiag || kind == StateKind::OmegaRel;
      const TensorElement& c = mirror ? mirror_c : pair_c;
      const StateFunctional f = StateFunctional::make(kind, c.theta1(), c.theta2());
      const Complex closed = state_eval(f, tensor_mul(adjoint(c), c));
      worst_negative = std::max({worst_negative, -closed.real(), std::abs(closed.imag())});
      worst_agreement =
          std::max(worst_agreement, std::abs(closed.real() - state_norm_sq_oracle(f, c, 16)));
    }
  }
  const double dev = std::max(worst_negative - 1e-12, worst_agreement - 1e-9);
  return {10, "state-positivity", dev, 0.0};
}

// 11. Integral identities: the involution passes through averages, and
//     interval averages obey the exact translation rule.
Criterion integral_identities() {
  SampleRng rng(131);
  const SurdScalar theta = SurdScalar::rational(1, 5);
  const ActionSpec spec = ActionSpec::torus_action(GroupKind::R, SurdScalar(1), SurdScalar(1));
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const TorusElement a = random_torus_element(rng, theta, 4, 8);
    const FolnerRegion region =
        FolnerRegion::interval_from_zero(random_rational(rng, 1, 30, 2));
    worst = std::max(worst, norm_diff(adjoint(ergodic_average(a, spec, region)),
                                      ergodic_average(adjoint(a), spec, region)));
  }
  for (int i = 0; i < 50; ++i) {
    const SurdScalar f = (i % 2 == 0)
                             ? random_rational(rng, -3, 3, 8)
                             : random_rational(rng, -1, 1, 4) +
                                   SurdScalar::sqrt_of(2).scaled(make_rational(1, 8));
    const SurdScalar start = random_rational(rng, -2, 2, 16);
    const SurdScalar h = random_rational(rng, -2, 2, 16);
    const SurdScalar T = random_rational(rng, 1, 8, 4);
    const Complex lhs = char_average(f, FolnerRegion::interval(start, T));
    const Complex rhs =
        unit_phase(f * h) * char_average(f, FolnerRegion::interval(start - h, T));
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return {11, "integral-identities", worst, 1e-12};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      commutation_relation(), oracle_equivalence(),    unique_ergodicity(),
      coupling_convergence(), relative_limit(),        expectation_consistency(),
      fixed_point_certificate(), spectrum_disjointness(), dual_system_limits(),
      state_positivity(),     integral_identities(),
  };

  bool all_pass = true;
  for (const Criterion& c : criteria) {
    std::printf("%s %2d %-26s max_dev=%.3g tol=%.3g\n", c.pass() ? "PASS" : "FAIL", c.id,
                c.name, c.deviation, c.tolerance);
    all_pass = all_pass && c.pass();
  }
  std::printf("%s\n", all_pass ? "ACCEPTANCE: all criteria passed"
                               : "ACCEPTANCE: FAILURES PRESENT");
  return all_pass ? 0 : 1;
}
