#include "ncergo/action.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncergo {

ActionSpec ActionSpec::torus_action(GroupKind g, SurdScalar p, SurdScalar q) {
  ActionSpec spec;
  spec.group = g;
  spec.p = std::move(p);
  spec.q = std::move(q);
  spec.on_tensor = false;
  return spec;
}

ActionSpec ActionSpec::tensor_action(GroupKind g, SurdScalar p, SurdScalar q, SurdScalar c,
                                     SurdScalar d) {
  ActionSpec spec;
  spec.group = g;
  spec.p = std::move(p);
  spec.q = std::move(q);
  spec.c = std::move(c);
  spec.d = std::move(d);
  spec.on_tensor = true;
  return spec;
}

std::array<SurdScalar, 2> ActionSpec::frequency(const Monomial& w) const {
  return {p.scaled(mpq_class(w.m)), q.scaled(mpq_class(w.n))};
}

std::array<SurdScalar, 2> ActionSpec::frequency(const TensorMonomial& w) const {
  return {p.scaled(mpq_class(w.j)) + c.scaled(mpq_class(w.l)),
          q.scaled(mpq_class(w.k)) + d.scaled(mpq_class(w.m))};
}

namespace {

bool component_trivial(const SurdScalar& f, GroupKind group) {
  return group == GroupKind::Z ? f.fractional_part().is_zero() : f.is_zero();
}

bool fixed_from(const std::array<SurdScalar, 2>& freq, GroupKind group) {
  if (!component_trivial(freq[0], group)) return false;
  if (group == GroupKind::R2 && !component_trivial(freq[1], group)) return false;
  return true;
}

SurdScalar pairing(const std::array<SurdScalar, 2>& freq, const GroupPoint& g, GroupKind group) {
  SurdScalar x = freq[0] * g[0];
  if (group == GroupKind::R2) x += freq[1] * g[1];
  return x;
}

}  // namespace

bool ActionSpec::is_fixed(const Monomial& w) const { return fixed_from(frequency(w), group); }
bool ActionSpec::is_fixed(const TensorMonomial& w) const {
  return fixed_from(frequency(w), group);
}

void require_dimension(const GroupPoint& g, const ActionSpec& spec) {
  if (g.size() != static_cast<std::size_t>(spec.dimension())) {
    throw std::invalid_argument("group element dimension " + std::to_string(g.size()) +
                                " does not match action dimension " +
                                std::to_string(spec.dimension()));
  }
}

namespace {

void require_kind(const ActionSpec& spec, bool tensor) {
  if (spec.on_tensor != tensor) {
    throw std::invalid_argument(tensor ? "action spec is not a tensor-system action"
                                       : "action spec is not a torus-system action");
  }
}

TorusElement empty_like(const TorusElement& a) { return TorusElement(a.theta()); }
TensorElement empty_like(const TensorElement& a) {
  return TensorElement(a.theta1(), a.theta2());
}

template <typename Element>
Element mapped_coeffs(const Element& a, const ActionSpec&,
                      auto&& factor /* (monomial) -> Complex */) {
  Element out = empty_like(a);
  for (const auto& [w, c] : a.coeffs()) out.add_term(w, c * factor(w));
  return out;
}

}  // namespace

TorusElement apply_action(const TorusElement& a, const GroupPoint& g, const ActionSpec& spec) {
  require_kind(spec, false);
  require_dimension(g, spec);
  return mapped_coeffs(a, spec, [&](const Monomial& w) {
    return unit_phase(pairing(spec.frequency(w), g, spec.group));
  });
}

TensorElement apply_action(const TensorElement& a, const GroupPoint& g, const ActionSpec& spec) {
  require_kind(spec, true);
  require_dimension(g, spec);
  return mapped_coeffs(a, spec, [&](const TensorMonomial& w) {
    return unit_phase(pairing(spec.frequency(w), g, spec.group));
  });
}

namespace {

void require_region_matches(const ActionSpec& spec, const FolnerRegion& region) {
  if (region.dimension() != spec.dimension()) {
    throw std::invalid_argument("region dimension does not match action dimension");
  }
  if ((spec.group == GroupKind::Z) != (region.shape() == FolnerRegion::Shape::IntRange)) {
    throw std::invalid_argument("integer ranges average Z actions, intervals and boxes average R actions");
  }
}

template <typename Element>
Element averaged(const Element& a, const ActionSpec& spec, const FolnerRegion& region) {
  require_region_matches(spec, region);
  return mapped_coeffs(a, spec, [&](const auto& w) {
    const auto freq = spec.frequency(w);
    return char_average(std::span<const SurdScalar>(freq.data(),
                                                    static_cast<std::size_t>(spec.dimension())),
                        region);
  });
}

template <typename Element>
Element projected(const Element& a, const ActionSpec& spec) {
  return mapped_coeffs(a, spec, [&](const auto& w) {
    return spec.is_fixed(w) ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
  });
}

}  // namespace

TorusElement ergodic_average(const TorusElement& a, const ActionSpec& spec,
                             const FolnerRegion& region) {
  require_kind(spec, false);
  return averaged(a, spec, region);
}

TensorElement ergodic_average(const TensorElement& a, const ActionSpec& spec,
                              const FolnerRegion& region) {
  require_kind(spec, true);
  return averaged(a, spec, region);
}

TorusElement conditional_expectation(const TorusElement& a, const ActionSpec& spec) {
  require_kind(spec, false);
  return projected(a, spec);
}

TensorElement conditional_expectation(const TensorElement& a, const ActionSpec& spec) {
  require_kind(spec, true);
  return projected(a, spec);
}

FrequencySet point_spectrum(const ActionSpec& spec, int window) {
  if (spec.on_tensor) {
    throw std::invalid_argument("point spectrum is defined for torus-system actions");
  }
  FrequencySet out;
  for (int m = -window; m <= window; ++m) {
    for (int n = -window; n <= window; ++n) {
      out.insert(spec.frequency(Monomial{m, n}));
    }
  }
  return out;
}

FrequencySet spectrum_intersection(const FrequencySet& a, const FrequencySet& b) {
  FrequencySet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(out, out.begin()), FrequencyPairLess{});
  return out;
}

}  // namespace ncergo
