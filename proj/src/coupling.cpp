#include "ncergo/coupling.hpp"

#include <cmath>
#include <stdexcept>

namespace ncergo {

const char* state_kind_name(StateKind kind) {
  switch (kind) {
    case StateKind::ProductTrace: return "product_trace";
    case StateKind::KappaD: return "kappa_D";
    case StateKind::KappaDiag: return "kappa_diag";
    case StateKind::OmegaRel: return "omega_rel";
  }
  return "?";
}

namespace {

void require_mirror(StateKind kind, const SurdScalar& theta1, const SurdScalar& theta2) {
  if (theta2 != -theta1) {
    throw std::invalid_argument(std::string(state_kind_name(kind)) +
                                " requires theta2 = -theta1, got theta1 = " + theta1.str() +
                                ", theta2 = " + theta2.str());
  }
}

}  // namespace

StateFunctional StateFunctional::make(StateKind kind, SurdScalar theta1, SurdScalar theta2) {
  if (kind == StateKind::KappaDiag || kind == StateKind::OmegaRel) {
    require_mirror(kind, theta1, theta2);
  }
  return StateFunctional{kind, std::move(theta1), std::move(theta2)};
}

StateFunctional StateFunctional::product_trace(SurdScalar theta1, SurdScalar theta2) {
  return make(StateKind::ProductTrace, std::move(theta1), std::move(theta2));
}
StateFunctional StateFunctional::kappa_d(SurdScalar theta1, SurdScalar theta2) {
  return make(StateKind::KappaD, std::move(theta1), std::move(theta2));
}
StateFunctional StateFunctional::kappa_diag(SurdScalar theta1, SurdScalar theta2) {
  return make(StateKind::KappaDiag, std::move(theta1), std::move(theta2));
}
StateFunctional StateFunctional::omega_rel(SurdScalar theta1, SurdScalar theta2) {
  return make(StateKind::OmegaRel, std::move(theta1), std::move(theta2));
}

double StateFunctional::monomial_value(const TensorMonomial& w) const {
  switch (kind) {
    case StateKind::ProductTrace:
      return (w.j == 0 && w.k == 0 && w.l == 0 && w.m == 0) ? 1.0 : 0.0;
    case StateKind::KappaD:
    case StateKind::OmegaRel:
      return (w.j == 0 && w.l == 0 && w.k + w.m == 0) ? 1.0 : 0.0;
    case StateKind::KappaDiag:
      return (w.j + w.l == 0 && w.k + w.m == 0) ? 1.0 : 0.0;
  }
  return 0.0;
}

Complex state_eval(const StateFunctional& f, const TensorElement& c) {
  require_same_theta(f.theta1, c.theta1());
  require_same_theta(f.theta2, c.theta2());
  Complex out{0.0, 0.0};
  for (const auto& [w, coeff] : c.coeffs()) out += coeff * f.monomial_value(w);
  return out;
}

StateFunctional target_joining(const StateFunctional& f) {
  switch (f.kind) {
    case StateKind::KappaD:
      return StateFunctional::product_trace(f.theta1, f.theta2);
    case StateKind::KappaDiag:
      return StateFunctional::omega_rel(f.theta1, f.theta2);
    case StateKind::ProductTrace:
    case StateKind::OmegaRel:
      return f;  // already invariant
  }
  return f;
}

MarginalReport marginal_check(const StateFunctional& f, int window) {
  MarginalReport report;
  auto consider = [&](const TensorMonomial& w, double expected) {
    const double dev = std::abs(f.monomial_value(w) - expected);
    if (dev > report.max_deviation) {
      report.max_deviation = dev;
      report.worst = w;
    }
  };
  for (int m = -window; m <= window; ++m) {
    for (int n = -window; n <= window; ++n) {
      const double tr = (m == 0 && n == 0) ? 1.0 : 0.0;
      consider(TensorMonomial{m, n, 0, 0}, tr);  // a (x) 1 against mu(a)
      consider(TensorMonomial{0, 0, m, n}, tr);  // 1 (x) b against nu(b)
    }
  }
  return report;
}

InvarianceReport invariance_check(const StateFunctional& f, const ActionSpec& spec,
                                  const std::vector<GroupPoint>& samples, int window) {
  if (!spec.on_tensor) throw std::invalid_argument("invariance check needs a tensor action");
  InvarianceReport report;
  for (const auto& g : samples) {
    require_dimension(g, spec);
    for (int j = -window; j <= window; ++j) {
      for (int k = -window; k <= window; ++k) {
        for (int l = -window; l <= window; ++l) {
          for (int m = -window; m <= window; ++m) {
            const TensorMonomial w{j, k, l, m};
            const double value = f.monomial_value(w);
            if (value == 0.0) continue;  // action only rotates the coefficient
            TensorElement c = TensorElement::monomial_term(f.theta1, f.theta2, w);
            const Complex moved = state_eval(f, apply_action(c, g, spec));
            const double dev = std::abs(moved - Complex{value, 0.0});
            if (dev > report.max_deviation) {
              report.max_deviation = dev;
              report.worst_monomial = w;
              report.worst_sample = g;
            }
          }
        }
      }
    }
  }
  return report;
}

std::vector<TensorMonomial> kernel_certificate(const ActionSpec& spec, int window) {
  if (!spec.on_tensor) throw std::invalid_argument("kernel certificate needs a tensor action");
  std::vector<TensorMonomial> fixed;
  for (int j = -window; j <= window; ++j) {
    for (int k = -window; k <= window; ++k) {
      for (int l = -window; l <= window; ++l) {
        for (int m = -window; m <= window; ++m) {
          const TensorMonomial w{j, k, l, m};
          if (spec.is_fixed(w)) fixed.push_back(w);
        }
      }
    }
  }
  return fixed;
}

RegionFactory standard_region(const ActionSpec& spec) {
  switch (spec.group) {
    case GroupKind::Z:
      return [](const SurdScalar& size) {
        if (!size.is_integer()) throw std::invalid_argument("integer range size must be integral");
        return FolnerRegion::int_range(size.floor_long());
      };
    case GroupKind::R:
      return [](const SurdScalar& size) { return FolnerRegion::interval_from_zero(size); };
    case GroupKind::R2:
      return [](const SurdScalar& size) { return FolnerRegion::box_from_zero(size); };
  }
  throw std::invalid_argument("unknown group kind");
}

std::vector<AverageRow> disjointness_average(const StateFunctional& f, const TensorElement& c,
                                             const ActionSpec& spec,
                                             const std::vector<SurdScalar>& sizes,
                                             const RegionFactory& make_region) {
  require_same_theta(f.theta1, c.theta1());
  require_same_theta(f.theta2, c.theta2());
  if (!spec.on_tensor) throw std::invalid_argument("disjointness average needs a tensor action");
  const StateFunctional target = target_joining(f);
  const Complex limit = state_eval(target, c);

  std::vector<AverageRow> rows;
  rows.reserve(sizes.size());
  for (const SurdScalar& size : sizes) {
    const FolnerRegion region = make_region(size);
    Complex value{0.0, 0.0};
    for (const auto& [w, coeff] : c.coeffs()) {
      const double weight = f.monomial_value(w);
      if (weight == 0.0) continue;
      const auto freq = spec.frequency(w);
      value += coeff * weight *
               char_average(std::span<const SurdScalar>(
                                freq.data(), static_cast<std::size_t>(spec.dimension())),
                            region);
    }
    rows.push_back({size.to_double(), value, limit, std::abs(value - limit)});
  }
  return rows;
}

std::vector<AverageRow> disjointness_average(const StateFunctional& f, const TensorElement& c,
                                             const ActionSpec& spec,
                                             const std::vector<SurdScalar>& sizes) {
  return disjointness_average(f, c, spec, sizes, standard_region(spec));
}

}  // namespace ncergo
