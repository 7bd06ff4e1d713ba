#include "ncergo/torus_rep.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace ncergo {

TruncatedRep::TruncatedRep(int radius) : radius_(radius) {
  if (radius < 1) throw std::invalid_argument("truncation radius must be >= 1");
  const int side = 2 * radius + 1;
  dim_ = side * side;
  columns_.resize(static_cast<std::size_t>(dim_));
}

bool TruncatedRep::in_range(int j, int k) const {
  return std::abs(j) <= radius_ && std::abs(k) <= radius_;
}

int TruncatedRep::index_of(int j, int k) const {
  if (!in_range(j, k)) {
    throw std::out_of_range("basis index (" + std::to_string(j) + "," + std::to_string(k) +
                            ") outside truncation radius " + std::to_string(radius_));
  }
  const int side = 2 * radius_ + 1;
  return (j + radius_) * side + (k + radius_);
}

void TruncatedRep::add_entry(int row, int col, Complex value) {
  SparseVec& column = columns_[static_cast<std::size_t>(col)];
  const auto it = std::lower_bound(column.begin(), column.end(), row,
                                   [](const Entry& e, int r) { return e.first < r; });
  if (it != column.end() && it->first == row) {
    it->second += value;
  } else {
    column.insert(it, {row, value});
  }
}

Complex TruncatedRep::entry(int row, int col) const {
  const SparseVec& column = columns_[static_cast<std::size_t>(col)];
  const auto it = std::lower_bound(column.begin(), column.end(), row,
                                   [](const Entry& e, int r) { return e.first < r; });
  return (it != column.end() && it->first == row) ? it->second : Complex{0.0, 0.0};
}

TruncatedRep::SparseVec TruncatedRep::apply(const SparseVec& x) const {
  SparseVec out;
  for (const auto& [col, weight] : x) {
    for (const auto& [row, value] : columns_[static_cast<std::size_t>(col)]) {
      const auto it = std::lower_bound(out.begin(), out.end(), row,
                                       [](const Entry& e, int r) { return e.first < r; });
      if (it != out.end() && it->first == row) {
        it->second += weight * value;
      } else {
        out.insert(it, {row, weight * value});
      }
    }
  }
  return out;
}

TruncatedRep TruncatedRep::multiply(const TruncatedRep& o) const {
  if (radius_ != o.radius_) throw std::invalid_argument("truncation radii differ");
  TruncatedRep out(radius_);
  for (int col = 0; col < dim_; ++col) {
    out.columns_[static_cast<std::size_t>(col)] = apply(o.column(col));
  }
  return out;
}

TruncatedRep TruncatedRep::adjoint() const {
  TruncatedRep out(radius_);
  for (int col = 0; col < dim_; ++col) {
    for (const auto& [row, value] : columns_[static_cast<std::size_t>(col)]) {
      out.add_entry(col, row, std::conj(value));
    }
  }
  return out;
}

Complex TruncatedRep::vacuum_expectation() const {
  const int origin = index_of(0, 0);
  return entry(origin, origin);
}

double max_abs_diff(const TruncatedRep::SparseVec& a, const TruncatedRep::SparseVec& b) {
  double worst = 0.0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      worst = std::max(worst, std::abs(ia->second));
      ++ia;
    } else if (ia == a.end() || ib->first < ia->first) {
      worst = std::max(worst, std::abs(ib->second));
      ++ib;
    } else {
      worst = std::max(worst, std::abs(ia->second - ib->second));
      ++ia;
      ++ib;
    }
  }
  return worst;
}

double TruncatedRep::max_abs_diff_interior(const TruncatedRep& o, int margin) const {
  if (radius_ != o.radius_) throw std::invalid_argument("truncation radii differ");
  const int bound = radius_ - margin;
  double worst = 0.0;
  for (int j = -bound; j <= bound; ++j) {
    for (int k = -bound; k <= bound; ++k) {
      const int col = index_of(j, k);
      worst = std::max(worst, max_abs_diff(column(col), o.column(col)));
    }
  }
  return worst;
}

std::vector<Complex> TruncatedRep::dense() const {
  std::vector<Complex> out(static_cast<std::size_t>(dim_) * static_cast<std::size_t>(dim_));
  for (int col = 0; col < dim_; ++col) {
    for (const auto& [row, value] : columns_[static_cast<std::size_t>(col)]) {
      out[static_cast<std::size_t>(row) * static_cast<std::size_t>(dim_) +
          static_cast<std::size_t>(col)] = value;
    }
  }
  return out;
}

TruncatedRep matrix_rep(const TorusElement& a, int radius) {
  TruncatedRep rep(radius);
  // e^{pi i h theta} by the (small) integer h; exact reduction once per value
  std::unordered_map<long, Complex> phase_cache;
  auto phase_of = [&](long half_turns) {
    const auto it = phase_cache.find(half_turns);
    if (it != phase_cache.end()) return it->second;
    const Complex phase = unit_phase(a.theta().scaled(make_rational(half_turns, 2)));
    phase_cache.emplace(half_turns, phase);
    return phase;
  };
  for (const auto& [w, c] : a.coeffs()) {
    if (std::abs(w.m) > radius || std::abs(w.n) > radius) {
      throw std::out_of_range("monomial u^" + std::to_string(w.m) + " v^" + std::to_string(w.n) +
                              " exceeds truncation radius " + std::to_string(radius));
    }
    for (int j = -radius; j <= radius; ++j) {
      for (int k = -radius; k <= radius; ++k) {
        const int tj = j + w.m;
        const int tk = k + w.n;
        if (!rep.in_range(tj, tk)) continue;  // truncation boundary
        // u^m v^n e_{j,k} = e^{pi i (m (k+n) - j n) theta} e_{j+m,k+n}
        const long half_turns = static_cast<long>(w.m) * (k + w.n) - static_cast<long>(j) * w.n;
        rep.add_entry(rep.index_of(tj, tk), rep.index_of(j, k), c * phase_of(half_turns));
      }
    }
  }
  return rep;
}

TruncatedRep::SparseVec basis_vector(int j, int k, int radius) {
  TruncatedRep rep(radius);
  return {{rep.index_of(j, k), Complex{1.0, 0.0}}};
}

TruncatedRep::SparseVec apply_monomial(const SurdScalar& theta, const Monomial& w,
                                       const TruncatedRep::SparseVec& x, int radius) {
  TruncatedRep scratch(radius);  // index bookkeeping only
  const int side = 2 * radius + 1;
  TruncatedRep::SparseVec out;
  for (const auto& [idx, amplitude] : x) {
    const int j = idx / side - radius;
    const int k = idx % side - radius;
    const int tj = j + w.m;
    const int tk = k + w.n;
    if (!scratch.in_range(tj, tk)) continue;
    const long half_turns = static_cast<long>(w.m) * (k + w.n) - static_cast<long>(j) * w.n;
    const Complex phase = unit_phase(theta.scaled(make_rational(half_turns, 2)));
    const int target = scratch.index_of(tj, tk);
    const auto it = std::lower_bound(out.begin(), out.end(), target,
                                     [](const TruncatedRep::Entry& e, int r) { return e.first < r; });
    if (it != out.end() && it->first == target) {
      it->second += amplitude * phase;
    } else {
      out.insert(it, {target, amplitude * phase});
    }
  }
  return out;
}

}  // namespace ncergo
