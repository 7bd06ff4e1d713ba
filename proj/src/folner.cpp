#include "ncergo/folner.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ncergo {

FolnerRegion FolnerRegion::interval(SurdScalar start, SurdScalar length) {
  if (length.sign() <= 0) throw std::invalid_argument("interval length must be positive");
  FolnerRegion r;
  r.shape_ = Shape::Interval;
  r.start_ = std::move(start);
  r.length_ = std::move(length);
  return r;
}

FolnerRegion FolnerRegion::box(SurdScalar start, SurdScalar side) {
  if (side.sign() <= 0) throw std::invalid_argument("box side must be positive");
  FolnerRegion r;
  r.shape_ = Shape::Box;
  r.start_ = std::move(start);
  r.length_ = std::move(side);
  return r;
}

FolnerRegion FolnerRegion::int_range_from(long first, long count) {
  if (count < 1) throw std::invalid_argument("integer range must be nonempty");
  FolnerRegion r;
  r.shape_ = Shape::IntRange;
  r.first_ = first;
  r.count_ = count;
  return r;
}

double FolnerRegion::measure() const {
  switch (shape_) {
    case Shape::Interval:
      return length_.to_double();
    case Shape::Box: {
      const double side = length_.to_double();
      return side * side;
    }
    case Shape::IntRange:
      return static_cast<double>(count_);
  }
  return 0.0;
}

namespace {

constexpr Complex kImagUnit{0.0, 1.0};

Complex interval_average(const SurdScalar& freq, const SurdScalar& start,
                         const SurdScalar& length) {
  if (freq.is_zero()) return {1.0, 0.0};
  const Complex num = unit_phase(freq * (start + length)) - unit_phase(freq * start);
  const Complex den = 2.0 * std::numbers::pi * kImagUnit * freq.to_double() * length.to_double();
  return num / den;
}

Complex int_range_average(const SurdScalar& freq, long first, long count) {
  if (freq.fractional_part().is_zero()) return {1.0, 0.0};  // every term is 1
  // geometric sum: e^{2 pi i f first} (e^{2 pi i f count} - 1) / (count (e^{2 pi i f} - 1))
  const Complex ratio = unit_phase(freq);
  const Complex num = unit_phase(freq.scaled(mpq_class(count))) - 1.0;
  return unit_phase(freq.scaled(mpq_class(first))) * num /
         (static_cast<double>(count) * (ratio - 1.0));
}

}  // namespace

Complex char_average(const SurdScalar& freq, const FolnerRegion& region) {
  const SurdScalar f[1] = {freq};
  return char_average(std::span<const SurdScalar>(f, 1), region);
}

Complex char_average(std::span<const SurdScalar> freq, const FolnerRegion& region) {
  if (freq.size() != static_cast<std::size_t>(region.dimension())) {
    throw std::invalid_argument("frequency dimension " + std::to_string(freq.size()) +
                                " does not match region dimension " +
                                std::to_string(region.dimension()));
  }
  switch (region.shape()) {
    case FolnerRegion::Shape::Interval:
      return interval_average(freq[0], region.start(), region.length());
    case FolnerRegion::Shape::Box:
      return interval_average(freq[0], region.start(), region.length()) *
             interval_average(freq[1], region.start(), region.length());
    case FolnerRegion::Shape::IntRange:
      return int_range_average(freq[0], region.first(), region.count());
  }
  return {0.0, 0.0};
}

double folner_defect(const FolnerRegion& region, std::span<const double> shift) {
  if (shift.size() != static_cast<std::size_t>(region.dimension())) {
    throw std::invalid_argument("shift dimension does not match region dimension");
  }
  switch (region.shape()) {
    case FolnerRegion::Shape::Interval: {
      const double T = region.length().to_double();
      const double overlap = std::max(T - std::abs(shift[0]), 0.0);
      return 2.0 * (T - overlap) / T;
    }
    case FolnerRegion::Shape::Box: {
      const double T = region.length().to_double();
      const double o1 = std::max(T - std::abs(shift[0]), 0.0);
      const double o2 = std::max(T - std::abs(shift[1]), 0.0);
      return 2.0 * (T * T - o1 * o2) / (T * T);
    }
    case FolnerRegion::Shape::IntRange: {
      if (shift[0] != std::nearbyint(shift[0])) {
        throw std::invalid_argument("integer range shifted by a non-integer");
      }
      const double n = static_cast<double>(region.count());
      const double overlap = std::max(n - std::abs(shift[0]), 0.0);
      return 2.0 * (n - overlap) / n;
    }
  }
  return 0.0;
}

double folner_defect(const FolnerRegion& region, double shift) {
  const double s[1] = {shift};
  return folner_defect(region, std::span<const double>(s, 1));
}

}  // namespace ncergo
