#ifndef NCERGO_FOLNER_HPP
#define NCERGO_FOLNER_HPP

#include <span>
#include <vector>

#include "ncergo/surd.hpp"
#include "ncergo/torus.hpp"

namespace ncergo {

// Averaging region with a closed-form character average: a real interval
// [a, a+T], a box [a, a+T]^2, or an integer range {first, ..., first+count-1}.
// Every shape has vanishing symmetric-difference defect as its size grows.
class FolnerRegion {
 public:
  enum class Shape { Interval, Box, IntRange };

  static FolnerRegion interval(SurdScalar start, SurdScalar length);
  static FolnerRegion interval_from_zero(const SurdScalar& length) {
    return interval(SurdScalar(0), length);
  }
  static FolnerRegion symmetric_interval(const SurdScalar& half_length) {
    return interval(-half_length, half_length.scaled(2));
  }
  static FolnerRegion box(SurdScalar start, SurdScalar side);
  static FolnerRegion box_from_zero(const SurdScalar& side) {
    return box(SurdScalar(0), side);
  }
  static FolnerRegion symmetric_box(const SurdScalar& half_side) {
    return box(-half_side, half_side.scaled(2));
  }
  static FolnerRegion int_range(long count) { return int_range_from(1, count); }
  static FolnerRegion int_range_from(long first, long count);
  static FolnerRegion symmetric_int_range(long n) { return int_range_from(-n, 2 * n + 1); }

  Shape shape() const { return shape_; }
  int dimension() const { return shape_ == Shape::Box ? 2 : 1; }
  const SurdScalar& start() const { return start_; }
  const SurdScalar& length() const { return length_; }
  long first() const { return first_; }
  long count() const { return count_; }
  double measure() const;

 private:
  FolnerRegion() = default;
  Shape shape_ = Shape::Interval;
  SurdScalar start_;   // Interval/Box
  SurdScalar length_;  // Interval/Box; positive
  long first_ = 1;     // IntRange
  long count_ = 1;     // IntRange; positive
};

// Normalized character average over the region:
//   Interval:  (1/T) Int_a^{a+T} e^{2 pi i f s} ds
//   IntRange:  (1/N) Sum e^{2 pi i f n}
//   Box:       product of per-axis interval averages (needs two frequencies).
// Frequencies whose average is trivial (f = 0, or f integral on an integer
// range) are detected exactly.
Complex char_average(const SurdScalar& freq, const FolnerRegion& region);
Complex char_average(std::span<const SurdScalar> freq, const FolnerRegion& region);

// |Region symdiff (Region + shift)| / |Region|, from the closed-form overlap.
// Integer ranges take integral shifts only.
double folner_defect(const FolnerRegion& region, std::span<const double> shift);
double folner_defect(const FolnerRegion& region, double shift);

}  // namespace ncergo

#endif  // NCERGO_FOLNER_HPP
