#ifndef NCERGO_TORUS_REP_HPP
#define NCERGO_TORUS_REP_HPP

#include <vector>

#include "ncergo/torus.hpp"

namespace ncergo {

// Matrix of a torus element on the truncated Fourier basis of L^2(T^2),
// e_{j,k} with |j|, |k| <= N. The defining operators act by
//   u e_{j,k} = e^{ pi i k theta} e_{j+1,k}
//   v e_{j,k} = e^{-pi i j theta} e_{j,k+1}
// and a monomial u^m v^n sends e_{j,k} to
// e^{-pi i j n theta} e^{ pi i (k+n) m theta} e_{j+m,k+n}.
//
// This is the independent oracle for the symbolic algebra: entries come
// straight from the basis action, never from monomial_mul. Columns whose
// image leaves the truncation window are cut off, so products of
// representations agree with representations of products only on interior
// columns. Entries are stored per column (the matrix is shift-sparse); a
// dense row-major copy is available through dense().
class TruncatedRep {
 public:
  using Entry = std::pair<int, Complex>;       // (row index, value)
  using SparseVec = std::vector<Entry>;        // sorted by index

  explicit TruncatedRep(int radius);

  int radius() const { return radius_; }
  int dim() const { return dim_; }

  int index_of(int j, int k) const;            // throws std::out_of_range
  bool in_range(int j, int k) const;

  void add_entry(int row, int col, Complex value);

  const SparseVec& column(int col) const { return columns_[col]; }
  Complex entry(int row, int col) const;

  SparseVec apply(const SparseVec& x) const;   // matrix * sparse vector
  TruncatedRep multiply(const TruncatedRep& o) const;  // this composed after o
  TruncatedRep adjoint() const;                // conjugate transpose

  // <e_{0,0}, A e_{0,0}>; equals trace(a) whenever support(a) fits the window.
  Complex vacuum_expectation() const;

  // Largest entry modulus of (this - o) over columns with |j|, |k| <=
  // radius - margin. Radii must match.
  double max_abs_diff_interior(const TruncatedRep& o, int margin) const;

  std::vector<Complex> dense() const;          // row-major, dim x dim

 private:
  int radius_;
  int dim_;
  std::vector<SparseVec> columns_;
};

// pre: support of a within [-N, N]^2, else std::out_of_range naming the
// offending monomial.
TruncatedRep matrix_rep(const TorusElement& a, int radius);

// Basis vector e_{j,k} as a sparse coordinate vector.
TruncatedRep::SparseVec basis_vector(int j, int k, int radius);

// u^m v^n applied to a coordinate vector through the same basis action,
// without materializing the matrix. Components leaving the window are cut.
TruncatedRep::SparseVec apply_monomial(const SurdScalar& theta, const Monomial& w,
                                       const TruncatedRep::SparseVec& x, int radius);

double max_abs_diff(const TruncatedRep::SparseVec& a, const TruncatedRep::SparseVec& b);

}  // namespace ncergo

#endif  // NCERGO_TORUS_REP_HPP
