#ifndef NCERGO_SURD_HPP
#define NCERGO_SURD_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ncergo {

// Exact scalar r + s*sqrt(n) with rational r, s and a positive square-free
// radicand n. Values with s == 0 are normalized to n == 1, so structural
// equality coincides with numeric equality even across radicands (1, sqrt(n1)
// and sqrt(n2) are linearly independent over Q for distinct square-free
// n1, n2 > 1).
//
// Sums and products of two surds are defined when the radicands agree or one
// operand is rational; mixing two distinct irrational radicands in a single
// scalar is rejected.
class SurdScalar {
 public:
  SurdScalar() : r_(0), s_(0), n_(1) {}
  SurdScalar(long value) : r_(value), s_(0), n_(1) {}  // NOLINT(implicit)
  SurdScalar(mpq_class rational) : r_(std::move(rational)), s_(0), n_(1) {}
  SurdScalar(mpq_class r, mpq_class s, long n);

  static SurdScalar sqrt_of(long n) { return {mpq_class(0), mpq_class(1), n}; }
  static SurdScalar rational(long num, long den);

  // Literal grammar (shared with the CLI): `a/b`, `a/b + c/d*sqrt(n)`,
  // `sqrt(n)`; integer parts may omit the denominator, signs are allowed on
  // both terms. Throws std::invalid_argument on malformed input or a
  // radicand that is not square-free.
  static SurdScalar parse(std::string_view text);

  const mpq_class& rational_part() const { return r_; }
  const mpq_class& surd_coefficient() const { return s_; }
  long radicand() const { return n_; }

  bool is_zero() const { return r_ == 0 && s_ == 0; }
  bool is_rational() const { return s_ == 0; }
  bool is_integer() const;
  int sign() const;  // exact: -1, 0, +1

  SurdScalar operator-() const;
  SurdScalar& operator+=(const SurdScalar& o);
  SurdScalar& operator-=(const SurdScalar& o);
  SurdScalar& operator*=(const SurdScalar& o);

  friend SurdScalar operator+(SurdScalar a, const SurdScalar& b) { return a += b; }
  friend SurdScalar operator-(SurdScalar a, const SurdScalar& b) { return a -= b; }
  friend SurdScalar operator*(SurdScalar a, const SurdScalar& b) { return a *= b; }

  SurdScalar scaled(const mpq_class& factor) const;
  SurdScalar halved() const { return scaled(mpq_class(1, 2)); }

  bool operator==(const SurdScalar& o) const {
    return n_ == o.n_ && r_ == o.r_ && s_ == o.s_;
  }
  bool operator!=(const SurdScalar& o) const { return !(*this == o); }

  long floor_long() const;           // exact floor
  SurdScalar fractional_part() const;  // this - floor(this), in [0, 1)
  double to_double() const;
  std::string str() const;

  // Strict weak order on the normalized tuple (n, r, s); valid for container
  // keys, not the numeric order.
  struct KeyLess {
    bool operator()(const SurdScalar& a, const SurdScalar& b) const;
  };

 private:
  mpq_class r_, s_;
  long n_;

  void normalize();
};

// e^{2 pi i x}; the argument is range-reduced modulo 1 in exact arithmetic
// first, so the phase error does not grow with |x|.
std::complex<double> unit_phase(const SurdScalar& x);

bool is_square_free(long n);

// mpq_class(num, den) does not canonicalize; this does.
mpq_class make_rational(long num, long den);

}  // namespace ncergo

#endif  // NCERGO_SURD_HPP
