#include "ncergo/surd.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ncergo {

bool is_square_free(long n) {
  if (n < 1) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % (d * d) == 0) return false;
  }
  return true;
}

mpq_class make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

SurdScalar::SurdScalar(mpq_class r, mpq_class s, long n)
    : r_(std::move(r)), s_(std::move(s)), n_(n) {
  if (n_ < 1) {
    throw std::invalid_argument("radicand must be positive, got " + std::to_string(n_));
  }
  if (!is_square_free(n_)) {
    throw std::invalid_argument("radicand must be square-free, got " + std::to_string(n_));
  }
  normalize();
}

SurdScalar SurdScalar::rational(long num, long den) {
  return SurdScalar(make_rational(num, den));
}

void SurdScalar::normalize() {
  if (n_ == 1) {  // sqrt(1) folds into the rational part
    r_ += s_;
    s_ = 0;
  }
  if (s_ == 0) n_ = 1;
}

bool SurdScalar::is_integer() const {
  return s_ == 0 && r_.get_den() == 1;
}

int SurdScalar::sign() const {
  const int sr = sgn(r_);
  if (s_ == 0) return sr;
  const int ss = sgn(s_);
  if (sr == 0) return ss;
  if (sr == ss) return sr;
  // Opposite signs: the sign is decided by comparing r^2 against s^2 n.
  const mpq_class r2 = r_ * r_;
  const mpq_class s2n = s_ * s_ * n_;
  if (r2 == s2n) return 0;  // unreachable for square-free n > 1
  return r2 > s2n ? sr : ss;
}

SurdScalar SurdScalar::operator-() const {
  SurdScalar out = *this;
  out.r_ = -out.r_;
  out.s_ = -out.s_;
  return out;
}

namespace {

[[noreturn]] void throw_radicand_mismatch(long a, long b) {
  throw std::invalid_argument("incompatible radicands sqrt(" + std::to_string(a) +
                              ") and sqrt(" + std::to_string(b) + ")");
}

}  // namespace

SurdScalar& SurdScalar::operator+=(const SurdScalar& o) {
  if (s_ != 0 && o.s_ != 0 && n_ != o.n_) throw_radicand_mismatch(n_, o.n_);
  if (s_ == 0) n_ = o.n_;
  r_ += o.r_;
  s_ += o.s_;
  normalize();
  return *this;
}

SurdScalar& SurdScalar::operator-=(const SurdScalar& o) {
  return *this += -o;
}

SurdScalar& SurdScalar::operator*=(const SurdScalar& o) {
  if (s_ != 0 && o.s_ != 0 && n_ != o.n_) throw_radicand_mismatch(n_, o.n_);
  const long n = (s_ != 0) ? n_ : o.n_;
  mpq_class r = r_ * o.r_ + s_ * o.s_ * n;
  mpq_class s = r_ * o.s_ + s_ * o.r_;
  r_ = std::move(r);
  s_ = std::move(s);
  n_ = n;
  normalize();
  return *this;
}

SurdScalar SurdScalar::scaled(const mpq_class& factor) const {
  SurdScalar out = *this;
  out.r_ *= factor;
  out.s_ *= factor;
  out.normalize();
  return out;
}

long SurdScalar::floor_long() const {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), r_.get_num_mpz_t(), r_.get_den_mpz_t());
  if (s_ == 0) {
    if (!f.fits_slong_p()) throw std::overflow_error("floor does not fit a long");
    return f.get_si();
  }
  // Exact floor of r + s*sqrt(n): start from the double estimate and adjust
  // with exact sign tests.
  long k = static_cast<long>(std::floor(to_double()));
  auto cmp = [this](long m) {  // sign of (value - m)
    SurdScalar d = *this;
    d.r_ -= m;
    return d.sign();
  };
  while (cmp(k) < 0) --k;
  while (cmp(k + 1) >= 0) ++k;
  return k;
}

SurdScalar SurdScalar::fractional_part() const {
  SurdScalar out = *this;
  out.r_ -= floor_long();
  return out;
}

double SurdScalar::to_double() const {
  double v = r_.get_d();
  if (s_ != 0) v += s_.get_d() * std::sqrt(static_cast<double>(n_));
  return v;
}

std::string SurdScalar::str() const {
  if (s_ == 0) return r_.get_str();
  std::string out;
  if (r_ != 0) out = r_.get_str() + (sgn(s_) < 0 ? " - " : " + ");
  else if (sgn(s_) < 0) out = "-";
  const mpq_class abs_s = abs(s_);
  if (abs_s != 1) out += abs_s.get_str() + "*";
  out += "sqrt(" + std::to_string(n_) + ")";
  return out;
}

bool SurdScalar::KeyLess::operator()(const SurdScalar& a, const SurdScalar& b) const {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  if (const int c = cmp(a.r_, b.r_); c != 0) return c < 0;
  return cmp(a.s_, b.s_) < 0;
}

std::complex<double> unit_phase(const SurdScalar& x) {
  const double frac = x.fractional_part().to_double();
  return std::polar(1.0, 2.0 * std::numbers::pi * frac);
}

// ---------------------------------------------------------------------------
// Literal parsing

namespace {

struct Cursor {
  std::string_view text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool consume(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  bool consume_word(std::string_view w) {
    skip_ws();
    if (text.substr(pos, w.size()) == w) {
      pos += w.size();
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("bad scalar literal '" + std::string(text) + "': " + what +
                                " at offset " + std::to_string(pos));
  }

  mpz_class integer() {
    skip_ws();
    const size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start])))) {
      fail("expected integer");
    }
    return mpz_class(std::string(text.substr(start, pos - start)), 10);
  }

  mpq_class rational() {
    mpq_class q(integer());
    if (consume('/')) {
      const mpz_class den = integer();
      if (den == 0) fail("zero denominator");
      q /= mpq_class(den);
    }
    return q;
  }

  long radicand() {
    if (!consume('(')) fail("expected '(' after sqrt");
    const mpz_class n = integer();
    if (!consume(')')) fail("expected ')'");
    if (!n.fits_slong_p() || n < 1) fail("radicand must be a positive integer");
    return n.get_si();
  }
};

// term := 'sqrt' '(' INT ')' | RATIONAL [ '*' 'sqrt' '(' INT ')' ]
SurdScalar parse_term(Cursor& cur) {
  if (cur.consume_word("sqrt")) {
    return SurdScalar::sqrt_of(cur.radicand());
  }
  mpq_class coeff = cur.rational();
  if (cur.consume('*')) {
    if (!cur.consume_word("sqrt")) cur.fail("expected sqrt after '*'");
    return SurdScalar(mpq_class(0), std::move(coeff), cur.radicand());
  }
  return SurdScalar(std::move(coeff));
}

}  // namespace

SurdScalar SurdScalar::parse(std::string_view text) {
  Cursor cur{text};
  if (cur.eof()) cur.fail("empty literal");
  bool negate = false;
  if (cur.peek() == '+' || cur.peek() == '-') {
    // leading sign of the first term is handled by the integer scanner,
    // except for a bare "-sqrt(n)"
    if (cur.consume_word("-sqrt") || cur.consume_word("- sqrt")) {
      cur.pos -= 4;  // re-read "sqrt"
      negate = true;
    } else if (cur.peek() == '+' && cur.consume_word("+sqrt")) {
      cur.pos -= 4;
    }
  }
  SurdScalar value = parse_term(cur);
  if (negate) value = -value;
  while (!cur.eof()) {
    bool minus;
    if (cur.consume('+')) {
      minus = false;
    } else if (cur.consume('-')) {
      minus = true;
    } else {
      cur.fail("expected '+' or '-'");
    }
    SurdScalar term = parse_term(cur);
    value += minus ? -term : term;
  }
  return value;
}

}  // namespace ncergo
