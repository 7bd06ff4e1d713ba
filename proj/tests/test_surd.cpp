#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ncergo/surd.hpp"

using namespace ncergo;

TEST_CASE("literal parsing") {
  CHECK(SurdScalar::parse("1/5") == SurdScalar::rational(1, 5));
  CHECK(SurdScalar::parse("0") == SurdScalar(0));
  CHECK(SurdScalar::parse("-7") == SurdScalar(-7));
  CHECK(SurdScalar::parse("sqrt(2)") == SurdScalar::sqrt_of(2));
  CHECK(SurdScalar::parse("1/2 + 1/3*sqrt(3)") ==
        SurdScalar(make_rational(1, 2), make_rational(1, 3), 3));
  CHECK(SurdScalar::parse("1/2 - 1/3*sqrt(3)") ==
        SurdScalar(make_rational(1, 2), make_rational(-1, 3), 3));
  CHECK(SurdScalar::parse("1/2*sqrt(2)") == SurdScalar(0, make_rational(1, 2), 2));
  CHECK(SurdScalar::parse("-1/5") == SurdScalar::rational(-1, 5));
  CHECK(SurdScalar::parse("-sqrt(2)") == -SurdScalar::sqrt_of(2));
  CHECK(SurdScalar::parse(" 2/4 ") == SurdScalar::rational(1, 2));  // canonicalized
  CHECK(SurdScalar::parse("sqrt(1)") == SurdScalar(1));             // folds to rational
}

TEST_CASE("literal rejection") {
  CHECK_THROWS_AS(SurdScalar::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(SurdScalar::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(SurdScalar::parse("sqrt(4)"), std::invalid_argument);   // not square-free
  CHECK_THROWS_AS(SurdScalar::parse("sqrt(12)"), std::invalid_argument);  // 4 | 12
  CHECK_THROWS_AS(SurdScalar::parse("sqrt(-2)"), std::invalid_argument);
  CHECK_THROWS_AS(SurdScalar::parse("sqrt(0)"), std::invalid_argument);
  CHECK_THROWS_AS(SurdScalar::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(SurdScalar::parse("1 +"), std::invalid_argument);
  CHECK_THROWS_AS(SurdScalar::parse("1 1"), std::invalid_argument);
  CHECK_THROWS_AS(SurdScalar::parse("2*sqrt"), std::invalid_argument);
}

TEST_CASE("exact arithmetic and zero test") {
  const SurdScalar a = SurdScalar::parse("1/2 + 1/3*sqrt(2)");
  const SurdScalar b = SurdScalar::parse("1/2 - 1/3*sqrt(2)");
  CHECK(a + b == SurdScalar(1));
  CHECK((a - a).is_zero());
  CHECK(SurdScalar::sqrt_of(2) * SurdScalar::sqrt_of(2) == SurdScalar(2));
  // (1 + sqrt 2)(1 - sqrt 2) = -1
  const SurdScalar c = SurdScalar(1) + SurdScalar::sqrt_of(2);
  const SurdScalar d = SurdScalar(1) - SurdScalar::sqrt_of(2);
  CHECK(c * d == SurdScalar(-1));
  // rational scaling is exact
  CHECK(SurdScalar::rational(1, 3).scaled(3) == SurdScalar(1));
  CHECK((SurdScalar::rational(1, 3).scaled(3) - SurdScalar(1)).is_zero());
}

TEST_CASE("mixing distinct radicands is rejected") {
  const SurdScalar r2 = SurdScalar::sqrt_of(2);
  const SurdScalar r3 = SurdScalar::sqrt_of(3);
  CHECK_THROWS_AS((void)(r2 + r3), std::invalid_argument);
  CHECK_THROWS_AS((void)(r2 * r3), std::invalid_argument);
  // rational operands are compatible with anything
  CHECK(r2 + SurdScalar::rational(1, 2) == SurdScalar(make_rational(1, 2), 1, 2));
  CHECK(SurdScalar(2) * r3 == SurdScalar(0, 2, 3));
}

TEST_CASE("exact sign") {
  CHECK((SurdScalar::sqrt_of(2) - SurdScalar(1)).sign() == 1);
  CHECK((SurdScalar(1) - SurdScalar::sqrt_of(2)).sign() == -1);
  CHECK((SurdScalar::rational(3, 2) - SurdScalar::sqrt_of(2)).sign() == 1);   // 9/4 > 2
  CHECK((SurdScalar::rational(7, 5) - SurdScalar::sqrt_of(2)).sign() == -1);  // 49/25 < 2
  CHECK(SurdScalar(0).sign() == 0);
  CHECK((-SurdScalar::sqrt_of(5)).sign() == -1);
}

TEST_CASE("floor and fractional part") {
  CHECK(SurdScalar::sqrt_of(2).floor_long() == 1);
  CHECK((-SurdScalar::sqrt_of(2)).floor_long() == -2);
  CHECK(SurdScalar::rational(5, 2).floor_long() == 2);
  CHECK(SurdScalar::rational(-5, 2).floor_long() == -3);
  CHECK(SurdScalar(3).floor_long() == 3);
  CHECK(SurdScalar::rational(-3, 1).floor_long() == -3);

  const SurdScalar f = (-SurdScalar::sqrt_of(2)).fractional_part();  // 2 - sqrt 2
  CHECK(f == SurdScalar(2) - SurdScalar::sqrt_of(2));
  CHECK(f.sign() == 1);
  CHECK((f - SurdScalar(1)).sign() == -1);
}

TEST_CASE("unit phase is range-reduced exactly") {
  CHECK(std::abs(unit_phase(SurdScalar::rational(1, 4)) - std::complex<double>(0.0, 1.0)) <
        1e-15);
  CHECK(std::abs(unit_phase(SurdScalar(0)) - 1.0) < 1e-15);
  // huge integer offsets do not degrade the phase
  const SurdScalar big = SurdScalar(123456789123456L) + SurdScalar::rational(1, 2);
  CHECK(std::abs(unit_phase(big) + 1.0) < 1e-14);
  // conjugate symmetry within rounding
  const SurdScalar x = SurdScalar::parse("2/7 + 1/3*sqrt(5)");
  CHECK(std::abs(unit_phase(-x) - std::conj(unit_phase(x))) < 1e-14);
}

TEST_CASE("is_integer and to_double") {
  CHECK(SurdScalar(4).is_integer());
  CHECK(!SurdScalar::rational(1, 2).is_integer());
  CHECK(!SurdScalar::sqrt_of(2).is_integer());
  CHECK(SurdScalar::parse("1/2 + 1/3*sqrt(2)").to_double() ==
        doctest::Approx(0.5 + std::sqrt(2.0) / 3.0).epsilon(1e-15));
}

TEST_CASE("structural key order is a strict weak order consistent with equality") {
  const SurdScalar values[] = {SurdScalar(0), SurdScalar(1), SurdScalar::rational(1, 2),
                               SurdScalar::sqrt_of(2), -SurdScalar::sqrt_of(2),
                               SurdScalar::parse("1/2 + 1/3*sqrt(3)")};
  SurdScalar::KeyLess less;
  for (const auto& a : values) {
    for (const auto& b : values) {
      CHECK((a == b) == (!less(a, b) && !less(b, a)));
    }
  }
}
