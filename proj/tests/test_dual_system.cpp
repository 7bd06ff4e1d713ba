#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ncergo/dual_system.hpp"

using namespace ncergo;

namespace {

// cycles (s1 s2)(s3 s4 s5)(s6 s7 s8 s9), T shifts the t-family, K fixes it
const DualSystemConfig kConfig = DualSystemConfig::increasing_cycles_example();

Word word(std::initializer_list<Letter> letters) { return Word(std::vector<Letter>(letters)); }

}  // namespace

TEST_CASE("free reduction") {
  CHECK(reduce({Letter::s(1), Letter::s(1, -1)}).is_identity());
  const Word already = word({Letter::s(1), Letter::t(0, -1)});
  CHECK(reduce(already.letters()) == already);
  // s1 s2 s2^-1 s1 -> s1 s1
  const Word squared = reduce({Letter::s(1), Letter::s(2), Letter::s(2, -1), Letter::s(1)});
  CHECK(squared == word({Letter::s(1), Letter::s(1)}));
  // nested cancellation collapses fully
  CHECK(reduce({Letter::s(1), Letter::s(2), Letter::s(2, -1), Letter::s(1, -1)}).is_identity());
  CHECK(squared.str() == "s1 s1");
  CHECK(Word{}.str() == "e");
}

TEST_CASE("letterwise automorphisms") {
  // 2-cycle: T(s1 s2^-1) = s2 s1^-1
  CHECK(kConfig.T.image(word({Letter::s(1), Letter::s(2, -1)})) ==
        word({Letter::s(2), Letter::s(1, -1)}));
  // shift family: T(t0 t5) = t1 t6
  CHECK(kConfig.T.image(word({Letter::t(0), Letter::t(5)})) ==
        word({Letter::t(1), Letter::t(6)}));
  // K is the identity on the t-family
  CHECK(kConfig.K.image(word({Letter::t(0), Letter::t(5)})) ==
        word({Letter::t(0), Letter::t(5)}));
  // identity power
  CHECK(kConfig.T.image(word({Letter::s(3), Letter::t(2)}), 0) ==
        word({Letter::s(3), Letter::t(2)}));
  // length preserved, inverses respected
  const Word w = word({Letter::s(6), Letter::t(-3, -1), Letter::s(1)});
  for (long n = -5; n <= 5; ++n) {
    CHECK(kConfig.T.image(w, n).length() == w.length());
    CHECK(kConfig.T.image(w.inverse(), n) == kConfig.T.image(w, n).inverse());
  }
  // 4-cycle wraps: T(s9) = s6
  CHECK(kConfig.T.image(word({Letter::s(9)})) == word({Letter::s(6)}));
  // letters outside the cycles are fixed
  CHECK(kConfig.T.image(word({Letter::s(17)})) == word({Letter::s(17)}));
}

TEST_CASE("block cycles on the integer family") {
  const GeneratorAutomorphism blocks({}, S2Rule::block_cycles(3));
  CHECK(blocks.image(Letter::t(0)) == Letter::t(1));
  CHECK(blocks.image(Letter::t(2)) == Letter::t(0));   // wraps inside [0,3)
  CHECK(blocks.image(Letter::t(-1)) == Letter::t(-3)); // wraps inside [-3,0)
  CHECK(blocks.letter_orbit_length(Letter::t(7)) == 3);
}

TEST_CASE("canonical trace pairing") {
  const GroupObservable unit = GroupObservable::unit();
  CHECK(trace_product(unit, unit) == Complex{1.0, 0.0});

  const Word g = word({Letter::s(1), Letter::t(0)});
  CHECK(trace_product(GroupObservable::basis(g), GroupObservable::basis(g.inverse())) ==
        Complex{1.0, 0.0});
  CHECK(trace_product(GroupObservable::basis(g), GroupObservable::basis(g)) ==
        Complex{0.0, 0.0});

  // (l(s1) + l(s2)) paired with l(s1^-1) picks out the matching term
  GroupObservable a = GroupObservable::basis(word({Letter::s(1)}));
  a += GroupObservable::basis(word({Letter::s(2)}));
  CHECK(trace_product(a, GroupObservable::basis(word({Letter::s(1, -1)}))) ==
        Complex{1.0, 0.0});
}

TEST_CASE("finite orbit expectation") {
  const GroupObservable s_only = GroupObservable::basis(word({Letter::s(1), Letter::s(3)}));
  CHECK(finite_orbit_expectation(s_only, kConfig).coeffs() == s_only.coeffs());

  const GroupObservable with_t = GroupObservable::basis(word({Letter::s(1), Letter::t(0)}));
  CHECK(finite_orbit_expectation(with_t, kConfig).is_zero());

  CHECK(finite_orbit_expectation(GroupObservable::unit(), kConfig).coeffs() ==
        GroupObservable::unit().coeffs());
}

TEST_CASE("correlation averages of the worked observable pairs") {
  // a = l(s1), b = l(s1^-1): every term is 1 since K and T agree on s1
  const GroupObservable a1 = GroupObservable::basis(word({Letter::s(1)}));
  const GroupObservable b1 = GroupObservable::basis(word({Letter::s(1, -1)}));
  for (const long n : {1L, 10L, 100L}) {
    CHECK(std::abs(correlation_average(a1, b1, kConfig, n) - 1.0) == 0.0);
  }

  // a = l(t0), b = l(t0^-1): T^n t0 = t_n never matches t0 for n >= 1
  const GroupObservable a2 = GroupObservable::basis(word({Letter::t(0)}));
  const GroupObservable b2 = GroupObservable::basis(word({Letter::t(0, -1)}));
  for (const long n : {1L, 10L, 100L}) {
    CHECK(correlation_average(a2, b2, kConfig, n) == Complex{0.0, 0.0});
  }

  // a = l(s1 t0), b = l(t0^-1 s1^-1): the t-letters disagree for every n >= 1
  const GroupObservable a3 = GroupObservable::basis(word({Letter::s(1), Letter::t(0)}));
  const GroupObservable b3 =
      GroupObservable::basis(word({Letter::t(0, -1), Letter::s(1, -1)}));
  for (const long n : {1L, 10L, 100L}) {
    CHECK(correlation_average(a3, b3, kConfig, n) == Complex{0.0, 0.0});
  }

  // unit pair stays at one
  CHECK(correlation_average(GroupObservable::unit(), GroupObservable::unit(), kConfig, 25) ==
        Complex{1.0, 0.0});
}

TEST_CASE("the experiment table hits its targets with zero error") {
  const std::vector<long> sizes = {1, 10, 100};

  const auto rows1 =
      correlation_experiment(GroupObservable::basis(word({Letter::s(1)})),
                             GroupObservable::basis(word({Letter::s(1, -1)})), kConfig, sizes);
  for (const AverageRow& row : rows1) {
    CHECK(row.limit == Complex{1.0, 0.0});
    CHECK(row.abs_error == 0.0);
  }

  const auto rows2 =
      correlation_experiment(GroupObservable::basis(word({Letter::t(0)})),
                             GroupObservable::basis(word({Letter::t(0, -1)})), kConfig, sizes);
  for (const AverageRow& row : rows2) {
    CHECK(row.limit == Complex{0.0, 0.0});  // D kills both observables
    CHECK(row.abs_error == 0.0);
  }

  const auto rows3 = correlation_experiment(
      GroupObservable::basis(word({Letter::s(1), Letter::t(0)})),
      GroupObservable::basis(word({Letter::t(0, -1), Letter::s(1, -1)})), kConfig, sizes);
  for (const AverageRow& row : rows3) {
    CHECK(row.limit == Complex{0.0, 0.0});
    CHECK(row.abs_error == 0.0);
  }
}

TEST_CASE("experiment configs outside the example mode are rejected") {
  const DualSystemConfig bad = {kConfig.T,
                                GeneratorAutomorphism({{1, 2}}, S2Rule::shift())};  // K shifts
  CHECK_THROWS_AS(correlation_experiment(GroupObservable::unit(), GroupObservable::unit(),
                                         bad, {1}),
                  std::invalid_argument);
  const DualSystemConfig disagree = {
      GeneratorAutomorphism({{1, 2}}, S2Rule::shift()),
      GeneratorAutomorphism({{1, 3}}, S2Rule::identity())};  // K|S1 != T|S1
  CHECK(!disagree.example_mode());
}

TEST_CASE("mixing decay indicators") {
  // infinite orbit: t0 meets t5 exactly at n = 5
  const std::vector<int> hits =
      mixing_decay(word({Letter::t(0)}), word({Letter::t(5)}), kConfig, 20);
  for (int n = 1; n <= 20; ++n) CHECK(hits[n - 1] == (n == 5 ? 1 : 0));

  // periodic letter: s1 returns to itself at multiples of its cycle length
  const std::vector<int> periodic =
      mixing_decay(word({Letter::s(1)}), word({Letter::s(1)}), kConfig, 12);
  for (int n = 1; n <= 12; ++n) CHECK(periodic[n - 1] == (n % 2 == 0 ? 1 : 0));

  // T preserves the family partition
  const std::vector<int> zeros =
      mixing_decay(word({Letter::t(0)}), word({Letter::s(1)}), kConfig, 16);
  for (const int h : zeros) CHECK(h == 0);
}

TEST_CASE("word orbit lengths are lcms of letter orbits") {
  // s1 (cycle 2) next to s3 (cycle 3): period 6, confirmed by enumeration
  const Word w = word({Letter::s(1), Letter::s(3)});
  const auto period = kConfig.T.word_orbit_length(w);
  REQUIRE(period.has_value());
  CHECK(*period == 6);
  long direct = 0;
  for (long n = 1; n <= 10000; ++n) {
    if (kConfig.T.image(w, n) == w) {
      direct = n;
      break;
    }
  }
  CHECK(direct == 6);

  CHECK(!kConfig.T.word_orbit_length(word({Letter::s(1), Letter::t(0)})).has_value());
  CHECK(kConfig.K.word_orbit_length(word({Letter::t(0)})).value() == 1);
}

TEST_CASE("cycle validation") {
  CHECK_THROWS_AS(GeneratorAutomorphism({{1, 2}, {2, 3}}, S2Rule::shift()),
                  std::invalid_argument);  // not disjoint
  CHECK_THROWS_AS(GeneratorAutomorphism({{0, 1}}, S2Rule::shift()),
                  std::invalid_argument);  // indices start at 1
  CHECK_THROWS_AS(S2Rule::block_cycles(0), std::invalid_argument);
}
