#ifndef NCERGO_DUAL_SYSTEM_HPP
#define NCERGO_DUAL_SYSTEM_HPP

#include <complex>
#include <map>
#include <optional>
#include <vector>

#include "ncergo/coupling.hpp"  // AverageRow
#include "ncergo/free_group.hpp"
#include "ncergo/torus.hpp"     // Complex, kPruneThreshold

namespace ncergo {

// How a generator bijection acts on the integer-indexed family: shift by one
// (all orbits infinite), identity, or consecutive blocks of a fixed length
// cycling internally (all orbits finite).
struct S2Rule {
  enum class Kind { Shift, Identity, BlockCycles };
  Kind kind = Kind::Shift;
  long block_length = 0;  // BlockCycles only, >= 1

  static S2Rule shift() { return {Kind::Shift, 0}; }
  static S2Rule identity() { return {Kind::Identity, 0}; }
  static S2Rule block_cycles(long length);
};

// Letterwise automorphism of the free group, given by disjoint cycles on the
// finite alphabet (unlisted letters are fixed) and an S2Rule on the
// integer-indexed family. Inverse letters map to inverse images, so reduced
// words stay reduced.
class GeneratorAutomorphism {
 public:
  GeneratorAutomorphism(std::vector<std::vector<long>> s1_cycles, S2Rule s2_rule);

  const std::vector<std::vector<long>>& s1_cycles() const { return s1_cycles_; }
  const S2Rule& s2_rule() const { return s2_rule_; }

  long s1_image(long index, long power) const;
  long s2_image(long index, long power) const;
  Letter image(const Letter& l, long power = 1) const;
  Word image(const Word& w, long power = 1) const;

  bool letter_orbit_finite(const Letter& l) const;
  long letter_orbit_length(const Letter& l) const;  // throws on infinite orbits

  // Finite iff every letter orbit is finite (letterwise automorphisms send
  // distinct reduced words to distinct reduced words, so the word orbit
  // length is the lcm of its letter orbit lengths).
  bool word_orbit_finite(const Word& w) const;
  std::optional<long> word_orbit_length(const Word& w) const;

  bool same_s1_action(const GeneratorAutomorphism& o, long alphabet_size) const;

 private:
  std::vector<std::vector<long>> s1_cycles_;
  std::map<long, std::pair<std::size_t, std::size_t>> s1_position_;  // index -> (cycle, offset)
  S2Rule s2_rule_;
};

// The pair (T, K) defining two dual systems on the same group von Neumann
// algebra.
struct DualSystemConfig {
  GeneratorAutomorphism T;
  GeneratorAutomorphism K;

  // Example configuration: K agrees with T on the finite alphabet, T shifts
  // the integer family (infinite orbits), K is finite on it.
  bool example_mode(long alphabet_size = 0) const;

  static DualSystemConfig increasing_cycles_example();
};

// Finite complex combination of group elements, Sum a(g) l(g).
class GroupObservable {
 public:
  GroupObservable() = default;

  static GroupObservable unit() { return basis(Word{}); }
  static GroupObservable basis(const Word& w, Complex coeff = 1.0);

  const std::map<Word, Complex>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  Complex coeff(const Word& w) const;

  GroupObservable& add_term(const Word& w, Complex c);

  GroupObservable& operator+=(const GroupObservable& o);
  friend GroupObservable operator+(GroupObservable a, const GroupObservable& b) {
    return a += b;
  }
  friend GroupObservable operator*(Complex c, const GroupObservable& a);

 private:
  std::map<Word, Complex> coeffs_;
};

double one_norm(const GroupObservable& a);

// Pushforward along the n-th power of the automorphism: l(g) -> l(T^n g).
GroupObservable apply_automorphism(const GeneratorAutomorphism& t, const GroupObservable& a,
                                   long power = 1);

// Canonical trace pairing mu(a b) = Sum over g h = e of a(g) b(h).
Complex trace_product(const GroupObservable& a, const GroupObservable& b);

// (1/N) Sum_{n=1..N} mu(alpha^n(a) beta^n(b)) with alpha, beta induced by T, K.
Complex correlation_average(const GroupObservable& a, const GroupObservable& b,
                            const DualSystemConfig& config, long N);

// Projection onto the span of words with finite T-orbit; the conditional
// expectation onto the finite orbit factor.
GroupObservable finite_orbit_expectation(const GroupObservable& a,
                                         const DualSystemConfig& config);

// Per N: correlation average against the finite-orbit target mu(D(a) D(b)).
// pre: example-mode config.
std::vector<AverageRow> correlation_experiment(const GroupObservable& a,
                                               const GroupObservable& b,
                                               const DualSystemConfig& config,
                                               const std::vector<long>& sizes);

// [T^n g = h] for n = 1..nmax.
std::vector<int> mixing_decay(const Word& g, const Word& h, const DualSystemConfig& config,
                              long nmax);

}  // namespace ncergo

#endif  // NCERGO_DUAL_SYSTEM_HPP
