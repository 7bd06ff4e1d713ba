#include "ncergo/dual_system.hpp"

#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ncergo {

S2Rule S2Rule::block_cycles(long length) {
  if (length < 1) throw std::invalid_argument("block length must be >= 1");
  return {Kind::BlockCycles, length};
}

GeneratorAutomorphism::GeneratorAutomorphism(std::vector<std::vector<long>> s1_cycles,
                                             S2Rule s2_rule)
    : s1_cycles_(std::move(s1_cycles)), s2_rule_(s2_rule) {
  for (std::size_t c = 0; c < s1_cycles_.size(); ++c) {
    if (s1_cycles_[c].empty()) throw std::invalid_argument("empty cycle");
    for (std::size_t o = 0; o < s1_cycles_[c].size(); ++o) {
      const long index = s1_cycles_[c][o];
      if (index < 1) throw std::invalid_argument("finite-alphabet indices start at 1");
      if (!s1_position_.emplace(index, std::make_pair(c, o)).second) {
        throw std::invalid_argument("cycles are not disjoint: s" + std::to_string(index) +
                                    " repeats");
      }
    }
  }
}

long GeneratorAutomorphism::s1_image(long index, long power) const {
  const auto it = s1_position_.find(index);
  if (it == s1_position_.end()) return index;  // fixed letter
  const auto [cycle, offset] = it->second;
  const long len = static_cast<long>(s1_cycles_[cycle].size());
  const long shifted = ((offset + power) % len + len) % len;
  return s1_cycles_[cycle][static_cast<std::size_t>(shifted)];
}

long GeneratorAutomorphism::s2_image(long index, long power) const {
  switch (s2_rule_.kind) {
    case S2Rule::Kind::Shift:
      return index + power;
    case S2Rule::Kind::Identity:
      return index;
    case S2Rule::Kind::BlockCycles: {
      const long len = s2_rule_.block_length;
      // block containing index: [base, base + len), base = len * floor(index/len)
      long base = index / len * len;
      if (index < base) base -= len;
      const long offset = index - base;
      const long shifted = ((offset + power) % len + len) % len;
      return base + shifted;
    }
  }
  return index;
}

Letter GeneratorAutomorphism::image(const Letter& l, long power) const {
  Letter out = l;
  out.index = (l.family == 1) ? s1_image(l.index, power) : s2_image(l.index, power);
  return out;
}

Word GeneratorAutomorphism::image(const Word& w, long power) const {
  std::vector<Letter> letters = w.letters();
  for (Letter& l : letters) l = image(l, power);
  return Word(std::move(letters));  // bijectivity precludes new cancellation
}

bool GeneratorAutomorphism::letter_orbit_finite(const Letter& l) const {
  if (l.family == 1) return true;
  return s2_rule_.kind != S2Rule::Kind::Shift;
}

long GeneratorAutomorphism::letter_orbit_length(const Letter& l) const {
  if (!letter_orbit_finite(l)) {
    throw std::invalid_argument("letter " + Word({l}).str() + " has an infinite orbit");
  }
  if (l.family == 1) {
    const auto it = s1_position_.find(l.index);
    return it == s1_position_.end()
               ? 1
               : static_cast<long>(s1_cycles_[it->second.first].size());
  }
  return s2_rule_.kind == S2Rule::Kind::Identity ? 1 : s2_rule_.block_length;
}

bool GeneratorAutomorphism::word_orbit_finite(const Word& w) const {
  for (const Letter& l : w.letters()) {
    if (!letter_orbit_finite(l)) return false;
  }
  return true;
}

std::optional<long> GeneratorAutomorphism::word_orbit_length(const Word& w) const {
  if (!word_orbit_finite(w)) return std::nullopt;
  long period = 1;
  for (const Letter& l : w.letters()) period = std::lcm(period, letter_orbit_length(l));
  return period;
}

bool GeneratorAutomorphism::same_s1_action(const GeneratorAutomorphism& o,
                                           long alphabet_size) const {
  long top = alphabet_size;
  for (const auto& [index, pos] : s1_position_) top = std::max(top, index);
  for (const auto& [index, pos] : o.s1_position_) top = std::max(top, index);
  for (long i = 1; i <= top; ++i) {
    if (s1_image(i, 1) != o.s1_image(i, 1)) return false;
  }
  return true;
}

bool DualSystemConfig::example_mode(long alphabet_size) const {
  return T.same_s1_action(K, alphabet_size) && T.s2_rule().kind == S2Rule::Kind::Shift &&
         K.s2_rule().kind != S2Rule::Kind::Shift;
}

DualSystemConfig DualSystemConfig::increasing_cycles_example() {
  const std::vector<std::vector<long>> cycles = {{1, 2}, {3, 4, 5}, {6, 7, 8, 9}};
  return {GeneratorAutomorphism(cycles, S2Rule::shift()),
          GeneratorAutomorphism(cycles, S2Rule::identity())};
}

GroupObservable GroupObservable::basis(const Word& w, Complex coeff) {
  GroupObservable out;
  out.add_term(w, coeff);
  return out;
}

Complex GroupObservable::coeff(const Word& w) const {
  const auto it = coeffs_.find(w);
  return it == coeffs_.end() ? Complex{0.0, 0.0} : it->second;
}

GroupObservable& GroupObservable::add_term(const Word& w, Complex c) {
  auto [it, inserted] = coeffs_.try_emplace(w, c);
  if (!inserted) it->second += c;
  if (std::abs(it->second) < kPruneThreshold) coeffs_.erase(it);
  return *this;
}

GroupObservable& GroupObservable::operator+=(const GroupObservable& o) {
  for (const auto& [w, c] : o.coeffs_) add_term(w, c);
  return *this;
}

GroupObservable operator*(Complex c, const GroupObservable& a) {
  GroupObservable out;
  for (const auto& [w, v] : a.coeffs()) out.add_term(w, c * v);
  return out;
}

double one_norm(const GroupObservable& a) {
  double sum = 0.0;
  for (const auto& [w, c] : a.coeffs()) sum += std::abs(c);
  return sum;
}

GroupObservable apply_automorphism(const GeneratorAutomorphism& t, const GroupObservable& a,
                                   long power) {
  GroupObservable out;
  for (const auto& [w, c] : a.coeffs()) out.add_term(t.image(w, power), c);
  return out;
}

Complex trace_product(const GroupObservable& a, const GroupObservable& b) {
  Complex out{0.0, 0.0};
  for (const auto& [w, c] : a.coeffs()) {
    out += c * b.coeff(w.inverse());
  }
  return out;
}

Complex correlation_average(const GroupObservable& a, const GroupObservable& b,
                            const DualSystemConfig& config, long N) {
  if (N < 1) throw std::invalid_argument("average length must be >= 1");
  Complex sum{0.0, 0.0};
  for (long n = 1; n <= N; ++n) {
    sum += trace_product(apply_automorphism(config.T, a, n),
                         apply_automorphism(config.K, b, n));
  }
  return sum / static_cast<double>(N);
}

GroupObservable finite_orbit_expectation(const GroupObservable& a,
                                         const DualSystemConfig& config) {
  GroupObservable out;
  for (const auto& [w, c] : a.coeffs()) {
    if (config.T.word_orbit_finite(w)) out.add_term(w, c);
  }
  return out;
}

std::vector<AverageRow> correlation_experiment(const GroupObservable& a,
                                               const GroupObservable& b,
                                               const DualSystemConfig& config,
                                               const std::vector<long>& sizes) {
  if (!config.example_mode()) {
    throw std::invalid_argument(
        "correlation_experiment needs K|S1 = T|S1, T shifting S2, K finite on S2");
  }
  const Complex target =
      trace_product(finite_orbit_expectation(a, config), finite_orbit_expectation(b, config));
  std::vector<AverageRow> rows;
  rows.reserve(sizes.size());
  for (const long N : sizes) {
    const Complex value = correlation_average(a, b, config, N);
    rows.push_back({static_cast<double>(N), value, target, std::abs(value - target)});
  }
  return rows;
}

std::vector<int> mixing_decay(const Word& g, const Word& h, const DualSystemConfig& config,
                              long nmax) {
  std::vector<int> hits;
  hits.reserve(static_cast<std::size_t>(nmax));
  for (long n = 1; n <= nmax; ++n) {
    hits.push_back(config.T.image(g, n) == h ? 1 : 0);
  }
  return hits;
}

}  // namespace ncergo
