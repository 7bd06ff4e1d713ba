#ifndef NCERGO_FREE_GROUP_HPP
#define NCERGO_FREE_GROUP_HPP

#include <compare>
#include <string>
#include <vector>

namespace ncergo {

// Generator of the free group: either a letter s_i from the finite alphabet
// (family 1, index >= 1) or a letter t_z from the integer-indexed family
// (family 2, any index). sign -1 marks the inverse letter.
struct Letter {
  int family = 1;
  long index = 1;
  int sign = +1;

  friend auto operator<=>(const Letter&, const Letter&) = default;

  Letter inverse() const { return {family, index, -sign}; }
  bool cancels(const Letter& o) const {
    return family == o.family && index == o.index && sign == -o.sign;
  }

  static Letter s(long index, int sign = +1) { return {1, index, sign}; }
  static Letter t(long index, int sign = +1) { return {2, index, sign}; }
};

// Freely reduced word; the empty word is the group identity.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);  // reduces

  const std::vector<Letter>& letters() const { return letters_; }
  bool is_identity() const { return letters_.empty(); }
  std::size_t length() const { return letters_.size(); }

  Word inverse() const;
  friend Word operator*(const Word& a, const Word& b);  // concatenate + reduce

  friend auto operator<=>(const Word&, const Word&) = default;

  std::string str() const;  // e.g. "s1 t0^-1", "e" for the identity

 private:
  std::vector<Letter> letters_;
};

// Free reduction: cancels adjacent inverse pairs until none remain.
// Idempotent.
Word reduce(const std::vector<Letter>& letters);

}  // namespace ncergo

#endif  // NCERGO_FREE_GROUP_HPP
