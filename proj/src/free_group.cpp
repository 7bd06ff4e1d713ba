#include "ncergo/free_group.hpp"

#include <algorithm>

namespace ncergo {

namespace {

std::vector<Letter> reduced_letters(const std::vector<Letter>& letters) {
  std::vector<Letter> stack;
  stack.reserve(letters.size());
  for (const Letter& l : letters) {
    if (!stack.empty() && stack.back().cancels(l)) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return stack;
}

}  // namespace

Word::Word(std::vector<Letter> letters) : letters_(reduced_letters(letters)) {}

Word reduce(const std::vector<Letter>& letters) { return Word(letters); }

Word Word::inverse() const {
  std::vector<Letter> inv(letters_.rbegin(), letters_.rend());
  for (Letter& l : inv) l.sign = -l.sign;
  Word out;
  out.letters_ = std::move(inv);  // already reduced
  return out;
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Letter> joined = a.letters_;
  joined.insert(joined.end(), b.letters_.begin(), b.letters_.end());
  return Word(std::move(joined));
}

std::string Word::str() const {
  if (letters_.empty()) return "e";
  std::string out;
  for (const Letter& l : letters_) {
    if (!out.empty()) out += ' ';
    out += (l.family == 1 ? 's' : 't');
    out += std::to_string(l.index);
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

}  // namespace ncergo
