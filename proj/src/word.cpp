#include "swe/word.hpp"

#include <algorithm>
#include <array>
#include <ostream>
#include <stdexcept>

namespace swe {

Word::Word(std::string_view digits) : digits_(digits) {
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    char c = digits_[i];
    if (c < '0' || c > '2')
      throw std::invalid_argument("letter '" + std::string(1, c) + "' at position " +
                                  std::to_string(i) + " is not in {0,1,2}");
  }
}

Word Word::from_letters(const std::vector<Letter>& letters) {
  std::string s;
  s.reserve(letters.size());
  for (Letter a : letters) {
    if (a >= kAlphabetSize) throw std::invalid_argument("letter out of range");
    s.push_back(to_digit(a));
  }
  return Word(std::move(s), Unchecked{});
}

std::size_t Word::count(Letter a) const {
  return static_cast<std::size_t>(std::count(digits_.begin(), digits_.end(), to_digit(a)));
}

Word Word::prefix(std::size_t n) const {
  return Word(digits_.substr(0, std::min(n, digits_.size())), Unchecked{});
}

Word Word::suffix(std::size_t n) const {
  n = std::min(n, digits_.size());
  return Word(digits_.substr(digits_.size() - n), Unchecked{});
}

Word Word::substr(std::size_t pos, std::size_t n) const {
  return Word(digits_.substr(pos, n), Unchecked{});
}

bool Word::starts_with(const Word& u) const {
  return std::string_view(digits_).starts_with(u.digits_);
}

bool Word::ends_with(const Word& u) const {
  return std::string_view(digits_).ends_with(u.digits_);
}

std::vector<Letter> Word::letters() const {
  std::array<bool, kAlphabetSize> seen{};
  for (char c : digits_) seen[static_cast<std::size_t>(c - '0')] = true;
  std::vector<Letter> out;
  for (Letter a = 0; a < kAlphabetSize; ++a)
    if (seen[a]) out.push_back(a);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.digits(); }

Word erase(const Word& w, Letter i) {
  WordBuilder b;
  const char skip = to_digit(i);
  for (char c : w.digits())
    if (c != skip) b.append(std::string_view(&c, 1));
  return std::move(b).build();
}

Integer fibonacci_number(unsigned n) {
  Integer prev = 0, cur = 1;
  if (n == 0) return prev;
  for (unsigned k = 1; k < n; ++k) {
    Integer next = cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::vector<Integer> fibonacci_numbers(unsigned count) {
  std::vector<Integer> u;
  u.reserve(count);
  for (unsigned n = 0; n < count; ++n) {
    if (n < 2)
      u.emplace_back(n);
    else
      u.push_back(u[n - 1] + u[n - 2]);
  }
  return u;
}

}  // namespace swe
