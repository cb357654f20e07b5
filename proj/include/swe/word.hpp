#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "swe/numeric.hpp"

namespace swe {

using Letter = std::uint8_t;

// A3 = {0,1,2}; A2 = {0,1} is the binary sub-alphabet.
inline constexpr int kAlphabetSize = 3;

inline constexpr char to_digit(Letter a) { return static_cast<char>('0' + a); }

// Finite word over A3, stored as its digit string ("0120..."). The empty
// word is the default-constructed value.
class Word {
 public:
  Word() = default;
  // Throws std::invalid_argument on any character outside '0'..'2'.
  explicit Word(std::string_view digits);

  static Word from_letters(const std::vector<Letter>& letters);

  std::size_t size() const { return digits_.size(); }
  bool empty() const { return digits_.empty(); }
  Letter operator[](std::size_t i) const { return static_cast<Letter>(digits_[i] - '0'); }

  std::string_view digits() const { return digits_; }
  const std::string& str() const { return digits_; }

  // |w|_a
  std::size_t count(Letter a) const;

  Word prefix(std::size_t n) const;
  Word suffix(std::size_t n) const;
  Word substr(std::size_t pos, std::size_t n) const;
  bool starts_with(const Word& u) const;
  bool ends_with(const Word& u) const;
  // Letters that occur, ascending.
  std::vector<Letter> letters() const;

  void push_back(Letter a) { digits_.push_back(to_digit(a)); }
  Word& operator+=(const Word& other) {
    digits_ += other.digits_;
    return *this;
  }
  friend Word operator+(Word a, const Word& b) { return a += b; }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    return a.digits_ <=> b.digits_;
  }

 private:
  struct Unchecked {};
  Word(std::string digits, Unchecked) : digits_(std::move(digits)) {}
  friend class WordBuilder;

  std::string digits_;
};

std::ostream& operator<<(std::ostream& os, const Word& w);

// Appends raw, already-validated digits; used by generators that produce
// long words letter by letter.
class WordBuilder {
 public:
  void push_back(Letter a) { buf_.push_back(to_digit(a)); }
  void append(std::string_view digits) { buf_.append(digits); }
  std::size_t size() const { return buf_.size(); }
  Word build() && { return Word(std::move(buf_), Word::Unchecked{}); }

 private:
  std::string buf_;
};

// pi_i: deletes every occurrence of letter i.
Word erase(const Word& w, Letter i);

// Fibonacci numbers u_0 = 0, u_1 = 1, u_{n+1} = u_n + u_{n-1}.
Integer fibonacci_number(unsigned n);
std::vector<Integer> fibonacci_numbers(unsigned count);

}  // namespace swe
