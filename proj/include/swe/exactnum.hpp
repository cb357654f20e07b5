#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "swe/errors.hpp"
#include "swe/numeric.hpp"

namespace swe {

// Exact real numbers of the form sum_b q_b * sqrt(b), b square-free, q_b
// rational. Zero coordinates are never stored, so a value is zero iff its
// coordinate map is empty (square roots of distinct square-free integers are
// linearly independent over Q).
//
// Comparison and floor are decided exactly: rational enclosures of each
// sqrt(b) are refined (64 bits, then doubling) until the enclosure of the
// sum excludes the decision boundary.
class SqrtNumber {
 public:
  using Key = std::uint64_t;

  SqrtNumber() = default;
  SqrtNumber(long long n) : SqrtNumber(Rational(n)) {}  // NOLINT: numeric literal convenience
  SqrtNumber(int n) : SqrtNumber(Rational(n)) {}        // NOLINT
  SqrtNumber(const Integer& n) : SqrtNumber(Rational(n)) {}  // NOLINT
  SqrtNumber(const Rational& q);  // NOLINT

  // sqrt(q) for a non-negative rational q; throws std::domain_error if q < 0.
  static SqrtNumber sqrt(const Rational& q);

  const std::map<Key, Rational>& coordinates() const { return coords_; }
  Rational coordinate(Key b) const;

  bool is_zero() const { return coords_.empty(); }
  bool is_rational() const;
  // Throws std::domain_error unless is_rational().
  Rational rational_value() const;

  int sign() const;
  Integer floor() const;
  // Rational [lo, hi] containing the value, each sqrt approximated to `bits`.
  std::pair<Rational, Rational> enclose(unsigned bits) const;
  double approx() const;

  // Canonical coordinate form, e.g. "3/2-1/2*sqrt(5)"; parse_number reads it back.
  std::string to_string() const;

  SqrtNumber operator-() const;
  SqrtNumber& operator+=(const SqrtNumber& y);
  SqrtNumber& operator-=(const SqrtNumber& y);
  SqrtNumber& operator*=(const SqrtNumber& y);
  // Throws std::domain_error on division by zero.
  SqrtNumber& operator/=(const SqrtNumber& y);

  friend SqrtNumber operator+(SqrtNumber x, const SqrtNumber& y) { return x += y; }
  friend SqrtNumber operator-(SqrtNumber x, const SqrtNumber& y) { return x -= y; }
  friend SqrtNumber operator*(SqrtNumber x, const SqrtNumber& y) { return x *= y; }
  friend SqrtNumber operator/(SqrtNumber x, const SqrtNumber& y) { return x /= y; }

  friend bool operator==(const SqrtNumber& x, const SqrtNumber& y) { return x.coords_ == y.coords_; }
  friend std::strong_ordering operator<=>(const SqrtNumber& x, const SqrtNumber& y);

  SqrtNumber inverse() const;

 private:
  void add_term(Key b, const Rational& q);

  std::map<Key, Rational> coords_;
};

std::ostream& operator<<(std::ostream& os, const SqrtNumber& x);

// Grammar: integers, p/q, sqrt(e), binary + - * /, unary -, parentheses.
// Example: "(3-sqrt(5))/2".
SqrtNumber parse_number(std::string_view text);
// Comma-separated list of expressions, e.g. "1,sqrt(2),sqrt(3)".
std::vector<SqrtNumber> parse_number_list(std::string_view text);

}  // namespace swe
