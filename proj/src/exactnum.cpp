#include "swe/exactnum.hpp"

#include <cctype>
#include <cmath>
#include <numeric>
#include <ostream>
#include <sstream>

namespace swe {

namespace {

using Key = SqrtNumber::Key;

constexpr unsigned kInitialBits = 64;

// m = s^2 * b with b square-free. Trial division up to the cube root leaves a
// cofactor with at most two prime factors, which is either p^2 or square-free.
std::pair<Integer, Key> split_square(Key m) {
  Integer s = 1;
  Key b = 1;
  for (Key p = 2; p * p * p <= m; ++p) {
    while (m % (p * p) == 0) {
      m /= p * p;
      s *= p;
    }
    if (m % p == 0) {
      m /= p;
      b *= p;
    }
  }
  auto r = static_cast<Key>(std::sqrt(static_cast<long double>(m)));
  while (r * r > m) --r;
  while ((r + 1) * (r + 1) <= m) ++r;
  if (r * r == m)
    s *= r;
  else
    b *= m;
  return {s, b};
}

Key smallest_prime_factor(Key b) {
  for (Key p = 2; p * p <= b; ++p)
    if (b % p == 0) return p;
  return b;
}

// sqrt(a) * sqrt(b) = g * sqrt((a/g)(b/g)) for square-free a, b.
std::pair<Key, Key> multiply_keys(Key a, Key b) {
  Key g = std::gcd(a, b);
  Key c = 0;
  if (__builtin_mul_overflow(a / g, b / g, &c))
    throw std::overflow_error("square-root basis exceeds 64 bits");
  return {g, c};
}

// floor(sqrt(b) * 2^bits), memoised per thread.
const Integer& scaled_sqrt(Key b, unsigned bits) {
  thread_local std::map<std::pair<Key, unsigned>, Integer> cache;
  auto [it, inserted] = cache.try_emplace({b, bits});
  if (inserted) {
    Integer scaled = Integer(b) << (2 * bits);
    it->second = boost::multiprecision::sqrt(scaled);
  }
  return it->second;
}

}  // namespace

SqrtNumber::SqrtNumber(const Rational& q) {
  if (q != 0) coords_.emplace(1, q);
}

SqrtNumber SqrtNumber::sqrt(const Rational& q) {
  if (q < 0) throw std::domain_error("square root of a negative number");
  if (q == 0) return {};
  Integer num = boost::multiprecision::numerator(q);
  Integer den = boost::multiprecision::denominator(q);
  Integer m = num * den;  // sqrt(n/d) = sqrt(n*d)/d
  if (m > Integer(std::numeric_limits<Key>::max()))
    throw std::domain_error("square root argument too large");
  auto [s, b] = split_square(m.convert_to<Key>());
  SqrtNumber out;
  out.coords_.emplace(b, Rational(s, den));
  return out;
}

Rational SqrtNumber::coordinate(Key b) const {
  auto it = coords_.find(b);
  return it == coords_.end() ? Rational(0) : it->second;
}

bool SqrtNumber::is_rational() const {
  return coords_.empty() || (coords_.size() == 1 && coords_.begin()->first == 1);
}

Rational SqrtNumber::rational_value() const {
  if (!is_rational()) throw std::domain_error("value is irrational: " + to_string());
  return coordinate(1);
}

void SqrtNumber::add_term(Key b, const Rational& q) {
  if (q == 0) return;
  auto [it, inserted] = coords_.try_emplace(b, q);
  if (!inserted) {
    it->second += q;
    if (it->second == 0) coords_.erase(it);
  }
}

SqrtNumber SqrtNumber::operator-() const {
  SqrtNumber out = *this;
  for (auto& [b, q] : out.coords_) q = -q;
  return out;
}

SqrtNumber& SqrtNumber::operator+=(const SqrtNumber& y) {
  for (const auto& [b, q] : y.coords_) add_term(b, q);
  return *this;
}

SqrtNumber& SqrtNumber::operator-=(const SqrtNumber& y) {
  for (const auto& [b, q] : y.coords_) add_term(b, -q);
  return *this;
}

SqrtNumber& SqrtNumber::operator*=(const SqrtNumber& y) {
  SqrtNumber out;
  for (const auto& [a, p] : coords_) {
    for (const auto& [b, q] : y.coords_) {
      auto [g, c] = multiply_keys(a, b);
      out.add_term(c, p * q * g);
    }
  }
  coords_ = std::move(out.coords_);
  return *this;
}

// Writing y = A + B*sqrt(p) for a prime p dividing some key, with p absent
// from the keys of A and B: y * (A - B*sqrt(p)) = A^2 - p*B^2 has one prime
// fewer in its basis, so recursion reaches a rational.
SqrtNumber SqrtNumber::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (is_rational()) return SqrtNumber(Rational(1) / coordinate(1));
  Key p = 0;
  for (const auto& [b, q] : coords_) {
    if (b != 1) {
      p = smallest_prime_factor(b);
      break;
    }
  }
  SqrtNumber a, bpart;
  for (const auto& [b, q] : coords_) {
    if (b % p == 0)
      bpart.coords_.emplace(b / p, q);
    else
      a.coords_.emplace(b, q);
  }
  SqrtNumber conj = a;
  for (const auto& [b, q] : bpart.coords_) conj.add_term(b * p, -q);
  SqrtNumber norm = a * a - SqrtNumber(Rational(static_cast<long long>(p))) * bpart * bpart;
  return conj * norm.inverse();
}

SqrtNumber& SqrtNumber::operator/=(const SqrtNumber& y) { return *this *= y.inverse(); }

std::pair<Rational, Rational> SqrtNumber::enclose(unsigned bits) const {
  Rational lo = 0, hi = 0;
  const Rational scale = Rational(Integer(1) << bits);
  for (const auto& [b, q] : coords_) {
    if (b == 1) {
      lo += q;
      hi += q;
      continue;
    }
    const Integer& s = scaled_sqrt(b, bits);
    Rational below = q * Rational(s) / scale;
    Rational above = q * Rational(Integer(s + 1)) / scale;
    if (q > 0) {
      lo += below;
      hi += above;
    } else {
      lo += above;
      hi += below;
    }
  }
  return {lo, hi};
}

int SqrtNumber::sign() const {
  if (is_zero()) return 0;
  if (is_rational()) return coordinate(1) > 0 ? 1 : -1;
  for (unsigned bits = kInitialBits;; bits *= 2) {
    auto [lo, hi] = enclose(bits);
    if (lo > 0) return 1;
    if (hi < 0) return -1;
  }
}

Integer SqrtNumber::floor() const {
  if (is_rational()) return swe::floor(coordinate(1));
  for (unsigned bits = kInitialBits;; bits *= 2) {
    auto [lo, hi] = enclose(bits);
    Integer a = swe::floor(lo), b = swe::floor(hi);
    if (a == b) return a;
    if (hi - lo < 1) {
      // floor(x) is b or b - 1; decide exactly.
      return (*this - SqrtNumber(b)).sign() >= 0 ? b : Integer(b - 1);
    }
  }
}

double SqrtNumber::approx() const {
  double sum = 0;
  for (const auto& [b, q] : coords_) sum += q.convert_to<double>() * std::sqrt(static_cast<double>(b));
  return sum;
}

std::strong_ordering operator<=>(const SqrtNumber& x, const SqrtNumber& y) {
  int s = (x - y).sign();
  return s < 0 ? std::strong_ordering::less
               : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string SqrtNumber::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, q] : coords_) {
    Rational mag = q < 0 ? Rational(-q) : q;
    if (q < 0)
      os << '-';
    else if (!first)
      os << '+';
    first = false;
    if (b == 1) {
      os << mag;
    } else {
      if (mag != 1) os << mag << '*';
      os << "sqrt(" << b << ')';
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const SqrtNumber& x) { return os << x.to_string(); }

namespace {

class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) : text_(text) {}

  SqrtNumber parse_all() {
    SqrtNumber v = expression();
    skip_space();
    if (pos_ != text_.size()) fail("operator or end of input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& expected) const {
    std::string got = pos_ < text_.size() ? "'" + std::string(1, text_[pos_]) + "'" : "end of input";
    throw ParseError("in expression \"" + std::string(text_) + "\" at position " + std::to_string(pos_) +
                         ": expected " + expected + ", got " + got,
                     pos_);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("'") + c + "'");
  }

  SqrtNumber expression() {
    SqrtNumber v = term();
    for (;;) {
      if (accept('+'))
        v += term();
      else if (accept('-'))
        v -= term();
      else
        return v;
    }
  }

  SqrtNumber term() {
    SqrtNumber v = unary();
    for (;;) {
      if (accept('*')) {
        v *= unary();
      } else if (accept('/')) {
        std::size_t at = pos_;
        SqrtNumber d = unary();
        if (d.is_zero()) {
          pos_ = at;
          fail("non-zero divisor");
        }
        v /= d;
      } else {
        return v;
      }
    }
  }

  SqrtNumber unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return primary();
  }

  SqrtNumber primary() {
    skip_space();
    if (accept('(')) {
      SqrtNumber v = expression();
      expect(')');
      return v;
    }
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return SqrtNumber(Integer(std::string(text_.substr(start, pos_ - start))));
    }
    if (text_.substr(pos_).starts_with("sqrt")) {
      pos_ += 4;
      expect('(');
      std::size_t at = pos_;
      SqrtNumber arg = expression();
      if (!arg.is_rational() || arg.sign() < 0) {
        pos_ = at;
        fail("non-negative rational argument to sqrt");
      }
      expect(')');
      return SqrtNumber::sqrt(arg.rational_value());
    }
    fail("number, 'sqrt(' or '('");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

SqrtNumber parse_number(std::string_view text) { return ExpressionParser(text).parse_all(); }

std::vector<SqrtNumber> parse_number_list(std::string_view text) {
  std::vector<SqrtNumber> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      std::string_view item = text.substr(start, i - start);
      try {
        out.push_back(parse_number(item));
      } catch (const ParseError& e) {
        throw ParseError(e.what(), start + e.position());
      }
      start = i + 1;
    } else if (text[i] == '(') {
      ++depth;
    } else if (text[i] == ')') {
      --depth;
    }
  }
  return out;
}

}  // namespace swe
