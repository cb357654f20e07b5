#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "swe/analysis.hpp"
#include "swe/stream.hpp"

using namespace swe;

TEST_SUITE("word") {

TEST_CASE("erase") {
  CHECK(erase(Word(), 2) == Word());
  CHECK(erase(Word("0210020210"), 2) == Word("0100010"));
  CHECK(erase(Word("012001"), 2) == Word("01001"));
  CHECK(erase(Word("012001"), 2) == apply(power(generators::phi1(), 3), Word("0")));
}

TEST_CASE("erase matches oracle and is idempotent") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> letter(0, 2), len(0, 40);
  for (int k = 0; k < 500; ++k) {
    std::string s;
    for (int n = len(rng); n-- > 0;) s += char('0' + letter(rng));
    Word w(s);
    for (Letter i = 0; i < 3; ++i) {
      Word e = erase(w, i);
      CHECK(e.str() == oracle::erase(s, char('0' + i)));
      CHECK(e.size() == w.size() - w.count(i));
      CHECK(erase(e, i) == e);
    }
  }
}

TEST_CASE("words reject foreign letters") {
  CHECK_THROWS_AS(Word("0130"), std::invalid_argument);
  CHECK_THROWS_AS(Word("01a"), std::invalid_argument);
}

TEST_CASE("fibonacci stream") {
  auto f = fibonacci_stream();
  CHECK(f.prefix(1) == Word("0"));
  CHECK(f.prefix(13) == Word("0100101001001"));
  CHECK(f.prefix(10000).str() == oracle::fibonacci(10000));
  // prefix(|F_n|) = phi^n(0), |F_{n+2}| = |F_{n+1}| + |F_n|
  Word fn("0");
  std::vector<std::size_t> lengths;
  for (unsigned n = 0; n <= 20; ++n) {
    CHECK(f.prefix(fn.size()) == fn);
    lengths.push_back(fn.size());
    fn = apply(generators::phi(), fn);
  }
  for (std::size_t n = 0; n + 2 < lengths.size(); ++n) CHECK(lengths[n + 2] == lengths[n + 1] + lengths[n]);
}

TEST_CASE("fibonacci numbers") {
  auto u = fibonacci_numbers(200);
  CHECK(u[0] == 0);
  CHECK(u[1] == 1);
  CHECK(u[10] == 55);
  for (std::size_t n = 1; n + 1 < u.size(); ++n) {
    Integer lhs = u[n + 1] * u[n - 1] - u[n] * u[n];
    CHECK(lhs == (n % 2 == 0 ? 1 : -1));
  }
  CHECK(fibonacci_number(100) == Integer("354224848179261915075"));
}

TEST_CASE("fixed point stream") {
  auto a = fixed_point_stream(generators::phi(), 0);
  CHECK(a.prefix(500) == fibonacci_stream().prefix(500));
  auto b = fixed_point_stream(parse_morphism("0=010,1=01"), 0);
  CHECK(b.prefix(13) == Word("0100101001001"));
  CHECK_THROWS_AS(fixed_point_stream(generators::phi(), 1), std::invalid_argument);
  CHECK_THROWS_AS(fixed_point_stream(parse_morphism("0=0,1=1"), 0), std::invalid_argument);
  CHECK_THROWS_AS(fixed_point_stream(parse_morphism("0=01,1="), 0), std::invalid_argument);
}

TEST_CASE("mechanical stream") {
  const SqrtNumber golden = parse_number("(3-sqrt(5))/2");
  CHECK(mechanical_stream(Rational(1, 2), 0).prefix(8) == Word("01010101"));
  CHECK(mechanical_stream(golden, golden).prefix(10000).str() == oracle::fibonacci(10000));
  Word w = mechanical_stream(golden, 0).prefix(2000);
  auto p = complexity(w, 20);
  for (std::size_t n = 1; n <= 20; ++n) CHECK(p.at(n) == n + 1);
  CHECK_THROWS_AS(mechanical_stream(1, 0), std::domain_error);
  CHECK_THROWS_AS(mechanical_stream(golden, 1), std::domain_error);
  CHECK_THROWS_AS(mechanical_stream(golden, -golden), std::domain_error);
}

TEST_CASE("apply stream") {
  const Morphism g = parse_morphism("0=02,1=10,2=");
  CHECK(apply_stream(g, fibonacci_stream()).prefix(40) == Word("0210020210021002021002021002100202100210"));
  CHECK(apply_stream(Morphism::identity(2), fibonacci_stream()).prefix(300) == fibonacci_stream().prefix(300));
  CHECK_THROWS_AS(apply_stream(parse_morphism("0=,1="), fibonacci_stream()).prefix(5), BoundedOutput);
  CHECK_THROWS_AS(literal_stream(Word("01")).prefix(3), BoundedOutput);
  auto s = apply_stream(g, fibonacci_stream());
  Word small = s.prefix(100);
  CHECK(s.prefix(1000).starts_with(small));
}

TEST_CASE("complexity") {
  auto c = complexity(Word("0000"), 2);
  CHECK(c.at(1) == 1);
  CHECK(c.at(2) == 1);
  auto f = complexity(fibonacci_stream().prefix(200), 3);
  CHECK(f.counts == std::vector<std::size_t>{2, 3, 4});
  CHECK(complexity(Word("00110"), 2).at(2) == 4);
  CHECK_THROWS_AS(complexity(Word("01"), 3), std::out_of_range);
  CHECK_THROWS_AS(complexity(Word("01"), 0), std::out_of_range);
}

TEST_CASE("complexity and balance match oracles") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> letter(0, 2), len(1, 60);
  for (int k = 0; k < 200; ++k) {
    std::string s;
    for (int n = len(rng); n-- > 0;) s += char('0' + letter(rng) % (k % 2 ? 2 : 3));
    Word w(s);
    const std::size_t max_n = std::min<std::size_t>(s.size(), 12);
    auto p = complexity(w, max_n);
    auto b = balance_order(w, max_n);
    for (std::size_t n = 1; n <= max_n; ++n) {
      CHECK(p.at(n) == oracle::factor_count(s, n));
      CHECK(b.at(n) == oracle::imbalance(s, n));
      if (n < max_n) CHECK(p.at(n + 1) <= 3 * p.at(n));
    }
  }
}

TEST_CASE("balance") {
  CHECK(balance_order(Word("0011"), 2).order == 2);
  Word f = fibonacci_stream().prefix(10000);
  CHECK(balance_order(f, 100).order == 1);
  Word g = apply_stream(parse_morphism("0=02,1=10,2="), fibonacci_stream()).prefix(10000);
  CHECK(balance_order(g, 100).order == 2);
}

TEST_CASE("default max n") {
  CHECK(default_max_n(10000) == 64);
  CHECK(default_max_n(100) == 10);
  CHECK(default_max_n(99) == 9);
  CHECK(default_max_n(1) == 1);
}

TEST_CASE("period scan") {
  CHECK(period_scan(Word("01010101")) == 2);
  CHECK(period_scan(fibonacci_stream().prefix(1000)) == std::nullopt);
  CHECK(period_scan(Word("0")) == std::nullopt);
  CHECK(period_scan(Word("2220101010101")) == 2);
}

TEST_CASE("sturmian verdict") {
  auto r = sturmian_verdict(Word("00110"), 2);
  CHECK(r.outcome == Outcome::Refuted);
  CHECK(r.detail == "P(2)=4");
  std::string alt;
  for (int i = 0; i < 250; ++i) alt += "01";
  CHECK(sturmian_verdict(Word(alt), 30).outcome == Outcome::Consistent);
  auto f = sturmian_verdict(fibonacci_stream().prefix(10000), 50);
  CHECK(f.outcome == Outcome::Consistent);
  CHECK(f.n == 50);
  auto imb = sturmian_verdict(Word("0011"), 2);
  CHECK(imb.outcome == Outcome::Refuted);
  CHECK(imb.detail == "imbalance(2)=2");
  CHECK_THROWS_AS(sturmian_verdict(Word("012"), 2), std::invalid_argument);
}

TEST_CASE("wse verdict") {
  Word g = apply_stream(parse_morphism("0=02,1=10,2="), fibonacci_stream()).prefix(10000);
  auto v = wse_verdict(g, 30);
  CHECK(v.outcome == Outcome::Consistent);
  for (const auto& e : v.erasures) CHECK(e.verdict.outcome == Outcome::Consistent);

  Word fh = apply_stream(parse_morphism("0=0012,1=10,2="), fibonacci_stream()).prefix(10000);
  CHECK(fh.prefix(6) == Word("001210"));
  auto r = wse_verdict(fh, 30);
  CHECK(r.outcome == Outcome::Refuted);
  CHECK(r.erasures[2].verdict.outcome == Outcome::Refuted);
  CHECK(r.erasures[2].verdict.detail == "P(2)=4");

  std::string rep;
  for (int i = 0; i < 300; ++i) rep += "012";
  auto p = wse_verdict(Word(rep), 30);
  CHECK(p.outcome == Outcome::Consistent);
  for (const auto& e : p.erasures) CHECK(e.period == 2);

  CHECK_THROWS_AS(wse_verdict(Word("0000"), 2), std::invalid_argument);
}

}
