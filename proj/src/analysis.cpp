#include "swe/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string_view>
#include <unordered_set>

namespace swe {

std::size_t default_max_n(std::size_t prefix_length) {
  auto root = static_cast<std::size_t>(std::sqrt(static_cast<double>(prefix_length)));
  while (root * root > prefix_length) --root;
  while ((root + 1) * (root + 1) <= prefix_length) ++root;
  return std::min<std::size_t>(64, root);
}

namespace {

void check_range(const Word& prefix, std::size_t max_n) {
  if (max_n < 1 || max_n > prefix.size())
    throw std::out_of_range("max_n = " + std::to_string(max_n) + " must lie in [1, " +
                            std::to_string(prefix.size()) + "]");
}

}  // namespace

ComplexityProfile complexity(const Word& prefix, std::size_t max_n) {
  check_range(prefix, max_n);
  ComplexityProfile p;
  p.max_n = max_n;
  p.prefix_length = prefix.size();
  std::string_view s = prefix.digits();
  std::unordered_set<std::string_view> seen;
  for (std::size_t n = 1; n <= max_n; ++n) {
    seen.clear();
    for (std::size_t i = 0; i + n <= s.size(); ++i) seen.insert(s.substr(i, n));
    p.counts.push_back(seen.size());
  }
  return p;
}

BalanceProfile balance_order(const Word& prefix, std::size_t max_n) {
  check_range(prefix, max_n);
  BalanceProfile b;
  b.max_n = max_n;
  const std::size_t len = prefix.size();
  for (std::size_t n = 1; n <= max_n; ++n) {
    std::size_t worst = 0;
    for (Letter a = 0; a < kAlphabetSize; ++a) {
      std::size_t count = 0;
      for (std::size_t i = 0; i < n; ++i) count += prefix[i] == a;
      std::size_t lo = count, hi = count;
      for (std::size_t i = n; i < len; ++i) {
        count += prefix[i] == a;
        count -= prefix[i - n] == a;
        lo = std::min(lo, count);
        hi = std::max(hi, count);
      }
      worst = std::max(worst, hi - lo);
    }
    b.imbalance.push_back(worst);
    b.order = std::max(b.order, worst);
  }
  return b;
}

std::optional<std::size_t> period_scan(const Word& prefix) {
  const std::size_t len = prefix.size();
  std::string_view s = prefix.digits();
  for (std::size_t p = 1; p <= len / 2; ++p) {
    // smallest start from which the suffix is p-periodic
    std::size_t start = 0;
    for (std::size_t i = len - p; i-- > 0;) {
      if (s[i] != s[i + p]) {
        start = i + 1;
        break;
      }
    }
    if (start <= len / 4 && len - start >= 2 * p) return p;
  }
  return std::nullopt;
}

SturmianVerdict sturmian_verdict(const ComplexityProfile& profile, const BalanceProfile& balance) {
  if (!profile.counts.empty() && profile.at(1) > 2)
    throw std::invalid_argument("Sturmian analysis needs a word over two letters, found " +
                                std::to_string(profile.at(1)));
  const std::size_t top = std::min(profile.max_n, balance.max_n);
  for (std::size_t n = 1; n <= top; ++n) {
    if (profile.at(n) > n + 1)
      return {Outcome::Refuted, n, "P(" + std::to_string(n) + ")=" + std::to_string(profile.at(n))};
    if (balance.at(n) >= 2)
      return {Outcome::Refuted, n,
              "imbalance(" + std::to_string(n) + ")=" + std::to_string(balance.at(n))};
  }
  std::size_t covered = 0;
  while (covered < top && profile.at(covered + 1) == covered + 2) ++covered;
  std::string note = "P(n) <= n+1 and 1-balanced for n <= " + std::to_string(top) +
                     "; full complexity n+1 observed for n <= " + std::to_string(covered) +
                     "; a finite prefix cannot prove Sturmian-ness";
  return {Outcome::Consistent, covered, std::move(note)};
}

SturmianVerdict sturmian_verdict(const Word& prefix, std::size_t max_n) {
  return sturmian_verdict(complexity(prefix, max_n), balance_order(prefix, max_n));
}

WseVerdict wse_verdict(const Word& prefix, std::size_t max_n) {
  WseVerdict v;
  for (Letter i = 0; i < kAlphabetSize; ++i) {
    Word erased = erase(prefix, i);
    if (erased.empty())
      throw std::invalid_argument("erasing letter " + std::string(1, to_digit(i)) + " leaves the empty word");
    ErasureReport& r = v.erasures[i];
    r.erased = i;
    r.erased_length = erased.size();
    r.verdict = sturmian_verdict(erased, std::min(max_n, erased.size()));
    if (auto p = period_scan(erased); p && *p <= max_n) r.period = p;
    if (r.verdict.outcome == Outcome::Refuted) v.outcome = Outcome::Refuted;
  }
  return v;
}

std::string_view to_string(Outcome o) { return o == Outcome::Refuted ? "Refuted" : "Consistent"; }

}  // namespace swe
