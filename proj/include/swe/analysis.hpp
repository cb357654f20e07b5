#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "swe/word.hpp"

namespace swe {

// P(n) for 1 <= n <= max_n, counted on a finite prefix. counts[n-1] = P(n).
struct ComplexityProfile {
  std::size_t max_n = 0;
  std::size_t prefix_length = 0;
  std::vector<std::size_t> counts;

  std::size_t at(std::size_t n) const { return counts.at(n - 1); }
  friend bool operator==(const ComplexityProfile&, const ComplexityProfile&) = default;
};

// imbalance[n-1] = max over letters a of (max |u|_a - min |u|_a) over the
// length-n factors u of the prefix; order = max over n. The order is a lower
// bound for the balance order of any infinite extension.
struct BalanceProfile {
  std::size_t max_n = 0;
  std::vector<std::size_t> imbalance;
  std::size_t order = 0;

  std::size_t at(std::size_t n) const { return imbalance.at(n - 1); }
  friend bool operator==(const BalanceProfile&, const BalanceProfile&) = default;
};

// min(64, floor(sqrt(L)))
std::size_t default_max_n(std::size_t prefix_length);

// Throws std::out_of_range unless 1 <= max_n <= |prefix|.
ComplexityProfile complexity(const Word& prefix, std::size_t max_n);
BalanceProfile balance_order(const Word& prefix, std::size_t max_n);

// Least p <= |w|/2 such that w = u·v·v·...·v' with |v| = p, |u| <= |w|/4 and
// at least two full copies of v after u. A heuristic: nullopt does not prove
// aperiodicity.
std::optional<std::size_t> period_scan(const Word& prefix);

enum class Outcome { Consistent, Refuted };

// A finite prefix can refute Sturmian-ness but never prove it.
//   Refuted:    n is the window length of the witness; detail e.g. "P(2)=4"
//               or "imbalance(3)=2".
//   Consistent: n is the largest length with P(m) = m+1 for every m <= n
//               (full coverage); detail is a coverage note.
struct SturmianVerdict {
  Outcome outcome = Outcome::Consistent;
  std::size_t n = 0;
  std::string detail;

  friend bool operator==(const SturmianVerdict&, const SturmianVerdict&) = default;
};

// Throws std::invalid_argument if P(1) > 2.
SturmianVerdict sturmian_verdict(const ComplexityProfile& profile, const BalanceProfile& balance);
// Convenience: both profiles from the same prefix.
SturmianVerdict sturmian_verdict(const Word& prefix, std::size_t max_n);

struct ErasureReport {
  Letter erased = 0;
  std::size_t erased_length = 0;
  SturmianVerdict verdict;
  std::optional<std::size_t> period;  // period_scan of the erased prefix, if <= max_n

  friend bool operator==(const ErasureReport&, const ErasureReport&) = default;
};

struct WseVerdict {
  Outcome outcome = Outcome::Consistent;
  std::array<ErasureReport, kAlphabetSize> erasures{};

  friend bool operator==(const WseVerdict&, const WseVerdict&) = default;
};

// Erases each letter in turn and analyses the result; max_n is clamped to
// each erased prefix's length. Throws std::invalid_argument if some erasure
// is empty.
WseVerdict wse_verdict(const Word& prefix, std::size_t max_n);

std::string_view to_string(Outcome o);

}  // namespace swe
