#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

#include "swe/errors.hpp"
#include "swe/exactnum.hpp"
#include "swe/morphism.hpp"
#include "swe/word.hpp"

namespace swe {

enum class StreamSource { FixedPoint, Mechanical, Billiard, MorphicImage, Literal };

std::string_view to_string(StreamSource s);

// Producer behind a WordStream. extend() appends digits to `buffer` until it
// holds at least `target` letters, or throws BoundedOutput.
class WordSource {
 public:
  virtual ~WordSource() = default;
  virtual void extend(std::string& buffer, std::size_t target) = 0;
};

// Lazily extended prefix of an infinite word. prefix(L) is always a prefix of
// prefix(L') for L <= L'. Not thread-safe: extending mutates the cache.
class WordStream {
 public:
  WordStream(StreamSource source, std::unique_ptr<WordSource> producer)
      : source_(source), producer_(std::move(producer)) {}

  Word prefix(std::size_t length);
  // View into the internal cache; invalidated by the next extension.
  std::string_view prefix_view(std::size_t length);

  StreamSource source() const { return source_; }

 private:
  StreamSource source_;
  std::unique_ptr<WordSource> producer_;
  std::string cache_;
};

// A finite word as a stream; asking for more than its length is BoundedOutput.
WordStream literal_stream(Word w);

// Fixed point of f starting with `seed`. Requires f(seed) = seed·u with u
// non-empty and f non-erasing on every letter reachable from seed; throws
// std::invalid_argument otherwise.
WordStream fixed_point_stream(const Morphism& f, Letter seed);

// The Fibonacci word, fixed point of phi: 0->01, 1->0.
WordStream fibonacci_stream();

// s(n) = floor((n+1)·alpha + rho) - floor(n·alpha + rho), exact. Requires
// 0 < alpha < 1 and 0 <= rho < 1 (std::domain_error otherwise).
WordStream mechanical_stream(const SqrtNumber& alpha, const SqrtNumber& rho);

inline constexpr std::size_t kDefaultPullFactor = 64;

// f applied to a stream. Fails with BoundedOutput when pulling
// pull_factor·L input letters yields fewer than L output letters.
WordStream apply_stream(const Morphism& f, WordStream input,
                        std::size_t pull_factor = kDefaultPullFactor);

}  // namespace swe
