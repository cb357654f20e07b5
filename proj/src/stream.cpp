#include "swe/stream.hpp"

#include <algorithm>
#include <stdexcept>

namespace swe {

std::string_view to_string(StreamSource s) {
  switch (s) {
    case StreamSource::FixedPoint: return "fixed-point";
    case StreamSource::Mechanical: return "mechanical";
    case StreamSource::Billiard: return "billiard";
    case StreamSource::MorphicImage: return "morphic-image";
    case StreamSource::Literal: return "literal";
  }
  return "unknown";
}

std::string_view WordStream::prefix_view(std::size_t length) {
  if (cache_.size() < length) producer_->extend(cache_, length);
  return std::string_view(cache_).substr(0, length);
}

Word WordStream::prefix(std::size_t length) {
  WordBuilder b;
  b.append(prefix_view(length));
  return std::move(b).build();
}

namespace {

class LiteralSource final : public WordSource {
 public:
  explicit LiteralSource(Word w) : word_(std::move(w)) {}
  void extend(std::string& buffer, std::size_t target) override {
    if (target > word_.size())
      throw BoundedOutput("literal word has only " + std::to_string(word_.size()) + " letters, " +
                          std::to_string(target) + " requested");
    buffer.assign(word_.digits());
  }

 private:
  Word word_;
};

class FixedPointSource final : public WordSource {
 public:
  FixedPointSource(const Morphism& f, Letter seed) : images_(f.images()), seed_(seed) {}

  void extend(std::string& buffer, std::size_t target) override {
    if (buffer.empty()) {
      buffer = images_[seed_].str();
      next_ = 1;
    }
    while (buffer.size() < target) {
      auto a = static_cast<std::size_t>(buffer[next_++] - '0');
      buffer += images_[a].digits();
    }
  }

 private:
  std::vector<Word> images_;
  Letter seed_;
  std::size_t next_ = 0;
};

class MechanicalSource final : public WordSource {
 public:
  MechanicalSource(SqrtNumber alpha, SqrtNumber rho)
      : alpha_(std::move(alpha)), value_(std::move(rho)), floor_(value_.floor()) {}

  void extend(std::string& buffer, std::size_t target) override {
    while (buffer.size() < target) {
      value_ += alpha_;
      Integer next = value_.floor();
      buffer.push_back(next == floor_ ? '0' : '1');
      floor_ = std::move(next);
    }
  }

 private:
  SqrtNumber alpha_;
  SqrtNumber value_;  // n·alpha + rho
  Integer floor_;
};

class MorphicImageSource final : public WordSource {
 public:
  MorphicImageSource(const Morphism& f, WordStream input, std::size_t factor)
      : f_(f), input_(std::move(input)), factor_(factor) {}

  void extend(std::string& buffer, std::size_t target) override {
    const std::size_t budget = factor_ * target;
    while (buffer.size() < target) {
      if (consumed_ >= budget)
        throw BoundedOutput("morphic image produced " + std::to_string(buffer.size()) + " letters from " +
                            std::to_string(consumed_) + " input letters, " + std::to_string(target) +
                            " requested");
      std::size_t chunk = std::max<std::size_t>(64, target - buffer.size());
      chunk = std::min(chunk, budget - consumed_);
      std::string_view in = input_.prefix_view(consumed_ + chunk);
      for (std::size_t i = consumed_; i < in.size(); ++i) {
        auto a = static_cast<std::size_t>(in[i] - '0');
        if (a >= f_.images().size())
          throw std::out_of_range("input letter " + std::string(1, in[i]) + " outside the morphism's domain");
        buffer += f_.images()[a].digits();
      }
      consumed_ += chunk;
    }
  }

 private:
  Morphism f_;
  WordStream input_;
  std::size_t factor_;
  std::size_t consumed_ = 0;
};

}  // namespace

WordStream literal_stream(Word w) {
  return WordStream(StreamSource::Literal, std::make_unique<LiteralSource>(std::move(w)));
}

WordStream fixed_point_stream(const Morphism& f, Letter seed) {
  if (seed >= f.domain_size()) throw std::invalid_argument("seed letter outside the morphism's domain");
  const Word& first = f.image(seed);
  if (first.size() < 2 || first[0] != seed)
    throw std::invalid_argument("f(" + std::string(1, to_digit(seed)) + ") = \"" + first.str() +
                                "\" must start with the seed and have length at least 2");
  LetterSet reached;
  reached.set(seed);
  std::vector<Letter> todo{seed};
  while (!todo.empty()) {
    Letter a = todo.back();
    todo.pop_back();
    if (a >= f.domain_size())
      throw std::invalid_argument("letter " + std::string(1, to_digit(a)) + " reachable from the seed has no image");
    if (f.image(a).empty())
      throw std::invalid_argument("letter " + std::string(1, to_digit(a)) + " reachable from the seed is erased");
    for (Letter b : f.image(a).letters())
      if (!reached.test(b)) {
        reached.set(b);
        todo.push_back(b);
      }
  }
  return WordStream(StreamSource::FixedPoint, std::make_unique<FixedPointSource>(f, seed));
}

WordStream fibonacci_stream() { return fixed_point_stream(generators::phi(), 0); }

WordStream mechanical_stream(const SqrtNumber& alpha, const SqrtNumber& rho) {
  if (alpha.sign() <= 0 || alpha >= SqrtNumber(1))
    throw std::domain_error("slope must satisfy 0 < alpha < 1, got " + alpha.to_string());
  if (rho.sign() < 0 || rho >= SqrtNumber(1))
    throw std::domain_error("intercept must satisfy 0 <= rho < 1, got " + rho.to_string());
  return WordStream(StreamSource::Mechanical, std::make_unique<MechanicalSource>(alpha, rho));
}

WordStream apply_stream(const Morphism& f, WordStream input, std::size_t pull_factor) {
  return WordStream(StreamSource::MorphicImage,
                    std::make_unique<MorphicImageSource>(f, std::move(input), pull_factor));
}

}  // namespace swe
