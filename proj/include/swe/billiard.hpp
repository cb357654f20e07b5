#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "swe/exactnum.hpp"
#include "swe/stream.hpp"

namespace swe {

// Half-line t·d + rho, t >= 0, in the unit cube tiling of R^3.
struct BilliardConfig {
  std::array<SqrtNumber, 3> direction;
  std::array<SqrtNumber, 3> intercept;
  // Also record the faces the starting point lies on (coordinates with
  // rho_i = 0 and d_i > 0) as an event at t = 0.
  bool include_start = false;

  // Throws std::invalid_argument unless every d_i >= 0, d != 0 and
  // 0 <= rho_i < 1.
  void validate() const;
};

struct CrossingEvent {
  SqrtNumber time;
  std::vector<Letter> faces;  // ascending
  friend bool operator==(const CrossingEvent&, const CrossingEvent&) = default;
};

// Crossing events in increasing time; simultaneous crossings are fused.
class EventStream {
 public:
  explicit EventStream(BilliardConfig c);
  CrossingEvent next();

 private:
  BilliardConfig config_;
  std::array<SqrtNumber, 3> step_;  // 1 / d_i
  std::array<SqrtNumber, 3> next_time_;
  std::array<bool, 3> active_{};
};

std::vector<CrossingEvent> events(const BilliardConfig& c, std::size_t count);

// Each event contributes its faces in ascending order.
WordStream billiard_word(const BilliardConfig& c);

enum class BilliardClass { Periodic, SturmianProjection, WSECandidate, Degenerate };

std::string_view to_string(BilliardClass c);

BilliardClass classify(const BilliardConfig& c);

}  // namespace swe
