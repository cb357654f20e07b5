#include "swe/billiard.hpp"

#include <stdexcept>

namespace swe {

void BilliardConfig::validate() const {
  bool moving = false;
  for (int i = 0; i < 3; ++i) {
    const int s = direction[i].sign();
    if (s < 0) throw std::invalid_argument("direction d" + std::to_string(i) + " = " + direction[i].to_string() + " is negative");
    moving = moving || s > 0;
    if (intercept[i].sign() < 0 || intercept[i] >= SqrtNumber(1))
      throw std::invalid_argument("intercept rho" + std::to_string(i) + " = " + intercept[i].to_string() +
                                  " is outside [0,1)");
  }
  if (!moving) throw std::invalid_argument("direction is the zero vector");
}

EventStream::EventStream(BilliardConfig c) : config_(std::move(c)) {
  config_.validate();
  for (std::size_t i = 0; i < 3; ++i) {
    if (config_.direction[i].is_zero()) continue;
    active_[i] = true;
    step_[i] = config_.direction[i].inverse();
    const bool at_face = config_.intercept[i].is_zero();
    const SqrtNumber m = (at_face && config_.include_start) ? 0 : 1;
    next_time_[i] = (m - config_.intercept[i]) * step_[i];
  }
}

CrossingEvent EventStream::next() {
  CrossingEvent e;
  for (std::size_t i = 0; i < 3; ++i) {
    if (!active_[i]) continue;
    if (e.faces.empty()) {
      e.time = next_time_[i];
      e.faces.push_back(static_cast<Letter>(i));
    } else if (next_time_[i] == e.time) {
      e.faces.push_back(static_cast<Letter>(i));
    } else if (next_time_[i] < e.time) {
      e.time = next_time_[i];
      e.faces.assign(1, static_cast<Letter>(i));
    }
  }
  for (Letter i : e.faces) next_time_[i] += step_[i];
  return e;
}

std::vector<CrossingEvent> events(const BilliardConfig& c, std::size_t count) {
  EventStream s(c);
  std::vector<CrossingEvent> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(s.next());
  return out;
}

namespace {

class BilliardSource final : public WordSource {
 public:
  explicit BilliardSource(BilliardConfig c) : events_(std::move(c)) {}
  void extend(std::string& buffer, std::size_t target) override {
    while (buffer.size() < target)
      for (Letter a : events_.next().faces) buffer.push_back(to_digit(a));
  }

 private:
  EventStream events_;
};

}  // namespace

WordStream billiard_word(const BilliardConfig& c) {
  return WordStream(StreamSource::Billiard, std::make_unique<BilliardSource>(c));
}

std::string_view to_string(BilliardClass c) {
  switch (c) {
    case BilliardClass::Periodic: return "Periodic";
    case BilliardClass::SturmianProjection: return "SturmianProjection";
    case BilliardClass::WSECandidate: return "WSECandidate";
    case BilliardClass::Degenerate: return "Degenerate";
  }
  return "unknown";
}

BilliardClass classify(const BilliardConfig& c) {
  c.validate();
  std::vector<const SqrtNumber*> positive;
  for (const auto& d : c.direction)
    if (!d.is_zero()) positive.push_back(&d);
  if (positive.size() < 2) return BilliardClass::Degenerate;

  int rational = 0, pairs = 0;
  for (std::size_t a = 0; a < positive.size(); ++a)
    for (std::size_t b = a + 1; b < positive.size(); ++b, ++pairs)
      if ((*positive[a] / *positive[b]).is_rational()) ++rational;

  if (rational == pairs) return BilliardClass::Periodic;
  if (positive.size() == 2) return BilliardClass::SturmianProjection;
  if (rational == 0) return BilliardClass::WSECandidate;
  return BilliardClass::Degenerate;
}

}  // namespace swe
