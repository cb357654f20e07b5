#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace swe {

// Malformed textual input; position is a 0-based offset into the text.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// A stream could not produce the requested prefix length.
class BoundedOutput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace swe
