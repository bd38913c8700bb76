#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace svb {

// Base for every domain error raised by the library: malformed input, a
// generator index outside the strand range, or a value outside an
// operation's domain.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace svb
