#include "ncode/error.hpp"

namespace ncode {

namespace {

std::string with_line(std::size_t line, const std::string& message) {
  if (line == 0) {
    return message;
  }
  return "line " + std::to_string(line) + ": " + message;
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& message)
    : Error(with_line(line, message)), line_(line) {}

}  // namespace ncode
