#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hforest {

/// Syntax error in an ordinal, term, or Q-order document. `position` is the
/// byte offset into the input where parsing failed.
class parse_error : public std::runtime_error {
public:
  parse_error(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// Semantic violation: undeclared label, level violation, malformed Q-order,
/// resource cap exceeded. Distinct from parse_error so callers can map the
/// two onto different exit codes.
class validation_error : public std::runtime_error {
public:
  explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hforest
