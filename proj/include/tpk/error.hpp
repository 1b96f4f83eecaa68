#pragma once

#include <stdexcept>
#include <string>

namespace tpk {

/// Thrown when a value violates a model invariant (bad strand index,
/// mismatched bridge counts, malformed matching).
class InvalidInput : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A move whose pattern does not match at the requested position.
class MoveError : public std::runtime_error {
public:
  MoveError(std::size_t position, const std::string& what)
      : std::runtime_error("move at position " + std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

/// Trisection parameters cannot be read off because some sector link is
/// not certified to be an unlink.
class UnknownParameters : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// The coloring or diagram does not satisfy the hypotheses needed to
/// compute trisection parameters.
class PreconditionFailure : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace tpk
