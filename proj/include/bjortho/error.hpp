#ifndef BJORTHO_ERROR_HPP
#define BJORTHO_ERROR_HPP

#include <stdexcept>
#include <string>

namespace bjortho {

/// Raised on malformed inputs: dimension mismatch, zero vectors where a
/// nonzero one is required, eps outside [0,1), invalid norm descriptions.
class InputError : public std::invalid_argument {
public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when a numerical procedure cannot certify its result.
class NumericError : public std::runtime_error {
public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when an operation requires a smooth point and is given a corner.
class NotSmoothError : public InputError {
public:
  explicit NotSmoothError(const std::string& what) : InputError(what) {}
};

} // namespace bjortho

#endif // BJORTHO_ERROR_HPP
