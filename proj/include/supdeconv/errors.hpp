#ifndef SUPDECONV_ERRORS_HPP
#define SUPDECONV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace supdeconv {

// Thrown when 1/(mu h^lambda) exceeds the double-precision exponent budget.
class OverflowGuardError : public std::runtime_error {
 public:
  explicit OverflowGuardError(const std::string& what) : std::runtime_error(what) {}
};

// Theorem-1 paths require lambda == 2.
class TheoremInapplicableError : public std::runtime_error {
 public:
  explicit TheoremInapplicableError(const std::string& what) : std::runtime_error(what) {}
};

class GridTooCoarseError : public std::runtime_error {
 public:
  explicit GridTooCoarseError(const std::string& what) : std::runtime_error(what) {}
};

class QuadratureError : public std::runtime_error {
 public:
  explicit QuadratureError(const std::string& what) : std::runtime_error(what) {}
};

class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace supdeconv

#endif  // SUPDECONV_ERRORS_HPP
