#ifndef KDTLI_ERRORS_HPP
#define KDTLI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kdtli {

// Argument outside an operation's domain (non-positive mass, negative order, ...).
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Malformed input document; the message names the offending field.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Structurally valid input that breaks a data invariant.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Fit minimum pinned at a bracket edge; widen the bracket.
class BracketError : public std::runtime_error {
 public:
  explicit BracketError(const std::string& msg) : std::runtime_error(msg) {}
};

// Simulation configuration cannot resolve the requested problem.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Numerical-quality gate tripped (aliasing, energy drift).
class NumericalQualityError : public std::runtime_error {
 public:
  explicit NumericalQualityError(const std::string& msg) : std::runtime_error(msg) {}
};

// Signal carries no usable information (all-zero counts, ...).
class DegenerateSignalError : public std::runtime_error {
 public:
  explicit DegenerateSignalError(const std::string& msg) : std::runtime_error(msg) {}
};

// Requested analysis is undefined for this input (e.g. envelope fit without error bars).
class NotApplicableError : public std::runtime_error {
 public:
  explicit NotApplicableError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace kdtli

#endif
