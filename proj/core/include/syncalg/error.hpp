#ifndef SYNCALG_ERROR_HPP
#define SYNCALG_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace syncalg {

/// Input violates a structural precondition (bad index, duplicate label, ...).
class ValidationError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// An enumeration would exceed its configured ceiling.
class GuardError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed `.sync` text. `line()` is 1-based.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/// Interchange document does not match the expected schema.
class SchemaError : public std::runtime_error {
public:
  SchemaError(std::string key, const std::string& message)
      : std::runtime_error("\"" + key + "\": " + message), key_(std::move(key)) {}

  const std::string& key() const noexcept { return key_; }

private:
  std::string key_;
};

} // namespace syncalg

#endif // SYNCALG_ERROR_HPP
