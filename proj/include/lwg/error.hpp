#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lwg {

// Error categories double as CLI exit codes.
enum class ErrorKind { kUsage = 1, kInput = 2, kExternal = 3 };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Malformed input text. line() is 1-based; 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(ErrorKind::kInput,
              line == 0 ? message
                        : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class InputError : public Error {
 public:
  explicit InputError(const std::string& message)
      : Error(ErrorKind::kInput, message) {}
};

// Embedding service unreachable or returned something unusable.
class ProviderError : public Error {
 public:
  explicit ProviderError(const std::string& message)
      : Error(ErrorKind::kExternal, message) {}
};

}  // namespace lwg
