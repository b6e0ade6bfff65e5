#pragma once

#include <stdexcept>
#include <string>

namespace qnil {

/// Error categories. The CLI maps them to process exit codes:
/// config/precondition -> 2, numeric -> 3.
enum class ErrorKind { config, precondition, numeric };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace qnil
