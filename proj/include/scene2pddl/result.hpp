#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace scene2pddl {

struct SourceLoc {
  int line = 0;  // 1-based, 0 = unknown
  int col = 0;

  friend bool operator==(const SourceLoc&, const SourceLoc&) = default;
};

enum class Severity { kWarning, kError };

/// One diagnostic. `code` is a stable machine-readable identifier
/// (e.g. "ARITY_MISMATCH"); `message` is for humans.
struct Issue {
  Severity severity = Severity::kError;
  std::string code;
  std::string message;
  SourceLoc loc;
};

std::string format_issue(const Issue& issue, const std::string& file = "");

struct Error {
  std::string code;
  std::string message;
  SourceLoc loc;
};

/// Value-or-error result. Used instead of exceptions on all paths that
/// consume untrusted input (model output, files, fuzzed bytes).
template <typename T>
class Result {
 public:
  Result(T value) : value_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
  Result(Error error) : error_(std::move(error)) {}  // NOLINT(google-explicit-constructor)

  bool ok() const { return value_.has_value(); }
  explicit operator bool() const { return ok(); }

  const T& value() const& { return *value_; }
  T& value() & { return *value_; }
  T&& take() { return std::move(*value_); }

  const Error& error() const { return *error_; }

 private:
  std::optional<T> value_;
  std::optional<Error> error_;
};

template <>
class Result<void> {
 public:
  Result() = default;
  Result(Error error) : error_(std::move(error)) {}  // NOLINT(google-explicit-constructor)

  bool ok() const { return !error_.has_value(); }
  explicit operator bool() const { return ok(); }
  const Error& error() const { return *error_; }

 private:
  std::optional<Error> error_;
};

template <typename T>
Result<T> fail(std::string code, std::string message, SourceLoc loc = {}) {
  return Result<T>(Error{std::move(code), std::move(message), loc});
}

}  // namespace scene2pddl
