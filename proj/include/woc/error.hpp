#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace woc {

/// Failure causes, one per distinguishable contract violation so tests can
/// assert on the exact cause.
enum class errc {
  ground_mismatch,
  not_strongly_complete,
  not_transitive,
  not_in_family,
  cap_exceeded,
  bad_k,
  not_linear,
  disconnected,
  length_mismatch,
};

constexpr const char* to_string(errc c) {
  switch (c) {
    case errc::ground_mismatch: return "GroundMismatch";
    case errc::not_strongly_complete: return "NotStronglyComplete";
    case errc::not_transitive: return "NotTransitive";
    case errc::not_in_family: return "NotInFamily";
    case errc::cap_exceeded: return "CapExceeded";
    case errc::bad_k: return "BadK";
    case errc::not_linear: return "NotLinear";
    case errc::disconnected: return "Disconnected";
    case errc::length_mismatch: return "LengthMismatch";
  }
  return "UnknownError";
}

/// Thrown when a precondition is violated (mismatched grounds, caps, bad
/// indices). Data-dependent failures use result<T> instead.
class wo_error : public std::runtime_error {
 public:
  wo_error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

/// Value-or-error return for operations whose failure is an expected outcome
/// (building a weak order from an arbitrary relation or two-order set).
template <typename T>
class result {
 public:
  static result success(T value) {
    result r;
    r.value_ = std::move(value);
    return r;
  }

  static result failure(errc code, std::string message = {}) {
    result r;
    r.code_ = code;
    r.message_ = std::move(message);
    return r;
  }

  bool ok() const { return value_.has_value(); }
  explicit operator bool() const { return ok(); }

  const T& value() const& {
    if (!value_) throw wo_error(code_, message_.empty() ? "no value" : message_);
    return *value_;
  }
  T&& value() && {
    if (!value_) throw wo_error(code_, message_.empty() ? "no value" : message_);
    return std::move(*value_);
  }
  const T& operator*() const& { return value(); }

  errc error() const { return code_; }
  const std::string& message() const { return message_; }

 private:
  result() = default;

  std::optional<T> value_;
  errc code_ = errc::ground_mismatch;
  std::string message_;
};

}  // namespace woc
