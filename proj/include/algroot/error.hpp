#pragma once

#include <chrono>
#include <optional>
#include <stdexcept>
#include <string>

namespace algroot {

enum class ErrorKind {
  InvalidInput,
  ZeroPolynomial,
  NotIsolating,
  NotSquareFree,
  LeadingCoefficientVanishes,
  ResultantZero,
  PrecisionCapExceeded,
  Timeout,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::NotIsolating: return "NotIsolating";
    case ErrorKind::NotSquareFree: return "NotSquareFree";
    case ErrorKind::LeadingCoefficientVanishes: return "LeadingCoefficientVanishes";
    case ErrorKind::ResultantZero: return "ResultantZero";
    case ErrorKind::PrecisionCapExceeded: return "PrecisionCapExceeded";
    case ErrorKind::Timeout: return "Timeout";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Cooperative wall-clock limit. Long-running loops call check(); an unset
/// deadline never fires.
class Deadline {
 public:
  using clock = std::chrono::steady_clock;

  Deadline() = default;
  static Deadline after(double seconds) {
    Deadline d;
    if (seconds > 0)
      d.at_ = clock::now() + std::chrono::duration_cast<clock::duration>(
                                 std::chrono::duration<double>(seconds));
    return d;
  }
  bool expired() const { return at_ && clock::now() >= *at_; }
  void check() const {
    if (expired()) throw Error(ErrorKind::Timeout, "deadline exceeded");
  }

 private:
  std::optional<clock::time_point> at_;
};

}  // namespace algroot
