#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace auvrl {

inline constexpr double kPi = std::numbers::pi;

// Thrown by training loops when a loss or parameter goes non-finite.
// The CLI maps it to exit code 3 and dumps diagnostics.
struct NumericAbort : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised on configuration problems; carries the offending field in the message.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Shortest decimal representation that parses back to the same double.
inline std::string fmt_double(double v) {
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

/// Wraps an angle into (-pi, pi].
inline double wrap_angle(double a) {
  const double two_pi = 2.0 * kPi;
  double r = std::fmod(a + kPi, two_pi);
  if (r <= 0.0) r += two_pi;
  return r - kPi;
}

/// Wraps an axial angle (defined mod pi) into (-pi/2, pi/2].
inline double wrap_half_angle(double a) {
  double r = std::fmod(a + kPi / 2.0, kPi);
  if (r <= 0.0) r += kPi;
  return r - kPi / 2.0;
}

inline double clamp_abs(double v, double bound) {
  return std::clamp(v, -bound, bound);
}

}  // namespace auvrl
