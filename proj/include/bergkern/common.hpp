#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>

namespace bergkern {

inline constexpr double kPi = 3.14159265358979323846;

using Complex = std::complex<double>;

// Input or parameter failed a precondition. CLI maps this to exit code 2.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A numerical routine could not certify the requested tolerance. Carries the
// best estimate available when it gave up. CLI maps this to exit code 3.
class AccuracyError : public std::runtime_error {
 public:
  AccuracyError(const std::string& what, Complex best_estimate, double error_bound)
      : std::runtime_error(what), best_(best_estimate), bound_(error_bound) {}
  Complex best_estimate() const { return best_; }
  double error_bound() const { return bound_; }

 private:
  Complex best_;
  double bound_;
};

// A zero sits on (or keeps landing on) every contour that was tried.
class BoundaryZeroError : public AccuracyError {
 public:
  using AccuracyError::AccuracyError;
};

// Complex value stored as a unit phase times exp(log_abs). Entire-function
// profiles reach magnitudes like exp(1e3), far outside double range; phase
// tracking and residual checks only ever need (log |f|, arg f).
struct LogComplex {
  double log_abs = -std::numeric_limits<double>::infinity();
  Complex unit{0.0, 0.0};  // f/|f|; (0,0) for an exact zero

  static LogComplex from(Complex v) {
    LogComplex r;
    const double a = std::abs(v);
    if (a == 0.0) return r;
    r.log_abs = std::log(a);
    r.unit = v / a;
    return r;
  }

  // value scaled by exp(-ref_log); usable whenever log_abs - ref_log is
  // within double range
  Complex rescaled(double ref_log) const { return std::exp(log_abs - ref_log) * unit; }
  Complex value() const { return rescaled(0.0); }
  double abs() const { return std::exp(log_abs); }
  double arg() const { return std::arg(unit); }
  bool is_zero() const { return std::isinf(log_abs) && log_abs < 0; }
};

inline LogComplex operator*(const LogComplex& a, const LogComplex& b) {
  LogComplex r;
  r.log_abs = a.log_abs + b.log_abs;
  r.unit = a.unit * b.unit;
  return r;
}

// Kernel/weight profile evaluated in scaled form; input is s = z * conj(w).
using ScaledProfile = std::function<LogComplex(Complex)>;

// Compensated (Kahan) accumulator.
struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double x) {
    const double y = x - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  double value() const { return sum; }
};

struct KahanComplex {
  KahanSum re, im;
  void add(Complex z) {
    re.add(z.real());
    im.add(z.imag());
  }
  Complex value() const { return {re.value(), im.value()}; }
};

}  // namespace bergkern
