#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <stdexcept>
#include <string>

namespace cubics {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

// High-precision real scalar for the approximation experiments.  Heights grow
// like i^3 over sequences of length 10^4, so logarithms are taken with a
// 30-digit (~100 bit) mantissa rather than in hardware doubles.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<30>>;

/// An exact rational extended with +infinity.
///
/// Infinity only ever enters through minimum-taking (a branch with residue
/// code 0) and positive rescaling; no general arithmetic on it is offered.
class ExtendedRational {
 public:
  ExtendedRational() : finite_(true), value_(0) {}
  ExtendedRational(Rat value) : finite_(true), value_(std::move(value)) {}
  ExtendedRational(const Int& value) : finite_(true), value_(value) {}
  ExtendedRational(long value) : finite_(true), value_(value) {}

  static ExtendedRational infinity() {
    ExtendedRational e;
    e.finite_ = false;
    return e;
  }

  bool is_finite() const { return finite_; }

  const Rat& value() const {
    if (!finite_) throw std::domain_error("ExtendedRational: value() of infinity");
    return value_;
  }

  friend bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.value_ == b.value_;
  }
  friend bool operator!=(const ExtendedRational& a, const ExtendedRational& b) { return !(a == b); }
  friend bool operator<(const ExtendedRational& a, const ExtendedRational& b) {
    if (!a.finite_) return false;           // inf < x never holds
    if (!b.finite_) return true;            // finite < inf
    return a.value_ < b.value_;
  }
  friend bool operator<=(const ExtendedRational& a, const ExtendedRational& b) {
    return a == b || a < b;
  }

  friend ExtendedRational min(const ExtendedRational& a, const ExtendedRational& b) {
    return a < b ? a : b;
  }

  /// Multiply by a positive rational; infinity is absorbing.
  ExtendedRational scaled(const Rat& factor) const {
    if (factor <= 0) throw std::invalid_argument("ExtendedRational: scale factor must be positive");
    if (!finite_) return *this;
    return ExtendedRational(Rat(value_ * factor));
  }

 private:
  bool finite_;
  Rat value_;
};

/// "p/q" with the denominator omitted when it is 1.
std::string to_string(const Rat& q);

/// Exact rational as above, or "inf".
std::string to_string(const ExtendedRational& e);

}  // namespace cubics
