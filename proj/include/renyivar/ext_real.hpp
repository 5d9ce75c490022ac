#pragma once

#include <cmath>
#include <compare>
#include <limits>
#include <ostream>
#include <string>

#include "renyivar/errors.hpp"

namespace renyivar {

/// A value in the extended real line: a finite double, +inf or -inf.
///
/// NaN is never stored. Addition of opposite infinities and multiplication of
/// an infinity by zero throw IndeterminateForm instead of producing NaN.
class ExtReal {
 public:
  enum class Kind { finite, pos_inf, neg_inf };

  constexpr ExtReal() = default;

  static ExtReal finite(double x) {
    if (!std::isfinite(x)) {
      throw InvalidArgument("ExtReal::finite: value is not finite");
    }
    return ExtReal(Kind::finite, x);
  }
  static constexpr ExtReal pos_inf() { return ExtReal(Kind::pos_inf, 0.0); }
  static constexpr ExtReal neg_inf() { return ExtReal(Kind::neg_inf, 0.0); }

  /// Maps IEEE +-inf onto the infinite variants; rejects NaN.
  static ExtReal from_double(double x) {
    if (std::isnan(x)) throw InvalidArgument("ExtReal::from_double: NaN");
    if (x == std::numeric_limits<double>::infinity()) return pos_inf();
    if (x == -std::numeric_limits<double>::infinity()) return neg_inf();
    return ExtReal(Kind::finite, x);
  }

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_finite() const { return kind_ == Kind::finite; }
  constexpr bool is_pos_inf() const { return kind_ == Kind::pos_inf; }
  constexpr bool is_neg_inf() const { return kind_ == Kind::neg_inf; }

  /// The finite value; throws if infinite.
  double value() const {
    if (!is_finite()) throw InvalidArgument("ExtReal::value: value is infinite");
    return value_;
  }

  /// The IEEE double representation (+-inf for the infinite variants).
  constexpr double to_double() const {
    switch (kind_) {
      case Kind::pos_inf:
        return std::numeric_limits<double>::infinity();
      case Kind::neg_inf:
        return -std::numeric_limits<double>::infinity();
      default:
        return value_;
    }
  }

  std::string to_string() const;

  friend ExtReal operator+(const ExtReal& a, const ExtReal& b);
  friend ExtReal operator-(const ExtReal& a) {
    switch (a.kind_) {
      case Kind::pos_inf:
        return neg_inf();
      case Kind::neg_inf:
        return pos_inf();
      default:
        return ExtReal(Kind::finite, -a.value_);
    }
  }
  friend ExtReal operator-(const ExtReal& a, const ExtReal& b) { return a + (-b); }
  /// Scaling by a finite real; 0 * inf is rejected.
  friend ExtReal operator*(double s, const ExtReal& a);
  friend ExtReal operator*(const ExtReal& a, double s) { return s * a; }

  friend bool operator==(const ExtReal& a, const ExtReal& b) {
    return a.kind_ == b.kind_ && (a.kind_ != Kind::finite || a.value_ == b.value_);
  }
  friend std::partial_ordering operator<=>(const ExtReal& a, const ExtReal& b) {
    return a.to_double() <=> b.to_double();
  }

  friend std::ostream& operator<<(std::ostream& os, const ExtReal& x) {
    return os << x.to_string();
  }

 private:
  constexpr ExtReal(Kind k, double v) : kind_(k), value_(v) {}

  Kind kind_ = Kind::finite;
  double value_ = 0.0;
};

/// |a - b| for two finite values, 0 when both are the same infinity and +inf
/// otherwise. Used for residuals and agreement checks.
double ext_distance(const ExtReal& a, const ExtReal& b);

}  // namespace renyivar
