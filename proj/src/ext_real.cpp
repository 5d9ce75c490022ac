#include "renyivar/ext_real.hpp"

#include <cstdio>

namespace renyivar {

std::string ExtReal::to_string() const {
  switch (kind_) {
    case Kind::pos_inf:
      return "inf";
    case Kind::neg_inf:
      return "-inf";
    default: {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", value_);
      return buf;
    }
  }
}

ExtReal operator+(const ExtReal& a, const ExtReal& b) {
  using Kind = ExtReal::Kind;
  if (a.kind_ == Kind::finite && b.kind_ == Kind::finite) {
    return ExtReal::from_double(a.value_ + b.value_);
  }
  if ((a.is_pos_inf() && b.is_neg_inf()) || (a.is_neg_inf() && b.is_pos_inf())) {
    throw IndeterminateForm("ExtReal: inf - inf");
  }
  return a.is_finite() ? b : a;
}

ExtReal operator*(double s, const ExtReal& a) {
  if (!std::isfinite(s)) throw InvalidArgument("ExtReal: scale factor must be finite");
  if (a.is_finite()) return ExtReal::from_double(s * a.value_);
  if (s == 0.0) throw IndeterminateForm("ExtReal: 0 * inf");
  return (s > 0.0) == a.is_pos_inf() ? ExtReal::pos_inf() : ExtReal::neg_inf();
}

double ext_distance(const ExtReal& a, const ExtReal& b) {
  if (a.is_finite() && b.is_finite()) return std::abs(a.value() - b.value());
  if (a.kind() == b.kind()) return 0.0;
  return std::numeric_limits<double>::infinity();
}

}  // namespace renyivar
