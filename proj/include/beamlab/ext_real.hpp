#pragma once

#include <cmath>
#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>

namespace beamlab {

/// A length (or other positive-real quantity) that may be infinite.
///
/// Coherence lengths, curvature radii and effective coherence lengths all have
/// a physically meaningful infinite limit (coherent beam, waist plane). The
/// infinite case is a distinct state here rather than a float sentinel, so
/// every consumer has to branch on it explicitly.
class ExtReal {
 public:
  static constexpr ExtReal infinite() { return ExtReal{}; }
  static ExtReal finite(double v) {
    if (!std::isfinite(v)) throw std::invalid_argument("ExtReal::finite: value is not finite");
    return ExtReal{v};
  }

  constexpr bool is_infinite() const { return !value_.has_value(); }
  constexpr bool is_finite() const { return value_.has_value(); }

  /// Finite value; throws for the infinite state.
  double value() const {
    if (!value_) throw std::logic_error("ExtReal::value on infinite quantity");
    return *value_;
  }

  /// 1/x, with 1/inf = 0.
  double reciprocal() const { return value_ ? 1.0 / *value_ : 0.0; }

  /// 1/x^2, with 1/inf^2 = 0.
  double inverse_square() const { return value_ ? 1.0 / (*value_ * *value_) : 0.0; }

  /// Value as a double, mapping the infinite state to +inf. For printing and
  /// comparisons only; arithmetic should go through reciprocal().
  double as_double() const { return value_ ? *value_ : HUGE_VAL; }

  friend bool operator==(const ExtReal&, const ExtReal&) = default;

 private:
  constexpr ExtReal() = default;
  explicit ExtReal(double v) : value_(v) {}
  std::optional<double> value_;
};

inline std::string to_string(const ExtReal& v) {
  if (v.is_infinite()) return "inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v.value());
  return buf;
}

}  // namespace beamlab
