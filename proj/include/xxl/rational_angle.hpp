#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>

namespace xxl {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// An angle stored exactly as (coefficient)·π, or +∞.
///
/// The strict flag records that the quantity being bounded is strictly
/// larger than the stored value. Sums propagate strictness: if any summand
/// is strict, so is the sum. Ordering compares values first and places a
/// non-strict bound before a strict bound of the same value, so a minimum
/// over bounds is strict only when every minimiser is.
class RationalAngle {
 public:
  RationalAngle() = default;
  explicit RationalAngle(Rational coefficient, bool strict = false);

  static RationalAngle pi_times(std::int64_t num, std::int64_t den = 1, bool strict = false);
  static RationalAngle infinite();

  bool is_infinite() const noexcept { return infinite_; }
  bool strict() const noexcept { return strict_; }
  const Rational& coefficient() const;

  RationalAngle with_strict(bool strict) const;

  RationalAngle operator+(const RationalAngle& rhs) const;
  RationalAngle& operator+=(const RationalAngle& rhs);
  RationalAngle times(std::int64_t k) const;

  friend std::strong_ordering operator<=>(const RationalAngle& lhs, const RationalAngle& rhs);
  friend bool operator==(const RationalAngle& lhs, const RationalAngle& rhs);

  /// Compares values only, ignoring strictness.
  static std::strong_ordering compare_values(const RationalAngle& lhs, const RationalAngle& rhs);

  /// The bounded quantity is >= bound.
  bool at_least(const RationalAngle& bound) const;
  /// The bounded quantity is > bound (value above, or equal and strict).
  bool exceeds(const RationalAngle& bound) const;

  /// "3π/5", "2π", "π", "0", "∞".
  std::string fraction() const;
  /// fraction() with " (strict)" appended when the flag is set.
  std::string describe() const;
  /// Value in radians, display only.
  double radians() const;

 private:
  Rational coefficient_{0};
  bool strict_ = false;
  bool infinite_ = false;
};

}  // namespace xxl
