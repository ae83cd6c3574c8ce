#pragma once

#include "xxl/rational_angle.hpp"

#include <mpfr.h>

#include <string>

namespace xxl {

/// Owning wrapper around an mpfr_t.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t precision);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  mpfr_ptr get() noexcept { return value_; }
  mpfr_srcptr get() const noexcept { return value_; }
  mpfr_prec_t precision() const noexcept { return mpfr_get_prec(value_); }

  double to_double(mpfr_rnd_t rnd = MPFR_RNDN) const { return mpfr_get_d(value_, rnd); }
  /// Decimal rendering with the given number of significant digits.
  std::string to_string(int digits, mpfr_rnd_t rnd = MPFR_RNDN) const;

 private:
  mpfr_t value_;
};

/// Closed interval [lo, hi] with outward-rounded endpoints. Every operation
/// returns an enclosure of the exact result set.
class Interval {
 public:
  explicit Interval(mpfr_prec_t precision);

  static Interval exact(const Rational& q, mpfr_prec_t precision);
  static Interval integer(long n, mpfr_prec_t precision);
  static Interval from_bounds(BigFloat lo, BigFloat hi);
  static Interval pi(mpfr_prec_t precision);
  /// q·π for an exact rational q.
  static Interval pi_times(const Rational& q, mpfr_prec_t precision);

  mpfr_prec_t precision() const noexcept { return lo_.precision(); }
  const BigFloat& lower() const noexcept { return lo_; }
  const BigFloat& upper() const noexcept { return hi_; }

  Interval operator+(const Interval& rhs) const;
  Interval operator-(const Interval& rhs) const;
  Interval operator*(const Interval& rhs) const;
  Interval operator/(const Interval& rhs) const;
  Interval operator-() const;

  Interval sqrt() const;
  Interval atan() const;
  /// Cosine of an interval contained in [0, π]; clamps at the endpoints.
  Interval cos_on_half_turn() const;
  /// Tangent of an interval contained in (−π/2, π/2).
  Interval tan_on_quarter_turns() const;
  /// Arc cosine after clamping to [−1, 1].
  Interval acos() const;

  BigFloat width() const;
  bool contains_zero() const;
  bool certainly_less(const Interval& rhs) const;
  bool certainly_greater(const Interval& rhs) const;

  std::string to_string(int digits) const;

 private:
  BigFloat lo_;
  BigFloat hi_;
};

}  // namespace xxl
