#include "xxl/rational_angle.hpp"

#include <mpfr.h>

#include <limits>
#include <stdexcept>

namespace xxl {

RationalAngle::RationalAngle(Rational coefficient, bool strict)
    : coefficient_(std::move(coefficient)), strict_(strict) {}

RationalAngle RationalAngle::pi_times(std::int64_t num, std::int64_t den, bool strict) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  return RationalAngle(Rational(num, den), strict);
}

RationalAngle RationalAngle::infinite() {
  RationalAngle a;
  a.infinite_ = true;
  return a;
}

const Rational& RationalAngle::coefficient() const {
  if (infinite_) throw std::logic_error("infinite angle has no coefficient");
  return coefficient_;
}

RationalAngle RationalAngle::with_strict(bool strict) const {
  RationalAngle a = *this;
  a.strict_ = strict;
  return a;
}

RationalAngle RationalAngle::operator+(const RationalAngle& rhs) const {
  RationalAngle out = *this;
  out += rhs;
  return out;
}

RationalAngle& RationalAngle::operator+=(const RationalAngle& rhs) {
  if (infinite_ || rhs.infinite_) {
    *this = infinite();
    return *this;
  }
  coefficient_ += rhs.coefficient_;
  strict_ = strict_ || rhs.strict_;
  return *this;
}

RationalAngle RationalAngle::times(std::int64_t k) const {
  if (k < 0) throw std::invalid_argument("negative multiple of an angle bound");
  if (infinite_) return k == 0 ? RationalAngle() : infinite();
  if (k == 0) return RationalAngle();
  return RationalAngle(coefficient_ * k, strict_);
}

std::strong_ordering RationalAngle::compare_values(const RationalAngle& lhs, const RationalAngle& rhs) {
  if (lhs.infinite_ || rhs.infinite_) {
    if (lhs.infinite_ && rhs.infinite_) return std::strong_ordering::equal;
    return lhs.infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  if (lhs.coefficient_ < rhs.coefficient_) return std::strong_ordering::less;
  if (rhs.coefficient_ < lhs.coefficient_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const RationalAngle& lhs, const RationalAngle& rhs) {
  auto c = RationalAngle::compare_values(lhs, rhs);
  if (c != std::strong_ordering::equal || lhs.infinite_) return c;
  return lhs.strict_ <=> rhs.strict_;
}

bool operator==(const RationalAngle& lhs, const RationalAngle& rhs) {
  return (lhs <=> rhs) == std::strong_ordering::equal;
}

bool RationalAngle::at_least(const RationalAngle& bound) const {
  return compare_values(*this, bound) != std::strong_ordering::less;
}

bool RationalAngle::exceeds(const RationalAngle& bound) const {
  auto c = compare_values(*this, bound);
  return c == std::strong_ordering::greater || (c == std::strong_ordering::equal && strict_ && !infinite_);
}

std::string RationalAngle::fraction() const {
  if (infinite_) return "∞";
  const auto num = boost::multiprecision::numerator(coefficient_);
  const auto den = boost::multiprecision::denominator(coefficient_);
  if (num == 0) return "0";
  std::string out;
  if (num < 0) out += "-";
  const BigInt mag = num < 0 ? BigInt(-num) : BigInt(num);
  if (mag != 1) out += mag.str();
  out += "π";
  if (den != 1) out += "/" + den.str();
  return out;
}

std::string RationalAngle::describe() const {
  return strict_ ? fraction() + " (strict)" : fraction();
}

double RationalAngle::radians() const {
  if (infinite_) return std::numeric_limits<double>::infinity();
  mpfr_t pi, num, den;
  mpfr_inits2(256, pi, num, den, static_cast<mpfr_ptr>(nullptr));
  mpfr_const_pi(pi, MPFR_RNDN);
  mpfr_set_str(num, boost::multiprecision::numerator(coefficient_).str().c_str(), 10, MPFR_RNDN);
  mpfr_set_str(den, boost::multiprecision::denominator(coefficient_).str().c_str(), 10, MPFR_RNDN);
  mpfr_mul(pi, pi, num, MPFR_RNDN);
  mpfr_div(pi, pi, den, MPFR_RNDN);
  double v = mpfr_get_d(pi, MPFR_RNDN);
  mpfr_clears(pi, num, den, static_cast<mpfr_ptr>(nullptr));
  return v;
}

}  // namespace xxl
