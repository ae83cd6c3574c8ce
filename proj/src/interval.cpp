#include "xxl/interval.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace xxl {

BigFloat::BigFloat(mpfr_prec_t precision) {
  mpfr_init2(value_, precision);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

std::string BigFloat::to_string(int digits, mpfr_rnd_t rnd) const {
  char* buf = nullptr;
  std::string fmt = "%." + std::to_string(digits) + "R*g";
  mpfr_asprintf(&buf, fmt.c_str(), rnd, value_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

Interval::Interval(mpfr_prec_t precision) : lo_(precision), hi_(precision) {}

Interval Interval::exact(const Rational& q, mpfr_prec_t precision) {
  Interval r(precision);
  const auto num = boost::multiprecision::numerator(q).str();
  const auto den = boost::multiprecision::denominator(q).str();
  // Integers below are converted with enough bits to be exact.
  mpfr_prec_t wide = static_cast<mpfr_prec_t>(4 * (num.size() + den.size()) + 64);
  BigFloat n(wide), d(wide);
  mpfr_set_str(n.get(), num.c_str(), 10, MPFR_RNDN);
  mpfr_set_str(d.get(), den.c_str(), 10, MPFR_RNDN);
  mpfr_div(r.lo_.get(), n.get(), d.get(), MPFR_RNDD);
  mpfr_div(r.hi_.get(), n.get(), d.get(), MPFR_RNDU);
  return r;
}

Interval Interval::from_bounds(BigFloat lo, BigFloat hi) {
  if (mpfr_greater_p(lo.get(), hi.get())) throw std::invalid_argument("interval with lo > hi");
  Interval r(lo.precision());
  r.lo_ = std::move(lo);
  r.hi_ = std::move(hi);
  return r;
}

Interval Interval::integer(long n, mpfr_prec_t precision) {
  Interval r(precision);
  mpfr_set_si(r.lo_.get(), n, MPFR_RNDD);
  mpfr_set_si(r.hi_.get(), n, MPFR_RNDU);
  return r;
}

Interval Interval::pi(mpfr_prec_t precision) {
  Interval r(precision);
  mpfr_const_pi(r.lo_.get(), MPFR_RNDD);
  mpfr_const_pi(r.hi_.get(), MPFR_RNDU);
  return r;
}

Interval Interval::pi_times(const Rational& q, mpfr_prec_t precision) {
  return exact(q, precision) * pi(precision);
}

Interval Interval::operator+(const Interval& rhs) const {
  Interval r(precision());
  mpfr_add(r.lo_.get(), lo_.get(), rhs.lo_.get(), MPFR_RNDD);
  mpfr_add(r.hi_.get(), hi_.get(), rhs.hi_.get(), MPFR_RNDU);
  return r;
}

Interval Interval::operator-(const Interval& rhs) const {
  Interval r(precision());
  mpfr_sub(r.lo_.get(), lo_.get(), rhs.hi_.get(), MPFR_RNDD);
  mpfr_sub(r.hi_.get(), hi_.get(), rhs.lo_.get(), MPFR_RNDU);
  return r;
}

Interval Interval::operator-() const {
  Interval r(precision());
  mpfr_neg(r.lo_.get(), hi_.get(), MPFR_RNDD);
  mpfr_neg(r.hi_.get(), lo_.get(), MPFR_RNDU);
  return r;
}

namespace {

template <typename Op>
Interval corner_hull(const Interval& x, const Interval& y, Op op) {
  const auto prec = x.precision();
  BigFloat lo(prec), hi(prec), tmp(prec);
  bool first = true;
  for (const BigFloat* a : {&x.lower(), &x.upper()}) {
    for (const BigFloat* b : {&y.lower(), &y.upper()}) {
      op(tmp.get(), a->get(), b->get(), MPFR_RNDD);
      if (first || mpfr_less_p(tmp.get(), lo.get())) mpfr_set(lo.get(), tmp.get(), MPFR_RNDD);
      op(tmp.get(), a->get(), b->get(), MPFR_RNDU);
      if (first || mpfr_greater_p(tmp.get(), hi.get())) mpfr_set(hi.get(), tmp.get(), MPFR_RNDU);
      first = false;
    }
  }
  return Interval::from_bounds(std::move(lo), std::move(hi));
}

}  // namespace

Interval Interval::operator*(const Interval& rhs) const {
  return corner_hull(*this, rhs, [](mpfr_ptr out, mpfr_srcptr a, mpfr_srcptr b, mpfr_rnd_t rnd) {
    mpfr_mul(out, a, b, rnd);
  });
}

Interval Interval::operator/(const Interval& rhs) const {
  if (rhs.contains_zero()) throw std::domain_error("interval division by an interval containing zero");
  return corner_hull(*this, rhs, [](mpfr_ptr out, mpfr_srcptr a, mpfr_srcptr b, mpfr_rnd_t rnd) {
    mpfr_div(out, a, b, rnd);
  });
}

Interval Interval::sqrt() const {
  if (mpfr_sgn(lo_.get()) < 0) throw std::domain_error("sqrt of an interval with negative part");
  Interval r(precision());
  mpfr_sqrt(r.lo_.get(), lo_.get(), MPFR_RNDD);
  mpfr_sqrt(r.hi_.get(), hi_.get(), MPFR_RNDU);
  return r;
}

Interval Interval::atan() const {
  Interval r(precision());
  mpfr_atan(r.lo_.get(), lo_.get(), MPFR_RNDD);
  mpfr_atan(r.hi_.get(), hi_.get(), MPFR_RNDU);
  return r;
}

Interval Interval::cos_on_half_turn() const {
  // cos is decreasing on [0, π]; endpoints that touch 0 or π clamp to ±1.
  Interval r(precision());
  const Interval half_turn = pi(precision());
  if (mpfr_sgn(lo_.get()) <= 0) {
    mpfr_set_si(r.hi_.get(), 1, MPFR_RNDU);
  } else {
    mpfr_cos(r.hi_.get(), lo_.get(), MPFR_RNDU);
  }
  if (mpfr_greaterequal_p(hi_.get(), half_turn.lo_.get())) {
    mpfr_set_si(r.lo_.get(), -1, MPFR_RNDD);
  } else {
    mpfr_cos(r.lo_.get(), hi_.get(), MPFR_RNDD);
  }
  if (mpfr_sgn(lo_.get()) < 0 || mpfr_greater_p(lo_.get(), half_turn.hi_.get())) {
    throw std::domain_error("cos_on_half_turn: interval leaves [0, π]");
  }
  return r;
}

Interval Interval::tan_on_quarter_turns() const {
  Interval r(precision());
  mpfr_tan(r.lo_.get(), lo_.get(), MPFR_RNDD);
  mpfr_tan(r.hi_.get(), hi_.get(), MPFR_RNDU);
  if (mpfr_greater_p(r.lo_.get(), r.hi_.get())) {
    throw std::domain_error("tan_on_quarter_turns: interval crosses a pole");
  }
  return r;
}

Interval Interval::acos() const {
  Interval r(precision());
  BigFloat lo = lo_, hi = hi_;
  if (mpfr_cmp_si(lo.get(), -1) < 0) mpfr_set_si(lo.get(), -1, MPFR_RNDD);
  if (mpfr_cmp_si(hi.get(), 1) > 0) mpfr_set_si(hi.get(), 1, MPFR_RNDU);
  if (mpfr_greater_p(lo.get(), hi.get())) throw std::domain_error("acos of an interval outside [-1, 1]");
  mpfr_acos(r.lo_.get(), hi.get(), MPFR_RNDD);
  mpfr_acos(r.hi_.get(), lo.get(), MPFR_RNDU);
  return r;
}

BigFloat Interval::width() const {
  BigFloat w(precision());
  mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
  return w;
}

bool Interval::contains_zero() const { return mpfr_sgn(lo_.get()) <= 0 && mpfr_sgn(hi_.get()) >= 0; }

bool Interval::certainly_less(const Interval& rhs) const { return mpfr_less_p(hi_.get(), rhs.lo_.get()); }

bool Interval::certainly_greater(const Interval& rhs) const { return mpfr_greater_p(lo_.get(), rhs.hi_.get()); }

std::string Interval::to_string(int digits) const {
  return "[" + lo_.to_string(digits, MPFR_RNDD) + ", " + hi_.to_string(digits, MPFR_RNDU) + "]";
}

}  // namespace xxl
