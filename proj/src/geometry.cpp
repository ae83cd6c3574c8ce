#include "xxl/geometry.hpp"

#include "xxl/presentation.hpp"

#include <gmp.h>

#include <algorithm>

namespace xxl {

namespace {

const RationalAngle& half_turn() {
  static const RationalAngle pi = RationalAngle::pi_times(1);
  return pi;
}

RationalAngle truncate_at_pi(const RationalAngle& h) {
  if (h.is_infinite() || h.coefficient() >= 1) return half_turn();
  return h.with_strict(false);
}

bool narrow_enough(const Interval& x) {
  const BigFloat w = x.width();
  return mpfr_cmp_ui_2exp(w.get(), 1, -static_cast<mpfr_exp_t>(x.precision() / 2)) <= 0;
}

BigInt floor_to_bigint(mpfr_srcptr x) {
  mpz_t z;
  mpz_init(z);
  mpfr_get_z(z, x, MPFR_RNDD);
  char* s = mpz_get_str(nullptr, 10, z);
  BigInt out(s);
  void (*free_fn)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &free_fn);
  free_fn(s, std::char_traits<char>::length(s) + 1);
  mpz_clear(z);
  return out;
}

NormalForm image_of(std::string_view word, const DihedralParams& params) {
  return act_on_cover(parse_word(word, Alphabet::ab), params).image;
}

}  // namespace

Interval tan_pi_over_ten(mpfr_prec_t precision) {
  return Interval::pi_times(Rational(1, 10), precision).tan_on_quarter_turns();
}

Alpha Alpha::make(const Rational& q, mpfr_prec_t precision) {
  if (q <= 0) throw InputError("alpha must be positive, got " + q.str());
  for (mpfr_prec_t prec = precision; prec <= max_precision; prec *= 2) {
    const Interval x = Interval::exact(q, prec);
    const Interval bound = tan_pi_over_ten(prec);
    if (x.certainly_less(bound)) {
      Alpha a = unvalidated(q, precision);
      a.validated_ = true;
      return a;
    }
    if (mpfr_greaterequal_p(x.lower().get(), bound.upper().get())) {
      throw InputError("alpha = " + q.str() + " is not below tan(π/10) ≈ 0.3249196962");
    }
  }
  throw PrecisionExhausted("cannot separate alpha = " + q.str() + " from tan(π/10)");
}

Alpha Alpha::parse(std::string_view text, mpfr_prec_t precision) {
  const bool well_formed = !text.empty() && std::all_of(text.begin(), text.end(), [](char c) {
    return (c >= '0' && c <= '9') || c == '/' || c == '-';
  });
  Rational q;
  try {
    if (!well_formed) throw std::invalid_argument("bad characters");
    q = Rational(std::string(text));
  } catch (const std::exception&) {
    throw InputError("alpha must be written p/q, got '" + std::string(text) + "'");
  }
  return make(q, precision);
}

Alpha Alpha::unvalidated(const Rational& q, mpfr_prec_t precision) {
  if (precision < 2 || precision > max_precision) throw InputError("precision must lie in [2, 1024] bits");
  Alpha a;
  a.value_ = q;
  a.precision_ = precision;
  return a;
}

std::string Alpha::text() const { return value_.str(); }

std::string_view to_string(Slope s) {
  switch (s) {
    case Slope::down: return "-φ";
    case Slope::flat: return "0";
    case Slope::up: return "+φ";
  }
  return "?";
}

Interval evaluate_product_angle(const RationalAngle& horizontal, Slope first, Slope second, const Rational& alpha,
                                mpfr_prec_t precision) {
  const RationalAngle h = truncate_at_pi(horizontal);
  const Interval a = Interval::exact(alpha, precision);
  const Interval pi = Interval::pi(precision);
  const bool at_pi = h.coefficient() == 1;
  const int tilted = (first != Slope::flat) + (second != Slope::flat);

  if (tilted == 0) return Interval::pi_times(h.coefficient(), precision);
  if (at_pi && tilted == 2 && first != second) return pi;
  if (at_pi && tilted == 2) return pi - Interval::integer(2, precision) * a.atan();
  if (at_pi && tilted == 1) return pi - a.atan();

  const Interval one = Interval::integer(1, precision);
  const Interval zero = Interval::integer(0, precision);
  const Interval norm = (one + a * a).sqrt();
  const Interval c_phi = one / norm;
  const Interval s_phi = a / norm;
  auto cos_of = [&](Slope s) { return s == Slope::flat ? one : c_phi; };
  auto sin_of = [&](Slope s) { return s == Slope::flat ? zero : (s == Slope::up ? s_phi : -s_phi); };

  const Interval c = Interval::pi_times(h.coefficient(), precision).cos_on_half_turn();
  return (c * cos_of(first) * cos_of(second) + sin_of(first) * sin_of(second)).acos();
}

CertifiedAngle product_angle(const RationalAngle& horizontal, Slope first, Slope second, const Alpha& alpha) {
  const RationalAngle h = truncate_at_pi(horizontal);
  const bool at_pi = h.coefficient() == 1;
  const int tilted = (first != Slope::flat) + (second != Slope::flat);

  std::optional<RationalAngle> exact;
  std::string provenance;
  if (tilted == 0) {
    exact = h;
    provenance = "horizontal angle " + h.fraction();
  } else if (at_pi && tilted == 2 && first != second) {
    exact = half_turn();
    provenance = "π (opposite slopes across polygons)";
  } else if (at_pi && tilted == 2) {
    provenance = "π − 2·arctan α";
  } else if (at_pi) {
    provenance = "π − arctan α";
  } else {
    provenance = "arccos(cos θ·cos φ₁·cos φ₂ + sin φ₁·sin φ₂), θ = " + h.fraction() + ", slopes " +
                 std::string(to_string(first)) + ", " + std::string(to_string(second));
  }

  for (mpfr_prec_t prec = alpha.precision(); prec <= max_precision; prec *= 2) {
    Interval value = evaluate_product_angle(h, first, second, alpha.value(), prec);
    if (exact || narrow_enough(value)) {
      return CertifiedAngle(std::move(value), exact, provenance, h, first, second, alpha);
    }
  }
  throw PrecisionExhausted("precision exhausted evaluating " + provenance);
}

bool CertifiedAngle::exceeds(const RationalAngle& bound) const {
  if (bound.is_infinite()) return false;
  if (exact_) return RationalAngle::compare_values(*exact_, bound) == std::strong_ordering::greater;
  for (mpfr_prec_t prec = precision(); prec <= max_precision; prec *= 2) {
    const Interval value =
        prec == precision() ? interval_ : evaluate_product_angle(horizontal_, first_, second_, alpha_.value(), prec);
    const Interval b = Interval::pi_times(bound.coefficient(), prec);
    if (value.certainly_greater(b)) return true;
    if (mpfr_lessequal_p(value.upper().get(), b.lower().get())) return false;
  }
  throw PrecisionExhausted("precision exhausted comparing " + provenance_ + " with " + bound.fraction());
}

RationalAngle CertifiedAngle::lower_bound(long denominator) const {
  if (exact_) return *exact_;
  const Interval ratio = interval_ / Interval::pi(precision());
  BigFloat scaled(precision());
  mpfr_mul_si(scaled.get(), ratio.lower().get(), denominator, MPFR_RNDD);
  BigInt k = floor_to_bigint(scaled.get());
  if (mpfr_integer_p(scaled.get())) k -= 1;
  return RationalAngle(Rational(k, denominator), true);
}

double CertifiedAngle::midpoint() const {
  BigFloat mid(precision());
  mpfr_add(mid.get(), interval_.lower().get(), interval_.upper().get(), MPFR_RNDN);
  mpfr_div_2ui(mid.get(), mid.get(), 1, MPFR_RNDN);
  return mid.to_double();
}

BaseDirections base_directions(const TreeOfPolygons& ball) {
  const auto& params = ball.params();
  const std::size_t e = ball.base_vertex();
  auto towards = [&](std::string_view g) {
    const auto target = ball.act_on_vertex(image_of(g, params), e);
    if (!target) throw std::invalid_argument("ball too small for the base directions");
    return direction_towards(ball, e, *target);
  };
  return {towards("a"), towards("a^-1"), towards("b"), towards("b^-1")};
}

bool PieceAngleTable::all_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return c.holds; });
}

PieceAngleTable evaluate_piece_angle_table(const DihedralParams& params, const Alpha& alpha) {
  const auto ball = TreeOfPolygons::build(params, 1);
  const auto dirs = base_directions(ball);
  auto angle = [&](const SideDirection& x, Slope sx, const SideDirection& y, Slope sy) {
    return product_angle(horizontal_angle(params, x, y), sx, sy, alpha);
  };

  PieceAngleTable table{params, alpha, RationalAngle::pi_times(params.m - 2, params.m), {}, {}, {}, {}};
  table.same_sign.push_back(angle(dirs.a_plus, Slope::up, dirs.b_plus, Slope::up));
  table.same_sign.push_back(angle(dirs.a_minus, Slope::down, dirs.b_minus, Slope::down));
  table.mixed_sign.push_back(angle(dirs.a_plus, Slope::up, dirs.b_minus, Slope::down));
  table.mixed_sign.push_back(angle(dirs.a_minus, Slope::down, dirs.b_plus, Slope::up));

  const auto a_loop = angle(dirs.a_plus, Slope::up, dirs.a_minus, Slope::down);
  const auto b_loop = angle(dirs.b_plus, Slope::up, dirs.b_minus, Slope::down);
  if (!a_loop.exact() || !b_loop.exact()) throw std::logic_error("generator loop does not turn by exactly π");
  table.antipodal = std::min(a_loop.lower_bound(), b_loop.lower_bound());

  auto check = [&](const std::string& name, const CertifiedAngle& x, const RationalAngle& bound) {
    table.checks.push_back({name, bound, x.exceeds(bound)});
  };
  const std::vector<std::string> same_names{"∠(a⁺,b⁺)", "∠(a⁻,b⁻)"};
  const std::vector<std::string> mixed_names{"∠(a⁺,b⁻)", "∠(a⁻,b⁺)"};
  for (std::size_t i = 0; i < 2; ++i) check(same_names[i], table.same_sign[i], RationalAngle::pi_times(4, 5));
  for (std::size_t i = 0; i < 2; ++i) {
    check(mixed_names[i], table.mixed_sign[i], RationalAngle::pi_times(3, 5));
    if (table.interior != RationalAngle::pi_times(3, 5)) check(mixed_names[i], table.mixed_sign[i], table.interior);
    if (params.m >= 6) check(mixed_names[i], table.mixed_sign[i], RationalAngle::pi_times(2, 3));
  }
  return table;
}

PieceAngleTable piece_angle_table(const DihedralParams& params, const Alpha& alpha) {
  auto table = evaluate_piece_angle_table(params, alpha);
  for (const auto& c : table.checks) {
    if (!c.holds) {
      throw CertificationError("bound " + c.angle + " > " + c.bound.fraction() + " fails for m = " +
                                   std::to_string(params.m) + ", alpha = " + alpha.text(),
                               std::move(table));
    }
  }
  return table;
}

}  // namespace xxl
