#pragma once

#include "xxl/interval.hpp"
#include "xxl/polygon_complex.hpp"
#include "xxl/rational_angle.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace xxl {

inline constexpr mpfr_prec_t default_precision = 128;
inline constexpr mpfr_prec_t max_precision = 1024;

/// An interval comparison still straddled its bound at max_precision.
class PrecisionExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// tan(π/10) as a certified interval.
Interval tan_pi_over_ten(mpfr_prec_t precision);

/// The vertical slope parameter α, an exact rational in (0, tan(π/10)).
class Alpha {
 public:
  /// Validates 0 < q < tan(π/10) by certified comparison; throws InputError.
  static Alpha make(const Rational& q, mpfr_prec_t precision = default_precision);
  /// Parses "p/q" or an integer, then validates.
  static Alpha parse(std::string_view text, mpfr_prec_t precision = default_precision);
  /// Skips the range check. Only for negative controls.
  static Alpha unvalidated(const Rational& q, mpfr_prec_t precision = default_precision);

  const Rational& value() const noexcept { return value_; }
  mpfr_prec_t precision() const noexcept { return precision_; }
  bool validated() const noexcept { return validated_; }
  std::string text() const;

 private:
  Rational value_{1, 10};
  mpfr_prec_t precision_ = default_precision;
  bool validated_ = false;
};

/// Vertical slope of a direction in T_m × R: ±arctan α or horizontal.
enum class Slope { down = -1, flat = 0, up = 1 };
std::string_view to_string(Slope s);

/// An angle in radians enclosed by an interval, or known exactly.
class CertifiedAngle {
 public:
  const Interval& interval() const noexcept { return interval_; }
  const std::optional<RationalAngle>& exact() const noexcept { return exact_; }
  const std::string& provenance() const noexcept { return provenance_; }
  mpfr_prec_t precision() const noexcept { return interval_.precision(); }

  /// Decides "angle > bound", re-evaluating at doubled precision while the
  /// interval straddles the bound. Throws PrecisionExhausted past 1024 bits.
  bool exceeds(const RationalAngle& bound) const;
  /// A strict lower bound k/denominator·π certified by the interval.
  RationalAngle lower_bound(long denominator = 1'000'000) const;
  double midpoint() const;

 private:
  friend CertifiedAngle product_angle(const RationalAngle&, Slope, Slope, const Alpha&);
  CertifiedAngle(Interval interval, std::optional<RationalAngle> exact, std::string provenance, RationalAngle horizontal,
                 Slope first, Slope second, Alpha alpha)
      : interval_(std::move(interval)),
        exact_(std::move(exact)),
        provenance_(std::move(provenance)),
        horizontal_(std::move(horizontal)),
        first_(first),
        second_(second),
        alpha_(std::move(alpha)) {}

  Interval interval_;
  std::optional<RationalAngle> exact_;
  std::string provenance_;
  RationalAngle horizontal_;
  Slope first_;
  Slope second_;
  Alpha alpha_;
};

/// Angle in the link of T_m × R between two directions with horizontal angle
/// `horizontal` (infinite allowed, truncated at π) and the given slopes:
///   cos r = cos(min(h, π))·cos φ1·cos φ2 + sin φ1·sin φ2,  φ = ±arctan α.
CertifiedAngle product_angle(const RationalAngle& horizontal, Slope first, Slope second, const Alpha& alpha);

/// The same quantity evaluated once at a fixed precision, no retries.
Interval evaluate_product_angle(const RationalAngle& horizontal, Slope first, Slope second, const Rational& alpha,
                                mpfr_prec_t precision);

/// Side directions at e of the four generator directions a±, b±.
struct BaseDirections {
  SideDirection a_plus;
  SideDirection a_minus;
  SideDirection b_plus;
  SideDirection b_minus;
};

BaseDirections base_directions(const TreeOfPolygons& ball);

struct BoundCheck {
  std::string angle;   // e.g. "∠(a⁺,b⁺)"
  RationalAngle bound; // checked as angle > bound
  bool holds = false;
};

/// Angles at the base vertex of X_m between the generator directions.
struct PieceAngleTable {
  DihedralParams params;
  Alpha alpha;
  RationalAngle interior;                   // (m-2)π/m
  std::vector<CertifiedAngle> same_sign;    // ∠(a⁺,b⁺), ∠(a⁻,b⁻)
  std::vector<CertifiedAngle> mixed_sign;   // ∠(a⁺,b⁻), ∠(a⁻,b⁺)
  RationalAngle antipodal;                  // ∠(s⁺,s⁻) >= π along a locally geodesic loop
  std::vector<BoundCheck> checks;

  const CertifiedAngle& same() const { return same_sign.front(); }
  const CertifiedAngle& mixed() const { return mixed_sign.front(); }
  bool all_hold() const;
};

class CertificationError : public std::runtime_error {
 public:
  CertificationError(const std::string& what, PieceAngleTable table)
      : std::runtime_error(what), table_(std::move(table)) {}
  const PieceAngleTable& table() const noexcept { return table_; }

 private:
  PieceAngleTable table_;
};

/// Evaluates the table from the explicit geometry and checks the bounds
/// 4π/5 (same sign), 3π/5 and the interior angle (mixed sign), and 2π/3
/// (mixed sign, m >= 6). Never throws on a failed bound.
PieceAngleTable evaluate_piece_angle_table(const DihedralParams& params, const Alpha& alpha);
/// As above, but throws CertificationError if any bound fails.
PieceAngleTable piece_angle_table(const DihedralParams& params, const Alpha& alpha);

}  // namespace xxl
