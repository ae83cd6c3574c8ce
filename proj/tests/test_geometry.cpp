#include "xxl/geometry.hpp"
#include "xxl/presentation.hpp"

#include <doctest.h>

#include <cmath>

using namespace xxl;

namespace {

// Double-precision closed form of the product angle, computed independently.
double product_angle_double(double h, int s1, int s2, double alpha) {
  const double phi = std::atan(alpha);
  const double f1 = s1 * phi, f2 = s2 * phi;
  return std::acos(std::cos(std::min(h, M_PI)) * std::cos(f1) * std::cos(f2) + std::sin(f1) * std::sin(f2));
}

double width(const CertifiedAngle& a) { return a.interval().width().to_double(MPFR_RNDU); }
double mid(const CertifiedAngle& a) { return a.midpoint(); }

}  // namespace

TEST_CASE("alpha validation against tan(π/10)") {
  CHECK(Alpha::make(Rational(1, 10)).validated());
  CHECK(Alpha::parse("3/10").validated());
  CHECK_THROWS_AS(Alpha::make(Rational(2, 5)), InputError);
  CHECK_THROWS_AS(Alpha::parse("0"), InputError);
  CHECK_THROWS_AS(Alpha::parse("abc"), InputError);
  CHECK_THROWS_AS(Alpha::make(Rational(32492, 100000)), InputError);
  CHECK(Alpha::make(Rational(32491, 100000)).validated());
}

TEST_CASE("product angle closed forms") {
  const auto alpha = Alpha::make(Rational(1, 10));
  const auto pi = RationalAngle::pi_times(1);
  const auto same = product_angle(pi, Slope::up, Slope::up, alpha);
  CHECK(mid(same) == doctest::Approx(M_PI - 2 * std::atan(0.1)).epsilon(1e-15));
  CHECK(mid(same) == doctest::Approx(2.942255348607469).epsilon(1e-15));
  CHECK(width(same) < 1e-30);
  const auto one_flat = product_angle(RationalAngle::infinite(), Slope::down, Slope::flat, alpha);
  CHECK(mid(one_flat) == doctest::Approx(M_PI - std::atan(0.1)).epsilon(1e-15));
  CHECK(mid(one_flat) == doctest::Approx(3.0419240010986313).epsilon(1e-15));
  // Exact cases.
  CHECK(product_angle(RationalAngle::pi_times(2, 5), Slope::flat, Slope::flat, alpha).exact() ==
        RationalAngle::pi_times(2, 5));
  CHECK(product_angle(pi, Slope::up, Slope::down, alpha).exact() == pi);
}

TEST_CASE("product angle matches the double-precision formula on a grid") {
  const auto alpha = Alpha::make(Rational(3, 10));
  const Slope slopes[] = {Slope::down, Slope::flat, Slope::up};
  for (int k = 1; k <= 12; ++k) {
    const auto h = RationalAngle::pi_times(k, 12);
    for (Slope s1 : slopes) {
      for (Slope s2 : slopes) {
        const auto a = product_angle(h, s1, s2, alpha);
        const double expected = product_angle_double(k * M_PI / 12, static_cast<int>(s1), static_cast<int>(s2), 0.3);
        CHECK(mid(a) == doctest::Approx(expected).epsilon(1e-12));
        CHECK(a.interval().lower().to_double(MPFR_RNDD) <= a.interval().upper().to_double(MPFR_RNDU));
      }
    }
  }
}

TEST_CASE("snapped lower bounds are strict and below the interval") {
  const auto alpha = Alpha::make(Rational(1, 10));
  const auto a = product_angle(RationalAngle::pi_times(1), Slope::up, Slope::up, alpha);
  const auto lb = a.lower_bound();
  CHECK(lb.strict());
  CHECK(lb.radians() <= a.interval().lower().to_double(MPFR_RNDU));
  CHECK(a.midpoint() - lb.radians() < 1e-5);
  CHECK(a.exceeds(RationalAngle::pi_times(4, 5)));
  CHECK_FALSE(a.exceeds(RationalAngle::pi_times(19, 20)));
}

TEST_CASE("angle table for m = 5..8 at alpha = 1/10") {
  const auto alpha = Alpha::make(Rational(1, 10));
  for (int m : {5, 6, 7, 8}) {
    const auto params = DihedralParams::make(m);
    const auto table = piece_angle_table(params, alpha);
    CHECK(table.all_hold());
    CHECK(table.same().exceeds(RationalAngle::pi_times(4, 5)));
    CHECK(table.mixed().exceeds(RationalAngle::pi_times(3, 5)));
    if (m >= 6) CHECK(table.mixed().exceeds(RationalAngle::pi_times(2, 3)));
    CHECK(table.mixed().exceeds(table.interior));
    CHECK(width(table.same()) <= 1e-30);
    CHECK(width(table.mixed()) <= 1e-30);
    // Independent closed forms: the generator directions point to
    // neighbours of e at slopes ±φ, so the mixed angle tilts the interior
    // angle (m−2)π/m apart.
    CHECK(mid(table.same()) == doctest::Approx(M_PI - 2 * std::atan(0.1)).epsilon(1e-14));
    CHECK(mid(table.mixed()) ==
          doctest::Approx(product_angle_double((m - 2) * M_PI / m, 1, -1, 0.1)).epsilon(1e-14));
    CHECK(table.antipodal == RationalAngle::pi_times(1));
  }
}

TEST_CASE("negative control: alpha just above tan(π/10) breaks the 4π/5 bound") {
  const auto forced = Alpha::unvalidated(Rational(32492, 100000));
  CHECK_FALSE(forced.validated());
  const auto table = evaluate_piece_angle_table(DihedralParams::make(5), forced);
  CHECK_FALSE(table.checks.front().holds);
  CHECK_FALSE(table.all_hold());
  CHECK_THROWS_AS(piece_angle_table(DihedralParams::make(5), forced), CertificationError);
}

TEST_CASE("base directions: a⁺ and b⁻ in P, a⁻ and b⁺ in P'") {
  for (int m : {5, 6, 7, 8}) {
    const auto ball = TreeOfPolygons::build(DihedralParams::make(m), 1);
    const auto d = base_directions(ball);
    CHECK(d.a_plus.polygon == ball.base_polygon());
    CHECK(d.b_minus.polygon == ball.base_polygon());
    CHECK(d.a_minus.polygon == *ball.neighbor_polygon());
    CHECK(d.b_plus.polygon == *ball.neighbor_polygon());
    CHECK(d.a_plus.offset == 1);
    CHECK(d.b_minus.offset == m - 1);
  }
}
