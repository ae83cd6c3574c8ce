#include "angle_printing.hpp"
#include "oracles.hpp"
#include "xxl/rankone.hpp"

#include <doctest.h>

#include <cmath>

using namespace xxl;

namespace {

const LabeledGraph triangle(int m) {
  const std::string l = std::to_string(m);
  return parse_graph("a b " + l + "\nb c " + l + "\na c " + l + "\n");
}

RankOneCertificate certify(const LabeledGraph& g, WeightMode mode = WeightMode::paper) {
  const auto alpha = Alpha::make(Rational(1, 10));
  return certify_rank1(g, choose_rank1_witness(g), mode, alpha);
}

const SeparatorSum& sum_for(const Passing& p, std::string_view separator) {
  for (const auto& s : p.separators) {
    if (s.separator == separator) return s;
  }
  throw std::logic_error("no separator");
}

bool table_holds_for_even(const Alpha& alpha) {
  for (int m : {6, 8, 10}) {
    if (!rank1_loop_table(DihedralParams::make(m), WeightMode::computed, alpha).all_hold()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("witness selection") {
  const auto w = choose_rank1_witness(triangle(5));
  CHECK(w.kind == RankOneWitness::Kind::loop);
  CHECK(w.a == 0);
  CHECK(w.b == 1);
  CHECK(w.c == 2);
  CHECK(w.parity == Parity::odd);

  const auto mixed = parse_graph("a b 6\na c 7\na d 8\nb c 5\nb d 6\nc d 8\n");
  const auto wm = choose_rank1_witness(mixed);
  CHECK(mixed.vertices()[wm.a] == "a");
  CHECK(mixed.vertices()[wm.b] == "c");
  CHECK(mixed.vertices()[wm.c] == "b");
  CHECK(wm.label == 7);

  const auto even = choose_rank1_witness(triangle(6));
  CHECK(even.parity == Parity::even);

  CHECK(choose_rank1_witness(parse_graph("vertex a\nvertex b\n")).kind == RankOneWitness::Kind::free_group);
  CHECK_THROWS_AS(choose_rank1_witness(parse_graph("a b 5\n")), NotApplicable);
  CHECK_THROWS_AS(choose_rank1_witness(parse_graph("a b 5\nb c 4\n")), NotApplicable);

  const auto explicit_w = rank1_witness_for(triangle(5), "b", "a", "c");
  CHECK(explicit_w.a == 0);
  CHECK(explicit_w.b == 1);
  CHECK_THROWS_AS(rank1_witness_for(triangle(5), "a", "b", "a"), InputError);
  CHECK_THROWS_AS(rank1_witness_for(triangle(5), "a", "z", "c"), InputError);
  CHECK_THROWS_AS(rank1_witness_for(parse_graph("a b 5\nvertex c\n"), "a", "c", "b"), InputError);
}

TEST_CASE("separator sums for triangle(5,5,5)") {
  const auto cert = certify(triangle(5));
  CHECK(cert.verdict == Verdict::certified);
  REQUIRE(cert.passings.size() == 2);
  const RationalAngle pi = RationalAngle::pi_times(1);
  const RationalAngle strict_pi = RationalAngle::pi_times(1, 1, true);
  const auto& out = cert.passings[0];  // ℓ⁺ to c⁻
  CHECK(sum_for(out, "a⁺").total == strict_pi);
  CHECK(sum_for(out, "a⁻").total.exceeds(pi));
  CHECK(sum_for(out, "b⁺").total.exceeds(pi));
  CHECK(sum_for(out, "b⁻").total == strict_pi);
  const auto& back = cert.passings[1];  // ℓ⁻ to c⁺, the mirror image
  CHECK(sum_for(back, "a⁺").total.exceeds(pi));
  CHECK(sum_for(back, "a⁻").total == strict_pi);
  CHECK(sum_for(back, "b⁺").total == strict_pi);
  CHECK(sum_for(back, "b⁻").total.exceeds(pi));
  for (const auto& p : cert.passings) {
    for (const auto& s : p.separators) CHECK(s.total.strict());
    CHECK(p.distance.exceeds(pi));
  }
}

TEST_CASE("separator sums for triangle(6,6,6)") {
  const auto cert = certify(triangle(6));
  CHECK(cert.verdict == Verdict::certified);
  const RationalAngle pi = RationalAngle::pi_times(1);
  const auto& p = cert.passings.front();
  CHECK(sum_for(p, "a⁺").total == RationalAngle::pi_times(1, 1, true));
  CHECK(sum_for(p, "a⁻").total.exceeds(pi));
  CHECK(sum_for(p, "b⁺").total.exceeds(pi));
  CHECK(sum_for(p, "b⁻").total.exceeds(pi));
}

TEST_CASE("free group and non-applicable inputs") {
  const auto g = parse_graph("vertex a\nvertex b\nvertex c\n");
  CHECK(certify(g).verdict == Verdict::certified);
  CHECK_THROWS_AS(certify(parse_graph("a b 5\n")), NotApplicable);
}

TEST_CASE("onward distances match exhaustive search") {
  for (const char* text : {"a b 5\nb c 5\na c 5\n", "a b 5\nb c 5\n", "a b 6\nb c 9\nc d 12\nd e 5\n",
                           "a b 7\na c 6\nb c 8\nc d 5\n", "a b 5\nvertex c\nc d 6\n"}) {
    CAPTURE(text);
    const auto g = parse_graph(text);
    const auto w = choose_rank1_witness(g);
    const auto cert = certify_rank1(g, w, WeightMode::paper);
    const auto pg = piece_graph(g, WeightMode::paper);
    auto index_of = [&](const std::string& name) {
      const auto it = std::find(pg.nodes.begin(), pg.nodes.end(), name);
      REQUIRE(it != pg.nodes.end());
      return static_cast<std::size_t>(it - pg.nodes.begin());
    };
    const std::size_t ab = *g.edge_index(w.a, w.b);
    for (const auto& p : cert.passings) {
      RationalAngle best = RationalAngle::infinite();
      for (const auto& s : p.separators) {
        CHECK(s.onwards == oracle::brute_force_distance(pg, index_of(s.separator), index_of(p.to), ab));
        CHECK(s.total == s.to_separator + s.onwards);
        best = std::min(best, s.total);
      }
      CHECK(best == p.distance);
    }
  }
}

TEST_CASE("reference loop table and x positions") {
  for (int m : {5, 6, 7, 8}) {
    CAPTURE(m);
    const auto params = DihedralParams::make(m);
    const auto table = rank1_loop_table(params, WeightMode::paper, Alpha::make(Rational(1, 10)));
    REQUIRE(table.entries.size() == 8);
    CHECK(table.meets_generator_loops_only_at_base);
    CHECK(table.across_exceeds_nine_tenths);
    const int expected_x = m % 2 ? params.p + 1 : params.p;
    CHECK(table.x_offset == expected_x);

    // x' is the vertex of P' in the level-0 orbit of x: same exponent class.
    const auto ball = TreeOfPolygons::build(params, 2);
    const std::size_t P = ball.base_polygon();
    const std::size_t Pp = *ball.neighbor_polygon();
    const std::size_t e = ball.base_vertex();
    const auto& pv = ball.polygons()[P].vertices;
    const auto& ppv = ball.polygons()[Pp].vertices;
    const auto x = pv[static_cast<std::size_t>((*ball.position_in(P, e) + table.x_offset) % m)];
    int matches = 0;
    for (int j = 1; j < m; ++j) {
      const auto y = ppv[static_cast<std::size_t>((*ball.position_in(Pp, e) + j) % m)];
      if (oracle::exponent_class(ball.vertices()[y].key, params) ==
          oracle::exponent_class(ball.vertices()[x].key, params)) {
        ++matches;
        CHECK(j == table.x_prime_offset);
      }
    }
    CHECK(matches == 1);

    for (const auto& entry : table.entries) {
      REQUIRE(entry.value);
      const double h = entry.horizontal->is_infinite() ? M_PI : std::min(entry.horizontal->radians(), M_PI);
      const double expected = std::acos(std::cos(h) * std::cos(std::atan(0.1)));
      CHECK(entry.value->midpoint() == doctest::Approx(expected).epsilon(1e-12));
    }
  }
}

TEST_CASE("evaluated loop angles: odd labels miss one along bound") {
  const auto alpha = Alpha::make(Rational(1, 10));
  for (int m : {5, 7}) {
    CAPTURE(m);
    const auto params = DihedralParams::make(m);
    const auto table = rank1_loop_table(params, WeightMode::computed, alpha);
    CHECK(table.entry("a⁺", true).holds);
    CHECK(table.entry("b⁻", true).holds);
    CHECK(table.entry("b⁺", false).holds);
    const auto& miss = table.entry("a⁻", false);
    CHECK_FALSE(miss.holds);
    CHECK(*miss.horizontal == RationalAngle::pi_times(params.p - 1, m));
    CHECK_FALSE(table.all_hold());
  }
  CHECK(table_holds_for_even(alpha));
}

TEST_CASE("computed-mode rank-one verdicts") {
  CHECK(certify(triangle(5), WeightMode::computed).verdict == Verdict::refuted);
  CHECK(certify(triangle(7), WeightMode::computed).verdict == Verdict::certified);
  CHECK(certify(triangle(6), WeightMode::computed).verdict == Verdict::certified);
  CHECK(certify(triangle(8), WeightMode::computed).verdict == Verdict::certified);
  const auto paper = certify(triangle(5));
  CHECK(paper.verdict == Verdict::certified);
  bool noted = false;
  for (const auto& n : paper.notes) noted = noted || n.find("∠(a⁻,ℓ⁻)") != std::string::npos;
  CHECK(noted);
}
