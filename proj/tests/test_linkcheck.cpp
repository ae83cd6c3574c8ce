#include "angle_printing.hpp"
#include "oracles.hpp"
#include "xxl/linkcheck.hpp"
#include "xxl/presentation.hpp"

#include <doctest.h>

#include <set>

using namespace xxl;

namespace {

const RationalAngle two_pi = RationalAngle::pi_times(2);

Certificate certify(std::string_view text, WeightMode mode = WeightMode::paper) {
  const auto alpha = mode == WeightMode::computed ? std::optional<Alpha>(Alpha::make(Rational(1, 10))) : std::nullopt;
  return systole_certificate(piece_graph(parse_graph(text), mode, alpha));
}

}  // namespace

TEST_CASE("piece graph of a triangle") {
  const auto pg = piece_graph(parse_graph("a b 5\nb c 5\na c 5\n"), WeightMode::paper);
  CHECK(pg.nodes.size() == 6);
  CHECK(pg.pieces.size() == 3);
  CHECK(pg.edges.size() == 18);
  std::size_t same = 0, mixed = 0, antipodal = 0;
  for (const auto& e : pg.edges) {
    const bool across = pg.generator_of(e.from) != pg.generator_of(e.to);
    CHECK(across == (e.kind != EdgeKind::antipodal));
    same += e.kind == EdgeKind::same_sign;
    mixed += e.kind == EdgeKind::mixed_sign;
    antipodal += e.kind == EdgeKind::antipodal;
  }
  CHECK(same == 6);
  CHECK(mixed == 6);
  CHECK(antipodal == 6);
}

TEST_CASE("fixed weights by label") {
  const auto w5 = piece_weights(5, WeightMode::paper, std::nullopt);
  CHECK(w5.same_sign == RationalAngle::pi_times(4, 5, true));
  CHECK(w5.mixed_sign == RationalAngle::pi_times(3, 5, true));
  CHECK(w5.antipodal == RationalAngle::pi_times(1));
  const auto w6 = piece_weights(6, WeightMode::paper, std::nullopt);
  CHECK(w6.mixed_sign == RationalAngle::pi_times(2, 3, true));
  CHECK_THROWS_AS(piece_weights(4, WeightMode::paper, std::nullopt), NotApplicable);
}

TEST_CASE("computed weights sit just below the certified angles") {
  const auto alpha = Alpha::make(Rational(1, 10));
  for (int m : {5, 6, 7, 8}) {
    const auto w = piece_weights(m, WeightMode::computed, alpha);
    const auto paper = piece_weights(m, WeightMode::paper, std::nullopt);
    CHECK(w.same_sign.strict());
    CHECK(w.same_sign.at_least(paper.same_sign));
    CHECK(w.mixed_sign.at_least(paper.mixed_sign));
    const auto table = piece_angle_table(DihedralParams::make(m), alpha);
    CHECK(w.same_sign.radians() <= table.same().midpoint());
    CHECK(table.same().midpoint() - w.same_sign.radians() < 1e-5);
  }
}

TEST_CASE("link condition on the example graphs") {
  const auto t555 = certify("a b 5\nb c 5\na c 5\n");
  CHECK(t555.verdict == Verdict::certified);
  CHECK(t555.total == RationalAngle::pi_times(2, 1, true));
  CHECK(t555.cycle.size() == 3);
  std::set<std::size_t> pieces;
  for (const auto& s : t555.cycle) pieces.insert(s.piece);
  CHECK(pieces.size() == 3);

  const auto t666 = certify("a b 6\nb c 6\na c 6\n");
  CHECK(t666.verdict == Verdict::certified);
  CHECK(t666.total == RationalAngle::pi_times(32, 15, true));

  const auto k4 = certify("a b 5\na c 5\na d 5\nb c 5\nb d 5\nc d 5\n");
  CHECK(k4.verdict == Verdict::certified);
  CHECK(k4.total == RationalAngle::pi_times(2, 1, true));

  const auto edgeless = certify("vertex a\nvertex b\nvertex c\n");
  CHECK(edgeless.verdict == Verdict::certified);
  CHECK(edgeless.case_tags == std::vector<std::string>{"wedge of circles"});

  const auto path = certify("a b 5\nb c 5\n");
  CHECK(path.verdict == Verdict::certified);
  CHECK(path.total.is_infinite());
  CHECK(path.cycle.empty());

  CHECK_THROWS_AS(certify("a b 5\nb c 4\n"), NotApplicable);
}

TEST_CASE("the witness cycle is admissible and sums to the total") {
  const auto pg = piece_graph(parse_graph("a b 5\nb c 6\na c 7\nc d 5\n"), WeightMode::paper);
  const auto cert = systole_certificate(pg);
  REQUIRE_FALSE(cert.cycle.empty());
  RationalAngle sum;
  for (std::size_t i = 0; i < cert.cycle.size(); ++i) {
    const auto& step = cert.cycle[i];
    const auto& next = cert.cycle[(i + 1) % cert.cycle.size()];
    const auto& e = pg.edges[step.edge];
    CHECK(step.piece == e.piece);
    CHECK(step.piece != next.piece);
    CHECK((e.from == step.node || e.to == step.node));
    const std::size_t end = e.from == step.node ? e.to : e.from;
    CHECK(end == next.node);
    sum = sum + step.weight;
  }
  CHECK(sum == cert.total);
}

TEST_CASE("computed mode on the triangles") {
  const auto t555 = certify("a b 5\nb c 5\na c 5\n", WeightMode::computed);
  CHECK(t555.verdict == Verdict::certified);
  CHECK(t555.total.exceeds(two_pi));
  const auto t666 = certify("a b 6\nb c 6\na c 6\n", WeightMode::computed);
  CHECK(t666.total.exceeds(RationalAngle::pi_times(32, 15)));
}

TEST_CASE("search agrees with brute force on all graphs up to five vertices") {
  const auto alpha = Alpha::make(Rational(1, 10));
  for (WeightMode mode : {WeightMode::paper, WeightMode::computed}) {
    CAPTURE(to_string(mode));
    std::size_t graphs = 0;
    for (int n = 1; n <= 5; ++n) {
      for (const auto& g : oracle::graph_classes(n, {5, 6, 7})) {
        const auto pg = piece_graph(g, mode, alpha);
        const auto expected = oracle::brute_force_systole(pg);
        const auto found = systole_minimum(pg);
        CHECK(found == expected);
        CHECK(found.at_least(two_pi));
        ++graphs;
      }
    }
    CHECK(graphs > 1000);
  }
}

TEST_CASE("cycles of four or more segments exceed 2π symbolically") {
  // Every segment weighs at least the smallest label weight, strictly more
  // than 3π/5, so four segments exceed 12π/5 > 2π. Checked over paper mode
  // and computed mode for labels 5..40.
  auto check_label = [](const PieceWeights& w) {
    const RationalAngle smallest = std::min({w.same_sign, w.mixed_sign, w.antipodal});
    CHECK(smallest.at_least(RationalAngle::pi_times(3, 5, true)));
    CHECK((smallest + smallest + smallest + smallest).exceeds(two_pi));
  };
  for (int m = 5; m <= 40; ++m) check_label(piece_weights(m, WeightMode::paper, std::nullopt));
  const auto alpha = Alpha::make(Rational(1, 10));
  for (int m = 5; m <= 40; ++m) check_label(piece_weights(m, WeightMode::computed, alpha));
}

TEST_CASE("gluing report") {
  const auto r = check_gluing(parse_graph("a b 5\nb c 6\nvertex d\n"));
  CHECK(r.pieces.size() == 2);
  CHECK(r.circles.size() == 4);
  CHECK_FALSE(r.wedge_of_circles);
  CHECK(check_gluing(parse_graph("vertex a\nvertex b\n")).wedge_of_circles);
  CHECK_THROWS_AS(check_gluing(parse_graph("a b 3\n")), NotApplicable);
  CHECK(piece_vertex_orbits(5) == 5);
  CHECK(piece_vertex_orbits(6) == 6);
}
