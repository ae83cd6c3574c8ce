#include "oracles.hpp"
#include "xxl/polygon_complex.hpp"

#include <doctest.h>

using namespace xxl;

TEST_CASE("ball sizes: each polygon meets m others, one per vertex") {
  for (int m : {5, 6, 7, 8}) {
    const auto params = DihedralParams::make(m);
    CHECK(TreeOfPolygons::build(params, 0).polygons().size() == 1);
    CHECK(TreeOfPolygons::build(params, 1).polygons().size() == static_cast<std::size_t>(1 + m));
    const auto ball = TreeOfPolygons::build(params, 2);
    CHECK(ball.polygons().size() == static_cast<std::size_t>(1 + m + m * (m - 1)));
    CHECK(ball.adjacency_is_tree());
    // Interior vertices lie in exactly two polygons.
    for (const auto& poly : ball.polygons()) {
      if (poly.depth > 0) continue;
      for (std::size_t v : poly.vertices) CHECK(ball.vertices()[v].incidences.size() == 2);
    }
  }
  CHECK_THROWS(TreeOfPolygons::build(DihedralParams::make(5), TreeOfPolygons::max_radius + 1));
}

TEST_CASE("orbit counts of the quotient complex") {
  for (int m : {5, 6, 7, 8}) {
    const auto params = DihedralParams::make(m);
    const auto q = quotient_complex(TreeOfPolygons::build(params, 2), m <= 6);
    CHECK(q.vertex_orbits == static_cast<std::size_t>(m));
    CHECK(q.horizontal_edge_orbits == static_cast<std::size_t>(2 * m));
    CHECK(q.polygon_orbits == 2);
    CHECK(q.cells.euler_characteristic() == 0);
    CHECK(q.loops_meet_only_at_base);
  }
}

TEST_CASE("level-0 orbits match the exponent-sum invariant") {
  for (int m : {5, 6, 7, 8}) {
    const auto params = DihedralParams::make(m);
    const auto ball = TreeOfPolygons::build(params, 2);
    const VertexOrbitPartition orbits(ball, 3 * m);
    const std::size_t P = ball.base_polygon();
    const std::size_t Pp = *ball.neighbor_polygon();
    std::vector<std::size_t> near;
    for (std::size_t p : {P, Pp}) {
      for (std::size_t v : ball.polygons()[p].vertices) near.push_back(v);
    }
    for (std::size_t v : near) {
      for (std::size_t w : near) {
        const bool same_class = oracle::exponent_class(ball.vertices()[v].key, params) ==
                                oracle::exponent_class(ball.vertices()[w].key, params);
        CHECK(orbits.same(v, 0, w, 0) == same_class);
      }
    }
    // a moves (e, n) to (a·e, n + 1).
    const auto ae = ball.polygons()[P].vertices[static_cast<std::size_t>((*ball.position_in(P, ball.base_vertex()) + 1) % m)];
    CHECK(orbits.same(ball.base_vertex(), 0, ae, 1));
    CHECK(orbits.same(ball.base_vertex(), -1, ae, 0));
    CHECK_FALSE(orbits.same(ball.base_vertex(), 0, ae, 0));
  }
}

TEST_CASE("axes of a and b are consecutive sides at the base vertex") {
  for (int m : {5, 6, 7, 8}) {
    const auto params = DihedralParams::make(m);
    const auto ball = TreeOfPolygons::build(params, 2);
    const auto axes = verify_axes(ball);
    CHECK(axes.consecutive_at_e);
    if (params.parity == Parity::odd) {
      CHECK(fixed_vertex_of_u(ball) == ball.base_vertex());
      CHECK(axes.rotation_element == "t^" + std::to_string(params.p));
    } else {
      const auto o = even_orientation_orbits(ball);
      CHECK(o.orbits.size() == 2);
      CHECK(o.alternating);
    }
  }
}

TEST_CASE("vertex link: two arcs of the interior angle, infinite across polygons") {
  const auto params = DihedralParams::make(5);
  const auto ball = TreeOfPolygons::build(params, 1);
  const auto link = vertex_link(ball, ball.base_vertex());
  CHECK(link.nodes.size() == 4);
  CHECK(link.arcs.size() == 2);
  CHECK(link.distance(0, 1) == RationalAngle::pi_times(3, 5));
  CHECK(link.distance(0, 2).is_infinite());
  CHECK(horizontal_angle(params, {0, 1}, {0, 3}) == RationalAngle::pi_times(2, 5));
  CHECK(horizontal_angle(params, {0, 1}, {1, 3}).is_infinite());
}
