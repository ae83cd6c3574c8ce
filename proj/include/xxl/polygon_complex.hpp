#pragma once

#include "xxl/dihedral.hpp"
#include "xxl/rational_angle.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace xxl {

// Coset model of the tree of polygons T_m.
//
// Odd m, quotient <t> * <u>: vertices are cosets g<u>, polygons are cosets
// g<t>. The vertex h t^k <u> sits at position 2k (mod m) of the polygon h<t>,
// so t rotates every polygon by two steps.
//
// Even m, quotient <a> * <t>: vertices are elements g, polygons are cosets
// g<t>. The polygon h<t> has h t^k at position 2k and h t^k a^-1 at
// position 2k - 1 (mod m).
//
// Keys are canonical normal forms: vertex keys drop a trailing u (odd),
// polygon keys drop a trailing t.

struct PolygonSlot {
  NormalForm polygon;
  int position = 0;
};

NormalForm canonical_vertex(const NormalForm& g, const DihedralParams& params);
NormalForm canonical_polygon(const NormalForm& g, const DihedralParams& params);
/// The two polygons containing a vertex, with the vertex position in each.
std::vector<PolygonSlot> polygons_at(const NormalForm& vertex, const DihedralParams& params);
NormalForm vertex_at(const NormalForm& polygon, int position, const DihedralParams& params);
/// The base vertex e: the identity coset (odd) or a^-1 (even).
NormalForm base_vertex_key(const DihedralParams& params);

struct BallPolygon {
  NormalForm key;
  std::vector<std::size_t> vertices;  // by position 0..m-1
  int depth = 0;
  std::optional<std::size_t> parent;
};

struct PolygonIncidence {
  std::size_t polygon = 0;
  int position = 0;
};

struct BallVertex {
  NormalForm key;
  std::vector<PolygonIncidence> incidences;  // polygons of the ball only
  bool boundary() const { return incidences.size() < 2; }
};

/// All polygons of T_m within polygon-tree distance `radius` of the base
/// polygon P.
class TreeOfPolygons {
 public:
  static constexpr int max_radius = 4;

  static TreeOfPolygons build(const DihedralParams& params, int radius);

  const DihedralParams& params() const noexcept { return params_; }
  int radius() const noexcept { return radius_; }
  const std::vector<BallPolygon>& polygons() const noexcept { return polygons_; }
  const std::vector<BallVertex>& vertices() const noexcept { return vertices_; }

  std::size_t base_polygon() const noexcept { return 0; }
  std::size_t base_vertex() const noexcept { return base_vertex_; }
  /// The second polygon P' through e; absent at radius 0.
  std::optional<std::size_t> neighbor_polygon() const;

  std::optional<std::size_t> find_vertex(const NormalForm& key) const;
  std::optional<std::size_t> find_polygon(const NormalForm& key) const;
  std::optional<int> position_in(std::size_t polygon, std::size_t vertex) const;

  /// Image of a vertex or polygon under a quotient element, if inside the ball.
  std::optional<std::size_t> act_on_vertex(const NormalForm& g, std::size_t vertex) const;
  std::optional<std::size_t> act_on_polygon(const NormalForm& g, std::size_t polygon) const;

  /// Polygons sharing a vertex form a tree.
  bool adjacency_is_tree() const;
  /// Graph distances in the 1-skeleton (polygon sides) from one vertex.
  std::vector<int> side_distances(std::size_t from) const;

 private:
  DihedralParams params_;
  int radius_ = 0;
  std::vector<BallPolygon> polygons_;
  std::vector<BallVertex> vertices_;
  std::map<NormalForm, std::size_t> vertex_index_;
  std::map<NormalForm, std::size_t> polygon_index_;
  std::size_t base_vertex_ = 0;
};

/// A direction in the link of a vertex v of T_m: along the side from v to a
/// neighbouring vertex, inside one polygon.
struct SideDirection {
  std::size_t polygon = 0;
  int offset = 0;  // position of the target relative to v, 1..m-1
};

/// The link of one vertex of T_m: one arc per incident polygon.
struct MetricGraph {
  struct Arc {
    std::size_t from = 0;
    std::size_t to = 0;
    RationalAngle length;
  };
  std::vector<std::string> nodes;
  std::vector<SideDirection> directions;
  std::vector<Arc> arcs;

  /// Shortest arc distance; infinite across different polygons.
  RationalAngle distance(std::size_t i, std::size_t j) const;
};

MetricGraph vertex_link(const TreeOfPolygons& ball, std::size_t vertex);

/// Angle at v between the straight segments to two other vertices of the
/// polygons through v: |r1 - r2|·π/m inside one polygon, infinite across.
RationalAngle horizontal_angle(const DihedralParams& params, const SideDirection& x, const SideDirection& y);

/// The direction at e towards g·e for a quotient element g; g·e must share
/// a polygon with e.
SideDirection direction_towards(const TreeOfPolygons& ball, std::size_t vertex, std::size_t target);

struct CellCounts {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t faces = 0;
  std::size_t solids = 0;
  long euler_characteristic() const {
    return static_cast<long>(vertices) - static_cast<long>(edges) + static_cast<long>(faces) -
           static_cast<long>(solids);
  }
};

/// X_m = I2(m) \ (T_m × R), where the R factor is cut at integer levels and
/// a, b act on it by +1 (one unit stands for α).
struct QuotientComplex {
  DihedralParams params;
  int radius = 0;
  std::size_t vertex_orbits = 0;
  std::size_t horizontal_edge_orbits = 0;
  std::size_t polygon_orbits = 0;
  CellCounts cells;
  /// Orbit ids of the vertical faces over the sides [e, a·e] and [e, b·e],
  /// which carry the loops X_m^a and X_m^b.
  std::size_t loop_a_face = 0;
  std::size_t loop_b_face = 0;
  /// The two loops visit exactly one vertex orbit each, the one of (e, 0).
  bool loops_meet_only_at_base = false;
  /// Words checked by the free-action test, and the (word, vertex) pairs
  /// with a fixed point. Every such word is certified trivial; otherwise
  /// quotient_complex throws.
  std::size_t free_action_words = 0;
  std::size_t free_action_fixing = 0;
};

/// The free-action test enumerates all words of length <= 6; it can be
/// skipped when only the counts are wanted.
QuotientComplex quotient_complex(const TreeOfPolygons& ball, bool check_free_action = true);

/// Orbits of I2(m) on (vertex, level) pairs of the ball, as far as single
/// generator moves inside the ball and the level window connect them.
class VertexOrbitPartition {
 public:
  VertexOrbitPartition(const TreeOfPolygons& ball, int window);
  bool same(std::size_t v, int n, std::size_t w, int k) const;

 private:
  std::size_t cell(std::size_t v, int n) const;
  std::size_t root(std::size_t x) const;
  int window_;
  std::vector<std::size_t> parent_;
};

struct AxisWitness {
  char generator = 'a';
  /// Vertices of the ball moved by exactly one side (the combinatorial axis).
  std::vector<std::size_t> axis_vertices;
  /// The side of P on the axis: positions (i, i+1 mod m) in P.
  std::pair<int, int> side_in_p{0, 0};
};

struct AxesReport {
  AxisWitness a;
  AxisWitness b;
  bool consecutive_at_e = false;
  /// The rotation of P by t^p (odd) or t (even), in positions (multiply by 2π/m).
  int rotation_steps = 0;
  std::string rotation_element;
};

AxesReport verify_axes(const TreeOfPolygons& ball);

/// Odd m: the vertex fixed by u = w_m(a, b); throws unless it is unique.
std::size_t fixed_vertex_of_u(const TreeOfPolygons& ball);

struct OrientationOrbits {
  std::vector<std::vector<int>> orbits;  // positions in P
  bool alternating = false;
};

/// Even m: orbits of <t> on the vertices of P.
OrientationOrbits even_orientation_orbits(const TreeOfPolygons& ball);

}  // namespace xxl
