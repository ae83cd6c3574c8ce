#pragma once

#include "xxl/geometry.hpp"
#include "xxl/presentation.hpp"
#include "xxl/rational_angle.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace xxl {

enum class WeightMode { paper, computed };
std::string_view to_string(WeightMode mode);

enum class EdgeKind { same_sign, mixed_sign, antipodal, loop_direction };
std::string_view to_string(EdgeKind kind);

struct PieceEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  std::size_t piece = 0;
  RationalAngle weight;
  EdgeKind kind = EdgeKind::same_sign;
};

/// Weighted graph on the directions s⁺ (node 2i) and s⁻ (node 2i+1) at the
/// base vertex of X_A; every edge lives in one piece, i.e. one edge of Γ.
struct PieceGraph {
  LabeledGraph graph;
  WeightMode mode = WeightMode::paper;
  std::optional<Alpha> alpha;
  std::vector<std::string> nodes;
  std::vector<std::string> pieces;  // "{a,b}" per edge of Γ, same order
  std::vector<PieceEdge> edges;

  static std::size_t plus(std::size_t generator) { return 2 * generator; }
  static std::size_t minus(std::size_t generator) { return 2 * generator + 1; }
  /// Adds the two nodes ℓ⁺ and ℓ⁻ and returns the index of ℓ⁺.
  std::size_t add_loop_nodes(const std::string& name);
  std::size_t generator_of(std::size_t node) const { return node / 2; }
};

/// Weights per piece: same-sign pairs 4π/5 strict, mixed-sign pairs 3π/5
/// strict (label 5) or 2π/3 strict (label >= 6), s⁺s⁻ exactly π. In
/// computed mode the first two come from the certified angle table, snapped
/// down to k/10^6·π.
PieceGraph piece_graph(const LabeledGraph& g, WeightMode mode, const std::optional<Alpha>& alpha = std::nullopt);

/// Weights of one piece with label m.
struct PieceWeights {
  RationalAngle same_sign;
  RationalAngle mixed_sign;
  RationalAngle antipodal;
};
PieceWeights piece_weights(std::int64_t label, WeightMode mode, const std::optional<Alpha>& alpha);

enum class Verdict { certified, refuted, not_applicable };
std::string_view to_string(Verdict v);

struct CycleStep {
  std::size_t node = 0;   // segment starts here
  std::size_t piece = 0;  // and runs inside this piece
  std::size_t edge = 0;   // index into PieceGraph::edges
  RationalAngle weight;
};

struct Certificate {
  Verdict verdict = Verdict::not_applicable;
  std::vector<CycleStep> cycle;
  RationalAngle total = RationalAngle::infinite();
  std::vector<std::string> case_tags;
  std::string note;
};

/// Minimum total weight over closed walks whose cyclically consecutive
/// segments lie in different pieces and which meet at least three pieces.
/// Walks confined to one or two pieces are tagged, not searched. Certified
/// iff the minimum is at least 2π.
Certificate systole_certificate(const PieceGraph& pg);

/// Exact minimum only (value and strictness), infinite when no walk exists.
RationalAngle systole_minimum(const PieceGraph& pg);

struct GluingReport {
  std::vector<std::string> pieces;                         // "{a,b} label 5"
  std::vector<std::pair<std::string, std::vector<std::string>>> circles;  // generator -> pieces
  std::size_t vertices = 0;
  long euler_characteristic = 0;
  bool wedge_of_circles = false;
};

/// Lists how each generator circle is glued into its pieces. Throws
/// NotApplicable on a label below 5.
GluingReport check_gluing(const LabeledGraph& g);

/// Vertex orbits of X_m: m for odd m, 2p = m for even m.
std::size_t piece_vertex_orbits(std::int64_t m);

}  // namespace xxl
