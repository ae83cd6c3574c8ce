#pragma once

#include "xxl/linkcheck.hpp"
#include "xxl/polygon_complex.hpp"

#include <string>

namespace xxl {

/// Vertices and polygon sides of the ball; one cluster per polygon.
std::string tree_ball_dot(const TreeOfPolygons& ball);
/// Schematic radial drawing: the base polygon is centred and each child
/// polygon hangs outwards from the vertex it shares with its parent, at
/// 0.45 of the parent's size. Not metrically faithful.
std::string tree_ball_svg(const TreeOfPolygons& ball);
/// Directions as nodes, one edge per piece-graph edge, labelled by weight.
std::string piece_graph_dot(const PieceGraph& pg);
/// The link of one vertex of T_m, arcs labelled by length.
std::string link_dot(const MetricGraph& link);

}  // namespace xxl
