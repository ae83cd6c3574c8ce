#include "xxl/export.hpp"

#include <fmt/format.h>

#include <cmath>
#include <optional>

namespace xxl {

namespace {

constexpr double pi_value = 3.14159265358979323846;

std::string key_label(const NormalForm& key) {
  const auto s = format_normal_form(key);
  return s.empty() ? "1" : s;
}

std::string escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string tree_ball_dot(const TreeOfPolygons& ball) {
  const int m = ball.params().m;
  std::string out = fmt::format("graph tree_ball {{\n  label=\"T_{} ball of radius {}\";\n", m, ball.radius());
  for (std::size_t i = 0; i < ball.vertices().size(); ++i) {
    const bool base = i == ball.base_vertex();
    out += fmt::format("  v{} [label=\"{}\"{}];\n", i, escape(key_label(ball.vertices()[i].key)),
                       base ? ", shape=doublecircle" : "");
  }
  for (std::size_t p = 0; p < ball.polygons().size(); ++p) {
    const auto& poly = ball.polygons()[p];
    out += fmt::format("  subgraph cluster_p{} {{\n    label=\"{}<t>\";\n", p, escape(key_label(poly.key)));
    for (int k = 0; k < m; ++k) {
      out += fmt::format("    v{} -- v{};\n", poly.vertices[k], poly.vertices[(k + 1) % m]);
    }
    out += "  }\n";
  }
  out += "}\n";
  return out;
}

std::string tree_ball_svg(const TreeOfPolygons& ball) {
  struct Point {
    double x = 0;
    double y = 0;
  };
  const int m = ball.params().m;
  const auto& polys = ball.polygons();
  std::vector<Point> centre(polys.size());
  std::vector<double> radius(polys.size(), 0);
  std::vector<double> phase(polys.size(), 0);
  std::vector<std::optional<Point>> at(ball.vertices().size());

  auto corner = [&](std::size_t p, int k) {
    const double theta = phase[p] + 2 * pi_value * k / m;
    return Point{centre[p].x + radius[p] * std::cos(theta), centre[p].y + radius[p] * std::sin(theta)};
  };

  const int e_pos = *ball.position_in(0, ball.base_vertex());
  radius[0] = 100;
  phase[0] = pi_value / 2 - 2 * pi_value * e_pos / m;  // e at the bottom
  for (std::size_t p = 0; p < polys.size(); ++p) {
    if (polys[p].parent) {
      const std::size_t parent = *polys[p].parent;
      std::size_t shared = 0;
      for (std::size_t v : polys[p].vertices) {
        if (ball.position_in(parent, v)) shared = v;
      }
      const Point pv = *at[shared];
      const double dx = pv.x - centre[parent].x, dy = pv.y - centre[parent].y;
      const double len = std::hypot(dx, dy);
      radius[p] = radius[parent] * 0.45;
      centre[p] = {pv.x + dx / len * radius[p], pv.y + dy / len * radius[p]};
      const int j = *ball.position_in(p, shared);
      phase[p] = std::atan2(pv.y - centre[p].y, pv.x - centre[p].x) - 2 * pi_value * j / m;
    }
    for (int k = 0; k < m; ++k) {
      auto& slot = at[polys[p].vertices[k]];
      if (!slot) slot = corner(p, k);
    }
  }

  double lo_x = 0, lo_y = 0, hi_x = 0, hi_y = 0;
  for (const auto& pt : at) {
    if (!pt) continue;
    lo_x = std::min(lo_x, pt->x);
    lo_y = std::min(lo_y, pt->y);
    hi_x = std::max(hi_x, pt->x);
    hi_y = std::max(hi_y, pt->y);
  }
  for (std::size_t p = 0; p < polys.size(); ++p) {
    for (int k = 0; k < m; ++k) {
      const Point c = corner(p, k);
      lo_x = std::min(lo_x, c.x);
      lo_y = std::min(lo_y, c.y);
      hi_x = std::max(hi_x, c.x);
      hi_y = std::max(hi_y, c.y);
    }
  }
  const double margin = 10;
  std::string out = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{:.3f} {:.3f} {:.3f} {:.3f}\">\n"
      "<title>T_{} ball of radius {} (schematic)</title>\n",
      lo_x - margin, lo_y - margin, hi_x - lo_x + 2 * margin, hi_y - lo_y + 2 * margin, m, ball.radius());
  for (std::size_t p = 0; p < polys.size(); ++p) {
    std::string points;
    for (int k = 0; k < m; ++k) {
      const Point c = corner(p, k);
      points += fmt::format("{}{:.3f},{:.3f}", k ? " " : "", c.x, c.y);
    }
    out += fmt::format("<polygon points=\"{}\" fill=\"{}\" stroke=\"black\" stroke-width=\"{:.3f}\"/>\n", points,
                       p == 0 ? "#dde8f5" : "#f5f5f5", std::max(0.2, radius[p] / 100));
  }
  const Point e = *at[ball.base_vertex()];
  out += fmt::format("<circle cx=\"{:.3f}\" cy=\"{:.3f}\" r=\"3.000\" fill=\"red\"/>\n", e.x, e.y);
  out += "</svg>\n";
  return out;
}

std::string piece_graph_dot(const PieceGraph& pg) {
  std::string out = fmt::format("graph piece_graph {{\n  label=\"directions at the base vertex ({} weights)\";\n",
                                to_string(pg.mode));
  for (std::size_t i = 0; i < pg.nodes.size(); ++i) out += fmt::format("  n{} [label=\"{}\"];\n", i, pg.nodes[i]);
  for (const auto& e : pg.edges) {
    out += fmt::format("  n{} -- n{} [label=\"{}\", piece=\"{}\", kind=\"{}\"];\n", e.from, e.to, e.weight.describe(),
                       pg.pieces[e.piece], to_string(e.kind));
  }
  out += "}\n";
  return out;
}

std::string link_dot(const MetricGraph& link) {
  std::string out = "graph vertex_link {\n";
  for (std::size_t i = 0; i < link.nodes.size(); ++i) {
    out += fmt::format("  d{} [label=\"{}\"];\n", i, escape(link.nodes[i]));
  }
  for (const auto& arc : link.arcs) {
    out += fmt::format("  d{} -- d{} [label=\"{}\"];\n", arc.from, arc.to, arc.length.describe());
  }
  out += "}\n";
  return out;
}

}  // namespace xxl
