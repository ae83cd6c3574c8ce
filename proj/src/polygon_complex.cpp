#include "xxl/polygon_complex.hpp"

#include "xxl/word_oracle.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace xxl {

namespace {

int mod(long x, int m) {
  long r = x % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

NormalForm power_of(Symbol s, long k, const DihedralParams& params) {
  return syllable_normal_form(letter_power(params.quotient_alphabet(), s, k), params);
}

long trailing_exponent(const NormalForm& g, Symbol s) {
  const auto& syl = g.syllables();
  return (!syl.empty() && syl.back().symbol == s) ? syl.back().exponent : 0;
}

NormalForm quotient_image(std::string_view word, const DihedralParams& params) {
  return act_on_cover(parse_word(word, Alphabet::ab), params).image;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x != y) parent_[std::max(x, y)] = std::min(x, y);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

NormalForm canonical_vertex(const NormalForm& g, const DihedralParams& params) {
  return params.parity == Parity::odd ? strip_trailing(g, Symbol::u) : g;
}

NormalForm canonical_polygon(const NormalForm& g, const DihedralParams&) { return strip_trailing(g, Symbol::t); }

std::vector<PolygonSlot> polygons_at(const NormalForm& vertex, const DihedralParams& params) {
  const int m = params.m;
  std::vector<PolygonSlot> out;
  const NormalForm y = canonical_vertex(vertex, params);
  out.push_back({strip_trailing(y, Symbol::t), mod(2 * trailing_exponent(y, Symbol::t), m)});
  if (params.parity == Parity::odd) {
    out.push_back({canonical_polygon(multiply(y, power_of(Symbol::u, 1, params), params), params), 0});
  } else {
    const NormalForm z = multiply(y, power_of(Symbol::a, 1, params), params);
    out.push_back({strip_trailing(z, Symbol::t), mod(2 * trailing_exponent(z, Symbol::t) - 1, m)});
  }
  return out;
}

NormalForm vertex_at(const NormalForm& polygon, int position, const DihedralParams& params) {
  const int m = params.m;
  const int j = mod(position, m);
  if (params.parity == Parity::odd) {
    const long k = mod(static_cast<long>(j) * ((m + 1) / 2), m);
    return canonical_vertex(multiply(polygon, power_of(Symbol::t, k, params), params), params);
  }
  if (j % 2 == 0) return multiply(polygon, power_of(Symbol::t, j / 2, params), params);
  const NormalForm step = multiply(power_of(Symbol::t, (j + 1) / 2, params), power_of(Symbol::a, -1, params), params);
  return multiply(polygon, step, params);
}

NormalForm base_vertex_key(const DihedralParams& params) {
  return params.parity == Parity::odd ? NormalForm() : power_of(Symbol::a, -1, params);
}

TreeOfPolygons TreeOfPolygons::build(const DihedralParams& params, int radius) {
  if (radius < 0 || radius > max_radius) {
    throw std::invalid_argument("ball radius must lie in [0, " + std::to_string(max_radius) + "]");
  }
  TreeOfPolygons ball;
  ball.params_ = params;
  ball.radius_ = radius;

  ball.polygons_.push_back({NormalForm(), {}, 0, std::nullopt});
  ball.polygon_index_.emplace(NormalForm(), 0);
  for (std::size_t head = 0; head < ball.polygons_.size(); ++head) {
    if (ball.polygons_[head].depth == radius) continue;
    const NormalForm key = ball.polygons_[head].key;
    const int depth = ball.polygons_[head].depth;
    for (int j = 0; j < params.m; ++j) {
      for (const auto& slot : polygons_at(vertex_at(key, j, params), params)) {
        if (ball.polygon_index_.count(slot.polygon)) continue;
        ball.polygon_index_.emplace(slot.polygon, ball.polygons_.size());
        ball.polygons_.push_back({slot.polygon, {}, depth + 1, head});
      }
    }
  }

  for (std::size_t pid = 0; pid < ball.polygons_.size(); ++pid) {
    auto& poly = ball.polygons_[pid];
    for (int j = 0; j < params.m; ++j) {
      const NormalForm v = vertex_at(poly.key, j, params);
      auto [it, inserted] = ball.vertex_index_.emplace(v, ball.vertices_.size());
      if (inserted) ball.vertices_.push_back({v, {}});
      poly.vertices.push_back(it->second);
      ball.vertices_[it->second].incidences.push_back({pid, j});

      const auto slots = polygons_at(v, params);
      const bool consistent = std::any_of(slots.begin(), slots.end(), [&](const PolygonSlot& s) {
        return s.polygon == poly.key && s.position == j;
      });
      if (!consistent) throw std::logic_error("polygon model is inconsistent at " + format_normal_form(v));
    }
  }

  const auto e = ball.find_vertex(base_vertex_key(params));
  if (!e) throw std::logic_error("base vertex missing from the ball");
  ball.base_vertex_ = *e;
  return ball;
}

std::optional<std::size_t> TreeOfPolygons::neighbor_polygon() const {
  for (const auto& inc : vertices_[base_vertex_].incidences) {
    if (inc.polygon != base_polygon()) return inc.polygon;
  }
  return std::nullopt;
}

std::optional<std::size_t> TreeOfPolygons::find_vertex(const NormalForm& key) const {
  auto it = vertex_index_.find(key);
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> TreeOfPolygons::find_polygon(const NormalForm& key) const {
  auto it = polygon_index_.find(key);
  if (it == polygon_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> TreeOfPolygons::position_in(std::size_t polygon, std::size_t vertex) const {
  for (const auto& inc : vertices_[vertex].incidences) {
    if (inc.polygon == polygon) return inc.position;
  }
  return std::nullopt;
}

std::optional<std::size_t> TreeOfPolygons::act_on_vertex(const NormalForm& g, std::size_t vertex) const {
  return find_vertex(canonical_vertex(multiply(g, vertices_[vertex].key, params_), params_));
}

std::optional<std::size_t> TreeOfPolygons::act_on_polygon(const NormalForm& g, std::size_t polygon) const {
  return find_polygon(canonical_polygon(multiply(g, polygons_[polygon].key, params_), params_));
}

bool TreeOfPolygons::adjacency_is_tree() const {
  UnionFind uf(polygons_.size());
  std::size_t links = 0;
  for (const auto& v : vertices_) {
    for (std::size_t i = 1; i < v.incidences.size(); ++i) {
      if (uf.find(v.incidences[0].polygon) == uf.find(v.incidences[i].polygon)) return false;
      uf.unite(v.incidences[0].polygon, v.incidences[i].polygon);
      ++links;
    }
  }
  return links + 1 == polygons_.size();
}

std::vector<int> TreeOfPolygons::side_distances(std::size_t from) const {
  std::vector<int> dist(vertices_.size(), -1);
  std::deque<std::size_t> queue{from};
  dist[from] = 0;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (const auto& inc : vertices_[v].incidences) {
      const auto& poly = polygons_[inc.polygon];
      for (int step : {1, -1}) {
        const std::size_t w = poly.vertices[mod(inc.position + step, params_.m)];
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
      }
    }
  }
  return dist;
}

RationalAngle MetricGraph::distance(std::size_t i, std::size_t j) const {
  if (i == j) return RationalAngle();
  for (const auto& arc : arcs) {
    if ((arc.from == i && arc.to == j) || (arc.from == j && arc.to == i)) return arc.length;
  }
  return RationalAngle::infinite();
}

RationalAngle horizontal_angle(const DihedralParams& params, const SideDirection& x, const SideDirection& y) {
  if (x.polygon != y.polygon) return RationalAngle::infinite();
  return RationalAngle::pi_times(std::abs(x.offset - y.offset), params.m);
}

MetricGraph vertex_link(const TreeOfPolygons& ball, std::size_t vertex) {
  const auto& v = ball.vertices().at(vertex);
  if (v.boundary()) throw std::invalid_argument("vertex " + format_normal_form(v.key) + " lies on the boundary of the ball");
  const int m = ball.params().m;
  MetricGraph link;
  for (const auto& inc : v.incidences) {
    const auto& poly = ball.polygons()[inc.polygon];
    for (int offset : {1, m - 1}) {
      const auto& target = ball.vertices()[poly.vertices[mod(inc.position + offset, m)]];
      link.nodes.push_back("towards " + format_normal_form(target.key));
      link.directions.push_back({inc.polygon, offset});
    }
    const std::size_t n = link.nodes.size();
    link.arcs.push_back({n - 2, n - 1, RationalAngle::pi_times(m - 2, m)});
  }
  return link;
}

SideDirection direction_towards(const TreeOfPolygons& ball, std::size_t vertex, std::size_t target) {
  for (const auto& inc : ball.vertices()[vertex].incidences) {
    if (auto pos = ball.position_in(inc.polygon, target)) {
      return {inc.polygon, mod(*pos - inc.position, ball.params().m)};
    }
  }
  throw std::invalid_argument("vertices share no polygon");
}

QuotientComplex quotient_complex(const TreeOfPolygons& ball, bool check_free_action) {
  if (ball.radius() < 1) throw std::invalid_argument("orbit computation needs ball radius >= 1");
  const auto& params = ball.params();
  const int m = params.m;
  const int window = 3 * m;
  const std::size_t levels = 2 * window + 1;
  const auto& polys = ball.polygons();
  const auto& verts = ball.vertices();

  struct Move {
    NormalForm image;
    int shift;
  };
  std::vector<Move> moves;
  for (const char* g : {"a", "a^-1", "b", "b^-1"}) {
    const auto rec = act_on_cover(parse_word(g, Alphabet::ab), params);
    moves.push_back({rec.image, static_cast<int>(rec.translation)});
  }

  auto level_ok = [&](int n) { return n >= -window && n <= window; };
  auto vcell = [&](std::size_t v, int n) { return v * levels + static_cast<std::size_t>(n + window); };
  auto scell = [&](std::size_t p, int j, int n) {
    return (p * m + static_cast<std::size_t>(j)) * levels + static_cast<std::size_t>(n + window);
  };
  auto pcell = [&](std::size_t p, int n) { return p * levels + static_cast<std::size_t>(n + window); };

  UnionFind vuf(verts.size() * levels);
  UnionFind suf(polys.size() * m * levels);
  UnionFind puf(polys.size() * levels);

  for (const auto& mv : moves) {
    for (std::size_t v = 0; v < verts.size(); ++v) {
      const auto w = ball.act_on_vertex(mv.image, v);
      if (!w) continue;
      for (int n = -window; n <= window; ++n) {
        if (level_ok(n + mv.shift)) vuf.unite(vcell(v, n), vcell(*w, n + mv.shift));
      }
    }
    for (std::size_t p = 0; p < polys.size(); ++p) {
      const auto q = ball.act_on_polygon(mv.image, p);
      if (!q) continue;
      for (int j = 0; j < m; ++j) {
        const auto v0 = ball.act_on_vertex(mv.image, polys[p].vertices[j]);
        const auto v1 = ball.act_on_vertex(mv.image, polys[p].vertices[mod(j + 1, m)]);
        const int j0 = v0 ? ball.position_in(*q, *v0).value_or(-1) : -1;
        const int j1 = v1 ? ball.position_in(*q, *v1).value_or(-1) : -1;
        if (j0 < 0 || j1 < 0 || mod(j0 + 1, m) != j1) throw std::logic_error("generator does not preserve polygon orientation");
        for (int n = -window; n <= window; ++n) {
          if (level_ok(n + mv.shift)) suf.unite(scell(p, j, n), scell(*q, j0, n + mv.shift));
        }
      }
      for (int n = -window; n <= window; ++n) {
        if (level_ok(n + mv.shift)) puf.unite(pcell(p, n), pcell(*q, n + mv.shift));
      }
    }
  }

  // Orbits are counted on the cells of P over levels [-2m, 2m]. Every class
  // found there must also meet levels [0, 2m), otherwise the ball was too
  // small to connect the translates.
  auto count_classes = [&](UnionFind& uf, const std::vector<std::pair<std::size_t, int>>& cells,
                           std::map<std::size_t, std::size_t>& index) {
    std::map<std::size_t, bool> closed;
    for (const auto& [cell, n] : cells) {
      const auto root = uf.find(cell);
      index.emplace(root, index.size());
      closed[root] = closed[root] || (n >= 0 && n < 2 * m);
    }
    for (const auto& [root, ok] : closed) {
      if (!ok) throw std::runtime_error("orbit computation inconsistent with ball truncation; increase the radius");
    }
    return index.size();
  };

  const std::size_t P = ball.base_polygon();
  std::vector<std::pair<std::size_t, int>> vlist, slist, plist;
  for (int n = -2 * m; n <= 2 * m; ++n) {
    for (int j = 0; j < m; ++j) {
      vlist.push_back({vcell(polys[P].vertices[j], n), n});
      slist.push_back({scell(P, j, n), n});
    }
    plist.push_back({pcell(P, n), n});
  }
  std::map<std::size_t, std::size_t> vindex, sindex, pindex;

  QuotientComplex out;
  out.params = params;
  out.radius = ball.radius();
  out.vertex_orbits = count_classes(vuf, vlist, vindex);
  out.horizontal_edge_orbits = count_classes(suf, slist, sindex);
  out.polygon_orbits = count_classes(puf, plist, pindex);
  // Vertical cells are products of the horizontal ones with a unit interval.
  out.cells.vertices = out.vertex_orbits;
  out.cells.edges = out.horizontal_edge_orbits + out.vertex_orbits;
  out.cells.faces = out.polygon_orbits + out.horizontal_edge_orbits;
  out.cells.solids = out.polygon_orbits;

  const std::size_t e = ball.base_vertex();
  const auto Pp = ball.neighbor_polygon();
  const auto ae = ball.act_on_vertex(moves[0].image, e);
  const auto be = ball.act_on_vertex(moves[2].image, e);
  if (!Pp || !ae || !be) throw std::logic_error("base configuration missing from the ball");
  const auto side_of = [&](std::size_t target) {
    const auto dir = direction_towards(ball, e, target);
    const int pos = *ball.position_in(dir.polygon, e);
    // The side from e to its neighbour: starts at e (offset +1) or ends at e (offset -1).
    const int start = dir.offset == 1 ? pos : mod(pos - 1, m);
    if (dir.offset != 1 && dir.offset != m - 1) throw std::logic_error("generator moves e off a side");
    const auto root = suf.find(scell(dir.polygon, start, 0));
    auto it = sindex.find(root);
    if (it == sindex.end()) throw std::runtime_error("orbit computation inconsistent with ball truncation; increase the radius");
    return it->second;
  };
  out.loop_a_face = side_of(*ae);
  out.loop_b_face = side_of(*be);
  const auto base_class = vuf.find(vcell(e, 0));
  out.loops_meet_only_at_base = out.loop_a_face != out.loop_b_face && vuf.find(vcell(*ae, 1)) == base_class &&
                                vuf.find(vcell(*be, 1)) == base_class;

  if (!check_free_action) return out;

  // Free action: a word of length <= 6 fixing a vertex of P at level 0 must be
  // certified trivial by the rewriting oracle.
  const auto oracle = enumerate_ball(params, 6);
  const std::size_t identity_class = oracle.class_of.front();
  for (std::size_t i = 0; i < oracle.words.size(); ++i) {
    const auto rec = act_on_cover(oracle.words[i], params);
    ++out.free_action_words;
    if (rec.translation != 0) continue;
    for (std::size_t v : polys[P].vertices) {
      if (canonical_vertex(multiply(rec.image, verts[v].key, params), params) != verts[v].key) continue;
      ++out.free_action_fixing;
      if (oracle.class_of[i] != identity_class) {
        throw std::runtime_error("word " + format_word(oracle.words[i]) + " fixes a vertex but is not certified trivial");
      }
    }
  }
  return out;
}

VertexOrbitPartition::VertexOrbitPartition(const TreeOfPolygons& ball, int window) : window_(window) {
  const auto& params = ball.params();
  const std::size_t n = ball.vertices().size() * static_cast<std::size_t>(2 * window + 1);
  UnionFind uf(n);
  for (const char* g : {"a", "a^-1", "b", "b^-1"}) {
    const auto rec = act_on_cover(parse_word(g, Alphabet::ab), params);
    const int shift = static_cast<int>(rec.translation);
    for (std::size_t v = 0; v < ball.vertices().size(); ++v) {
      const auto w = ball.act_on_vertex(rec.image, v);
      if (!w) continue;
      for (int level = -window; level <= window; ++level) {
        if (std::abs(level + shift) <= window) uf.unite(cell(v, level), cell(*w, level + shift));
      }
    }
  }
  parent_.resize(n);
  for (std::size_t i = 0; i < n; ++i) parent_[i] = uf.find(i);
}

std::size_t VertexOrbitPartition::cell(std::size_t v, int n) const {
  if (std::abs(n) > window_) throw std::out_of_range("level outside the orbit window");
  return v * static_cast<std::size_t>(2 * window_ + 1) + static_cast<std::size_t>(n + window_);
}

std::size_t VertexOrbitPartition::root(std::size_t x) const { return parent_.at(x); }

bool VertexOrbitPartition::same(std::size_t v, int n, std::size_t w, int k) const {
  return root(cell(v, n)) == root(cell(w, k));
}

AxesReport verify_axes(const TreeOfPolygons& ball) {
  if (ball.radius() < 2) throw std::invalid_argument("axis tracking needs ball radius >= 2");
  const auto& params = ball.params();
  const int m = params.m;
  const std::size_t P = ball.base_polygon();
  const auto& pverts = ball.polygons()[P].vertices;

  auto track = [&](char name) {
    const NormalForm g = quotient_image(std::string(1, name), params);
    AxisWitness w;
    w.generator = name;
    int best = -1;
    for (std::size_t v = 0; v < ball.vertices().size(); ++v) {
      const auto gv = ball.act_on_vertex(g, v);
      if (!gv) continue;
      const int d = ball.side_distances(v)[*gv];
      if (best < 0 || d < best) {
        best = d;
        w.axis_vertices.clear();
      }
      if (d == best) w.axis_vertices.push_back(v);
    }
    bool found = false;
    for (std::size_t v : w.axis_vertices) {
      const auto gv = ball.act_on_vertex(g, v);
      const auto i = ball.position_in(P, v);
      const auto j = gv ? ball.position_in(P, *gv) : std::nullopt;
      if (!i || !j) continue;
      if (mod(*j - *i, m) == 1) w.side_in_p = {*i, *j};
      else if (mod(*i - *j, m) == 1) w.side_in_p = {*j, *i};
      else continue;
      if (found) throw std::runtime_error("axis meets P in more than one side");
      found = true;
    }
    if (!found || best != 1) throw std::runtime_error("axis not resolvable within the ball");
    return w;
  };

  AxesReport out;
  out.a = track('a');
  out.b = track('b');
  const int e_pos = *ball.position_in(P, ball.base_vertex());
  auto touches_e = [&](const std::pair<int, int>& s) { return s.first == e_pos || s.second == e_pos; };
  out.consecutive_at_e = out.a.side_in_p != out.b.side_in_p && touches_e(out.a.side_in_p) && touches_e(out.b.side_in_p);

  const long k = params.parity == Parity::odd ? params.p : 1;
  out.rotation_element = k == 1 ? "t" : "t^" + std::to_string(k);
  const NormalForm r = power_of(Symbol::t, k, params);
  int steps = -1;
  for (int j = 0; j < m; ++j) {
    const auto img = ball.act_on_vertex(r, pverts[j]);
    const auto pos = img ? ball.position_in(P, *img) : std::nullopt;
    if (!pos) throw std::logic_error("rotation leaves P");
    const int s = mod(*pos - j, m);
    if (steps >= 0 && s != steps) throw std::logic_error("t does not act on P by a rotation");
    steps = s;
  }
  out.rotation_steps = steps > m / 2 ? steps - m : steps;
  return out;
}

std::size_t fixed_vertex_of_u(const TreeOfPolygons& ball) {
  const auto& params = ball.params();
  if (params.parity != Parity::odd) throw std::invalid_argument("u is defined for odd m only");
  const NormalForm u = power_of(Symbol::u, 1, params);
  std::vector<std::size_t> fixed;
  for (std::size_t v = 0; v < ball.vertices().size(); ++v) {
    if (ball.act_on_vertex(u, v) == v) fixed.push_back(v);
  }
  if (fixed.size() != 1 || fixed.front() != ball.base_vertex()) {
    throw std::runtime_error("u fixes " + std::to_string(fixed.size()) + " vertices of the ball");
  }
  return fixed.front();
}

OrientationOrbits even_orientation_orbits(const TreeOfPolygons& ball) {
  const auto& params = ball.params();
  if (params.parity != Parity::even) throw std::invalid_argument("orientation orbits are defined for even m only");
  const int m = params.m;
  const std::size_t P = ball.base_polygon();
  const NormalForm t = power_of(Symbol::t, 1, params);
  std::vector<bool> seen(m, false);
  OrientationOrbits out;
  for (int start = 0; start < m; ++start) {
    if (seen[start]) continue;
    std::vector<int> orbit;
    for (int j = start; !seen[j];) {
      seen[j] = true;
      orbit.push_back(j);
      j = *ball.position_in(P, *ball.act_on_vertex(t, ball.polygons()[P].vertices[j]));
    }
    std::sort(orbit.begin(), orbit.end());
    out.orbits.push_back(std::move(orbit));
  }
  out.alternating = out.orbits.size() == 2 && std::all_of(out.orbits.begin(), out.orbits.end(), [](const auto& o) {
                      return std::all_of(o.begin(), o.end(), [&](int j) { return j % 2 == o.front() % 2; });
                    });
  return out;
}

}  // namespace xxl
