#include "xxl/rankone.hpp"

#include <algorithm>
#include <queue>

#include <fmt/format.h>

namespace xxl {

namespace {

int mod(int x, int m) { return ((x % m) + m) % m; }

constexpr double pi_value = 3.14159265358979323846;

/// Shortest walk from `from` to `to` whose consecutive segments lie in
/// different pieces; the first segment avoids `forbidden_first` if given.
RationalAngle constrained_distance(const PieceGraph& pg, std::size_t from, std::size_t to,
                                   std::optional<std::size_t> forbidden_first) {
  if (from == to) return RationalAngle();
  const std::size_t none = pg.pieces.size();
  const std::size_t width = pg.pieces.size() + 1;
  std::vector<std::optional<RationalAngle>> dist(pg.nodes.size() * width);
  using Item = std::pair<RationalAngle, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[from * width + none] = RationalAngle();
  heap.push({RationalAngle(), from * width + none});
  while (!heap.empty()) {
    auto [d, s] = heap.top();
    heap.pop();
    if (*dist[s] < d) continue;
    const std::size_t node = s / width;
    const std::size_t last = s % width;
    if (node == to) return d;
    for (const auto& e : pg.edges) {
      if (e.from != node && e.to != node) continue;
      if (e.piece == last || (last == none && forbidden_first && e.piece == *forbidden_first)) continue;
      const std::size_t next = e.from == node ? e.to : e.from;
      const RationalAngle nd = d + e.weight;
      const std::size_t t = next * width + e.piece;
      if (!dist[t] || nd < *dist[t]) {
        dist[t] = nd;
        heap.push({nd, t});
      }
    }
  }
  return RationalAngle::infinite();
}

const RationalAngle& edge_weight(const PieceGraph& pg, std::size_t x, std::size_t y) {
  for (const auto& e : pg.edges) {
    if ((e.from == x && e.to == y) || (e.from == y && e.to == x)) return e.weight;
  }
  throw std::logic_error("missing loop edge");
}

}  // namespace

std::string RankOneWitness::describe(const LabeledGraph& g) const {
  const auto& n = g.vertices();
  if (kind == Kind::free_group) return "free group: any generator loop";
  return "loop in piece {" + n[a] + "," + n[b] + "} (label " + std::to_string(label) + ", " +
         (parity == Parity::odd ? "odd" : "even") + ") followed by the circle of " + n[c];
}

RankOneWitness choose_rank1_witness(const LabeledGraph& g) {
  const auto type = classify(g);
  if (!type.is_xxl()) throw NotApplicable("graph is not of XXL type (some label < 5)");
  RankOneWitness w;
  if (type.edgeless) {
    w.kind = RankOneWitness::Kind::free_group;
    return w;
  }
  if (g.rank() <= 2) {
    throw NotApplicable(
        "no rank-one witness: a dihedral Artin group is virtually a direct product with Z, so it is not "
        "acylindrically hyperbolic");
  }
  const auto& edges = g.edges();
  auto it = std::find_if(edges.begin(), edges.end(), [](const Edge& e) { return e.label % 2 == 1; });
  if (it == edges.end()) it = edges.begin();
  std::size_t c = 0;
  while (c == it->s || c == it->t) ++c;
  return rank1_witness_for(g, g.vertices()[it->s], g.vertices()[it->t], g.vertices()[c]);
}

RankOneWitness rank1_witness_for(const LabeledGraph& g, std::string_view a, std::string_view b, std::string_view c) {
  const auto ia = g.find_vertex(a), ib = g.find_vertex(b), ic = g.find_vertex(c);
  if (!ia || !ib || !ic) throw InputError("witness names a generator that is not in the graph");
  const auto edge = g.edge_between(*ia, *ib);
  if (!edge) throw InputError("no edge between " + std::string(a) + " and " + std::string(b));
  if (*ic == *ia || *ic == *ib) throw InputError("third generator must differ from both ends of the edge");
  if (edge->label < 5) throw NotApplicable("label " + std::to_string(edge->label) + " < 5");
  RankOneWitness w;
  w.a = edge->s;
  w.b = edge->t;
  w.c = *ic;
  w.label = edge->label;
  w.parity = edge->label % 2 ? Parity::odd : Parity::even;
  return w;
}

std::string LoopAngleEntry::name() const {
  return "∠(" + separator + "," + (loop_plus ? "ℓ⁺" : "ℓ⁻") + ")";
}

const LoopAngleEntry& LoopAngleTable::entry(std::string_view separator, bool loop_plus) const {
  for (const auto& e : entries) {
    if (e.separator == separator && e.loop_plus == loop_plus) return e;
  }
  throw std::logic_error("no loop angle entry");
}

bool LoopAngleTable::all_hold() const {
  return std::all_of(entries.begin(), entries.end(), [](const LoopAngleEntry& e) { return e.holds; });
}

LoopAngleTable rank1_loop_table(const DihedralParams& params, WeightMode mode, const std::optional<Alpha>& alpha) {
  if (mode == WeightMode::computed && !alpha) throw InputError("computed mode needs a value of alpha");
  LoopAngleTable table;
  table.params = params;
  table.mode = mode;
  const bool odd = params.parity == Parity::odd;
  table.along = odd ? RationalAngle::pi_times(2, 5, true) : RationalAngle::pi_times(1, 3, true);
  table.against = odd ? RationalAngle::pi_times(1, 5, true) : RationalAngle::pi_times(1, 3, true);
  table.across = RationalAngle::pi_times(4, 5, true);
  table.turn = RationalAngle::pi_times(1);

  const int m = params.m;
  const auto ball = TreeOfPolygons::build(params, 2);
  const auto dirs = base_directions(ball);
  const std::size_t P = ball.base_polygon();
  const std::size_t Pp = *ball.neighbor_polygon();
  if (dirs.a_plus.polygon != P || dirs.b_minus.polygon != P) throw std::logic_error("unexpected base configuration");

  // x is (almost) opposite e in P, on the far side from a⁺.
  const int sign = dirs.a_plus.offset == 1 ? 1 : -1;
  table.x_offset = mod(sign * (odd ? params.p + 1 : params.p), m);
  const std::size_t e = ball.base_vertex();
  const int e_in_p = *ball.position_in(P, e);
  const int e_in_pp = *ball.position_in(Pp, e);
  const std::size_t x = ball.polygons()[P].vertices[mod(e_in_p + table.x_offset, m)];

  const VertexOrbitPartition orbits(ball, 3 * m);
  std::vector<int> partners;
  for (int j = 1; j < m; ++j) {
    const std::size_t y = ball.polygons()[Pp].vertices[mod(e_in_pp + j, m)];
    if (orbits.same(x, 0, y, 0)) partners.push_back(j);
  }
  if (partners.size() != 1) {
    throw std::runtime_error("expected exactly one vertex of P' in the level-0 orbit of x, found " +
                             std::to_string(partners.size()));
  }
  table.x_prime_offset = partners.front();
  table.meets_generator_loops_only_at_base =
      !orbits.same(x, 0, e, 0) && table.x_offset != 1 && table.x_offset != m - 1;

  const SideDirection l_plus{P, table.x_offset};
  const SideDirection l_minus{Pp, table.x_prime_offset};
  const RationalAngle nine_tenths = RationalAngle::pi_times(9, 10);
  auto add = [&](const std::string& sep, const SideDirection& d, Slope s, bool plus, LoopAngleGroup group,
                 const RationalAngle& bound) {
    LoopAngleEntry entry{sep, plus, group, bound, bound, {}, {}, true};
    if (alpha) {
      const auto h = horizontal_angle(params, d, plus ? l_plus : l_minus);
      auto value = product_angle(h, s, Slope::flat, *alpha);
      entry.holds = value.exceeds(bound);
      if (group == LoopAngleGroup::across && !value.exceeds(nine_tenths)) table.across_exceeds_nine_tenths = false;
      if (mode == WeightMode::computed) entry.weight = value.lower_bound();
      entry.horizontal = h;
      entry.value = std::move(value);
    }
    table.entries.push_back(std::move(entry));
  };
  using G = LoopAngleGroup;
  add("a⁺", dirs.a_plus, Slope::up, true, G::along, table.along);
  add("a⁻", dirs.a_minus, Slope::down, false, G::along, table.along);
  add("b⁻", dirs.b_minus, Slope::down, true, G::against, table.against);
  add("b⁺", dirs.b_plus, Slope::up, false, G::against, table.against);
  add("a⁻", dirs.a_minus, Slope::down, true, G::across, table.across);
  add("a⁺", dirs.a_plus, Slope::up, false, G::across, table.across);
  add("b⁺", dirs.b_plus, Slope::up, true, G::across, table.across);
  add("b⁻", dirs.b_minus, Slope::down, false, G::across, table.across);
  table.evaluated = alpha.has_value();
  if (alpha && mode == WeightMode::computed) {
    table.turn = product_angle(horizontal_angle(params, l_plus, l_minus), Slope::flat, Slope::flat, *alpha).lower_bound();
  }
  return table;
}

RankOneCertificate certify_rank1(const LabeledGraph& g, const RankOneWitness& w, WeightMode mode,
                                 const std::optional<Alpha>& alpha) {
  const auto type = classify(g);
  if (!type.is_xxl()) throw NotApplicable("graph is not of XXL type (some label < 5)");
  RankOneCertificate cert;
  cert.witness = w;
  if (w.kind == RankOneWitness::Kind::free_group) {
    if (!type.edgeless) throw InputError("free-group witness given for a graph with edges");
    cert.verdict = Verdict::certified;
    cert.notes.push_back("no edges: the complex is a wedge of circles, its universal cover is a tree, and every "
                         "periodic geodesic has rank one");
    return cert;
  }
  const auto edge_index = g.edge_index(w.a, w.b);
  if (w.a >= g.rank() || w.b >= g.rank() || w.c >= g.rank() || !edge_index || w.c == w.a || w.c == w.b ||
      g.edges()[*edge_index].label != w.label) {
    throw InputError("witness inconsistent with graph");
  }

  auto pg = piece_graph(g, mode, alpha);
  const auto table = rank1_loop_table(DihedralParams::make(static_cast<int>(w.label)), mode, alpha);
  cert.table = table;

  const std::size_t ab = *edge_index;
  const std::size_t lp = pg.add_loop_nodes("ℓ");
  const std::size_t lm = lp + 1;
  const auto ap = PieceGraph::plus(w.a), am = PieceGraph::minus(w.a);
  const auto bp = PieceGraph::plus(w.b), bm = PieceGraph::minus(w.b);
  const auto kind = EdgeKind::loop_direction;
  for (const auto& entry : table.entries) {
    const std::size_t gen = entry.separator[0] == 'a' ? w.a : w.b;
    const bool plus = entry.separator.find("⁺") != std::string::npos;
    const std::size_t node = plus ? PieceGraph::plus(gen) : PieceGraph::minus(gen);
    pg.edges.push_back({entry.loop_plus ? lp : lm, node, ab, entry.weight, kind});
  }
  pg.edges.push_back({lp, lm, ab, table.turn, kind});

  for (const auto& entry : table.entries) {
    if (entry.holds) continue;
    cert.notes.push_back("geometry: " + entry.name() + " is about " + fmt::format("{:.6f}", entry.value->midpoint() / pi_value) +
                         "π, not above the table bound " + entry.bound.fraction());
  }

  const auto& names = g.vertices();
  const bool ac = g.edge_between(w.a, w.c).has_value();
  const bool bc = g.edge_between(w.b, w.c).has_value();
  if (!ac && !bc) cert.notes.push_back(names[w.c] + " is adjacent to neither " + names[w.a] + " nor " + names[w.b]);

  const RationalAngle pi = RationalAngle::pi_times(1);
  bool certified = true;
  for (const auto& [from, to] : {std::pair{lp, PieceGraph::minus(w.c)}, std::pair{lm, PieceGraph::plus(w.c)}}) {
    Passing passing{pg.nodes[from], pg.nodes[to], constrained_distance(pg, from, to, std::nullopt), {}};
    RationalAngle best = RationalAngle::infinite();
    for (const std::size_t s : {ap, am, bp, bm}) {
      SeparatorSum sum;
      sum.separator = pg.nodes[s];
      sum.to_separator = edge_weight(pg, from, s);
      sum.onwards = constrained_distance(pg, s, to, ab);
      sum.total = sum.to_separator + sum.onwards;
      const std::size_t gen = pg.generator_of(s);
      if (!g.edge_between(gen, w.c)) {
        sum.note = "no edge {" + names[gen] + "," + names[w.c] + "}: routes from " + pg.nodes[s] + " to " + pg.nodes[to] +
                   (sum.onwards.is_infinite() ? " do not exist (cost ∞)" : " pass through other pieces");
      }
      best = std::min(best, sum.total);
      passing.separators.push_back(std::move(sum));
    }
    if (best != passing.distance) throw std::logic_error("separator sums disagree with the shortest path");
    certified = certified && passing.distance.exceeds(pi);
    cert.passings.push_back(std::move(passing));
  }
  cert.verdict = certified ? Verdict::certified : Verdict::refuted;
  return cert;
}

}  // namespace xxl
