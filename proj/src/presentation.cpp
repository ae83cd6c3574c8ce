#include "xxl/presentation.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace xxl {

namespace {

bool valid_name(std::string_view name) {
  if (name.empty()) return false;
  return std::none_of(name.begin(), name.end(), [](char c) {
    return c == ',' || c == '#' || c == ' ' || c == '\t' || c == '\r' || c == '\n';
  });
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

std::size_t LabeledGraph::add_vertex(std::string_view name) {
  if (!valid_name(name)) throw InputError("invalid generator name '" + std::string(name) + "'");
  if (auto idx = find_vertex(name)) return *idx;
  vertices_.emplace_back(name);
  return vertices_.size() - 1;
}

void LabeledGraph::add_edge(std::string_view s, std::string_view t, std::int64_t label) {
  if (s == t) throw InputError("loop edge at '" + std::string(s) + "'");
  if (label < 2) throw InputError("edge label " + std::to_string(label) + " < 2");
  auto i = add_vertex(s);
  auto j = add_vertex(t);
  if (edge_between(i, j)) {
    throw InputError("duplicate edge {" + std::string(s) + ", " + std::string(t) + "}");
  }
  edges_.push_back(Edge{std::min(i, j), std::max(i, j), label});
}

std::optional<std::size_t> LabeledGraph::find_vertex(std::string_view name) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), name);
  if (it == vertices_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::optional<std::size_t> LabeledGraph::edge_index(std::size_t s, std::size_t t) const {
  auto lo = std::min(s, t), hi = std::max(s, t);
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    if (edges_[k].s == lo && edges_[k].t == hi) return k;
  }
  return std::nullopt;
}

std::optional<Edge> LabeledGraph::edge_between(std::size_t s, std::size_t t) const {
  if (auto k = edge_index(s, t)) return edges_[*k];
  return std::nullopt;
}

std::string_view to_string(ArtinClass kind) {
  switch (kind) {
    case ArtinClass::xxl: return "XXL";
    case ArtinClass::extra_large: return "extra-large";
    case ArtinClass::large: return "large";
    case ArtinClass::right_angled: return "right-angled";
    case ArtinClass::none: return "none-of-these";
  }
  return "none-of-these";
}

LabeledGraph parse_graph(std::string_view text) {
  LabeledGraph g;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = split_ws(line);
    if (tokens.empty()) continue;

    try {
      if (tokens.size() == 2 && tokens[0] == "vertex") {
        g.add_vertex(tokens[1]);
      } else if (tokens.size() == 3) {
        std::int64_t label = 0;
        auto [ptr, ec] = std::from_chars(tokens[2].data(), tokens[2].data() + tokens[2].size(), label);
        if (ec != std::errc() || ptr != tokens[2].data() + tokens[2].size()) {
          throw InputError("malformed label '" + std::string(tokens[2]) + "'");
        }
        g.add_edge(tokens[0], tokens[1], label);
      } else {
        throw InputError("malformed line, expected '<name> <name> <label>' or 'vertex <name>'");
      }
    } catch (const InputError& e) {
      throw InputError(e.what(), line_no);
    }
  }
  return g;
}

std::string serialize_graph(const LabeledGraph& g) {
  std::ostringstream out;
  for (const auto& v : g.vertices()) out << "vertex " << v << '\n';
  for (const auto& e : g.edges()) {
    out << g.vertices()[e.s] << ' ' << g.vertices()[e.t] << ' ' << e.label << '\n';
  }
  return out.str();
}

ArtinType classify(const LabeledGraph& g) {
  ArtinType type;
  type.rank = g.rank();
  type.edgeless = g.edges().empty();
  auto all = [&](auto pred) { return std::all_of(g.edges().begin(), g.edges().end(), pred); };
  if (all([](const Edge& e) { return e.label >= 5; })) {
    type.kind = ArtinClass::xxl;
  } else if (all([](const Edge& e) { return e.label >= 4; })) {
    type.kind = ArtinClass::extra_large;
  } else if (all([](const Edge& e) { return e.label >= 3; })) {
    type.kind = ArtinClass::large;
  } else if (all([](const Edge& e) { return e.label == 2; })) {
    type.kind = ArtinClass::right_angled;
  } else {
    type.kind = ArtinClass::none;
  }
  return type;
}

GenWord build_word(std::string_view s, std::string_view t, std::int64_t m) {
  if (m < 2) throw std::invalid_argument("alternating word length must be >= 2");
  if (s == t) throw std::invalid_argument("alternating word needs two distinct generators");
  GenWord w;
  w.reserve(static_cast<std::size_t>(m));
  for (std::int64_t i = 0; i < m; ++i) w.push_back({std::string(i % 2 == 0 ? s : t), 1});
  return w;
}

Presentation artin_presentation(const LabeledGraph& g) {
  Presentation p;
  p.generators = g.vertices();
  for (const auto& e : g.edges()) {
    const auto& s = g.vertices()[e.s];
    const auto& t = g.vertices()[e.t];
    p.relations.emplace_back(build_word(s, t, e.label), build_word(t, s, e.label));
  }
  return p;
}

std::string format_word(const GenWord& w) {
  std::string out;
  for (const auto& l : w) {
    if (!out.empty()) out += ' ';
    out += l.generator;
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

}  // namespace xxl
