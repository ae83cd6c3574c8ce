#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace xxl {

/// Raised for malformed graph or word input. Carries the 1-based line number
/// when the error is tied to a line of a graph file.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A hypothesis of the certificates does not hold for the input (for example a label
/// below 5, or a rank-2 graph handed to the rank-one certifier).
class NotApplicable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Edge {
  std::size_t s = 0;  // indices into LabeledGraph::vertices(), s < t
  std::size_t t = 0;
  std::int64_t label = 2;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// The defining graph of an Artin group: named generators and integer
/// labelled edges. Vertex order is declaration order and is used for every
/// deterministic tie-break downstream.
class LabeledGraph {
 public:
  LabeledGraph() = default;

  std::size_t add_vertex(std::string_view name);
  void add_edge(std::string_view s, std::string_view t, std::int64_t label);

  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t rank() const noexcept { return vertices_.size(); }

  std::optional<std::size_t> find_vertex(std::string_view name) const;
  /// Edge between two vertex indices, if any.
  std::optional<Edge> edge_between(std::size_t s, std::size_t t) const;
  std::optional<std::size_t> edge_index(std::size_t s, std::size_t t) const;

  friend bool operator==(const LabeledGraph&, const LabeledGraph&) = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
};

enum class ArtinClass { xxl, extra_large, large, right_angled, none };

struct ArtinType {
  ArtinClass kind = ArtinClass::none;
  std::size_t rank = 0;
  bool edgeless = false;

  bool is_xxl() const noexcept { return kind == ArtinClass::xxl; }
};

std::string_view to_string(ArtinClass kind);

struct GenLetter {
  std::string generator;
  int sign = 1;

  friend bool operator==(const GenLetter&, const GenLetter&) = default;
};

using GenWord = std::vector<GenLetter>;

struct Presentation {
  std::vector<std::string> generators;
  std::vector<std::pair<GenWord, GenWord>> relations;
};

/// Parses the edge-list format:
///   `<name> <name> <label>` per edge, `vertex <name>` for isolated vertices,
///   `#` starts a comment, blank lines are ignored.
LabeledGraph parse_graph(std::string_view text);
std::string serialize_graph(const LabeledGraph& g);

ArtinType classify(const LabeledGraph& g);

/// The alternating word s t s t ... of length m.
GenWord build_word(std::string_view s, std::string_view t, std::int64_t m);

Presentation artin_presentation(const LabeledGraph& g);

std::string format_word(const GenWord& w);

}  // namespace xxl
