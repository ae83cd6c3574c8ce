#include "oracles.hpp"

#include <algorithm>
#include <numeric>

namespace oracle {

using xxl::PieceGraph;
using xxl::RationalAngle;

namespace {

struct Step {
  std::size_t to;
  std::size_t piece;
  const RationalAngle* weight;
};

std::vector<std::vector<Step>> adjacency(const PieceGraph& pg) {
  std::vector<std::vector<Step>> adj(pg.nodes.size());
  for (const auto& e : pg.edges) {
    adj[e.from].push_back({e.to, e.piece, &e.weight});
    adj[e.to].push_back({e.from, e.piece, &e.weight});
  }
  return adj;
}

// Weights as integer numerators over a common denominator, for speed.
struct Scaled {
  long value = 0;
  bool strict = false;
};

struct ScaledStep {
  std::size_t to;
  std::size_t piece;
  Scaled weight;
};

struct CycleSearch {
  const std::vector<std::vector<ScaledStep>>& adj;
  int max_segments;
  long min_weight = 0;
  std::size_t start = 0;
  std::size_t first_piece = 0;
  std::vector<std::size_t> pieces;
  std::optional<Scaled> best;

  static bool less(const Scaled& x, const Scaled& y) {
    return x.value != y.value ? x.value < y.value : (!x.strict && y.strict);
  }

  void extend(std::size_t node, std::size_t last_piece, const Scaled& total, int segments) {
    // Closing the walk needs at least one more segment.
    if (best && total.value + min_weight > best->value) return;
    if (segments == max_segments) return;
    for (const auto& s : adj[node]) {
      if (s.piece == last_piece) continue;
      const Scaled next{total.value + s.weight.value, total.strict || s.weight.strict};
      pieces.push_back(s.piece);
      if (s.to == start && s.piece != first_piece) {
        std::vector<std::size_t> distinct = pieces;
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        if (distinct.size() >= 3 && (!best || less(next, *best))) best = next;
      }
      extend(s.to, s.piece, next, segments + 1);
      pieces.pop_back();
    }
  }
};

}  // namespace

RationalAngle brute_force_systole(const PieceGraph& pg, int max_segments) {
  xxl::BigInt denominator = 1;
  for (const auto& e : pg.edges) {
    const xxl::BigInt d = boost::multiprecision::denominator(e.weight.coefficient());
    denominator = boost::multiprecision::lcm(denominator, d);
  }
  const long scale = denominator.convert_to<long>();
  auto scaled = [&](const RationalAngle& w) {
    const xxl::Rational v = w.coefficient() * scale;
    return Scaled{boost::multiprecision::numerator(v).convert_to<long>(), w.strict()};
  };
  std::vector<std::vector<ScaledStep>> adj(pg.nodes.size());
  long min_weight = 0;
  bool first = true;
  for (const auto& e : pg.edges) {
    const Scaled w = scaled(e.weight);
    adj[e.from].push_back({e.to, e.piece, w});
    adj[e.to].push_back({e.from, e.piece, w});
    min_weight = first ? w.value : std::min(min_weight, w.value);
    first = false;
  }
  std::optional<Scaled> best;
  for (std::size_t start = 0; start < pg.nodes.size(); ++start) {
    for (const auto& s : adj[start]) {
      CycleSearch search{adj, max_segments, min_weight, start, s.piece, {s.piece}, best};
      search.extend(s.to, s.piece, s.weight, 1);
      best = search.best;
    }
  }
  if (!best) return RationalAngle::infinite();
  return RationalAngle(xxl::Rational(best->value, scale), best->strict);
}

RationalAngle brute_force_distance(const PieceGraph& pg, std::size_t from, std::size_t to,
                                   std::optional<std::size_t> forbidden_first, int max_segments) {
  if (from == to) return RationalAngle();
  const auto adj = adjacency(pg);
  RationalAngle best = RationalAngle::infinite();
  const std::size_t none = static_cast<std::size_t>(-1);
  auto walk = [&](auto&& self, std::size_t node, std::size_t last, const RationalAngle& total, int segments) -> void {
    if (segments == max_segments) return;
    for (const auto& s : adj[node]) {
      if (s.piece == last) continue;
      if (last == none && forbidden_first && s.piece == *forbidden_first) continue;
      const RationalAngle next = total + *s.weight;
      if (s.to == to) best = std::min(best, next);
      self(self, s.to, s.piece, next, segments + 1);
    }
  };
  walk(walk, from, none, RationalAngle(), 0);
  return best;
}

std::vector<xxl::LabeledGraph> graph_classes(int n, const std::vector<int>& labels) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
  }
  const int base = static_cast<int>(labels.size()) + 1;  // digit 0 = no edge
  std::vector<int> index(static_cast<std::size_t>(n * n), 0);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    index[static_cast<std::size_t>(pairs[k].first * n + pairs[k].second)] = static_cast<int>(k);
    index[static_cast<std::size_t>(pairs[k].second * n + pairs[k].first)] = static_cast<int>(k);
  }
  std::vector<std::vector<int>> perms;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));

  long total = 1;
  for (std::size_t k = 0; k < pairs.size(); ++k) total *= base;
  std::vector<xxl::LabeledGraph> out;
  std::vector<int> digits(pairs.size()), image(pairs.size());
  for (long code = 0; code < total; ++code) {
    long c = code;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      digits[k] = static_cast<int>(c % base);
      c /= base;
    }
    // Canonical iff no relabelling gives a lexicographically smaller digit
    // vector (compared from the last digit, matching the code order).
    bool canonical = true;
    for (const auto& p : perms) {
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        const auto [i, j] = pairs[k];
        image[static_cast<std::size_t>(index[static_cast<std::size_t>(p[i] * n + p[j])])] = digits[k];
      }
      if (std::lexicographical_compare(image.rbegin(), image.rend(), digits.rbegin(), digits.rend())) {
        canonical = false;
        break;
      }
    }
    if (!canonical) continue;
    xxl::LabeledGraph g;
    for (int i = 0; i < n; ++i) g.add_vertex(std::string(1, static_cast<char>('a' + i)));
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (digits[k] == 0) continue;
      g.add_edge(g.vertices()[static_cast<std::size_t>(pairs[k].first)],
                 g.vertices()[static_cast<std::size_t>(pairs[k].second)], labels[static_cast<std::size_t>(digits[k] - 1)]);
    }
    out.push_back(std::move(g));
  }
  return out;
}

int exponent_class(const xxl::NormalForm& key, const xxl::DihedralParams& params) {
  const bool odd = params.parity == xxl::Parity::odd;
  long sum = 0;
  for (const auto& s : key.syllables()) {
    long weight = 0;
    switch (s.symbol) {
      case xxl::Symbol::t:
        weight = 2;  // t = ab
        break;
      case xxl::Symbol::u:
        weight = params.m;  // u = w_m(a, b)
        break;
      case xxl::Symbol::a:
        weight = odd ? 0 : 1;
        break;
      case xxl::Symbol::b:
        weight = 1;
        break;
    }
    sum += weight * s.exponent;
  }
  return static_cast<int>(((sum % params.m) + params.m) % params.m);
}

xxl::Word random_word(std::mt19937& rng, int length) {
  std::uniform_int_distribution<int> pick(0, 3);
  xxl::Word w(xxl::Alphabet::ab);
  for (int i = 0; i < length; ++i) {
    const int k = pick(rng);
    w.push_back({k < 2 ? xxl::Symbol::a : xxl::Symbol::b, k % 2 ? -1 : 1});
  }
  return w;
}

xxl::Word relator(int m) {
  return xxl::alternating_ab(xxl::Symbol::a, m) * xxl::alternating_ab(xxl::Symbol::b, m).inverse();
}

}  // namespace oracle
