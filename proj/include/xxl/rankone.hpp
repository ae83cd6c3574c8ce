#pragma once

#include "xxl/geometry.hpp"
#include "xxl/linkcheck.hpp"
#include "xxl/presentation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace xxl {

struct RankOneWitness {
  enum class Kind { free_group, loop };
  Kind kind = Kind::loop;
  /// Generator indices: the loop lives in the piece {a, b}, then runs once
  /// around the circle of c.
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t c = 0;
  std::int64_t label = 0;
  Parity parity = Parity::odd;

  std::string describe(const LabeledGraph& g) const;
};

/// Free-group witness for edgeless graphs; otherwise the first odd-labelled
/// edge in declaration order (else the first edge) and the first generator
/// outside it. Throws NotApplicable for rank <= 2 with an edge.
RankOneWitness choose_rank1_witness(const LabeledGraph& g);

/// Explicit choice of edge {a, b} and third generator c; validated.
RankOneWitness rank1_witness_for(const LabeledGraph& g, std::string_view a, std::string_view b, std::string_view c);

enum class LoopAngleGroup { along, against, across };

/// One angle at the base vertex between a generator direction and a side of
/// the loop ℓ.
struct LoopAngleEntry {
  std::string separator;  // a⁺, a⁻, b⁺, b⁻
  bool loop_plus = true;  // ℓ⁺ (towards x in P) or ℓ⁻ (towards x' in P')
  LoopAngleGroup group = LoopAngleGroup::along;
  RationalAngle bound;   // the strict bound of the reference table
  RationalAngle weight;     // used as the link edge weight
  /// Geometry, when a value of alpha is available.
  std::optional<RationalAngle> horizontal;
  std::optional<CertifiedAngle> value;
  bool holds = true;  // value > bound (true when not evaluated)
  std::string name() const;
};

/// The loop ℓ through e, x ∈ P and x' ∈ P', and its angles at the base vertex.
struct LoopAngleTable {
  DihedralParams params;
  WeightMode mode = WeightMode::paper;
  /// Reference bounds: odd (2π/5, π/5, 4π/5), even (π/3, π/3, 4π/5), strict.
  RationalAngle along;    // ∠(a⁺,ℓ⁺) = ∠(a⁻,ℓ⁻)
  RationalAngle against;  // ∠(b⁻,ℓ⁺) = ∠(b⁺,ℓ⁻)
  RationalAngle across;   // ∠(a⁻,ℓ⁺) = ∠(a⁺,ℓ⁻) = ∠(b⁺,ℓ⁺) = ∠(b⁻,ℓ⁻)
  RationalAngle turn;     // ∠(ℓ⁺,ℓ⁻) >= π, the loop is locally geodesic at e
  /// Eight entries in the order of the three groups above.
  std::vector<LoopAngleEntry> entries;
  /// Positions of x in P and x' in P' relative to e, a⁺ at +1 in P.
  int x_offset = 0;
  int x_prime_offset = 0;
  bool meets_generator_loops_only_at_base = false;
  bool evaluated = false;
  /// Cross-polygon entries equal π − arctan α > 9π/10.
  bool across_exceeds_nine_tenths = true;

  const LoopAngleEntry& entry(std::string_view separator, bool loop_plus) const;
  /// Every evaluated entry exceeds its reference bound.
  bool all_hold() const;
};

/// Paper mode weights are the reference bounds; computed mode weights are
/// the evaluated angles snapped down. With a value of alpha, every entry is
/// evaluated and compared with its reference bound in either mode.
LoopAngleTable rank1_loop_table(const DihedralParams& params, WeightMode mode,
                                const std::optional<Alpha>& alpha = std::nullopt);

struct SeparatorSum {
  std::string separator;  // a⁺, a⁻, b⁺, b⁻
  RationalAngle to_separator;
  RationalAngle onwards;  // infinite when no route exists
  RationalAngle total;
  std::string note;
};

struct Passing {
  std::string from;  // ℓ⁺ or ℓ⁻
  std::string to;    // c⁻ or c⁺
  RationalAngle distance;
  std::vector<SeparatorSum> separators;
};

struct RankOneCertificate {
  Verdict verdict = Verdict::not_applicable;
  RankOneWitness witness;
  std::optional<LoopAngleTable> table;
  std::vector<Passing> passings;
  std::vector<std::string> notes;
};

RankOneCertificate certify_rank1(const LabeledGraph& g, const RankOneWitness& w, WeightMode mode,
                                 const std::optional<Alpha>& alpha = std::nullopt);

}  // namespace xxl
