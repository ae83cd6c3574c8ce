#pragma once

#include "xxl/dihedral.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace xxl {

/// Equality classes of all {a, b}-words of length <= radius, computed by
/// exhaustive rewriting with the single defining relation and free
/// reduction, never leaving words of length <= cap.
///
/// Two words in the same class are certainly equal in I2(m). Two words in
/// different classes may still be equal: the search is complete only up to
/// the length cap, so the partition never certifies inequality on its own.
struct BallPartition {
  DihedralParams params;
  int radius = 0;
  std::size_t cap = 0;
  /// Every word of length <= radius, shortlex order (a < a^-1 < b < b^-1).
  std::vector<Word> words;
  /// Class index per word; classes are numbered in order of first appearance.
  std::vector<std::size_t> class_of;
  std::size_t class_count = 0;
  /// Number of reduced words visited by the rewriting closure.
  std::size_t explored = 0;
};

inline constexpr int max_ball_radius = 8;
inline constexpr std::size_t max_rewrite_cap = 28;

/// Default length cap for the rewriting closure: radius + m.
std::size_t default_rewrite_cap(const DihedralParams& params, int radius);

BallPartition enumerate_ball(const DihedralParams& params, int radius, std::optional<std::size_t> cap = std::nullopt);

}  // namespace xxl
