#include "xxl/word_oracle.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

namespace xxl {

namespace {

// Letter codes: a = 0, a^-1 = 1, b = 2, b^-1 = 3; the inverse of c is c ^ 1.
using Code = std::uint8_t;
using Codes = std::vector<Code>;

Letter decode(Code c) { return {c < 2 ? Symbol::a : Symbol::b, (c & 1) ? -1 : 1}; }

std::uint64_t pack(const Codes& w) {
  std::uint64_t key = static_cast<std::uint64_t>(w.size()) << 58;
  for (std::size_t i = 0; i < w.size(); ++i) key |= static_cast<std::uint64_t>(w[i]) << (2 * i);
  return key;
}

Codes unpack(std::uint64_t key) {
  Codes w(static_cast<std::size_t>(key >> 58));
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = static_cast<Code>((key >> (2 * i)) & 3u);
  return w;
}

void push_reduced(Codes& out, Code c) {
  if (!out.empty() && out.back() == (c ^ 1)) {
    out.pop_back();
  } else {
    out.push_back(c);
  }
}

Codes reduce(const Codes& w) {
  Codes out;
  for (auto c : w) push_reduced(out, c);
  return out;
}

/// Cyclic conjugates of w_m(a,b) w_m(b,a)^-1 and of its inverse, grouped by
/// first letter.
std::array<std::vector<Codes>, 4> relator_rotations(int m) {
  Codes rel;
  for (int i = 0; i < m; ++i) rel.push_back(i % 2 == 0 ? 0 : 2);
  for (int i = m - 1; i >= 0; --i) rel.push_back(i % 2 == 0 ? 3 : 1);
  Codes inv(rel.rbegin(), rel.rend());
  for (auto& c : inv) c ^= 1;

  std::vector<Codes> all;
  for (const Codes* r : {&rel, &inv}) {
    for (std::size_t s = 0; s < r->size(); ++s) {
      Codes rot(r->begin() + static_cast<std::ptrdiff_t>(s), r->end());
      rot.insert(rot.end(), r->begin(), r->begin() + static_cast<std::ptrdiff_t>(s));
      all.push_back(std::move(rot));
    }
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());

  std::array<std::vector<Codes>, 4> by_first;
  for (auto& r : all) by_first[r.front()].push_back(std::move(r));
  return by_first;
}

}  // namespace

std::size_t default_rewrite_cap(const DihedralParams& params, int radius) {
  return std::min<std::size_t>(static_cast<std::size_t>(radius + params.m), max_rewrite_cap);
}

BallPartition enumerate_ball(const DihedralParams& params, int radius, std::optional<std::size_t> cap) {
  if (radius < 0 || radius > max_ball_radius) {
    throw std::invalid_argument("ball radius must lie in [0, " + std::to_string(max_ball_radius) + "]");
  }
  BallPartition out;
  out.params = params;
  out.radius = radius;
  out.cap = cap.value_or(default_rewrite_cap(params, radius));
  if (out.cap < static_cast<std::size_t>(radius) || out.cap > max_rewrite_cap) {
    throw std::invalid_argument("rewrite cap must lie in [radius, " + std::to_string(max_rewrite_cap) + "]");
  }

  // All words in shortlex order.
  std::vector<Codes> words{{}};
  for (std::size_t begin = 0, len = 0; len < static_cast<std::size_t>(radius); ++len) {
    const std::size_t end = words.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (Code c = 0; c < 4; ++c) {
        Codes w = words[i];
        w.push_back(c);
        words.push_back(std::move(w));
      }
    }
    begin = end;
  }

  const auto relators = relator_rotations(params.m);
  const std::size_t rel_len = static_cast<std::size_t>(2 * params.m);

  std::unordered_map<std::uint64_t, std::uint32_t> component;
  component.reserve(1u << 16);
  std::vector<std::uint64_t> queue;
  std::uint32_t next_component = 0;

  auto explore = [&](const Codes& start) {
    const std::uint32_t id = next_component++;
    queue.clear();
    queue.push_back(pack(start));
    component.emplace(queue.back(), id);
    Codes next;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Codes x = unpack(queue[head]);
      const std::size_t n = x.size();
      for (std::size_t i = 0; i < n; ++i) {
        for (const Codes& r : relators[x[i]]) {
          std::size_t kmax = 1;
          while (kmax < rel_len && i + kmax < n && x[i + kmax] == r[kmax]) ++kmax;
          for (std::size_t k = 1; k <= kmax; ++k) {
            // x = u·s·v with s = r[0, k); replace s by the inverse of r[k, 2m).
            next.assign(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(i));
            for (std::size_t j = rel_len; j-- > k;) push_reduced(next, r[j] ^ 1);
            for (std::size_t j = i + k; j < n; ++j) push_reduced(next, x[j]);
            if (next.size() > out.cap) continue;
            const auto key = pack(next);
            if (component.emplace(key, id).second) queue.push_back(key);
          }
        }
      }
    }
  };

  out.words.reserve(words.size());
  out.class_of.reserve(words.size());
  std::unordered_map<std::uint32_t, std::size_t> class_index;
  for (const auto& w : words) {
    const Codes r = reduce(w);
    auto it = component.find(pack(r));
    if (it == component.end()) {
      explore(r);
      it = component.find(pack(r));
    }
    auto [ci, inserted] = class_index.emplace(it->second, class_index.size());
    out.class_of.push_back(ci->second);

    Word word(Alphabet::ab);
    for (auto c : w) word.push_back(decode(c));
    out.words.push_back(std::move(word));
  }
  out.class_count = class_index.size();
  out.explored = component.size();
  return out;
}

}  // namespace xxl
