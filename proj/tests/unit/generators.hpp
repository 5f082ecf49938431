#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "torfold/ice_quiver.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// Random ice quiver: up to max_vertices vertices, about a third frozen,
/// arrows between non-frozen-frozen pairs in a random direction.
inline torfold::IceQuiver ice_quiver(Rng& rng, int max_vertices = 12, int max_mult = 3) {
  const int n = uniform(rng, 1, max_vertices);
  std::vector<torfold::Vertex> vs;
  for (int i = 0; i < n; ++i) vs.push_back({std::to_string(i), uniform(rng, 0, 2) == 0});
  if (std::all_of(vs.begin(), vs.end(), [](const auto& v) { return v.frozen; })) vs[0].frozen = false;
  torfold::IceQuiver::ArrowMap arrows;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (vs[a].frozen && vs[b].frozen) continue;
      if (uniform(rng, 0, 2) != 0) continue;
      const int m = uniform(rng, 1, max_mult);
      if (uniform(rng, 0, 1)) arrows[{std::size_t(a), std::size_t(b)}] = m;
      else arrows[{std::size_t(b), std::size_t(a)}] = m;
    }
  return torfold::IceQuiver(std::move(vs), std::move(arrows));
}

inline std::vector<std::size_t> mutable_vertices(const torfold::IceQuiver& q) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < q.size(); ++i)
    if (!q.is_frozen(i)) out.push_back(i);
  return out;
}

}  // namespace gen
