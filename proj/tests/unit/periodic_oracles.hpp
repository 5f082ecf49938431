#pragma once

#include <set>
#include <string>
#include <vector>

#include "generators.hpp"
#include "torfold/periodic_quiver.hpp"

namespace oracle {

inline std::string copy_id(int site, int k) { return std::to_string(site) + "@" + std::to_string(k); }

/// Finite piece of the infinite quiver: copies -R..R of every site.
inline torfold::IceQuiver unfold(const torfold::PeriodicQuiver& pq, int R) {
  std::vector<torfold::Vertex> vs;
  for (int k = -R; k <= R; ++k)
    for (const auto& s : pq.sites()) vs.push_back({copy_id(s.id, k), s.frozen});
  std::vector<torfold::Arrow> arrows;
  for (const auto& a : pq.arrow_list())
    for (int k = -R; k <= R; ++k)
      if (k + a.shift >= -R && k + a.shift <= R) arrows.push_back({copy_id(a.from, k), copy_id(a.to, k + a.shift), a.mult});
  return torfold::IceQuiver(std::move(vs), arrows);
}

/// Reads the arrows leaving copy 0 back into periodic form (|shift| <= reach).
inline torfold::PeriodicQuiver::ArrowMap copy_zero_arrows(const torfold::PeriodicQuiver& pq,
                                                          const torfold::IceQuiver& q, int reach) {
  torfold::PeriodicQuiver::ArrowMap out;
  for (const auto& u : pq.sites())
    for (const auto& v : pq.sites())
      for (int s = -reach; s <= reach; ++s) {
        auto m = q.arrows(q.index_of(copy_id(u.id, 0)), q.index_of(copy_id(v.id, s)));
        if (m) out[{u.id, v.id, s}] = m;
      }
  return out;
}

/// Orbit-mutation by brute force on the unfolded quiver.
inline torfold::PeriodicQuiver::ArrowMap unfolded_orbit_mutate(const torfold::PeriodicQuiver& pq, int K, int R,
                                                               int reach) {
  torfold::IceQuiver q = unfold(pq, R);
  for (int k = -R; k <= R; ++k) q = torfold::mutate(q, copy_id(K, k));
  return copy_zero_arrows(pq, q, reach);
}

/// Random admissible periodic quiver; arrows between a pair go one way only.
inline torfold::PeriodicQuiver periodic_quiver(gen::Rng& rng, int max_sites = 5, int max_shift = 2) {
  const int m = gen::uniform(rng, 1, max_sites);
  std::vector<torfold::Site> sites;
  for (int i = 0; i < m; ++i) sites.push_back({i, i > 0 && gen::uniform(rng, 0, 3) == 0});
  std::vector<torfold::PeriodicArrow> arrows;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      if (sites[a].frozen && sites[b].frozen) continue;
      const bool forward = gen::uniform(rng, 0, 1);
      const int count = gen::uniform(rng, 0, 2);
      for (int c = 0; c < count; ++c) {
        const int s = gen::uniform(rng, -max_shift, max_shift);
        const int mult = gen::uniform(rng, 1, 2);
        if (forward) arrows.push_back({a, b, s, mult});
        else arrows.push_back({b, a, s, mult});
      }
    }
  return torfold::PeriodicQuiver(gen::uniform(rng, 1, 4), std::move(sites), arrows);
}

/// Γ̃_{2n} straight from its arrow formula; frozen i' is vertex 2n+i.
inline torfold::IceQuiver gamma_tilde(int n) {
  const int p = 2 * n;
  std::vector<torfold::Vertex> vs;
  for (int i = 0; i < p; ++i) vs.push_back({std::to_string(i), false});
  for (int i = 0; i < p; ++i) vs.push_back({std::to_string(p + i), true});
  std::vector<torfold::Arrow> arrows;
  auto mod = [p](int x) { return ((x % p) + p) % p; };
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < p; ++j) {
      if (i % 2 == 0) {
        const int m = (mod(j + 1) == i) + (mod(j - 1) == i);
        if (m) arrows.push_back({std::to_string(i), std::to_string(j), m});
        if (i == j) arrows.push_back({std::to_string(p + i), std::to_string(j), 1});
      } else if (i == j) {
        arrows.push_back({std::to_string(i), std::to_string(p + j), 1});
      }
    }
  }
  return torfold::IceQuiver(std::move(vs), arrows);
}

inline std::vector<std::vector<int>> all_orientations(int n) {
  std::vector<std::vector<int>> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> d(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) d[static_cast<std::size_t>(i)] = (mask >> i) & 1 ? 1 : -1;
    out.push_back(d);
  }
  return out;
}

}  // namespace oracle
