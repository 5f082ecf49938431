#include "torfold/periodic_quiver.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <set>

namespace torfold {

namespace {

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

int floor_mod(int a, int b) { return a - b * floor_div(a, b); }

long long parse_label(const std::string& id) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(id.data(), id.data() + id.size(), value);
  if (ec != std::errc{} || ptr != id.data() + id.size())
    throw InputError("cycle vertex id '" + id + "' is not an integer");
  return value;
}

}  // namespace

PeriodicQuiver::PeriodicQuiver(int period, std::vector<Site> sites,
                               const std::vector<PeriodicArrow>& arrows)
    : period_(period), sites_(std::move(sites)) {
  for (const auto& a : arrows) {
    if (a.mult < 0) throw InputError("negative multiplicity");
    if (a.mult == 0) continue;
    auto& slot = arrows_[{a.from, a.to, a.shift}];
    slot = checked_add(slot, a.mult);
  }
  check_shape();
}

PeriodicQuiver::PeriodicQuiver(int period, std::vector<Site> sites, ArrowMap arrows)
    : period_(period), sites_(std::move(sites)), arrows_(std::move(arrows)) {
  std::erase_if(arrows_, [](const auto& kv) { return kv.second == 0; });
  check_shape();
}

void PeriodicQuiver::check_shape() const {
  if (period_ <= 0) throw InputError("period must be positive");
  for (std::size_t i = 0; i < sites_.size(); ++i)
    if (sites_[i].id != static_cast<int>(i))
      throw InputError("site ids must be 0..m-1 in order (got " + std::to_string(sites_[i].id) +
                       " at position " + std::to_string(i) + ")");
  for (const auto& [key, mult] : arrows_) {
    const auto [from, to, shift] = key;
    (void)shift;
    if (from < 0 || from >= size() || to < 0 || to >= size())
      throw InputError("arrow endpoint outside the site list");
    if (mult < 0) throw InputError("negative multiplicity");
  }
}

std::vector<PeriodicArrow> PeriodicQuiver::arrow_list() const {
  std::vector<PeriodicArrow> out;
  out.reserve(arrows_.size());
  for (const auto& [key, mult] : arrows_) {
    const auto [from, to, shift] = key;
    out.push_back({from, to, shift, mult});
  }
  return out;
}

Multiplicity PeriodicQuiver::arrows(int from, int to, int shift) const {
  auto it = arrows_.find({from, to, shift});
  return it == arrows_.end() ? 0 : it->second;
}

AdmissibilityReport admissibility_check(const PeriodicQuiver& pq) {
  std::set<std::pair<int, int>> directed;
  std::set<std::tuple<int, int, std::string>> found;
  for (const auto& [key, mult] : pq.arrow_map()) {
    const auto [from, to, shift] = key;
    (void)shift;
    if (from == to) found.insert({from, to, "virtual-loop"});
    if (pq.is_frozen(from) && pq.is_frozen(to))
      found.insert({std::min(from, to), std::max(from, to), "frozen-arrow"});
    directed.insert({from, to});
  }
  for (const auto& [from, to] : directed)
    if (from < to && directed.count({to, from})) found.insert({from, to, "virtual-2-cycle"});

  AdmissibilityReport report;
  for (const auto& [a, b, condition] : found) report.violations.push_back({a, b, condition});
  report.admissible = report.violations.empty();
  return report;
}

PeriodicQuiver orbit_mutate(const PeriodicQuiver& pq, int K) {
  if (K < 0 || K >= pq.size()) throw InputError("orbit " + std::to_string(K) + " out of range");
  if (pq.is_frozen(K)) throw MutationAtFrozenError("cannot mutate at frozen orbit " + std::to_string(K));
  if (auto report = admissibility_check(pq); !report.admissible)
    throw InputError("orbit-mutation needs an admissible quiver: " + describe(report.violations));

  struct Leg {
    int site;
    int shift;
    Multiplicity mult;
  };
  std::vector<Leg> incoming, outgoing;
  PeriodicQuiver::ArrowMap next;
  for (const auto& [key, mult] : pq.arrow_map()) {
    const auto [from, to, shift] = key;
    if (to == K) {
      incoming.push_back({from, shift, mult});
      next[{K, from, -shift}] = mult;
    } else if (from == K) {
      outgoing.push_back({to, shift, mult});
      next[{to, K, -shift}] = mult;
    } else {
      next[key] = mult;
    }
  }

  PeriodicQuiver::ArrowMap through;
  for (const auto& in : incoming) {
    for (const auto& out : outgoing) {
      if (pq.is_frozen(in.site) && pq.is_frozen(out.site)) continue;
      auto& slot = through[{in.site, out.site, in.shift + out.shift}];
      slot = checked_add(slot, checked_mul(in.mult, out.mult));
    }
  }
  for (const auto& [key, extra] : through) {
    const auto [u, v, s] = key;
    const PeriodicQuiver::Key back{v, u, -s};
    Multiplicity net = extra;
    if (auto it = next.find(key); it != next.end()) {
      net = checked_add(net, it->second);
      next.erase(it);
    }
    if (auto it = next.find(back); it != next.end()) {
      net = checked_add(net, -it->second);
      next.erase(it);
    }
    if (net > 0) next[key] = net;
    if (net < 0) next[back] = -net;
  }
  return PeriodicQuiver(pq.period(), pq.sites(), std::move(next));
}

IceQuiver fold(const PeriodicQuiver& pq) {
  if (auto report = admissibility_check(pq); !report.admissible)
    throw FoldingError(report.violations);
  std::vector<Vertex> vertices;
  vertices.reserve(pq.sites().size());
  for (const auto& s : pq.sites()) vertices.push_back({std::to_string(s.id), s.frozen});
  IceQuiver::ArrowMap arrows;
  for (const auto& [key, mult] : pq.arrow_map()) {
    const auto [from, to, shift] = key;
    (void)shift;
    auto& slot = arrows[{static_cast<std::size_t>(from), static_cast<std::size_t>(to)}];
    slot = checked_add(slot, mult);
  }
  return IceQuiver(std::move(vertices), std::move(arrows));
}

std::vector<int> cycle_orientation(const IceQuiver& cyclic) {
  const int n = static_cast<int>(cyclic.size());
  if (n < 2) throw InputError("a cycle needs at least 2 vertices");
  std::vector<int> residue(cyclic.size());
  std::vector<bool> taken(cyclic.size(), false);
  for (std::size_t i = 0; i < cyclic.size(); ++i) {
    if (cyclic.is_frozen(i)) throw InputError("cycle quiver must not have frozen vertices");
    const long long label = parse_label(cyclic.vertex(i).id);
    const int r = static_cast<int>(((label % n) + n) % n);
    if (taken[static_cast<std::size_t>(r)])
      throw InputError("vertex labels are not distinct mod " + std::to_string(n));
    taken[static_cast<std::size_t>(r)] = true;
    residue[i] = r;
  }
  // forward[i] / backward[i]: arrows i -> i+1 and i+1 -> i (mod n).
  std::vector<Multiplicity> forward(cyclic.size(), 0), backward(cyclic.size(), 0);
  Multiplicity total = 0;
  for (const auto& [key, mult] : cyclic.arrow_map()) {
    const int a = residue[key.first];
    const int b = residue[key.second];
    total = checked_add(total, mult);
    if (n == 2) {
      // both edges join 0 and 1; split the multiplicity over them below
      if (a == 0) forward[0] += mult;
      else backward[0] += mult;
      continue;
    }
    if (b == (a + 1) % n) forward[static_cast<std::size_t>(a)] += mult;
    else if (a == (b + 1) % n) backward[static_cast<std::size_t>(b)] += mult;
    else throw InputError("arrow " + cyclic.vertex(key.first).id + " -> " +
                          cyclic.vertex(key.second).id + " is not an edge of the cycle");
  }
  if (total != n) throw InputError("underlying graph is not an " + std::to_string(n) + "-cycle");
  std::vector<int> dirs(static_cast<std::size_t>(n));
  if (n == 2) {
    if (forward[0] == 2) return {+1, -1};
    if (backward[0] == 2) return {-1, +1};
    throw InputError("underlying graph is not a 2-cycle");
  }
  for (int i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    if (forward[k] + backward[k] != 1)
      throw InputError("underlying graph is not an " + std::to_string(n) + "-cycle");
    dirs[k] = forward[k] == 1 ? +1 : -1;
  }
  return dirs;
}

IceQuiver cycle_quiver(const std::vector<int>& orientation) {
  const int n = static_cast<int>(orientation.size());
  if (n < 2) throw InputError("a cycle needs at least 2 vertices");
  std::vector<Vertex> vertices;
  for (int i = 0; i < n; ++i) vertices.push_back({std::to_string(i), false});
  std::vector<Arrow> arrows;
  for (int i = 0; i < n; ++i) {
    const std::string a = std::to_string(i), b = std::to_string((i + 1) % n);
    if (orientation[static_cast<std::size_t>(i)] > 0) arrows.push_back({a, b, 1});
    else arrows.push_back({b, a, 1});
  }
  return IceQuiver(std::move(vertices), arrows);
}

bool is_cyclically_oriented(const std::vector<int>& orientation) {
  return std::all_of(orientation.begin(), orientation.end(), [&](int d) { return d == orientation.front(); });
}

PeriodicQuiver build_AQ(const IceQuiver& cyclic) {
  const auto dirs = cycle_orientation(cyclic);
  const int n = static_cast<int>(dirs.size());
  std::vector<Site> sites;
  for (int i = 0; i < n; ++i) sites.push_back({i, false});
  std::vector<PeriodicArrow> arrows;
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    const int wrap = (i + 1) / n;
    if (dirs[static_cast<std::size_t>(i)] > 0) arrows.push_back({i, j, wrap, 1});
    else arrows.push_back({j, i, -wrap, 1});
  }
  return PeriodicQuiver(n, std::move(sites), arrows);
}

PeriodicQuiver build_gamma_infinity(int n) {
  if (n <= 0) throw InputError("n must be positive");
  const int p = 2 * n;
  std::vector<Site> sites;
  for (int s = 0; s < p; ++s) sites.push_back({s, false});
  for (int s = 0; s < p; ++s) sites.push_back({p + s, true});
  std::vector<PeriodicArrow> arrows;
  for (int s = 0; s < p; ++s) {
    if (s % 2 == 0) {
      arrows.push_back({s, floor_mod(s + 1, p), floor_div(s + 1, p), 1});
      arrows.push_back({s, floor_mod(s - 1, p), floor_div(s - 1, p), 1});
      arrows.push_back({p + s, s, 0, 1});
    } else {
      arrows.push_back({s, p + s, 0, 1});
    }
  }
  return PeriodicQuiver(p, std::move(sites), arrows);
}

FoldabilityResult foldability_search(const PeriodicQuiver& pq, int max_depth) {
  if (auto report = admissibility_check(pq); !report.admissible)
    throw InputError("foldability search needs an admissible quiver: " + describe(report.violations));
  std::vector<int> mutable_sites;
  for (const auto& s : pq.sites())
    if (!s.frozen) mutable_sites.push_back(s.id);

  struct Node {
    PeriodicQuiver quiver;
    std::vector<int> sequence;
  };
  FoldabilityResult result;
  std::set<PeriodicQuiver::ArrowMap> seen{pq.arrow_map()};
  std::deque<Node> frontier{{pq, {}}};
  for (int depth = 1; depth <= max_depth && !frontier.empty(); ++depth) {
    std::deque<Node> next;
    for (const auto& node : frontier) {
      for (int K : mutable_sites) {
        if (!node.sequence.empty() && node.sequence.back() == K) continue;
        PeriodicQuiver mutated = orbit_mutate(node.quiver, K);
        ++result.states_visited;
        auto sequence = node.sequence;
        sequence.push_back(K);
        if (auto report = admissibility_check(mutated); !report.admissible) {
          result.violation_found = true;
          result.depth = depth;
          result.witness = std::move(sequence);
          result.violations = std::move(report.violations);
          return result;
        }
        if (seen.insert(mutated.arrow_map()).second) next.push_back({std::move(mutated), std::move(sequence)});
      }
    }
    result.depth = depth;
    frontier = std::move(next);
  }
  return result;
}

}  // namespace torfold
