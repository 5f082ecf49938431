#include "torfold/surface.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

#include "torfold/errors.hpp"

namespace torfold {

namespace {

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Position on the boundary read counterclockwise: bottom left to right,
// then top right to left.
std::pair<int, int> ccw_key(const MarkedPoint& p) {
  return p.side == Boundary::Bottom ? std::pair{0, p.index} : std::pair{1, -p.index};
}

bool is_segment(const MarkedPoint& p, const MarkedPoint& q) {
  return p.side == q.side && std::abs(p.index - q.index) == 1;
}

int extent(const Arc& a) { return std::max(std::abs(a.a.index), std::abs(a.b.index)); }

}  // namespace

std::string to_string(const MarkedPoint& p) {
  return (p.side == Boundary::Top ? "t" : "b") + std::to_string(p.index);
}

std::string to_string(const Arc& a) { return "(" + to_string(a.a) + ", " + to_string(a.b) + ")"; }

Arc Arc::make(MarkedPoint p, MarkedPoint q) {
  if (p == q) throw InputError("arc endpoints coincide at " + to_string(p));
  if (is_segment(p, q))
    throw InputError("neighbouring marks " + to_string(p) + ", " + to_string(q) + " bound a boundary segment");
  if (p.side == q.side) {
    if (q.index < p.index) std::swap(p, q);
  } else if (p.side == Boundary::Bottom) {
    std::swap(p, q);
  }
  return Arc{p, q};
}

MarkedPoint MarkedRibbon::shift(const MarkedPoint& p, int m) const {
  return {p.side, p.index + m * (p.side == Boundary::Top ? k1 : k2)};
}

Arc MarkedRibbon::shift(const Arc& a, int m) const { return Arc{shift(a.a, m), shift(a.b, m)}; }

std::pair<Arc, int> MarkedRibbon::canonical(const Arc& a) const {
  int period = a.a.side == Boundary::Top ? k1 : k2;
  int m = floor_div(a.a.index, period);
  return {shift(a, -m), m};
}

bool crosses(const Arc& x, const Arc& y) {
  if (!x.bridging() && !y.bridging()) {
    if (x.a.side != y.a.side) return false;
    int a1 = x.a.index, b1 = x.b.index, a2 = y.a.index, b2 = y.b.index;
    return (a1 < a2 && a2 < b1 && b1 < b2) || (a2 < a1 && a1 < b2 && b2 < b1);
  }
  if (x.bridging() && y.bridging()) {
    long dt = x.a.index - y.a.index;
    long db = x.b.index - y.b.index;
    return dt * db < 0;
  }
  const Arc& s = x.bridging() ? y : x;
  const Arc& br = x.bridging() ? x : y;
  int e = s.a.side == Boundary::Top ? br.a.index : br.b.index;
  return s.a.index < e && e < s.b.index;
}

SigmaTriangulation::SigmaTriangulation(MarkedRibbon ribbon, std::vector<Arc> reps)
    : ribbon_(ribbon), reps_(std::move(reps)) {
  if (ribbon_.k1 < 1 || ribbon_.k2 < 1) throw InputError("ribbon needs k1, k2 >= 1");
  for (auto& r : reps_) r = Arc::make(r.a, r.b);
  int reach = 2;
  for (const auto& r : reps_) reach = std::max(reach, extent(r));
  int span = 2 * reach / std::min(ribbon_.k1, ribbon_.k2) + 2;

  std::set<Arc> seen;
  for (const auto& r : reps_) {
    auto c = ribbon_.canonical(r);
    if (!seen.insert(c.first).second) throw InputError("two representatives of orbit " + to_string(c.first));
    canon_.push_back(c);
  }
  for (std::size_t i = 0; i < reps_.size(); ++i)
    for (std::size_t j = i; j < reps_.size(); ++j)
      for (int m = -span; m <= span; ++m) {
        if (i == j && m == 0) continue;
        if (crosses(reps_[i], ribbon_.shift(reps_[j], m)))
          throw InputError("arcs " + to_string(reps_[i]) + " and " + to_string(ribbon_.shift(reps_[j], m)) +
                           " cross");
      }
  if (size() != ribbon_.k1 + ribbon_.k2)
    throw InputError("expected " + std::to_string(ribbon_.k1 + ribbon_.k2) + " arc orbits, got " +
                     std::to_string(size()));
  for (const auto& r : reps_)
    if (triangles_at(r).size() != 2) throw InputError("arc " + to_string(r) + " does not bound two triangles");
}

std::optional<std::pair<int, int>> SigmaTriangulation::locate(const Arc& arc) const {
  auto c = ribbon_.canonical(arc);
  for (std::size_t i = 0; i < canon_.size(); ++i)
    if (canon_[i].first == c.first) return std::pair{static_cast<int>(i), c.second - canon_[i].second};
  return std::nullopt;
}

bool SigmaTriangulation::is_edge(const MarkedPoint& p, const MarkedPoint& q) const {
  if (p == q) return false;
  if (is_segment(p, q)) return true;
  return locate(Arc::make(p, q)).has_value();
}

std::vector<MarkedPoint> SigmaTriangulation::neighbours(const MarkedPoint& p) const {
  std::vector<MarkedPoint> out{{p.side, p.index - 1}, {p.side, p.index + 1}};
  for (const auto& r : reps_) {
    for (int end = 0; end < 2; ++end) {
      const MarkedPoint& e = end == 0 ? r.a : r.b;
      const MarkedPoint& other = end == 0 ? r.b : r.a;
      if (e.side != p.side) continue;
      int period = p.side == Boundary::Top ? ribbon_.k1 : ribbon_.k2;
      int d = p.index - e.index;
      if (d % period != 0) continue;
      out.push_back(ribbon_.shift(other, d / period));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Triangle> SigmaTriangulation::triangles_at(const Arc& arc) const {
  auto np = neighbours(arc.a);
  auto nq = neighbours(arc.b);
  std::vector<MarkedPoint> common;
  std::set_intersection(np.begin(), np.end(), nq.begin(), nq.end(), std::back_inserter(common));
  std::vector<Triangle> out;
  for (const auto& x : common) {
    std::array<MarkedPoint, 3> v{arc.a, arc.b, x};
    std::sort(v.begin(), v.end(), [](const auto& l, const auto& r) { return ccw_key(l) < ccw_key(r); });
    out.push_back({v});
  }
  return out;
}

Side SigmaTriangulation::side(const MarkedPoint& u, const MarkedPoint& v) const {
  Side s{u, v, std::nullopt, 0};
  if (is_segment(u, v)) return s;
  auto loc = locate(Arc::make(u, v));
  if (!loc) throw InputError("no edge " + to_string(u) + " - " + to_string(v));
  s.site = loc->first;
  s.copy = loc->second;
  return s;
}

SigmaTriangulation flip(const SigmaTriangulation& t, int orbit) {
  if (orbit < 0 || orbit >= t.size()) throw InputError("unknown arc orbit " + std::to_string(orbit));
  const Arc& r = t.arcs()[static_cast<std::size_t>(orbit)];
  auto tris = t.triangles_at(r);
  std::vector<MarkedPoint> apex;
  for (const auto& tri : tris)
    for (const auto& v : tri.ccw)
      if (v != r.a && v != r.b) apex.push_back(v);
  if (apex.size() != 2) throw UnflippableError("arc " + to_string(r) + " lies in no quadrilateral");
  std::vector<Arc> reps = t.arcs();
  try {
    reps[static_cast<std::size_t>(orbit)] = Arc::make(apex[0], apex[1]);
    return SigmaTriangulation(t.ribbon(), std::move(reps));
  } catch (const InputError& e) {
    throw UnflippableError("orbit " + std::to_string(orbit) + " is not flippable: " + e.what());
  }
}

PeriodicQuiver quiver_of(const SigmaTriangulation& t) {
  PeriodicQuiver::ArrowMap arrows;
  auto add = [&](int from, int to, int shift) {
    if (from < to || (from == to && shift > 0))
      arrows[{from, to, shift}] += 1;
    else
      arrows[{to, from, -shift}] -= 1;
  };
  for (int k = 0; k < t.size(); ++k) {
    const Arc& r = t.arcs()[static_cast<std::size_t>(k)];
    for (const auto& tri : t.triangles_at(r)) {
      std::array<Side, 3> s;
      for (int e = 0; e < 3; ++e) s[e] = t.side(tri.ccw[e], tri.ccw[(e + 1) % 3]);
      for (int e = 0; e < 3; ++e) {
        if (!s[e].site || *s[e].site != k || s[e].copy != 0) continue;
        const Side& next = s[(e + 2) % 3];  // clockwise successor
        if (next.site) add(k, *next.site, next.copy);
      }
    }
  }
  PeriodicQuiver::ArrowMap out;
  for (const auto& [key, m] : arrows) {
    if (m > 0) out[key] = m;
    if (m < 0) out[{std::get<1>(key), std::get<0>(key), -std::get<2>(key)}] = -m;
  }
  std::vector<Site> sites;
  for (int k = 0; k < t.size(); ++k) sites.push_back({k, false});
  return PeriodicQuiver(t.ribbon().k1 + t.ribbon().k2, std::move(sites), std::move(out));
}

SigmaTriangulation default_triangulation(const IceQuiver& cyclic) {
  auto dirs = cycle_orientation(cyclic);
  if (is_cyclically_oriented(dirs)) throw InputError("cyclically oriented cycle has no annulus (k1*k2 = 0)");
  MarkedRibbon ribbon{0, 0};
  std::vector<Arc> reps;
  int tp = 0, bt = 0;
  for (int d : dirs) {
    reps.push_back(Arc::make(top(tp), bottom(bt)));
    if (d > 0) {
      ++bt;
      ++ribbon.k2;
    } else {
      ++tp;
      ++ribbon.k1;
    }
  }
  return SigmaTriangulation(ribbon, std::move(reps));
}

SigmaTriangulation default_triangulation(int k1, int k2) {
  if (k1 < 1 || k2 < 1) throw InputError("ribbon needs k1, k2 >= 1");
  std::vector<int> dirs(static_cast<std::size_t>(k2), 1);
  dirs.insert(dirs.end(), static_cast<std::size_t>(k1), -1);
  return default_triangulation(cycle_quiver(dirs));
}

SurfaceReport check_no_virtual_2cycles(const SigmaTriangulation& t) {
  SurfaceReport rep;
  auto adm = admissibility_check(quiver_of(t));
  rep.quiver_admissible = adm.admissible;
  rep.quiver_violations = adm.violations;

  for (int k = 0; k < t.size(); ++k) {
    const Arc& r = t.arcs()[static_cast<std::size_t>(k)];
    // quadrilateral sides with their shared corners
    std::vector<std::pair<Side, Side>> corners;
    std::vector<Side> sides;
    for (const auto& tri : t.triangles_at(r)) {
      MarkedPoint x{};
      for (const auto& v : tri.ccw)
        if (v != r.a && v != r.b) x = v;
      Side sa = t.side(r.a, x), sb = t.side(x, r.b);
      corners.emplace_back(sa, sb);
      sides.push_back(sa);
      sides.push_back(sb);
    }
    if (sides.size() == 4) {
      corners.emplace_back(sides[0], sides[2]);  // share r.a
      corners.emplace_back(sides[1], sides[3]);  // share r.b
    }
    std::ostringstream where;
    where << "quadrilateral of " << to_string(r);
    for (const auto& s : sides)
      if (s.site && *s.site == k) {
        rep.geometric_findings.push_back(where.str() + ": translate " + to_string(Arc::make(s.u, s.v)) +
                                         " of the diagonal is a side");
      }
    for (const auto& [s1, s2] : corners)
      if (s1.site && s2.site && *s1.site == *s2.site && *s1.site != k) {
        rep.geometric_findings.push_back(where.str() + ": " + to_string(Arc::make(s1.u, s1.v)) + " and " +
                                         to_string(Arc::make(s2.u, s2.v)) + " share an endpoint");
      }
  }
  rep.geometry_clear = rep.geometric_findings.empty();
  rep.agree = rep.geometry_clear == rep.quiver_admissible;
  return rep;
}

}  // namespace torfold
