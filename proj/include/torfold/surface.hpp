#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "torfold/periodic_quiver.hpp"

namespace torfold {

enum class Boundary : std::uint8_t { Bottom = 0, Top = 1 };

struct MarkedPoint {
  Boundary side = Boundary::Top;
  int index = 0;

  auto operator<=>(const MarkedPoint&) const = default;
  bool operator==(const MarkedPoint&) const = default;
};

inline MarkedPoint top(int i) { return {Boundary::Top, i}; }
inline MarkedPoint bottom(int i) { return {Boundary::Bottom, i}; }
std::string to_string(const MarkedPoint& p);

/// Arc of the marked strip. Same-boundary arcs keep a.index < b.index;
/// bridging arcs keep a on top and b on the bottom.
struct Arc {
  MarkedPoint a;
  MarkedPoint b;

  /// Throws InputError for equal or neighbouring same-boundary points.
  static Arc make(MarkedPoint p, MarkedPoint q);
  bool bridging() const { return a.side != b.side; }
  auto operator<=>(const Arc&) const = default;
  bool operator==(const Arc&) const = default;
};

std::string to_string(const Arc& a);

/// Universal cover of an annulus with k1 marks outside (top) and k2 inside
/// (bottom); Σ moves top marks by k1 and bottom marks by k2.
struct MarkedRibbon {
  int k1 = 1;
  int k2 = 1;

  MarkedPoint shift(const MarkedPoint& p, int m) const;
  Arc shift(const Arc& a, int m) const;
  /// (canonical translate, m) with arc = Σ^m(canonical).
  std::pair<Arc, int> canonical(const Arc& a) const;
  bool operator==(const MarkedRibbon&) const = default;
};

bool crosses(const Arc& x, const Arc& y);

/// Side of a triangle: a boundary segment or copy `copy` of orbit `site`.
struct Side {
  MarkedPoint u;
  MarkedPoint v;
  std::optional<int> site;
  int copy = 0;
};

struct Triangle {
  std::array<MarkedPoint, 3> ccw;  // counterclockwise vertex order
};

/// Σ-stable triangulation given by one representative arc per orbit.
class SigmaTriangulation {
 public:
  /// Validates arcs, pairwise non-crossing (with all translates), distinct
  /// orbits, and that each orbit is the diagonal of two triangles.
  SigmaTriangulation(MarkedRibbon ribbon, std::vector<Arc> reps);

  const MarkedRibbon& ribbon() const { return ribbon_; }
  const std::vector<Arc>& arcs() const { return reps_; }
  int size() const { return static_cast<int>(reps_.size()); }

  /// Orbit and copy of an arc of the lifted triangulation, nullopt otherwise.
  std::optional<std::pair<int, int>> locate(const Arc& arc) const;
  bool is_edge(const MarkedPoint& p, const MarkedPoint& q) const;
  std::vector<MarkedPoint> neighbours(const MarkedPoint& p) const;
  std::vector<Triangle> triangles_at(const Arc& arc) const;
  Side side(const MarkedPoint& u, const MarkedPoint& v) const;

  bool operator==(const SigmaTriangulation& o) const { return ribbon_ == o.ribbon_ && reps_ == o.reps_; }

 private:
  MarkedRibbon ribbon_;
  std::vector<Arc> reps_;
  std::vector<std::pair<Arc, int>> canon_;  // canonical translate and offset of each rep
};

/// Replaces the orbit's arcs by the other diagonals of their quadrilaterals.
SigmaTriangulation flip(const SigmaTriangulation& t, int orbit);

/// One site per orbit; arrows between consecutive sides of each triangle,
/// from a side to the side that follows it clockwise.
PeriodicQuiver quiver_of(const SigmaTriangulation& t);

/// Fan of bridging arcs whose quiver is build_AQ(cyclic). Cyclic orientations
/// have no annulus and raise InputError.
SigmaTriangulation default_triangulation(const IceQuiver& cyclic);
SigmaTriangulation default_triangulation(int k1, int k2);

struct SurfaceReport {
  bool quiver_admissible = true;
  bool geometry_clear = true;
  bool agree = true;
  std::vector<Violation> quiver_violations;
  std::vector<std::string> geometric_findings;
};

/// Admissibility of quiver_of(t) plus a direct scan for two arcs of one
/// orbit that are adjacent sides of some quadrilateral.
SurfaceReport check_no_virtual_2cycles(const SigmaTriangulation& t);

}  // namespace torfold
