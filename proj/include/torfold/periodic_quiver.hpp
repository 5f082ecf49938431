#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "torfold/errors.hpp"
#include "torfold/ice_quiver.hpp"

namespace torfold {

struct Site {
  int id = 0;
  bool frozen = false;

  bool operator==(const Site&) const = default;
};

/// One stored arrow stands for (from, copy k) -> (to, copy k + shift) for every k.
struct PeriodicArrow {
  int from = 0;
  int to = 0;
  int shift = 0;
  Multiplicity mult = 1;

  bool operator==(const PeriodicArrow&) const = default;
};

/// Fundamental-domain model of a shift-periodic locally finite ice quiver.
///
/// Sites are numbered 0..size()-1; `period` records how far Σ moves the
/// underlying integer labels (Γ_∞ has 4n sites and period 2n).
class PeriodicQuiver {
 public:
  using Key = std::tuple<int, int, int>;  // (from, to, shift)
  using ArrowMap = std::map<Key, Multiplicity>;

  PeriodicQuiver() = default;
  /// Checks site numbering, endpoints and multiplicities; admissibility is
  /// a separate question (see admissibility_check).
  PeriodicQuiver(int period, std::vector<Site> sites, const std::vector<PeriodicArrow>& arrows);
  PeriodicQuiver(int period, std::vector<Site> sites, ArrowMap arrows);

  int period() const { return period_; }
  int size() const { return static_cast<int>(sites_.size()); }
  const std::vector<Site>& sites() const { return sites_; }
  bool is_frozen(int site) const { return sites_.at(static_cast<std::size_t>(site)).frozen; }
  const ArrowMap& arrow_map() const { return arrows_; }
  std::vector<PeriodicArrow> arrow_list() const;
  Multiplicity arrows(int from, int to, int shift) const;

  bool operator==(const PeriodicQuiver&) const = default;

 private:
  void check_shape() const;

  int period_ = 1;
  std::vector<Site> sites_;
  ArrowMap arrows_;
};

struct AdmissibilityReport {
  bool admissible = true;
  std::vector<Violation> violations;
};

AdmissibilityReport admissibility_check(const PeriodicQuiver& pq);

/// Simultaneous mutation at every copy of mutable site K. Condition (4) is
/// not enforced on the result.
PeriodicQuiver orbit_mutate(const PeriodicQuiver& pq, int K);

/// Quotient quiver on sites; vertex ids are the decimal site numbers.
IceQuiver fold(const PeriodicQuiver& pq);

/// A_Q for an orientation Q of an n-cycle on vertices 0..n-1 (ids may be
/// any integers, read mod n).
PeriodicQuiver build_AQ(const IceQuiver& cyclic);

/// Γ_∞ with Σ = shift by 2n. Sites 0..2n-1 mutable, 2n+s is the frozen partner s'.
PeriodicQuiver build_gamma_infinity(int n);

/// Direction of each edge {i,i+1 mod n}: +1 if i -> i+1, -1 if i+1 -> i.
std::vector<int> cycle_orientation(const IceQuiver& cyclic);
IceQuiver cycle_quiver(const std::vector<int>& orientation);
bool is_cyclically_oriented(const std::vector<int>& orientation);

struct FoldabilityResult {
  bool violation_found = false;
  int depth = 0;
  std::vector<int> witness;
  std::vector<Violation> violations;
  std::size_t states_visited = 0;
};

/// BFS over orbit-mutation sequences (length, then lexicographic order).
FoldabilityResult foldability_search(const PeriodicQuiver& pq, int max_depth);

}  // namespace torfold
