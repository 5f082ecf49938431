#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "torfold/ice_quiver.hpp"
#include "torfold/laurent.hpp"
#include "torfold/periodic_quiver.hpp"

namespace torfold {

/// Cluster entries are indexed like quiver.vertices(); frozen entries keep
/// their initial variables.
struct Seed {
  IceQuiver quiver;
  std::vector<LaurentPoly> cluster;
  std::vector<std::string> history;

  bool operator==(const Seed&) const = default;
};

/// Copy-0 representatives; copy k of site u is shift_substitute(cluster[u], k).
struct OrbitSeed {
  PeriodicQuiver pquiver;
  std::vector<LaurentPoly> cluster;
  std::vector<int> history;

  bool operator==(const OrbitSeed&) const = default;
};

/// Indeterminates keyed (vertex index, 0, layer).
Seed initial_seed(const IceQuiver& q);
/// Indeterminates with explicit keys, one per vertex.
Seed initial_seed(const IceQuiver& q, const std::vector<VarKey>& keys);
OrbitSeed initial_orbit_seed(const PeriodicQuiver& pq);

Seed mutate_seed(const Seed& s, std::string_view z);
Seed mutate_seed_at(const Seed& s, std::size_t z);
OrbitSeed orbit_mutate_seed(const OrbitSeed& os, int K);
Seed fold_orbit_seed(const OrbitSeed& os);

/// Finite window [lo, hi] of Γ_∞: mutable ids "i", frozen ids "i'", variables
/// x_i = (i,0,mut) and f_i = (i,0,frz).
Seed gamma_window(int lo, int hi);

struct RootInterval {
  int i = 0;
  int j = 0;
  bool negative = false;  // negative simple root −α_i (then i == j)

  static RootInterval positive(int i, int j) { return {i, j, false}; }
  static RootInterval negative_simple(int i) { return {i, i, true}; }
  int length() const { return j - i + 1; }
  bool operator==(const RootInterval&) const = default;
  auto operator<=>(const RootInterval&) const = default;
};

std::string to_string(const RootInterval& r);

/// Reads a d-vector (vertex label -> entry) as an almost positive root.
std::optional<RootInterval> root_of_dvector(const std::map<int, int>& d);

/// d-vector of a 𝒜_∞-window variable, keyed by integer label.
std::map<int, int> label_dvector(const LaurentPoly& x, const Seed& window);
/// d-vector of an orbit-seed variable of Γ_∞(n); label = site + 2n·shift.
std::map<int, int> orbit_dvector(const LaurentPoly& x, const PeriodicQuiver& pq);

/// Cluster variable of a Γ_∞ window (built by gamma_window) with the given
/// denominator vector. Tries the support left to right, then bipartite
/// belts, then BFS up to `budget` mutations.
LaurentPoly find_cluster_variable(const Seed& window, const RootInterval& root, int budget = 10);

bool is_orbit_cluster_root(const RootInterval& root, int n);

/// Frozen monomials f_k (monic, nonnegative frozen exponents) with
/// lhs = Σ terms[k]·f_k, or nullopt.
std::optional<std::vector<Monomial>> solve_frozen_coefficients(const LaurentPoly& lhs,
                                                               const std::vector<LaurentPoly>& terms);

struct IdentityReport {
  std::string identity;
  int i = 0;
  int j = 0;
  bool verified = false;
  std::vector<std::string> frozen_monomials;
  std::string witness;  // residual when falsified
};

/// The four exchange relations for each listed (i, j), then the imaginary-root
/// identity in the toroidal quotient when n >= 3.
std::vector<IdentityReport> verify_exchange_identities(int n, const std::vector<std::pair<int, int>>& pairs);
IdentityReport verify_exchange_relation(int which, int i, int j);
IdentityReport verify_imaginary_root(int n);

}  // namespace torfold
