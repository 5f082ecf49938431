#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace torfold {

using Multiplicity = std::int64_t;

struct Vertex {
  std::string id;
  bool frozen = false;

  bool operator==(const Vertex&) const = default;
};

struct Arrow {
  std::string from;
  std::string to;
  Multiplicity mult = 1;

  bool operator==(const Arrow&) const = default;
};

/// Finite ice quiver: labelled vertices with frozen flags and arrow multiplicities.
///
/// Invariants (checked on construction): no loops, no 2-cycles, no arrows
/// between frozen vertices, vertex ids unique. Values are immutable; mutation
/// returns a fresh quiver.
class IceQuiver {
 public:
  using ArrowMap = std::map<std::pair<std::size_t, std::size_t>, Multiplicity>;

  IceQuiver() = default;
  /// Parallel arrows are merged. Throws InputError naming the offending pair.
  IceQuiver(std::vector<Vertex> vertices, const std::vector<Arrow>& arrows);
  /// Same checks as above, arrows given by vertex index.
  IceQuiver(std::vector<Vertex> vertices, ArrowMap arrows);

  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const Vertex& vertex(std::size_t i) const { return vertices_.at(i); }
  bool is_frozen(std::size_t i) const { return vertices_.at(i).frozen; }

  bool contains(std::string_view id) const;
  /// Throws InputError on an unknown id.
  std::size_t index_of(std::string_view id) const;

  Multiplicity arrows(std::size_t from, std::size_t to) const;
  /// Sparse map (source index, target index) -> multiplicity, zero entries absent.
  const ArrowMap& arrow_map() const { return arrows_; }
  std::vector<Arrow> arrow_list() const;

  /// Structural, label-sensitive equality (compares normal forms).
  friend bool operator==(const IceQuiver& a, const IceQuiver& b);

 private:
  void validate() const;

  std::vector<Vertex> vertices_;
  std::map<std::string, std::size_t, std::less<>> index_;
  ArrowMap arrows_;
};

/// Number of arrows with source in `from` and target in `to`.
Multiplicity arr_count(const IceQuiver& q, const std::vector<std::string>& from,
                       const std::vector<std::string>& to);

/// Quiver mutation at a mutable vertex. Throws MutationAtFrozenError,
/// InputError (unknown vertex) or OverflowError.
IceQuiver mutate(const IceQuiver& q, std::string_view z);
IceQuiver mutate_at(const IceQuiver& q, std::size_t z);

/// Canonical form: vertices in natural id order, arrows merged, zeros dropped.
IceQuiver normalize(const IceQuiver& q);

/// Natural order on vertex ids: integers numerically, then other strings.
bool natural_less(std::string_view a, std::string_view b);

/// Checked arithmetic for multiplicities.
Multiplicity checked_add(Multiplicity a, Multiplicity b);
Multiplicity checked_mul(Multiplicity a, Multiplicity b);

}  // namespace torfold
