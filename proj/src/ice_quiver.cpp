#include "torfold/ice_quiver.hpp"

#include <algorithm>
#include <charconv>
#include <optional>

#include "torfold/errors.hpp"

namespace torfold {

namespace {

std::optional<long long> parse_integer(std::string_view s) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return value;
}

std::string pair_name(const std::string& a, const std::string& b) {
  return "(" + a + ", " + b + ")";
}

}  // namespace

bool natural_less(std::string_view a, std::string_view b) {
  auto ia = parse_integer(a);
  auto ib = parse_integer(b);
  if (ia && ib) return *ia < *ib;
  if (ia != std::nullopt) return true;
  if (ib != std::nullopt) return false;
  return a < b;
}

Multiplicity checked_add(Multiplicity a, Multiplicity b) {
  Multiplicity r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("arrow multiplicity overflow");
  return r;
}

Multiplicity checked_mul(Multiplicity a, Multiplicity b) {
  Multiplicity r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("arrow multiplicity overflow");
  return r;
}

IceQuiver::IceQuiver(std::vector<Vertex> vertices, ArrowMap arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!index_.emplace(vertices_[i].id, i).second)
      throw InputError("duplicate vertex id '" + vertices_[i].id + "'");
  }
  std::erase_if(arrows_, [](const auto& kv) { return kv.second == 0; });
  validate();
}

IceQuiver::IceQuiver(std::vector<Vertex> vertices, const std::vector<Arrow>& arrows)
    : vertices_(std::move(vertices)) {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!index_.emplace(vertices_[i].id, i).second)
      throw InputError("duplicate vertex id '" + vertices_[i].id + "'");
  }
  for (const auto& a : arrows) {
    if (a.mult < 0) throw InputError("negative multiplicity on " + pair_name(a.from, a.to));
    if (a.mult == 0) continue;
    auto key = std::make_pair(index_of(a.from), index_of(a.to));
    arrows_[key] = checked_add(arrows_[key], a.mult);
  }
  validate();
}

void IceQuiver::validate() const {
  for (const auto& [key, mult] : arrows_) {
    const auto [s, t] = key;
    if (s >= vertices_.size() || t >= vertices_.size()) throw InputError("arrow endpoint out of range");
    const auto& from = vertices_[s].id;
    const auto& to = vertices_[t].id;
    if (mult < 0) throw InputError("negative multiplicity on " + pair_name(from, to));
    if (s == t) throw InputError("loop at vertex " + from);
    if (vertices_[s].frozen && vertices_[t].frozen)
      throw InputError("arrow between frozen vertices " + pair_name(from, to));
    if (s < t && arrows_.count({t, s}))
      throw InputError("2-cycle between " + pair_name(from, to));
  }
}

bool IceQuiver::contains(std::string_view id) const { return index_.find(id) != index_.end(); }

std::size_t IceQuiver::index_of(std::string_view id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw InputError("unknown vertex '" + std::string(id) + "'");
  return it->second;
}

Multiplicity IceQuiver::arrows(std::size_t from, std::size_t to) const {
  auto it = arrows_.find({from, to});
  return it == arrows_.end() ? 0 : it->second;
}

std::vector<Arrow> IceQuiver::arrow_list() const {
  std::vector<Arrow> out;
  out.reserve(arrows_.size());
  for (const auto& [key, mult] : arrows_)
    out.push_back({vertices_[key.first].id, vertices_[key.second].id, mult});
  return out;
}

bool operator==(const IceQuiver& a, const IceQuiver& b) {
  if (a.size() != b.size()) return false;
  IceQuiver na = normalize(a);
  IceQuiver nb = normalize(b);
  return na.vertices_ == nb.vertices_ && na.arrows_ == nb.arrows_;
}

Multiplicity arr_count(const IceQuiver& q, const std::vector<std::string>& from,
                       const std::vector<std::string>& to) {
  std::vector<bool> in_from(q.size(), false), in_to(q.size(), false);
  for (const auto& id : from) in_from[q.index_of(id)] = true;
  for (const auto& id : to) in_to[q.index_of(id)] = true;
  Multiplicity total = 0;
  for (const auto& [key, mult] : q.arrow_map())
    if (in_from[key.first] && in_to[key.second]) total = checked_add(total, mult);
  return total;
}

IceQuiver mutate(const IceQuiver& q, std::string_view z) { return mutate_at(q, q.index_of(z)); }

IceQuiver mutate_at(const IceQuiver& q, std::size_t z) {
  if (z >= q.size()) throw InputError("vertex index out of range");
  if (q.is_frozen(z)) throw MutationAtFrozenError("cannot mutate at frozen vertex " + q.vertex(z).id);

  std::vector<std::pair<std::size_t, Multiplicity>> incoming, outgoing;
  IceQuiver::ArrowMap next;
  for (const auto& [key, mult] : q.arrow_map()) {
    const auto [s, t] = key;
    if (t == z) {
      incoming.emplace_back(s, mult);
      next[{z, s}] = mult;
    } else if (s == z) {
      outgoing.emplace_back(t, mult);
      next[{t, z}] = mult;
    } else {
      next[key] = mult;
    }
  }

  for (const auto& [x, in_mult] : incoming) {
    for (const auto& [y, out_mult] : outgoing) {
      if (q.is_frozen(x) && q.is_frozen(y)) continue;
      const Multiplicity through = checked_mul(in_mult, out_mult);
      auto fwd = next.find({x, y});
      auto back = next.find({y, x});
      Multiplicity net = through;
      if (fwd != next.end()) net = checked_add(net, fwd->second);
      if (back != next.end()) net = checked_add(net, -back->second);
      if (fwd != next.end()) next.erase(fwd);
      if (back != next.end()) next.erase(back);
      if (net > 0) next[{x, y}] = net;
      if (net < 0) next[{y, x}] = -net;
    }
  }
  return IceQuiver(q.vertices(), std::move(next));
}

IceQuiver normalize(const IceQuiver& q) {
  std::vector<std::size_t> order(q.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return natural_less(q.vertex(a).id, q.vertex(b).id);
  });
  std::vector<std::size_t> position(q.size());
  std::vector<Vertex> vertices;
  vertices.reserve(q.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    position[order[i]] = i;
    vertices.push_back(q.vertex(order[i]));
  }
  IceQuiver::ArrowMap arrows;
  for (const auto& [key, mult] : q.arrow_map())
    arrows[{position[key.first], position[key.second]}] = mult;
  return IceQuiver(std::move(vertices), std::move(arrows));
}

}  // namespace torfold
