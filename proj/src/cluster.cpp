#include "torfold/cluster.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <functional>
#include <set>

#include "torfold/errors.hpp"

namespace torfold {

namespace {

LaurentPoly exchange(const LaurentPoly& old, const LaurentPoly& out_product, const LaurentPoly& in_product) {
  return exact_div(out_product + in_product, old);
}

std::optional<int> parse_int(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

}  // namespace

Seed initial_seed(const IceQuiver& q) {
  std::vector<VarKey> keys;
  keys.reserve(q.size());
  for (std::size_t i = 0; i < q.size(); ++i)
    keys.push_back({static_cast<int>(i), 0, q.is_frozen(i) ? Layer::Frozen : Layer::Mutable});
  return initial_seed(q, keys);
}

Seed initial_seed(const IceQuiver& q, const std::vector<VarKey>& keys) {
  if (keys.size() != q.size()) throw InputError("one variable key per vertex is required");
  Seed s{q, {}, {}};
  s.cluster.reserve(keys.size());
  for (const auto& k : keys) s.cluster.push_back(LaurentPoly::var(k));
  return s;
}

OrbitSeed initial_orbit_seed(const PeriodicQuiver& pq) {
  if (auto report = admissibility_check(pq); !report.admissible)
    throw FoldingError(report.violations);
  OrbitSeed os{pq, {}, {}};
  for (const auto& site : pq.sites())
    os.cluster.push_back(LaurentPoly::var({site.id, 0, site.frozen ? Layer::Frozen : Layer::Mutable}));
  return os;
}

Seed mutate_seed(const Seed& s, std::string_view z) { return mutate_seed_at(s, s.quiver.index_of(z)); }

Seed mutate_seed_at(const Seed& s, std::size_t z) {
  IceQuiver next_quiver = mutate_at(s.quiver, z);  // rejects frozen z
  LaurentPoly out_product(1L), in_product(1L);
  for (const auto& [key, mult] : s.quiver.arrow_map()) {
    const auto e = static_cast<unsigned>(mult);
    if (key.first == z) out_product *= s.cluster[key.second].pow(e);
    else if (key.second == z) in_product *= s.cluster[key.first].pow(e);
  }
  Seed next{std::move(next_quiver), s.cluster, s.history};
  next.cluster[z] = exchange(s.cluster[z], out_product, in_product);
  next.history.push_back(s.quiver.vertex(z).id);
  return next;
}

OrbitSeed orbit_mutate_seed(const OrbitSeed& os, int K) {
  PeriodicQuiver next_quiver = orbit_mutate(os.pquiver, K);
  auto sequence = os.history;
  sequence.push_back(K);
  if (auto report = admissibility_check(next_quiver); !report.admissible)
    throw FoldabilityViolationError(std::move(sequence), std::move(report.violations));

  LaurentPoly out_product(1L), in_product(1L);
  for (const auto& [key, mult] : os.pquiver.arrow_map()) {
    const auto [from, to, shift] = key;
    const auto e = static_cast<unsigned>(mult);
    // (K,0) -> (to, shift) and (from, -shift) -> (K,0)
    if (from == K) out_product *= shift_substitute(os.cluster[static_cast<std::size_t>(to)], shift).pow(e);
    else if (to == K) in_product *= shift_substitute(os.cluster[static_cast<std::size_t>(from)], -shift).pow(e);
  }
  OrbitSeed next{std::move(next_quiver), os.cluster, std::move(sequence)};
  const auto k = static_cast<std::size_t>(K);
  next.cluster[k] = exchange(os.cluster[k], out_product, in_product);
  return next;
}

Seed fold_orbit_seed(const OrbitSeed& os) {
  Seed s{fold(os.pquiver), {}, {}};
  s.cluster.reserve(os.cluster.size());
  for (const auto& x : os.cluster) s.cluster.push_back(fold_substitute(x));
  for (int K : os.history) s.history.push_back(std::to_string(K));
  return s;
}

Seed gamma_window(int lo, int hi) {
  if (lo > hi) throw InputError("empty window");
  std::vector<Vertex> vertices;
  std::vector<VarKey> keys;
  for (int i = lo; i <= hi; ++i) {
    vertices.push_back({std::to_string(i), false});
    keys.push_back(mut_var(i));
  }
  for (int i = lo; i <= hi; ++i) {
    vertices.push_back({std::to_string(i) + "'", true});
    keys.push_back(frz_var(i));
  }
  const auto width = static_cast<std::size_t>(hi - lo + 1);
  IceQuiver::ArrowMap arrows;
  for (int i = lo; i <= hi; ++i) {
    const auto v = static_cast<std::size_t>(i - lo);
    const bool even = (i % 2 == 0);
    if (even) {
      if (i > lo) arrows[{v, v - 1}] = 1;
      if (i < hi) arrows[{v, v + 1}] = 1;
      arrows[{width + v, v}] = 1;
    } else {
      arrows[{v, width + v}] = 1;
    }
  }
  return initial_seed(IceQuiver(std::move(vertices), std::move(arrows)), keys);
}

std::string to_string(const RootInterval& r) {
  if (r.negative) return "-a[" + std::to_string(r.i) + "]";
  if (r.i == r.j) return "a[" + std::to_string(r.i) + "]";
  return "a[" + std::to_string(r.i) + "," + std::to_string(r.j) + "]";
}

std::optional<RootInterval> root_of_dvector(const std::map<int, int>& d) {
  std::vector<int> ones;
  std::vector<int> minus;
  for (const auto& [label, e] : d) {
    if (e == 1) ones.push_back(label);
    else if (e == -1) minus.push_back(label);
    else if (e != 0) return std::nullopt;
  }
  if (!minus.empty()) {
    if (minus.size() == 1 && ones.empty()) return RootInterval::negative_simple(minus.front());
    return std::nullopt;
  }
  if (ones.empty()) return std::nullopt;
  for (std::size_t k = 1; k < ones.size(); ++k)
    if (ones[k] != ones[k - 1] + 1) return std::nullopt;
  return RootInterval::positive(ones.front(), ones.back());
}

std::map<int, int> label_dvector(const LaurentPoly& x, const Seed& window) {
  std::vector<VarKey> keys;
  for (std::size_t v = 0; v < window.quiver.size(); ++v)
    if (!window.quiver.is_frozen(v)) keys.push_back(mut_var(*parse_int(window.quiver.vertex(v).id)));
  std::map<int, int> d;
  for (const auto& [k, e] : denominator_vector(x, keys)) d[k.site] = e;
  return d;
}

std::map<int, int> orbit_dvector(const LaurentPoly& x, const PeriodicQuiver& pq) {
  std::map<int, int> d;
  std::set<VarKey> keys;
  for (const auto& t : x.terms())
    for (const auto& [k, e] : t.mono.entries())
      if (k.layer == Layer::Mutable) keys.insert(k);
  for (const auto& [k, e] : denominator_vector(x, {keys.begin(), keys.end()}))
    if (e != 0) d[k.site + pq.period() * k.shift] = e;
  return d;
}

bool is_orbit_cluster_root(const RootInterval& root, int n) {
  if (root.negative) return true;
  const int len = root.length();
  return len % 2 == 1 || len < 2 * n;
}

LaurentPoly find_cluster_variable(const Seed& window, const RootInterval& root, int budget) {
  std::map<int, std::size_t> index;
  for (std::size_t v = 0; v < window.quiver.size(); ++v) {
    if (window.quiver.is_frozen(v)) continue;
    auto label = parse_int(window.quiver.vertex(v).id);
    if (!label) throw InputError("window vertex ids must be integers");
    index[*label] = v;
  }
  for (int l = root.i - 2; l <= root.j + 2; ++l)
    if (!index.count(l)) throw InputError("window does not contain " + std::to_string(l) + " (needed for " +
                                          to_string(root) + ")");
  if (root.negative) return window.cluster[index.at(root.i)];

  auto matches = [&](const LaurentPoly& x) {
    auto d = label_dvector(x, window);
    auto r = root_of_dvector(d);
    return r && *r == root;
  };

  {  // support left to right
    Seed s = window;
    for (int l = root.i; l <= root.j; ++l) {
      s = mutate_seed_at(s, index.at(l));
      if (matches(s.cluster[index.at(l)])) return s.cluster[index.at(l)];
    }
  }
  for (int first_parity = 0; first_parity < 2; ++first_parity) {  // bipartite belt on the support
    Seed s = window;
    const int rounds = 2 * (root.length() + 3);
    for (int r = 0; r < rounds; ++r) {
      const int parity = (first_parity + r) % 2;
      for (int l = root.i; l <= root.j; ++l) {
        if (((l % 2) + 2) % 2 != parity) continue;
        s = mutate_seed_at(s, index.at(l));
        if (matches(s.cluster[index.at(l)])) return s.cluster[index.at(l)];
      }
    }
  }
  // bounded BFS over mutations inside the support
  struct Node {
    Seed seed;
    int last;
  };
  std::set<std::string> seen;
  auto signature = [&](const Seed& s) {
    std::vector<std::string> parts;
    for (int l = root.i; l <= root.j; ++l) parts.push_back(to_string(s.cluster[index.at(l)]));
    std::sort(parts.begin(), parts.end());
    std::string sig;
    for (auto& p : parts) sig += p + "|";
    return sig;
  };
  std::deque<Node> frontier{{window, root.i - 1}};
  seen.insert(signature(window));
  for (int depth = 1; depth <= budget && !frontier.empty(); ++depth) {
    std::deque<Node> next;
    for (const auto& node : frontier) {
      for (int l = root.i; l <= root.j; ++l) {
        if (l == node.last) continue;
        Seed s = mutate_seed_at(node.seed, index.at(l));
        if (matches(s.cluster[index.at(l)])) return s.cluster[index.at(l)];
        if (seen.insert(signature(s)).second) next.push_back({std::move(s), l});
      }
    }
    frontier = std::move(next);
  }
  throw SearchExhaustedError("no cluster variable with d-vector " + to_string(root) + " within " +
                             std::to_string(budget) + " mutations");
}

std::optional<std::vector<Monomial>> solve_frozen_coefficients(const LaurentPoly& lhs,
                                                               const std::vector<LaurentPoly>& terms) {
  const std::size_t m = terms.size();
  std::vector<std::optional<Monomial>> chosen(m);
  std::function<bool(const LaurentPoly&)> solve = [&](const LaurentPoly& rest) -> bool {
    std::size_t open = 0;
    for (const auto& c : chosen) open += c ? 0 : 1;
    if (rest.is_zero()) {
      if (open != 0) return false;
      return true;
    }
    if (open == 0) return false;
    const Term& lead = rest.leading();
    for (std::size_t k = 0; k < m; ++k) {
      if (chosen[k] || terms[k].is_zero()) continue;
      const Term& tl = terms[k].leading();
      if (lead.coeff != tl.coeff) continue;
      Monomial f = lead.mono * tl.mono.inverse();
      if (!f.is_one() && !f.is_frozen_polynomial()) continue;
      LaurentPoly next = rest - terms[k].times(f);
      if (!next.has_positive_coefficients()) continue;
      chosen[k] = f;
      if (solve(next)) return true;
      chosen[k].reset();
    }
    return false;
  };
  if (!solve(lhs)) return std::nullopt;
  std::vector<Monomial> out;
  for (auto& c : chosen) out.push_back(*c);
  return out;
}

namespace {

IdentityReport check_identity(std::string name, int i, int j, const LaurentPoly& lhs,
                              const std::vector<LaurentPoly>& terms) {
  IdentityReport report{std::move(name), i, j, false, {}, {}};
  if (auto f = solve_frozen_coefficients(lhs, terms)) {
    LaurentPoly rhs;
    for (std::size_t k = 0; k < terms.size(); ++k) rhs += terms[k].times((*f)[k]);
    report.verified = (rhs == lhs);
    for (const auto& mono : *f) report.frozen_monomials.push_back(to_string(mono));
    if (!report.verified) report.witness = to_string(lhs - rhs);
  } else {
    LaurentPoly rest = lhs;
    for (const auto& t : terms) rest = rest - t;
    report.witness = to_string(rest);
  }
  return report;
}

}  // namespace

IdentityReport verify_exchange_relation(int which, int i, int j) {
  if (j < i + 2) throw InputError("exchange relations need i + 2 <= j");
  const Seed w = gamma_window(i - 4, j + 4);
  auto x = [&](int a, int b) { return find_cluster_variable(w, RootInterval::positive(a, b)); };
  auto xneg = [&](int a) { return find_cluster_variable(w, RootInterval::negative_simple(a)); };
  switch (which) {
    case 1:
      return check_identity("right-extension", i, j, x(i, j) * x(j + 1, j + 1), {x(i, j + 1), x(i, j - 2) * xneg(j + 2)});
    case 2:
      return check_identity("left-extension", i, j, x(i - 1, i - 1) * x(i, j), {x(i - 1, j), x(i + 2, j) * xneg(i - 2)});
    case 3:
      return check_identity("right-truncation", i, j, x(i, j) * xneg(j), {x(i, j - 1), x(i, j - 2) * xneg(j + 1)});
    case 4:
      return check_identity("left-truncation", i, j, xneg(i) * x(i, j), {x(i + 1, j), x(i + 2, j) * xneg(i - 1)});
    default:
      throw InputError("unknown exchange relation " + std::to_string(which));
  }
}

IdentityReport verify_imaginary_root(int n) {
  if (n < 3) throw InputError("the imaginary-root identity needs n >= 3");
  const int p = 2 * n;
  const Seed w = gamma_window(-2, p + 3);
  auto bar = [&](const RootInterval& r) { return psi_mod(find_cluster_variable(w, r), p); };
  const LaurentPoly x1 = bar(RootInterval::negative_simple(1));
  const LaurentPoly lhs = bar(RootInterval::positive(1, p)) * x1;
  return check_identity("imaginary-root", 1, p, lhs,
                        {bar(RootInterval::positive(2, p)), bar(RootInterval::positive(3, p - 1)),
                         bar(RootInterval::positive(3, p - 2)) * x1});
}

std::vector<IdentityReport> verify_exchange_identities(int n, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<IdentityReport> out;
  for (const auto& [i, j] : pairs)
    for (int which = 1; which <= 4; ++which) out.push_back(verify_exchange_relation(which, i, j));
  if (n >= 3) out.push_back(verify_imaginary_root(n));
  return out;
}

}  // namespace torfold
