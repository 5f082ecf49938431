#include "torfold/laurent.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "torfold/errors.hpp"

namespace torfold {

namespace {

std::atomic<std::uint64_t> g_divisions{0};
std::atomic<std::uint64_t> g_inexact{0};

int floor_mod(long long a, int p) {
  long long r = a % p;
  if (r < 0) r += p;
  return static_cast<int>(r);
}

bool mono_greater(const Term& a, const Term& b) { return a.mono > b.mono; }

template <class F>
LaurentPoly map_keys(const LaurentPoly& a, F&& f) {
  std::vector<Term> out;
  out.reserve(a.size());
  for (const auto& t : a.terms()) {
    std::vector<Monomial::Entry> entries;
    entries.reserve(t.mono.entries().size());
    for (const auto& [k, e] : t.mono.entries()) entries.emplace_back(f(k), e);
    out.push_back({Monomial(std::move(entries)), t.coeff});
  }
  return LaurentPoly::from_terms(std::move(out));
}

}  // namespace

std::string to_string(const VarKey& v) {
  std::string s = (v.layer == Layer::Frozen ? "f" : "x") + std::to_string(v.site);
  if (v.shift != 0) s += "@" + std::to_string(v.shift);
  return s;
}

Monomial::Monomial(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  for (auto& [k, e] : entries) {
    if (!entries_.empty() && entries_.back().first == k) entries_.back().second += e;
    else entries_.emplace_back(k, e);
    if (entries_.back().second == 0) entries_.pop_back();
  }
}

Monomial Monomial::var(const VarKey& v, int e) {
  Monomial m;
  if (e != 0) m.entries_.emplace_back(v, e);
  return m;
}

int Monomial::exponent(const VarKey& v) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), v,
                             [](const Entry& a, const VarKey& k) { return a.first < k; });
  return (it != entries_.end() && it->first == v) ? it->second : 0;
}

Monomial Monomial::inverse() const {
  Monomial m = *this;
  for (auto& entry : m.entries_) entry.second = -entry.second;
  return m;
}

bool Monomial::is_frozen_polynomial() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Entry& e) { return e.first.layer == Layer::Frozen && e.second > 0; });
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  auto& o = out.entries_;
  o.reserve(a.entries_.size() + b.entries_.size());
  auto i = a.entries_.begin(), j = b.entries_.begin();
  while (i != a.entries_.end() && j != b.entries_.end()) {
    if (i->first < j->first) o.push_back(*i++);
    else if (j->first < i->first) o.push_back(*j++);
    else {
      const int e = i->second + j->second;
      if (e != 0) o.emplace_back(i->first, e);
      ++i;
      ++j;
    }
  }
  o.insert(o.end(), i, a.entries_.end());
  o.insert(o.end(), j, b.entries_.end());
  return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  auto i = a.entries_.begin(), j = b.entries_.begin();
  while (i != a.entries_.end() || j != b.entries_.end()) {
    if (j == b.entries_.end() || (i != a.entries_.end() && i->first < j->first))
      return i->second <=> 0;
    if (i == a.entries_.end() || j->first < i->first) return 0 <=> j->second;
    if (i->second != j->second) return i->second <=> j->second;
    ++i;
    ++j;
  }
  return std::strong_ordering::equal;
}

std::string to_string(const Monomial& m) {
  std::string s;
  for (const auto& [k, e] : m.entries()) {
    if (!s.empty()) s += "*";
    s += to_string(k);
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

LaurentPoly::LaurentPoly(long c) : LaurentPoly(mpz_class(c)) {}

LaurentPoly::LaurentPoly(const mpz_class& c) {
  if (c != 0) terms_.push_back({Monomial(), c});
}

LaurentPoly::LaurentPoly(const Monomial& m, const mpz_class& c) {
  if (c != 0) terms_.push_back({m, c});
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), mono_greater);
  LaurentPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  auto& o = out.terms_;
  o.reserve(a.terms_.size() + b.terms_.size());
  auto i = a.terms_.begin(), j = b.terms_.begin();
  while (i != a.terms_.end() && j != b.terms_.end()) {
    auto c = i->mono <=> j->mono;
    if (c > 0) o.push_back(*i++);
    else if (c < 0) o.push_back(*j++);
    else {
      mpz_class s = i->coeff + j->coeff;
      if (s != 0) o.push_back({i->mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  o.insert(o.end(), i, a.terms_.end());
  o.insert(o.end(), j, b.terms_.end());
  return out;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.is_monomial() && b.leading().coeff == 1) return a.times(b.leading().mono);
  if (a.is_monomial() && a.leading().coeff == 1) return b.times(a.leading().mono);
  std::vector<Term> prods;
  prods.reserve(a.size() * b.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) prods.push_back({s.mono * t.mono, s.coeff * t.coeff});
  return LaurentPoly::from_terms(std::move(prods));
}

LaurentPoly LaurentPoly::times(const Monomial& m) const {
  LaurentPoly p;
  p.terms_.reserve(terms_.size());
  // multiplication by a monomial preserves the group order
  for (const auto& t : terms_) p.terms_.push_back({t.mono * m, t.coeff});
  return p;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly result(1L), base = *this;
  while (e) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e) base = base * base;
  }
  return result;
}

bool LaurentPoly::has_positive_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.coeff > 0; });
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : p.terms()) {
    mpz_class c = t.coeff;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    c = abs(c);
    first = false;
    if (t.mono.is_one()) {
      out << c.get_str();
    } else {
      if (c != 1) out << c.get_str() << "*";
      out << to_string(t.mono);
    }
  }
  return out.str();
}

LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  g_divisions.fetch_add(1, std::memory_order_relaxed);
  if (b.is_zero()) throw DomainError("division by zero polynomial");
  if (a.is_zero()) return {};

  auto fail = [&](const LaurentPoly& remainder) -> LaurentPoly {
    g_inexact.fetch_add(1, std::memory_order_relaxed);
    throw InexactDivisionError("inexact division of " + std::to_string(a.size()) + "-term by " +
                                   std::to_string(b.size()) + "-term polynomial",
                               to_string(remainder));
  };

  if (b.is_monomial()) {
    const Term& lead = b.leading();
    const Monomial inv = lead.mono.inverse();
    std::vector<Term> out;
    out.reserve(a.size());
    for (const auto& t : a.terms()) {
      if (!mpz_divisible_p(t.coeff.get_mpz_t(), lead.coeff.get_mpz_t())) fail(a);
      out.push_back({t.mono * inv, t.coeff / lead.coeff});
    }
    return LaurentPoly::from_terms(std::move(out));
  }

  // exponent box that any exact quotient's terms must lie in
  std::map<VarKey, std::pair<int, int>> range_a, range_b;
  auto collect = [](const LaurentPoly& p, std::map<VarKey, std::pair<int, int>>& range) {
    for (const auto& t : p.terms())
      for (const auto& [k, e] : t.mono.entries()) range.emplace(k, std::make_pair(0, 0));
    for (auto& [k, r] : range) {
      bool firstTerm = true;
      for (const auto& t : p.terms()) {
        const int e = t.mono.exponent(k);
        if (firstTerm) r = {e, e};
        r.first = std::min(r.first, e);
        r.second = std::max(r.second, e);
        firstTerm = false;
      }
    }
  };
  collect(a, range_a);
  collect(b, range_b);
  std::map<VarKey, std::pair<int, int>> box;
  for (const auto& [k, r] : range_a) box[k] = {r.first, r.second};
  for (const auto& [k, r] : range_b) {
    auto it = box.find(k);
    if (it == box.end()) box[k] = {-r.first, -r.second};
    else it->second = {it->second.first - r.first, it->second.second - r.second};
  }
  for (const auto& [k, r] : box)
    if (r.first > r.second) fail(a);
  auto in_box = [&](const Monomial& m) {
    for (const auto& [k, e] : m.entries()) {
      auto it = box.find(k);
      if (it == box.end() || e < it->second.first || e > it->second.second) return false;
    }
    for (const auto& [k, r] : box)
      if ((r.first > 0 || r.second < 0) && m.exponent(k) == 0) return false;
    return true;
  };

  std::map<Monomial, mpz_class, std::greater<>> rem;
  for (const auto& t : a.terms()) rem.emplace_hint(rem.end(), t.mono, t.coeff);
  const Term& lead = b.leading();
  const Monomial lead_inv = lead.mono.inverse();
  std::vector<Term> quotient;
  auto remainder_poly = [&]() {
    std::vector<Term> ts;
    for (const auto& [m, c] : rem) ts.push_back({m, c});
    return LaurentPoly::from_terms(std::move(ts));
  };
  while (!rem.empty()) {
    const auto& [rm, rc] = *rem.begin();
    Monomial tm = rm * lead_inv;
    if (!mpz_divisible_p(rc.get_mpz_t(), lead.coeff.get_mpz_t()) || !in_box(tm)) fail(remainder_poly());
    mpz_class tc = rc / lead.coeff;
    for (const auto& bt : b.terms()) {
      Monomial m = tm * bt.mono;
      auto [it, inserted] = rem.try_emplace(std::move(m), 0);
      it->second -= tc * bt.coeff;
      if (it->second == 0) rem.erase(it);
    }
    quotient.push_back({std::move(tm), std::move(tc)});
  }
  return LaurentPoly::from_terms(std::move(quotient));
}

LaurentPoly shift_substitute(const LaurentPoly& a, int k) {
  if (k == 0) return a;
  return map_keys(a, [k](VarKey v) {
    v.shift += k;
    return v;
  });
}

LaurentPoly fold_substitute(const LaurentPoly& a) {
  return map_keys(a, [](VarKey v) {
    v.shift = 0;
    return v;
  });
}

LaurentPoly psi_mod(const LaurentPoly& a, int p) {
  if (p <= 0) throw InputError("period must be positive");
  return map_keys(a, [p](VarKey v) {
    v.site = floor_mod(static_cast<long long>(v.site) + static_cast<long long>(v.shift) * p, p);
    v.shift = 0;
    return v;
  });
}

std::map<VarKey, int> denominator_vector(const LaurentPoly& a, const std::vector<VarKey>& mutables) {
  std::map<VarKey, int> d;
  for (const auto& k : mutables) {
    if (k.layer == Layer::Frozen) continue;
    int lo = 0;
    bool first = true;
    for (const auto& t : a.terms()) {
      const int e = t.mono.exponent(k);
      lo = first ? e : std::min(lo, e);
      first = false;
    }
    d[k] = -lo;
  }
  return d;
}

DivisionStats division_stats() { return {g_divisions.load(), g_inexact.load()}; }

void reset_division_stats() {
  g_divisions.store(0);
  g_inexact.store(0);
}

}  // namespace torfold
