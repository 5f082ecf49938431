#include "torfold/ymonomial.hpp"

#include <algorithm>

#include "torfold/errors.hpp"

namespace torfold {

namespace {

int reduce(int site, int modulus) {
  if (modulus <= 0) return site;
  return ((site % modulus) + modulus) % modulus;
}

void require_same_family(const YMonomial& a, const YMonomial& b) {
  if (a.modulus() != b.modulus()) throw InputError("cannot mix infinite and toroidal monomials");
}

}  // namespace

YMonomial YMonomial::toroidal(int modulus) {
  if (modulus <= 0) throw InputError("toroidal modulus must be positive");
  return YMonomial(modulus);
}

YMonomial YMonomial::y(int site, int qpower, int modulus, int e) {
  YMonomial m = modulus > 0 ? toroidal(modulus) : infinite();
  m.add(site, qpower, e);
  return m;
}

void YMonomial::add(int site, int qpower, int e) {
  if (e == 0) return;
  const Key key{reduce(site, modulus_), qpower};
  auto [it, inserted] = exps_.try_emplace(key, 0);
  it->second += e;
  if (it->second == 0) exps_.erase(it);
}

int YMonomial::exponent(int site, int qpower) const {
  auto it = exps_.find({reduce(site, modulus_), qpower});
  return it == exps_.end() ? 0 : it->second;
}

bool YMonomial::is_dominant() const {
  return std::all_of(exps_.begin(), exps_.end(), [](const auto& kv) { return kv.second > 0; });
}

YMonomial YMonomial::inverse() const { return pow(-1); }

YMonomial YMonomial::pow(int e) const {
  YMonomial m(modulus_);
  if (e == 0) return m;
  for (const auto& [k, v] : exps_) m.exps_[k] = v * e;
  return m;
}

YMonomial operator*(const YMonomial& a, const YMonomial& b) {
  require_same_family(a, b);
  YMonomial m = a;
  for (const auto& [k, v] : b.exps_) m.add(k.first, k.second, v);
  return m;
}

std::string to_string(const YMonomial& m) {
  if (m.is_one()) return "1";
  std::string s;
  for (const auto& [k, e] : m.exponents()) {
    if (!s.empty()) s += " ";
    s += "Y[" + std::to_string(k.first) + "," + std::to_string(k.second) + "]";
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

YMonomial a_monomial(int i, int k, int modulus) {
  YMonomial m = modulus > 0 ? YMonomial::toroidal(modulus) : YMonomial::infinite();
  m.add(i, k - 1, 1);
  m.add(i, k + 1, 1);
  m.add(i - 1, k, -1);
  m.add(i + 1, k, -1);
  return m;
}

YMonomial phi_fold(const YMonomial& m, int n) {
  if (m.is_toroidal()) throw InputError("phi_fold expects a monomial over infinite sites");
  if (n <= 0) throw InputError("n must be positive");
  YMonomial out = YMonomial::toroidal(2 * n);
  for (const auto& [k, e] : m.exponents()) out.add(k.first, k.second, e);
  return out;
}

std::string certificate_to_string(const std::map<YMonomial::Key, int>& c) {
  if (c.empty()) return "1";
  std::string s;
  for (const auto& [k, e] : c) {
    if (!s.empty()) s += " ";
    s += "A[" + std::to_string(k.first) + "," + std::to_string(k.second) + "]";
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

YMonomial a_product(const std::map<YMonomial::Key, int>& c, int modulus) {
  YMonomial m = modulus > 0 ? YMonomial::toroidal(modulus) : YMonomial::infinite();
  for (const auto& [k, e] : c) m = m * a_monomial(k.first, k.second, modulus).pow(e);
  return m;
}

NakajimaResult nakajima_leq(const YMonomial& m1, const YMonomial& m2) {
  require_same_family(m1, m2);
  const int modulus = m1.modulus();
  YMonomial residual = m2 * m1.inverse();
  NakajimaResult result;
  if (residual.is_one()) {
    result.leq = true;
    return result;
  }
  // A_{j,l} is the only A-monomial touching Y_{j,l-1} at its lowest q-power,
  // so sweeping upward in q pins down every exponent.
  std::map<YMonomial::Key, int> c;
  int qmax = residual.exponents().begin()->first.second;
  for (const auto& [k, e] : residual.exponents()) qmax = std::max(qmax, k.second);
  while (!residual.is_one()) {
    int qmin = residual.exponents().begin()->first.second;
    for (const auto& [k, e] : residual.exponents()) qmin = std::min(qmin, k.second);
    if (qmin >= qmax - 1) return result;  // would need A-monomials reaching above qmax
    std::vector<std::pair<int, int>> row;
    for (const auto& [k, e] : residual.exponents())
      if (k.second == qmin) row.emplace_back(k.first, e);
    for (const auto& [site, e] : row) {
      c[{site, qmin + 1}] += e;
      residual = residual * a_monomial(site, qmin + 1, modulus).pow(-e);
    }
  }
  for (const auto& [k, e] : c)
    if (e < 0) return result;
  std::erase_if(c, [](const auto& kv) { return kv.second == 0; });
  result.leq = true;
  result.certificate = std::move(c);
  return result;
}

int xi(int i) { return ((i % 2) + 2) % 2; }

YMonomial m_alpha(const RootInterval& alpha) {
  YMonomial m = YMonomial::infinite();
  if (alpha.negative) {
    const int i = alpha.i;
    m.add(i, xi(i) == 0 ? xi(i) + 2 : xi(i), 1);
    return m;
  }
  if (alpha.j < alpha.i) throw InputError("empty root interval");
  for (int i = alpha.i; i <= alpha.j; ++i) m.add(i, xi(i) == 0 ? xi(i) : xi(i) + 2, 1);
  return m;
}

YMonomial kr_monomial(int i, int a, int k, int modulus) {
  if (k < 0) throw InputError("Kirillov-Reshetikhin length must be nonnegative");
  YMonomial m = modulus > 0 ? YMonomial::toroidal(modulus) : YMonomial::infinite();
  for (int j = 1; j <= k; ++j) m.add(i, a + 2 * (j - 1), 1);
  return m;
}

bool in_m_prime(const YMonomial& m) {
  return std::all_of(m.exponents().begin(), m.exponents().end(), [](const auto& kv) {
    const int x = xi(kv.first.first);
    return kv.first.second == x || kv.first.second == x + 2;
  });
}

int d_grade(const YMonomial& m) {
  int d = 0;
  for (const auto& [k, e] : m.exponents()) {
    const int x = xi(k.first);
    const int even = (x == 0) ? 1 : -1;
    if (k.second == x) d += even * e;
    else if (k.second == x + 2) d -= even * e;
    else
      throw DomainError("Y[" + std::to_string(k.first) + "," + std::to_string(k.second) +
                        "] is outside the graded subgroup");
  }
  return d;
}

MuDominance is_mu_dominated(const std::vector<std::pair<YMonomial, long>>& element) {
  std::map<YMonomial, long> sum;
  for (const auto& [m, c] : element) {
    if (!sum.empty() && sum.begin()->first.modulus() != m.modulus())
      throw InputError("cannot mix infinite and toroidal monomials");
    sum[m] += c;
  }
  std::erase_if(sum, [](const auto& kv) { return kv.second == 0; });
  MuDominance out;
  if (sum.empty()) {
    out.reason = "empty sum";
    return out;
  }
  // candidate: a dominant monomial with coefficient 1 that dominates every other term
  for (const auto& [m, c] : sum) {
    if (c != 1 || !m.is_dominant() || !in_m_prime(m)) continue;
    bool top = std::all_of(sum.begin(), sum.end(), [&](const auto& kv) { return nakajima_leq(kv.first, m).leq; });
    if (!top) continue;
    out.weight = m;
    for (const auto& [k, e] : m.exponents()) {
      (void)e;
      const int i = k.first;
      YMonomial shed = m * YMonomial::y(i, xi(i), m.modulus(), -1) * YMonomial::y(i, xi(i) + 2, m.modulus(), -1);
      if (shed.is_dominant()) {
        out.reason = "removing Y[" + std::to_string(i) + "," + std::to_string(xi(i)) + "]Y[" + std::to_string(i) +
                     "," + std::to_string(xi(i) + 2) + "] leaves a dominant monomial";
        return out;
      }
    }
    out.dominated = true;
    return out;
  }
  out.reason = "no dominant coefficient-1 monomial bounds every term";
  return out;
}

}  // namespace torfold
