#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "torfold/cluster.hpp"

namespace torfold {

/// Monomial in Y_{i,q^k}. Infinite family: i ∈ ℤ. Toroidal family: i ∈ ℤ/modulus,
/// stored reduced to [0, modulus).
class YMonomial {
 public:
  using Key = std::pair<int, int>;  // (site, q-power)

  static YMonomial infinite() { return YMonomial(0); }
  static YMonomial toroidal(int modulus);
  static YMonomial y(int site, int qpower, int modulus = 0, int e = 1);

  bool is_toroidal() const { return modulus_ > 0; }
  int modulus() const { return modulus_; }
  const std::map<Key, int>& exponents() const { return exps_; }
  int exponent(int site, int qpower) const;
  bool is_one() const { return exps_.empty(); }
  /// All exponents nonnegative.
  bool is_dominant() const;

  YMonomial inverse() const;
  YMonomial pow(int e) const;
  friend YMonomial operator*(const YMonomial& a, const YMonomial& b);
  bool operator==(const YMonomial&) const = default;
  auto operator<=>(const YMonomial&) const = default;

  /// Multiplies in Y_{site,q^k}^e (site reduced for toroidal monomials).
  void add(int site, int qpower, int e);

 private:
  explicit YMonomial(int modulus) : modulus_(modulus) {}
  int modulus_ = 0;
  std::map<Key, int> exps_;
};

std::string to_string(const YMonomial& m);

/// A_{i,q^k} = Y_{i,k-1} Y_{i,k+1} Y_{i-1,k}^{-1} Y_{i+1,k}^{-1}.
YMonomial a_monomial(int i, int k, int modulus = 0);
/// φ_2n: Y_{i,q^k} ↦ Y_{[i],q^k}. Throws InputError on toroidal input.
YMonomial phi_fold(const YMonomial& m, int n);

struct NakajimaResult {
  bool leq = false;
  /// c with m2·m1⁻¹ = Π A_{i,q^k}^{c(i,k)}, all c >= 0, when leq.
  std::map<YMonomial::Key, int> certificate;
};
std::string certificate_to_string(const std::map<YMonomial::Key, int>& c);

/// m1 ≤ m2 in the Nakajima order.
NakajimaResult nakajima_leq(const YMonomial& m1, const YMonomial& m2);
/// Π A_{i,q^k}^{c(i,k)}.
YMonomial a_product(const std::map<YMonomial::Key, int>& c, int modulus = 0);

/// ξ(i) = 0 for even i, 1 for odd i.
int xi(int i);
/// m_α for an almost positive root (infinite sites).
YMonomial m_alpha(const RootInterval& alpha);
/// Π_{j=1}^{k} Y_{i,q^{a+2(j-1)}}; k < 0 is an input error.
YMonomial kr_monomial(int i, int a, int k, int modulus = 0);

/// Grade on the subgroup generated by Y_{i,q^ξ(i)}, Y_{i,q^ξ(i)+2};
/// d(Y_{i,q^ξ}) = +1 (i even) / −1 (i odd), d(Y_{i,q^{ξ+2}}) the opposite.
/// Throws DomainError outside that subgroup.
int d_grade(const YMonomial& m);
bool in_m_prime(const YMonomial& m);

struct MuDominance {
  bool dominated = false;
  std::optional<YMonomial> weight;
  std::string reason;
};

/// Formal sum Σ c_k m_k checked against the three μ-dominance conditions.
MuDominance is_mu_dominated(const std::vector<std::pair<YMonomial, long>>& element);

}  // namespace torfold
