#pragma once

#include <gmpxx.h>

#include <atomic>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace torfold {

enum class Layer : std::uint8_t { Mutable = 0, Frozen = 1 };

struct VarKey {
  int site = 0;
  int shift = 0;
  Layer layer = Layer::Mutable;

  auto operator<=>(const VarKey&) const = default;
  bool operator==(const VarKey&) const = default;
};

inline VarKey mut_var(int site, int shift = 0) { return {site, shift, Layer::Mutable}; }
inline VarKey frz_var(int site, int shift = 0) { return {site, shift, Layer::Frozen}; }

std::string to_string(const VarKey& v);

/// Sparse Laurent monomial, entries sorted by VarKey, exponents nonzero.
class Monomial {
 public:
  using Entry = std::pair<VarKey, int>;

  Monomial() = default;
  explicit Monomial(std::vector<Entry> entries);  // merges and sorts
  static Monomial var(const VarKey& v, int e = 1);

  const std::vector<Entry>& entries() const { return entries_; }
  bool is_one() const { return entries_.empty(); }
  int exponent(const VarKey& v) const;
  Monomial inverse() const;
  /// True if every variable is frozen with a nonnegative exponent.
  bool is_frozen_polynomial() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  bool operator==(const Monomial&) const = default;
  /// Lexicographic group order: compare the exponent of the first variable
  /// (in VarKey order) where the two monomials differ.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  std::vector<Entry> entries_;
};

std::string to_string(const Monomial& m);

struct Term {
  Monomial mono;
  mpz_class coeff;

  bool operator==(const Term& o) const { return mono == o.mono && coeff == o.coeff; }
};

/// Exact sparse Laurent polynomial over ℤ. Terms sorted by decreasing
/// monomial (leading term first), coefficients nonzero.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT(google-explicit-constructor)
  explicit LaurentPoly(const mpz_class& c);
  LaurentPoly(const Monomial& m, const mpz_class& c = 1);
  static LaurentPoly var(const VarKey& v, int e = 1) { return LaurentPoly(Monomial::var(v, e)); }
  /// Canonicalizes arbitrary term lists (merges duplicates, drops zeros).
  static LaurentPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t size() const { return terms_.size(); }
  const Term& leading() const { return terms_.front(); }

  LaurentPoly operator-() const;
  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator+=(const LaurentPoly& b) { return *this = *this + b; }
  LaurentPoly& operator*=(const LaurentPoly& b) { return *this = *this * b; }
  bool operator==(const LaurentPoly&) const = default;

  LaurentPoly times(const Monomial& m) const;
  LaurentPoly pow(unsigned e) const;
  bool has_positive_coefficients() const;

 private:
  std::vector<Term> terms_;
};

std::string to_string(const LaurentPoly& p);

/// q with q·b = a; throws InexactDivisionError with the remainder otherwise.
LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);

/// Every (site, shift, layer) becomes (site, shift + k, layer).
LaurentPoly shift_substitute(const LaurentPoly& a, int k);
/// ψ: every (site, shift, layer) becomes (site, 0, layer).
LaurentPoly fold_substitute(const LaurentPoly& a);
/// ψ for variables labelled by integer site with shift 0 (𝒜_∞ windows):
/// (site, shift, layer) becomes (site + shift·p mod p, 0, layer).
LaurentPoly psi_mod(const LaurentPoly& a, int p);

/// −(minimum exponent) for each listed variable; frozen keys are skipped.
std::map<VarKey, int> denominator_vector(const LaurentPoly& a, const std::vector<VarKey>& mutables);

struct DivisionStats {
  std::uint64_t divisions = 0;
  std::uint64_t inexact = 0;
};
/// Process-wide counters over every exact_div call.
DivisionStats division_stats();
void reset_division_stats();

}  // namespace torfold
