#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace torfold {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input (unknown vertex, bad JSON, wrong shape).
class InputError : public Error {
 public:
  using Error::Error;
};

class MutationAtFrozenError : public Error {
 public:
  using Error::Error;
};

/// Arrow multiplicity left the machine-word range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// A predicate was asked about a value outside its domain (e.g. d-grade off M').
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Raised when exact division of Laurent polynomials leaves a remainder.
/// Inside a seed mutation this falsifies the Laurent phenomenon.
class InexactDivisionError : public Error {
 public:
  InexactDivisionError(const std::string& what, std::string remainder)
      : Error(what), remainder_(std::move(remainder)) {}
  const std::string& remainder() const { return remainder_; }

 private:
  std::string remainder_;
};

/// One admissibility failure: an unordered site pair and the condition it breaks.
struct Violation {
  int site_a = 0;
  int site_b = 0;
  std::string condition;  // "virtual-loop", "virtual-2-cycle", "frozen-arrow"

  bool operator==(const Violation&) const = default;
};

std::string describe(const std::vector<Violation>& violations);

/// Folding requested on a quiver that is not strongly admissible.
class FoldingError : public Error {
 public:
  explicit FoldingError(std::vector<Violation> violations)
      : Error("folding undefined: " + describe(violations)), violations_(std::move(violations)) {}
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

/// Orbit-mutation produced an inadmissible quiver (a virtual 2-cycle appeared).
class FoldabilityViolationError : public Error {
 public:
  FoldabilityViolationError(std::vector<int> sequence, std::vector<Violation> violations)
      : Error("orbit-mutation breaks admissibility: " + describe(violations)),
        sequence_(std::move(sequence)),
        violations_(std::move(violations)) {}
  const std::vector<int>& sequence() const { return sequence_; }
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<int> sequence_;
  std::vector<Violation> violations_;
};

class SearchExhaustedError : public Error {
 public:
  using Error::Error;
};

class UnflippableError : public Error {
 public:
  using Error::Error;
};

}  // namespace torfold
