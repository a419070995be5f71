#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace tomo {

// A finite chain 0 < 1 < ... < n-1. Index 0 is the bottom element; index
// n-1 is the top element and doubles as the monoidal identity of every
// table built over the chain.
class Chain {
 public:
  explicit Chain(int n);

  int size() const noexcept { return n_; }
  int bottom() const noexcept { return 0; }
  int identity() const noexcept { return n_ - 1; }
  // Second smallest element; only defined for non-trivial chains.
  int atom() const;

  bool operator==(const Chain&) const = default;

 private:
  int n_;
};

enum class ViolationKind {
  identity,
  monotonicity,
  associativity,
  negativity,
  regularity,
  value_uniqueness,
  reidemeister,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::vector<int> witness;

  bool operator==(const Violation&) const = default;
};

struct VerifyReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  std::string summary() const;
};

// Multiplication table of a finite, negative, totally ordered monoid.
// Construction checks shape only (n x n, entries in range); the axioms are
// the verifier's business, so that broken tables can still be inspected.
class TomonoidTable {
 public:
  TomonoidTable(Chain chain, std::vector<int> cells);

  static TomonoidTable trivial();
  static TomonoidTable two_element();
  static TomonoidTable from_rows(const std::vector<std::vector<int>>& rows);

  const Chain& chain() const noexcept { return chain_; }
  int size() const noexcept { return chain_.size(); }
  int prod(int a, int b) const;
  const std::vector<int>& cells() const noexcept { return cells_; }
  std::vector<std::vector<int>> rows() const;

  bool operator==(const TomonoidTable&) const = default;

 private:
  Chain chain_;
  std::vector<int> cells_;  // row-major, cells_[a * n + b] = a * b
};

// Lexicographic on (size, cells); used wherever tables are sorted or
// collected into sets.
bool operator<(const TomonoidTable& lhs, const TomonoidTable& rhs);

// Reports every identity, monotonicity, associativity and negativity
// violation, each with the lexicographically first witness tuple for its
// position. Negativity follows from the other axioms but is checked anyway.
VerifyReport verify_table(const TomonoidTable& t);

bool is_commutative(const TomonoidTable& t);

// True iff no b below the identity keeps a nonzero element fixed from the
// left; for finite negative tables this is nilpotency.
bool is_archimedean(const TomonoidTable& t);

// Ascending; always contains the bottom and the identity.
std::vector<int> idempotents(const TomonoidTable& t);

struct IdempotentPair {
  int left;
  int right;

  bool operator==(const IdempotentPair&) const = default;
};

// The least elements whose left (resp. right) product with the atom is the
// atom again. Both are idempotent for any valid table.
IdempotentPair atom_char_idempotents(const TomonoidTable& t);

// Collapses all elements <= q into a single new bottom; products above q
// are preserved. q must lie strictly below the identity.
TomonoidTable rees_quotient(const TomonoidTable& t, int q);

}  // namespace tomo
