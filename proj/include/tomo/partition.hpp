#pragma once

#include <map>
#include <vector>

#include "tomo/table.hpp"

namespace tomo {

// Level-set view of a table: each cell of the n x n square carries a class
// identifier, and each class is tagged with the element it stands for (the
// value found where the class meets the identity row). For partitions built
// from tables the identifiers are the element values themselves; arbitrary
// identifiers are accepted and resolved through value_of_class.
struct LevelPartition {
  Chain chain;
  std::vector<int> class_of;          // row-major, n*n
  std::map<int, int> value_of_class;  // class id -> element value

  int class_at(int a, int b) const {
    return class_of[static_cast<std::size_t>(a) * chain.size() + b];
  }

  // Derives value_of_class from the identity row. Classes that meet the
  // identity row in anything but a single cell get no entry, which the
  // verifier then reports.
  static LevelPartition from_classes(Chain chain, std::vector<int> class_of);

  bool operator==(const LevelPartition&) const = default;
};

LevelPartition to_partition(const TomonoidTable& t);

// Checks regularity, value uniqueness, and the Reidemeister condition over
// interior elements; `strict` widens the Reidemeister check to the full
// element range (implied by the interior check plus the other two axioms,
// kept for cross-validation). Structural defects throw.
VerifyReport verify_partition(const LevelPartition& p, bool strict = false);

// Inverse of to_partition; rejects invalid partitions, naming the violated
// axiom.
TomonoidTable from_partition(const LevelPartition& p);

}  // namespace tomo
