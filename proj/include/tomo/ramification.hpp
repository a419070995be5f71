#pragma once

#include <compare>
#include <map>
#include <vector>

#include "tomo/table.hpp"

namespace tomo {

// Chain obtained from a base chain by splitting its bottom element into a
// new bottom (index 0) and a new atom (index 1). Every base element a maps
// to index a+1; in particular the old bottom is identified with the new
// atom.
struct ExtendedChain {
  Chain base;

  static constexpr int bottom = 0;
  static constexpr int atom = 1;

  int size() const noexcept { return base.size() + 1; }
  int identity() const noexcept { return base.size(); }
  int image(int a) const noexcept { return a + 1; }
  int preimage(int x) const noexcept { return x - 1; }

  bool operator==(const ExtendedChain&) const = default;
};

struct Cell {
  int row;
  int col;

  auto operator<=>(const Cell&) const = default;
};

// Componentwise order on cells.
inline bool below(Cell x, Cell y) { return x.row <= y.row && x.col <= y.col; }

enum class MergeRule {
  assoc_transfer,    // equal products forced through a support factor
  bottom_left,       // left factor below the left idempotent collapses to bottom
  bottom_right,      // right factor below the right idempotent collapses to bottom
  translate_left,    // left factor at or above the left idempotent preserves the cell
  translate_right,   // right factor at or above the right idempotent preserves the cell
  sandwich_left,     // incompatible idempotent sides force the left cell to bottom
  sandwich_right,    // incompatible idempotent sides force the right cell to bottom
  bottom_seed,       // prescribed members of the bottom class
  atom_seed,         // prescribed members of the atom class
  symmetry,          // commutative engines identify mirrored cells
  bottom_closure,    // bottom class is downward closed
  atom_closure,      // atom class is upward closed within the cosupport
};

std::string_view to_string(MergeRule rule);

struct MergeLogEntry {
  Cell joined;   // cell being pulled into `target`'s class
  Cell target;
  MergeRule rule;

  bool operator==(const MergeLogEntry&) const = default;
};

// Result of saturating the extended square with the coextension rules: the
// support keeps the level classes of the base table untouched, the
// cosupport is partitioned into the classes every one-element coextension
// must refine-coarsen along. Class identifiers: 0 for the class of the new
// bottom, 1 for the class of the new atom, base-product images (2..n) on
// the support, and fresh identifiers from n+1 upward for classes that carry
// no element value.
struct Ramification {
  ExtendedChain ext;
  IdempotentPair pair;  // base-table indices
  bool commutative_mode = false;
  bool archimedean_mode = false;
  std::vector<char> support_mask;  // ext²: 1 on the support
  std::vector<int> class_of;       // ext²: normalised class identifiers
  int zero_class = 0;
  int atom_class = 1;
  bool obstructed = false;
  std::vector<MergeLogEntry> log;  // every union the engine performed

  int class_at(int row, int col) const {
    return class_of[static_cast<std::size_t>(row) * ext.size() + col];
  }
  bool in_support(int row, int col) const {
    return support_mask[static_cast<std::size_t>(row) * ext.size() + col] != 0;
  }
  std::vector<Cell> class_cells(int id) const;       // row-major order
  std::vector<int> cosupport_class_ids() const;      // ascending
};

// Cells of the extended square whose base product is nonzero; upward closed.
std::vector<Cell> compute_support(const TomonoidTable& t);

// Computes the coarsest-refinement classes for a one-element coextension of
// t with the given idempotent pair: static rule instances are enumerated
// once, then the two closure rules (bottom class downward, atom class
// upward) run to a worklist fixpoint. commutative_mode adds the symmetry
// rule and requires a commutative table with a symmetric pair;
// archimedean_mode requires an Archimedean table with the identity pair and
// additionally checks that the reduced Archimedean rule set reaches the
// same fixpoint.
Ramification ramify(const TomonoidTable& t, IdempotentPair pair,
                    bool commutative_mode = false, bool archimedean_mode = false);

// Replays the merge log on a fresh union-find structure, validating each
// entry against the rule definitions, and checks that the replayed classes
// match the ramification. Guards the engine against unjustified merges.
bool audit_ramification(const TomonoidTable& t, const Ramification& r);

// Condensation of the componentwise preorder on cosupport classes. Node
// identifiers are topological positions; classes trapped in one strongly
// connected component share a node and can never be separated by a choice.
struct ClassDag {
  int zero_node = 0;
  int atom_node = 0;
  std::vector<std::vector<int>> member_classes;  // node -> class ids, ascending
  std::vector<std::vector<Cell>> cells_of;       // node -> cells, row-major
  std::vector<std::vector<int>> covers;          // node -> immediate successors
  std::vector<std::vector<int>> covered_by;      // node -> immediate predecessors
  std::map<int, int> node_of_class;

  int node_count() const noexcept { return static_cast<int>(member_classes.size()); }
};

ClassDag class_poset(const Ramification& r);

}  // namespace tomo
