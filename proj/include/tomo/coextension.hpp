#pragma once

#include <cstdint>
#include <optional>

#include "tomo/ramification.hpp"

namespace tomo {

// The set of DAG nodes whose cells collapse to the new bottom element.
struct CoextensionChoice {
  std::vector<int> downset;  // node ids, ascending

  bool operator==(const CoextensionChoice&) const = default;
};

// Every downset of the class DAG containing the bottom node and avoiding
// the atom node, each exactly once, ordered lexicographically over the
// topological node order with absence before presence. Never empty for a
// valid DAG: dropping just the atom node always qualifies.
std::vector<CoextensionChoice> enumerate_choices(const ClassDag& dag);

// Materialises the coextension selected by a choice: support cells keep
// their embedded base products, cells of chosen nodes become the new
// bottom, every other cosupport cell becomes the new atom. Debug builds and
// strict mode re-verify the whole table; release builds spot-check
// associativity. Either way the quotient and idempotent-pair postconditions
// are enforced.
TomonoidTable materialise(const TomonoidTable& t, const Ramification& r,
                          const ClassDag& dag, const CoextensionChoice& choice,
                          bool strict = false);
TomonoidTable materialise(const TomonoidTable& t, const Ramification& r,
                          const CoextensionChoice& choice, bool strict = false);

enum class Filter { all, commutative, archimedean };

struct GenRecord {
  std::uint64_t id = 0;
  std::optional<std::uint64_t> parent;
  TomonoidTable table;
  std::optional<IdempotentPair> pair;      // base-table indices
  std::optional<CoextensionChoice> choice;
  bool commutative = false;
  bool archimedean = false;
};

// All one-element coextensions of t, with provenance. `all` walks every
// ordered pair of idempotents, `commutative` the symmetric pairs with the
// symmetry rule enabled, `archimedean` the identity pair in Archimedean
// mode. Obstructed pairs contribute nothing. id and parent are left for the
// generator to fill in.
std::vector<GenRecord> coextensions(const TomonoidTable& t, Filter filter);

}  // namespace tomo
