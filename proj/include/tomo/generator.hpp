#pragma once

#include <functional>
#include <map>

#include "tomo/coextension.hpp"

namespace tomo {

struct SizeCounts {
  std::uint64_t total = 0;
  std::uint64_t commutative = 0;
  std::uint64_t archimedean = 0;
  std::uint64_t commutative_archimedean = 0;

  bool operator==(const SizeCounts&) const = default;
};

struct CountReport {
  std::map<int, SizeCounts> by_size;

  bool operator==(const CountReport&) const = default;
};

using RecordSink = std::function<void(const GenRecord&)>;

// Breadth-first emission of every finite negative tomonoid up to max_size:
// the one-element table, then the forced two-element table as a seed step,
// then level by level every one-element coextension. Each table appears
// exactly once without any deduplication, because the quotient by the atom
// is a unique parent and (pair, choice) pin the construction. With jobs > 1
// the per-parent expansion fans out to worker threads; the emitted sequence
// is independent of the job count. A seed table replaces the initial levels
// and generation continues upward from it.
void generate(int max_size, Filter filter, const RecordSink& sink, int jobs = 1,
              const std::optional<TomonoidTable>& seed = std::nullopt);

std::vector<GenRecord> generate_all(int max_size, Filter filter, int jobs = 1,
                                    const std::optional<TomonoidTable>& seed = std::nullopt);

// Size limit for the exhaustive search; the TOMO_ORACLE_CAP environment
// variable overrides the default of 6.
int oracle_cap();

// Independent oracle. Depth-first fill of the free cells in row-major
// order: entries are bounded by negativity, pruned by monotonicity against
// already placed neighbours, and every associativity triple is checked the
// moment its four cells are known. Valid tables come out in lexicographic
// order, each exactly once; the filter is applied as a final predicate.
void brute_force(int size, Filter filter,
                 const std::function<void(const TomonoidTable&)>& sink);
std::vector<TomonoidTable> brute_force_all(int size, Filter filter);

// Aggregates the generated stream into per-size counts for the four flag
// combinations. cross_check recomputes every size the oracle can reach and
// throws on any disagreement.
CountReport count(int max_size, bool cross_check = false);

}  // namespace tomo
