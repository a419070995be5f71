#include "tomo/partition.hpp"

#include <set>
#include <stdexcept>

namespace tomo {

LevelPartition LevelPartition::from_classes(Chain chain, std::vector<int> class_of) {
  const int n = chain.size();
  if (class_of.size() != static_cast<std::size_t>(n) * n)
    throw std::invalid_argument("partition must cover all n*n cells");
  LevelPartition p{chain, std::move(class_of), {}};
  const int one = n - 1;
  std::map<int, std::vector<int>> identity_cells;
  for (int c = 0; c < n; ++c) identity_cells[p.class_at(one, c)].push_back(c);
  for (const auto& [id, cs] : identity_cells)
    if (cs.size() == 1) p.value_of_class[id] = cs.front();
  return p;
}

LevelPartition to_partition(const TomonoidTable& t) {
  const int n = t.size();
  LevelPartition p{t.chain(), t.cells(), {}};
  for (int v = 0; v < n; ++v) p.value_of_class[v] = v;
  return p;
}

VerifyReport verify_partition(const LevelPartition& p, bool strict) {
  const int n = p.chain.size();
  if (p.class_of.size() != static_cast<std::size_t>(n) * n)
    throw std::invalid_argument("partition must cover all n*n cells");
  std::set<int> used(p.class_of.begin(), p.class_of.end());
  for (const auto& [id, value] : p.value_of_class) {
    if (!used.count(id))
      throw std::invalid_argument("value assigned to unknown class identifier");
    if (value < 0 || value >= n)
      throw std::invalid_argument("class value out of range");
  }
  for (int id : used)
    if (!p.value_of_class.count(id))
      throw std::invalid_argument("class identifier without a value");

  VerifyReport report;
  const int one = n - 1;

  // Each element must meet its own class exactly where the identity row and
  // column say so.
  for (int c = 0; c < n; ++c) {
    const int id = p.class_at(one, c);
    if (p.value_of_class.at(id) != c)
      report.violations.push_back({ViolationKind::value_uniqueness, {one, c}});
    if (p.class_at(c, one) != id)
      report.violations.push_back({ViolationKind::value_uniqueness, {c, one}});
  }
  for (const auto& [id, value] : p.value_of_class)
    if (p.class_at(one, value) != id)
      report.violations.push_back({ViolationKind::value_uniqueness, {one, value}});

  // Componentwise growth must never decrease the class value.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = a; c < n; ++c)
        for (int d = b; d < n; ++d)
          if (p.value_of_class.at(p.class_at(a, b)) >
              p.value_of_class.at(p.class_at(c, d)))
            report.violations.push_back({ViolationKind::regularity, {a, b, c, d}});

  // Reidemeister condition: three matching rectangle corners force the
  // fourth. The interior range suffices; strict widens it to all elements.
  const int lo = strict ? 0 : 1;
  const int hi = strict ? n : n - 1;
  for (int a = lo; a < hi; ++a)
    for (int b = lo; b < hi; ++b)
      for (int c = lo; c < hi; ++c)
        for (int d = lo; d < hi; ++d) {
          if (p.class_at(a, b) != p.class_at(one, d)) continue;
          for (int e = lo; e < hi; ++e) {
            if (p.class_at(b, c) != p.class_at(one, e)) continue;
            if (p.class_at(d, c) != p.class_at(a, e))
              report.violations.push_back(
                  {ViolationKind::reidemeister, {a, b, c, d, e}});
          }
        }
  return report;
}

TomonoidTable from_partition(const LevelPartition& p) {
  const VerifyReport report = verify_partition(p);
  if (!report.ok())
    throw std::invalid_argument("invalid partition:\n" + report.summary());
  const int n = p.chain.size();
  std::vector<int> cells(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      cells[static_cast<std::size_t>(a) * n + b] =
          p.value_of_class.at(p.class_at(a, b));
  return TomonoidTable(p.chain, std::move(cells));
}

}  // namespace tomo
