#include "tomo/table.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tomo {

Chain::Chain(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("chain needs at least one element");
}

int Chain::atom() const {
  if (n_ < 2) throw std::domain_error("trivial chain has no atom");
  return 1;
}

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::identity: return "identity";
    case ViolationKind::monotonicity: return "monotonicity";
    case ViolationKind::associativity: return "associativity";
    case ViolationKind::negativity: return "negativity";
    case ViolationKind::regularity: return "regularity";
    case ViolationKind::value_uniqueness: return "value-uniqueness";
    case ViolationKind::reidemeister: return "reidemeister";
  }
  return "unknown";
}

std::string VerifyReport::summary() const {
  if (ok()) return "ok\n";
  std::ostringstream out;
  for (const auto& v : violations) {
    out << to_string(v.kind) << " violation at (";
    for (std::size_t i = 0; i < v.witness.size(); ++i) {
      if (i) out << ',';
      out << v.witness[i];
    }
    out << ")\n";
  }
  return out.str();
}

TomonoidTable::TomonoidTable(Chain chain, std::vector<int> cells)
    : chain_(chain), cells_(std::move(cells)) {
  const int n = chain_.size();
  if (cells_.size() != static_cast<std::size_t>(n) * n)
    throw std::invalid_argument("table must hold exactly n*n entries");
  for (int v : cells_)
    if (v < 0 || v >= n) throw std::invalid_argument("table entry out of range");
}

TomonoidTable TomonoidTable::trivial() { return TomonoidTable(Chain(1), {0}); }

TomonoidTable TomonoidTable::two_element() {
  return TomonoidTable(Chain(2), {0, 0, 0, 1});
}

TomonoidTable TomonoidTable::from_rows(const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<int> cells;
  cells.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("table rows must all have length n");
    cells.insert(cells.end(), row.begin(), row.end());
  }
  return TomonoidTable(Chain(n), std::move(cells));
}

int TomonoidTable::prod(int a, int b) const {
  return cells_[static_cast<std::size_t>(a) * chain_.size() + b];
}

std::vector<std::vector<int>> TomonoidTable::rows() const {
  const int n = size();
  std::vector<std::vector<int>> out(n);
  for (int a = 0; a < n; ++a)
    out[a].assign(cells_.begin() + static_cast<std::size_t>(a) * n,
                  cells_.begin() + static_cast<std::size_t>(a + 1) * n);
  return out;
}

bool operator<(const TomonoidTable& lhs, const TomonoidTable& rhs) {
  if (lhs.size() != rhs.size()) return lhs.size() < rhs.size();
  return lhs.cells() < rhs.cells();
}

VerifyReport verify_table(const TomonoidTable& t) {
  VerifyReport report;
  const int n = t.size();
  const int one = n - 1;
  for (int b = 0; b < n; ++b)
    if (t.prod(one, b) != b)
      report.violations.push_back({ViolationKind::identity, {one, b}});
  for (int a = 0; a < one; ++a)
    if (t.prod(a, one) != a)
      report.violations.push_back({ViolationKind::identity, {a, one}});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b + 1 < n; ++b)
      if (t.prod(a, b) > t.prod(a, b + 1))
        report.violations.push_back({ViolationKind::monotonicity, {a, b, a, b + 1}});
  for (int a = 0; a + 1 < n; ++a)
    for (int b = 0; b < n; ++b)
      if (t.prod(a, b) > t.prod(a + 1, b))
        report.violations.push_back({ViolationKind::monotonicity, {a, b, a + 1, b}});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (t.prod(t.prod(a, b), c) != t.prod(a, t.prod(b, c)))
          report.violations.push_back({ViolationKind::associativity, {a, b, c}});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (t.prod(a, b) > std::min(a, b))
        report.violations.push_back({ViolationKind::negativity, {a, b}});
  return report;
}

bool is_commutative(const TomonoidTable& t) {
  const int n = t.size();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (t.prod(a, b) != t.prod(b, a)) return false;
  return true;
}

bool is_archimedean(const TomonoidTable& t) {
  const int n = t.size();
  for (int b = 0; b + 1 < n; ++b)
    for (int a = 1; a < n; ++a)
      if (t.prod(b, a) == a) return false;
  return true;
}

std::vector<int> idempotents(const TomonoidTable& t) {
  std::vector<int> out;
  for (int e = 0; e < t.size(); ++e)
    if (t.prod(e, e) == e) out.push_back(e);
  return out;
}

IdempotentPair atom_char_idempotents(const TomonoidTable& t) {
  const int n = t.size();
  if (n < 2)
    throw std::domain_error("trivial tomonoid has no atom-characterising pair");
  const int atom = t.chain().atom();
  int left = n - 1;
  int right = n - 1;
  for (int a = 0; a < n; ++a)
    if (t.prod(a, atom) == atom) {
      left = a;
      break;
    }
  for (int a = 0; a < n; ++a)
    if (t.prod(atom, a) == atom) {
      right = a;
      break;
    }
  if (t.prod(left, left) != left || t.prod(right, right) != right)
    throw std::logic_error("atom-characterising elements are not idempotent");
  return {left, right};
}

TomonoidTable rees_quotient(const TomonoidTable& t, int q) {
  const int n = t.size();
  // Quotienting the two-element table by its atom is the final step of any
  // quotient chain: the ideal covers the whole chain and the result is the
  // trivial table. Everywhere else the identity must survive.
  const bool final_step = n == 2 && q == 1;
  if (q < 0 || (q >= n - 1 && !final_step))
    throw std::invalid_argument("quotient element must lie strictly below the identity");
  const int m = n - q;
  std::vector<int> cells(static_cast<std::size_t>(m) * m, 0);
  for (int i = 1; i < m; ++i)
    for (int j = 1; j < m; ++j) {
      const int p = t.prod(q + i, q + j);
      cells[static_cast<std::size_t>(i) * m + j] = p > q ? p - q : 0;
    }
  return TomonoidTable(Chain(m), std::move(cells));
}

}  // namespace tomo
