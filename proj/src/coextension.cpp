#include "tomo/coextension.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace tomo {

std::vector<CoextensionChoice> enumerate_choices(const ClassDag& dag) {
  if (dag.zero_node == dag.atom_node)
    throw std::invalid_argument("class DAG has merged bottom and atom nodes");
  const int k = dag.node_count();
  std::vector<CoextensionChoice> out;
  std::vector<char> chosen(k, 0);
  std::vector<int> current;
  std::function<void(int)> walk = [&](int node) {
    if (node == k) {
      out.push_back({current});
      return;
    }
    const bool includable = [&] {
      if (node == dag.atom_node) return false;
      for (int pred : dag.covered_by[node])
        if (!chosen[pred]) return false;
      return true;
    }();
    if (node != dag.zero_node) walk(node + 1);  // absent branch first
    if (includable) {
      chosen[node] = 1;
      current.push_back(node);
      walk(node + 1);
      current.pop_back();
      chosen[node] = 0;
    } else if (node == dag.zero_node) {
      throw std::logic_error("bottom node must always be includable");
    }
  };
  walk(0);
  return out;
}

namespace {

void check_postconditions(const TomonoidTable& t, const Ramification& r,
                          const TomonoidTable& result, bool strict) {
  bool full = strict;
#ifndef NDEBUG
  full = true;
#endif
  if (full) {
    const VerifyReport report = verify_table(result);
    if (!report.ok())
      throw std::logic_error("materialised table violates the axioms:\n" +
                             report.summary());
  } else {
    // spot-check: identity, monotonicity and negativity are cheap, sample
    // the associativity triples
    const int m = result.size();
    for (int b = 0; b < m; ++b)
      if (result.prod(m - 1, b) != b || result.prod(b, m - 1) != b)
        throw std::logic_error("materialised table breaks the identity axiom");
    for (int a = 0; a < m; ++a)
      for (int b = 0; b + 1 < m; ++b)
        if (result.prod(a, b) > result.prod(a, b + 1) ||
            result.prod(b, a) > result.prod(b + 1, a))
          throw std::logic_error("materialised table breaks monotonicity");
    for (int flat = 0; flat < m * m * m; flat += 7) {
      const int a = flat / (m * m);
      const int b = (flat / m) % m;
      const int c = flat % m;
      if (result.prod(result.prod(a, b), c) != result.prod(a, result.prod(b, c)))
        throw std::logic_error("materialised table breaks associativity");
    }
  }
  if (rees_quotient(result, result.chain().atom()) != t)
    throw std::logic_error("materialised table does not quotient back to its parent");
  const IdempotentPair recovered = atom_char_idempotents(result);
  if (recovered.left != r.pair.left + 1 || recovered.right != r.pair.right + 1)
    throw std::logic_error("materialised table recovers the wrong idempotent pair");
  if (r.commutative_mode && !is_commutative(result))
    throw std::logic_error("commutative mode produced a noncommutative table");
  if (r.archimedean_mode && !is_archimedean(result))
    throw std::logic_error("Archimedean mode produced a non-Archimedean table");
}

}  // namespace

TomonoidTable materialise(const TomonoidTable& t, const Ramification& r,
                          const ClassDag& dag, const CoextensionChoice& choice,
                          bool strict) {
  if (r.obstructed)
    throw std::invalid_argument("cannot materialise an obstructed ramification");
  if (r.ext.base != t.chain())
    throw std::invalid_argument("ramification does not belong to this table");
  const int k = dag.node_count();
  std::vector<char> to_bottom(k, 0);
  int previous = -1;
  for (int node : choice.downset) {
    if (node <= previous || node >= k)
      throw std::invalid_argument("choice must list distinct nodes in ascending order");
    previous = node;
    to_bottom[node] = 1;
  }
  if (!to_bottom[dag.zero_node])
    throw std::invalid_argument("choice must contain the bottom node");
  if (to_bottom[dag.atom_node])
    throw std::invalid_argument("choice must exclude the atom node");
  for (int node : choice.downset)
    for (int pred : dag.covered_by[node])
      if (!to_bottom[pred])
        throw std::invalid_argument("choice must be downward closed");

  const int m = r.ext.size();
  std::vector<int> cells(static_cast<std::size_t>(m) * m, 0);
  for (int row = 0; row < m; ++row)
    for (int col = 0; col < m; ++col) {
      int value;
      if (r.in_support(row, col)) {
        value = t.prod(row - 1, col - 1) + 1;
      } else {
        const int node = dag.node_of_class.at(r.class_at(row, col));
        value = to_bottom[node] ? ExtendedChain::bottom : ExtendedChain::atom;
      }
      cells[static_cast<std::size_t>(row) * m + col] = value;
    }
  TomonoidTable result(Chain(m), std::move(cells));
  check_postconditions(t, r, result, strict);
  return result;
}

TomonoidTable materialise(const TomonoidTable& t, const Ramification& r,
                          const CoextensionChoice& choice, bool strict) {
  return materialise(t, r, class_poset(r), choice, strict);
}

std::vector<GenRecord> coextensions(const TomonoidTable& t, Filter filter) {
  const int n = t.size();
  if (n < 2)
    throw std::domain_error("the trivial tomonoid is handled by the generator seed step");
  if (filter == Filter::commutative && !is_commutative(t))
    throw std::invalid_argument("commutative filter requires a commutative table");
  if (filter == Filter::archimedean && !is_archimedean(t))
    throw std::invalid_argument("Archimedean filter requires an Archimedean table");

  std::vector<IdempotentPair> pairs;
  const std::vector<int> idem = idempotents(t);
  switch (filter) {
    case Filter::all:
      for (int l : idem)
        for (int r : idem) pairs.push_back({l, r});
      break;
    case Filter::commutative:
      for (int e : idem) pairs.push_back({e, e});
      break;
    case Filter::archimedean:
      pairs.push_back({n - 1, n - 1});
      break;
  }
  const bool commutative_mode = filter == Filter::commutative;
  const bool archimedean_mode = filter == Filter::archimedean;

  std::vector<GenRecord> out;
  for (const IdempotentPair pair : pairs) {
    const Ramification ram = ramify(t, pair, commutative_mode, archimedean_mode);
    if (ram.obstructed) continue;
    const ClassDag dag = class_poset(ram);
    for (const CoextensionChoice& choice : enumerate_choices(dag)) {
      TomonoidTable table = materialise(t, ram, dag, choice);
      const bool commutative = is_commutative(table);
      const bool archimedean = is_archimedean(table);
      out.push_back(GenRecord{0, std::nullopt, std::move(table), pair, choice,
                              commutative, archimedean});
    }
  }
  return out;
}

}  // namespace tomo
