#include "tomo/ramification.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <queue>
#include <set>
#include <stdexcept>

namespace tomo {

namespace {

struct UnionFind {
  std::vector<int> parent;
  std::vector<std::vector<int>> members;  // populated at roots only

  explicit UnionFind(int size) : parent(size), members(size) {
    for (int i = 0; i < size; ++i) {
      parent[i] = i;
      members[i] = {i};
    }
  }

  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  bool joined(int x, int y) { return find(x) == find(y); }

  // Merges the classes of x and y; returns the cells that were in x's class
  // beforehand (empty if nothing happened).
  std::vector<int> unite(int x, int y) {
    int rx = find(x);
    int ry = find(y);
    if (rx == ry) return {};
    std::vector<int> moved = members[rx];
    if (members[rx].size() > members[ry].size()) std::swap(rx, ry);
    parent[rx] = ry;
    members[ry].insert(members[ry].end(), members[rx].begin(), members[rx].end());
    members[rx].clear();
    return moved;
  }
};

struct RuleSet {
  bool translate = true;
  bool sandwich = true;
  bool atom_closure = true;
};

class Engine {
 public:
  Engine(const TomonoidTable& t, IdempotentPair pair, bool commutative_mode,
         RuleSet rules)
      : t_(t),
        n_(t.size()),
        m_(n_ + 1),
        el_(pair.left + 1),
        er_(pair.right + 1),
        commutative_(commutative_mode),
        rules_(rules),
        support_(static_cast<std::size_t>(m_) * m_, 0),
        uf_(m_ * m_) {
    for (int r = 2; r < m_; ++r)
      for (int c = 2; c < m_; ++c)
        if (t_.prod(r - 1, c - 1) > 0) support_[index(r, c)] = 1;
  }

  void run() {
    static_rules();
    closure_fixpoint();
    verify_fixpoint();
  }

  Ramification normalise(IdempotentPair pair, bool commutative_mode,
                         bool archimedean_mode) {
    Ramification r{ExtendedChain{t_.chain()}, pair, commutative_mode,
                   archimedean_mode, support_, {}, 0, 1, false, {}};
    r.class_of.assign(static_cast<std::size_t>(m_) * m_, -1);
    const int zero_root = uf_.find(index(zero_anchor()));
    const int atom_root = uf_.find(index(atom_anchor()));
    r.obstructed = zero_root == atom_root;
    std::map<int, int> id_of_root;
    id_of_root[zero_root] = 0;
    if (!r.obstructed) id_of_root[atom_root] = 1;
    int next_id = m_;
    for (int row = 0; row < m_; ++row)
      for (int col = 0; col < m_; ++col) {
        const int i = index(row, col);
        if (support_[i]) {
          assert(uf_.find(i) == i);
          r.class_of[i] = t_.prod(row - 1, col - 1) + 1;
          continue;
        }
        const int root = uf_.find(i);
        auto it = id_of_root.find(root);
        if (it == id_of_root.end()) it = id_of_root.emplace(root, next_id++).first;
        r.class_of[i] = it->second;
      }
    r.zero_class = 0;
    r.atom_class = r.obstructed ? 0 : 1;
    r.log = log_;
    return r;
  }

 private:
  int index(int row, int col) const { return row * m_ + col; }
  int index(Cell c) const { return c.row * m_ + c.col; }
  Cell cell(int i) const { return {i / m_, i % m_}; }
  bool sup(int row, int col) const { return support_[index(row, col)] != 0; }
  int image(int a, int b) const { return t_.prod(a - 1, b - 1) + 1; }
  Cell zero_anchor() const { return {m_ - 1, 0}; }
  Cell atom_anchor() const { return {m_ - 1, 1}; }

  void join(Cell x, Cell y, MergeRule rule) {
    if (x == y) return;
    assert(!sup(x.row, x.col) && !sup(y.row, y.col));
    if (uf_.joined(index(x), index(y))) return;
    log_.push_back({x, y, rule});
    uf_.unite(index(x), index(y));
  }

  void static_rules() {
    const Cell zero = zero_anchor();
    const Cell atom = atom_anchor();

    join({0, m_ - 1}, zero, MergeRule::bottom_seed);
    for (int a = 0; a < el_; ++a) join({a, 1}, zero, MergeRule::bottom_seed);
    for (int b = 0; b < er_; ++b) join({1, b}, zero, MergeRule::bottom_seed);

    join({1, m_ - 1}, atom, MergeRule::atom_seed);
    join({el_, 1}, atom, MergeRule::atom_seed);
    join({1, er_}, atom, MergeRule::atom_seed);

    // Cells with equal products in every coextension, forced through the
    // associativity of the base table.
    for (int a = 2; a < m_; ++a)
      for (int b = 2; b < m_; ++b) {
        if (!sup(a, b)) continue;
        for (int c = 2; c < m_; ++c) {
          if (!sup(b, c)) continue;
          const int d = image(a, b);
          const int e = image(b, c);
          if (sup(d, c)) {
            assert(sup(a, e));
            continue;
          }
          assert(!sup(a, e));
          join({d, c}, {a, e}, MergeRule::assoc_transfer);
        }
      }

    // Multiplying a collapsed product by an element on the far side of the
    // chosen idempotent either forces the bottom or preserves the cell.
    for (int a = 2; a < m_; ++a)
      for (int b = 2; b < m_; ++b) {
        if (sup(a, b)) continue;
        for (int c = 2; c < m_; ++c) {
          if (!sup(b, c)) continue;
          const int e = image(b, c);
          if (c < er_)
            join({a, e}, zero, MergeRule::bottom_right);
          else if (rules_.translate)
            join({a, e}, {a, b}, MergeRule::translate_right);
        }
      }
    for (int b = 2; b < m_; ++b)
      for (int c = 2; c < m_; ++c) {
        if (sup(b, c)) continue;
        for (int a = 2; a < m_; ++a) {
          if (!sup(a, b)) continue;
          const int d = image(a, b);
          if (a < el_)
            join({d, c}, zero, MergeRule::bottom_left);
          else if (rules_.translate)
            join({d, c}, {b, c}, MergeRule::translate_left);
        }
      }

    // Two collapsed cells chained across incompatible sides of the
    // idempotents cannot both map to the atom.
    if (rules_.sandwich) {
      for (int a = 1; a < m_; ++a)
        for (int b = 1; b < m_; ++b) {
          if (sup(a, b)) continue;
          for (int c = 1; c < m_; ++c) {
            if (sup(b, c)) continue;
            if (a < el_ && c >= er_) join({a, b}, zero, MergeRule::sandwich_left);
            if (a >= el_ && c < er_) join({b, c}, zero, MergeRule::sandwich_right);
          }
        }
    }

    if (commutative_) {
      for (int r = 0; r < m_; ++r)
        for (int c = r + 1; c < m_; ++c)
          if (!sup(r, c) && !sup(c, r))
            join({r, c}, {c, r}, MergeRule::symmetry);
    }
  }

  void closure_fixpoint() {
    const int zi = index(zero_anchor());
    const int ai = index(atom_anchor());
    std::vector<int> zero_frontier = uf_.members[uf_.find(zi)];
    std::vector<int> atom_frontier;
    if (rules_.atom_closure) atom_frontier = uf_.members[uf_.find(ai)];
    if (uf_.joined(zi, ai) && rules_.atom_closure)
      atom_frontier = uf_.members[uf_.find(ai)];

    auto absorb = [&](Cell joined, Cell frontier, MergeRule rule, int anchor) {
      const bool was_obstructed = uf_.joined(zi, ai);
      log_.push_back({joined, frontier, rule});
      std::vector<int> moved = uf_.unite(index(joined), anchor);
      const bool now_obstructed = uf_.joined(zi, ai);
      if (!was_obstructed && now_obstructed) {
        // the bottom and atom classes collided; every member of the combined
        // class becomes frontier for both closures
        for (int cellidx : uf_.members[uf_.find(zi)]) {
          zero_frontier.push_back(cellidx);
          if (rules_.atom_closure) atom_frontier.push_back(cellidx);
        }
      } else {
        for (int cellidx : moved) {
          if (anchor == zi || now_obstructed) zero_frontier.push_back(cellidx);
          if (rules_.atom_closure && (anchor == ai || now_obstructed))
            atom_frontier.push_back(cellidx);
        }
      }
    };

    std::size_t zpos = 0;
    std::size_t apos = 0;
    while (zpos < zero_frontier.size() || apos < atom_frontier.size()) {
      if (zpos < zero_frontier.size()) {
        const Cell f = cell(zero_frontier[zpos++]);
        for (int r = 0; r <= f.row; ++r)
          for (int c = 0; c <= f.col; ++c) {
            if (sup(r, c)) continue;
            if (uf_.joined(index(r, c), zi)) continue;
            absorb({r, c}, f, MergeRule::bottom_closure, zi);
          }
        continue;
      }
      const Cell f = cell(atom_frontier[apos++]);
      for (int r = f.row; r < m_; ++r)
        for (int c = f.col; c < m_; ++c) {
          if (sup(r, c)) continue;
          if (uf_.joined(index(r, c), ai)) continue;
          absorb({r, c}, f, MergeRule::atom_closure, ai);
        }
    }
  }

  void verify_fixpoint() {
    const int zi = index(zero_anchor());
    const int ai = index(atom_anchor());
    for (int row = 0; row < m_; ++row)
      for (int col = 0; col < m_; ++col) {
        if (sup(row, col)) continue;
        const int i = index(row, col);
        if (uf_.joined(i, zi)) {
          for (int r = 0; r <= row; ++r)
            for (int c = 0; c <= col; ++c)
              if (!sup(r, c) && !uf_.joined(index(r, c), zi))
                throw std::logic_error("bottom closure fixpoint incomplete");
        }
        if (rules_.atom_closure && uf_.joined(i, ai)) {
          for (int r = row; r < m_; ++r)
            for (int c = col; c < m_; ++c)
              if (!sup(r, c) && !uf_.joined(index(r, c), ai))
                throw std::logic_error("atom closure fixpoint incomplete");
        }
      }
  }

  const TomonoidTable& t_;
  int n_;
  int m_;
  int el_;
  int er_;
  bool commutative_;
  RuleSet rules_;
  std::vector<char> support_;
  UnionFind uf_;
  std::vector<MergeLogEntry> log_;
};

}  // namespace

std::string_view to_string(MergeRule rule) {
  switch (rule) {
    case MergeRule::assoc_transfer: return "assoc-transfer";
    case MergeRule::bottom_left: return "bottom-left";
    case MergeRule::bottom_right: return "bottom-right";
    case MergeRule::translate_left: return "translate-left";
    case MergeRule::translate_right: return "translate-right";
    case MergeRule::sandwich_left: return "sandwich-left";
    case MergeRule::sandwich_right: return "sandwich-right";
    case MergeRule::bottom_seed: return "bottom-seed";
    case MergeRule::atom_seed: return "atom-seed";
    case MergeRule::symmetry: return "symmetry";
    case MergeRule::bottom_closure: return "bottom-closure";
    case MergeRule::atom_closure: return "atom-closure";
  }
  return "unknown";
}

std::vector<Cell> Ramification::class_cells(int id) const {
  std::vector<Cell> out;
  const int m = ext.size();
  for (int row = 0; row < m; ++row)
    for (int col = 0; col < m; ++col)
      if (class_at(row, col) == id) out.push_back({row, col});
  return out;
}

std::vector<int> Ramification::cosupport_class_ids() const {
  std::set<int> ids;
  const int m = ext.size();
  for (int row = 0; row < m; ++row)
    for (int col = 0; col < m; ++col)
      if (!in_support(row, col)) ids.insert(class_at(row, col));
  return {ids.begin(), ids.end()};
}

std::vector<Cell> compute_support(const TomonoidTable& t) {
  const int n = t.size();
  if (n < 2) throw std::domain_error("support needs a non-trivial table");
  const int m = n + 1;
  std::vector<Cell> cells;
  for (int r = 2; r < m; ++r)
    for (int c = 2; c < m; ++c)
      if (t.prod(r - 1, c - 1) > 0) cells.push_back({r, c});
  // the support of a valid table is always upward closed; guard it
  auto contains = [&](Cell q) {
    return std::binary_search(cells.begin(), cells.end(), q);
  };
  for (const Cell& c : cells)
    for (int r = c.row; r < m; ++r)
      for (int cc = c.col; cc < m; ++cc)
        if (!contains({r, cc}))
          throw std::logic_error("support of a valid table must be upward closed");
  return cells;
}

Ramification ramify(const TomonoidTable& t, IdempotentPair pair,
                    bool commutative_mode, bool archimedean_mode) {
  const int n = t.size();
  if (n < 2)
    throw std::domain_error("the trivial tomonoid is extended by the seed step, not by ramification");
  const VerifyReport report = verify_table(t);
  if (!report.ok())
    throw std::invalid_argument("ramify requires a valid table:\n" + report.summary());
  if (pair.left < 0 || pair.left >= n || pair.right < 0 || pair.right >= n)
    throw std::invalid_argument("ramification pair out of range");
  if (t.prod(pair.left, pair.left) != pair.left ||
      t.prod(pair.right, pair.right) != pair.right)
    throw std::invalid_argument("ramification pair must consist of idempotents");
  if (archimedean_mode) {
    if (pair.left != n - 1 || pair.right != n - 1)
      throw std::invalid_argument("Archimedean mode requires the identity pair");
    if (!is_archimedean(t))
      throw std::invalid_argument("Archimedean mode requires an Archimedean table");
  }
  if (commutative_mode) {
    if (!is_commutative(t))
      throw std::invalid_argument("commutative mode requires a commutative table");
    if (pair.left != pair.right)
      throw std::invalid_argument("commutative mode requires a symmetric pair");
  }

  Engine engine(t, pair, commutative_mode, RuleSet{});
  engine.run();
  Ramification result = engine.normalise(pair, commutative_mode, archimedean_mode);

  if (archimedean_mode) {
    // On Archimedean input with the identity pair, the translation and
    // sandwich rules are vacuous and the atom class is already upward
    // closed; the reduced rule set must reach the identical fixpoint.
    Engine reduced(t, pair, commutative_mode,
                   RuleSet{.translate = false, .sandwich = false, .atom_closure = false});
    reduced.run();
    const Ramification check =
        reduced.normalise(pair, commutative_mode, archimedean_mode);
    if (check.class_of != result.class_of || check.obstructed != result.obstructed)
      throw std::logic_error("reduced Archimedean rules disagree with the general engine");
    if (result.obstructed)
      throw std::logic_error("Archimedean ramification can never be obstructed");
    const std::vector<Cell> atom_cells = result.class_cells(result.atom_class);
    const int m = result.ext.size();
    if (atom_cells != std::vector<Cell>{{1, m - 1}, {m - 1, 1}})
      throw std::logic_error("Archimedean atom class must be the two prescribed cells");
  }
  return result;
}

bool audit_ramification(const TomonoidTable& t, const Ramification& r) {
  const int n = t.size();
  const int m = n + 1;
  if (r.ext.size() != m) return false;
  auto sup = [&](int row, int col) {
    return row >= 2 && col >= 2 && t.prod(row - 1, col - 1) > 0;
  };
  for (int row = 0; row < m; ++row)
    for (int col = 0; col < m; ++col)
      if (r.in_support(row, col) != sup(row, col)) return false;

  const int el = r.pair.left + 1;
  const int er = r.pair.right + 1;
  const Cell zero{m - 1, 0};
  const Cell atom{m - 1, 1};
  auto cosup = [&](Cell c) {
    return c.row >= 0 && c.row < m && c.col >= 0 && c.col < m && !sup(c.row, c.col);
  };
  auto image = [&](int a, int b) { return t.prod(a - 1, b - 1) + 1; };
  auto index = [&](Cell c) { return c.row * m + c.col; };

  UnionFind uf(m * m);
  for (const MergeLogEntry& entry : r.log) {
    const Cell x = entry.joined;
    const Cell y = entry.target;
    if (!cosup(x) || !cosup(y)) return false;
    bool valid = false;
    switch (entry.rule) {
      case MergeRule::assoc_transfer: {
        for (int a = 2; a < m && !valid; ++a)
          for (int b = 2; b < m && !valid; ++b) {
            if (!sup(a, b)) continue;
            for (int c = 2; c < m && !valid; ++c) {
              if (!sup(b, c)) continue;
              const Cell u{image(a, b), c};
              const Cell v{a, image(b, c)};
              if (sup(u.row, u.col)) continue;
              if ((u == x && v == y) || (u == y && v == x)) valid = true;
            }
          }
        break;
      }
      case MergeRule::bottom_right: {
        if (y != zero) break;
        for (int a = 2; a < m && !valid; ++a)
          for (int b = 2; b < m && !valid; ++b) {
            if (sup(a, b)) continue;
            for (int c = 2; c < er && !valid; ++c)
              if (sup(b, c) && Cell{a, image(b, c)} == x) valid = true;
          }
        break;
      }
      case MergeRule::bottom_left: {
        if (y != zero) break;
        for (int b = 2; b < m && !valid; ++b)
          for (int c = 2; c < m && !valid; ++c) {
            if (sup(b, c)) continue;
            for (int a = 2; a < el && !valid; ++a)
              if (sup(a, b) && Cell{image(a, b), c} == x) valid = true;
          }
        break;
      }
      case MergeRule::translate_right: {
        const int a = y.row;
        const int b = y.col;
        if (x.row != a || a < 2 || b < 2 || sup(a, b)) break;
        for (int c = er; c < m && !valid; ++c)
          if (c >= 2 && sup(b, c) && image(b, c) == x.col) valid = true;
        break;
      }
      case MergeRule::translate_left: {
        const int b = y.row;
        const int c = y.col;
        if (x.col != c || b < 2 || c < 2 || sup(b, c)) break;
        for (int a = el; a < m && !valid; ++a)
          if (a >= 2 && sup(a, b) && image(a, b) == x.row) valid = true;
        break;
      }
      case MergeRule::sandwich_left: {
        if (y != zero || x.row < 1 || x.col < 1 || sup(x.row, x.col)) break;
        if (x.row >= el) break;
        for (int c = std::max(er, 1); c < m && !valid; ++c)
          if (!sup(x.col, c)) valid = true;
        break;
      }
      case MergeRule::sandwich_right: {
        if (y != zero || x.row < 1 || x.col < 1 || sup(x.row, x.col)) break;
        if (x.col >= er) break;
        for (int a = std::max(el, 1); a < m && !valid; ++a)
          if (!sup(a, x.row)) valid = true;
        break;
      }
      case MergeRule::bottom_seed: {
        valid = y == zero &&
                (x == Cell{0, m - 1} || (x.col == 1 && x.row < el) ||
                 (x.row == 1 && x.col < er));
        break;
      }
      case MergeRule::atom_seed: {
        valid = y == atom &&
                (x == Cell{1, m - 1} || x == Cell{el, 1} || x == Cell{1, er});
        break;
      }
      case MergeRule::symmetry: {
        valid = r.commutative_mode && x.row == y.col && x.col == y.row;
        break;
      }
      case MergeRule::bottom_closure: {
        valid = below(x, y) && uf.joined(index(y), index(zero));
        break;
      }
      case MergeRule::atom_closure: {
        valid = below(y, x) && uf.joined(index(y), index(atom));
        break;
      }
    }
    if (!valid) return false;
    uf.unite(index(x), index(y));
  }

  // the replayed classes must match the published ones, and the support
  // classes must be exactly the level classes of the base table
  for (int i = 0; i < m * m; ++i)
    for (int j = i + 1; j < m * m; ++j) {
      const Cell a{i / m, i % m};
      const Cell b{j / m, j % m};
      const bool same_class = r.class_of[i] == r.class_of[j];
      if (sup(a.row, a.col) && sup(b.row, b.col)) {
        const bool same_product =
            t.prod(a.row - 1, a.col - 1) == t.prod(b.row - 1, b.col - 1);
        if (same_class != same_product) return false;
      } else if (!sup(a.row, a.col) && !sup(b.row, b.col)) {
        if (same_class != uf.joined(i, j)) return false;
      } else if (same_class) {
        return false;
      }
    }
  return true;
}

ClassDag class_poset(const Ramification& r) {
  if (r.obstructed)
    throw std::invalid_argument(
        "obstructed ramification: the bottom and atom classes coincide, no coextension exists");
  const int m = r.ext.size();
  const std::vector<int> ids = r.cosupport_class_ids();
  const int k = static_cast<int>(ids.size());
  std::map<int, int> pos_of;
  for (int i = 0; i < k; ++i) pos_of[ids[i]] = i;

  std::vector<std::vector<Cell>> cells(k);
  for (int row = 0; row < m; ++row)
    for (int col = 0; col < m; ++col)
      if (!r.in_support(row, col))
        cells[pos_of.at(r.class_at(row, col))].push_back({row, col});

  // one-step relation induced by the componentwise order
  std::vector<std::vector<int>> adj(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      bool related = false;
      for (const Cell& x : cells[i]) {
        for (const Cell& y : cells[j])
          if (below(x, y)) {
            related = true;
            break;
          }
        if (related) break;
      }
      if (related) adj[i].push_back(j);
    }

  // Tarjan condensation
  std::vector<int> order(k, -1), low(k, 0), comp_of(k, -1);
  std::vector<char> on_stack(k, 0);
  std::vector<int> stack;
  std::vector<std::vector<int>> comps;
  int counter = 0;
  std::function<void(int)> strongconnect = [&](int v) {
    order[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = 1;
    for (int w : adj[v]) {
      if (order[w] == -1) {
        strongconnect(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], order[w]);
      }
    }
    if (low[v] == order[v]) {
      std::vector<int> comp;
      while (true) {
        const int w = stack.back();
        stack.pop_back();
        on_stack[w] = 0;
        comp_of[w] = static_cast<int>(comps.size());
        comp.push_back(w);
        if (w == v) break;
      }
      std::sort(comp.begin(), comp.end());
      comps.push_back(std::move(comp));
    }
  };
  for (int v = 0; v < k; ++v)
    if (order[v] == -1) strongconnect(v);

  const int nc = static_cast<int>(comps.size());
  std::vector<std::set<int>> comp_adj(nc);
  for (int i = 0; i < k; ++i)
    for (int j : adj[i])
      if (comp_of[i] != comp_of[j]) comp_adj[comp_of[i]].insert(comp_of[j]);

  // deterministic topological order, smallest contained cell first
  std::vector<int> key(nc);
  for (int c = 0; c < nc; ++c) {
    int best = m * m;
    for (int member : comps[c]) {
      const Cell& front = cells[member].front();  // row-major scan keeps cells sorted
      best = std::min(best, front.row * m + front.col);
    }
    key[c] = best;
  }
  std::vector<int> indeg(nc, 0);
  for (int c = 0; c < nc; ++c)
    for (int d : comp_adj[c]) ++indeg[d];
  using Entry = std::pair<int, int>;  // (key, comp)
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> ready;
  for (int c = 0; c < nc; ++c)
    if (indeg[c] == 0) ready.push({key[c], c});
  std::vector<int> node_of_comp(nc, -1);
  int next_node = 0;
  while (!ready.empty()) {
    const auto [kk, c] = ready.top();
    ready.pop();
    node_of_comp[c] = next_node++;
    for (int d : comp_adj[c])
      if (--indeg[d] == 0) ready.push({key[d], d});
  }
  if (next_node != nc) throw std::logic_error("class preorder condensation is cyclic");

  ClassDag dag;
  dag.member_classes.resize(nc);
  dag.cells_of.resize(nc);
  dag.covers.resize(nc);
  dag.covered_by.resize(nc);
  std::vector<std::vector<char>> reach(nc, std::vector<char>(nc, 0));
  for (int c = 0; c < nc; ++c) {
    const int u = node_of_comp[c];
    for (int member : comps[c]) {
      dag.member_classes[u].push_back(ids[member]);
      dag.cells_of[u].insert(dag.cells_of[u].end(), cells[member].begin(),
                             cells[member].end());
      dag.node_of_class[ids[member]] = u;
    }
    std::sort(dag.member_classes[u].begin(), dag.member_classes[u].end());
    std::sort(dag.cells_of[u].begin(), dag.cells_of[u].end());
    for (int d : comp_adj[c]) reach[u][node_of_comp[d]] = 1;
  }
  // transitive closure of the condensation
  for (int w = 0; w < nc; ++w)
    for (int u = 0; u < nc; ++u)
      if (reach[u][w])
        for (int v = 0; v < nc; ++v)
          if (reach[w][v]) reach[u][v] = 1;
  for (int u = 0; u < nc; ++u)
    for (int v = 0; v < nc; ++v) {
      if (!reach[u][v] || u == v) continue;
      bool covered = true;
      for (int w = 0; w < nc && covered; ++w)
        if (w != u && w != v && reach[u][w] && reach[w][v]) covered = false;
      if (covered) {
        dag.covers[u].push_back(v);
        dag.covered_by[v].push_back(u);
      }
    }
  for (auto& vs : dag.covers) std::sort(vs.begin(), vs.end());
  for (auto& vs : dag.covered_by) std::sort(vs.begin(), vs.end());

  dag.zero_node = dag.node_of_class.at(r.zero_class);
  dag.atom_node = dag.node_of_class.at(r.atom_class);
  if (!dag.covered_by[dag.zero_node].empty())
    throw std::logic_error("bottom node must be minimal in the class order");
  if (!dag.covers[dag.atom_node].empty())
    throw std::logic_error("atom node must be maximal in the class order");
  if (dag.member_classes[dag.zero_node].size() != 1 ||
      dag.member_classes[dag.atom_node].size() != 1)
    throw std::logic_error("bottom and atom classes cannot be forced together with others");
  return dag;
}

}  // namespace tomo
