#include "tomo/generator.hpp"

#include <atomic>
#include <cassert>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace tomo {

namespace {

void expand_level(const std::vector<std::pair<std::uint64_t, TomonoidTable>>& level,
                  Filter filter, int jobs,
                  std::vector<std::vector<GenRecord>>& children) {
  children.assign(level.size(), {});
  auto expand_one = [&](std::size_t i) {
    const TomonoidTable& parent = level[i].second;
    if (parent.size() == 1) {
      // the only one-element coextension of the trivial tomonoid: the
      // two-element table, whose single free product is forced to bottom
      children[i].push_back(GenRecord{0, std::nullopt, TomonoidTable::two_element(),
                                      std::nullopt, std::nullopt, true, true});
      return;
    }
    children[i] = coextensions(parent, filter);
  };

  const int workers = static_cast<int>(
      std::min(static_cast<std::size_t>(jobs), level.size()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < level.size(); ++i) expand_one(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= level.size()) return;
        try {
          expand_one(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          return;
        }
      }
    });
  for (auto& thread : pool) thread.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

void generate(int max_size, Filter filter, const RecordSink& sink, int jobs,
              const std::optional<TomonoidTable>& seed) {
  if (max_size < 1) throw std::invalid_argument("max_size must be positive");
  if (jobs < 1) jobs = 1;

  std::uint64_t next_id = 0;
  std::vector<std::pair<std::uint64_t, TomonoidTable>> level;

  if (seed) {
    const VerifyReport report = verify_table(*seed);
    if (!report.ok())
      throw std::invalid_argument("seed table is not a valid tomonoid:\n" +
                                  report.summary());
    if (filter == Filter::commutative && !is_commutative(*seed))
      throw std::invalid_argument("seed table is not commutative");
    if (filter == Filter::archimedean && !is_archimedean(*seed))
      throw std::invalid_argument("seed table is not Archimedean");
    if (seed->size() > max_size) return;
    GenRecord rec{next_id++, std::nullopt, *seed, std::nullopt, std::nullopt,
                  is_commutative(*seed), is_archimedean(*seed)};
    sink(rec);
    level.emplace_back(rec.id, rec.table);
  } else {
    GenRecord rec{next_id++, std::nullopt, TomonoidTable::trivial(), std::nullopt,
                  std::nullopt, true, true};
    sink(rec);
    level.emplace_back(rec.id, rec.table);
  }

  while (!level.empty() && level.front().second.size() < max_size) {
    std::vector<std::vector<GenRecord>> children;
    expand_level(level, filter, jobs, children);
    std::vector<std::pair<std::uint64_t, TomonoidTable>> next_level;
    for (std::size_t i = 0; i < level.size(); ++i)
      for (GenRecord& rec : children[i]) {
        rec.id = next_id++;
        rec.parent = level[i].first;
        sink(rec);
        next_level.emplace_back(rec.id, rec.table);
      }
    level = std::move(next_level);
  }
}

std::vector<GenRecord> generate_all(int max_size, Filter filter, int jobs,
                                    const std::optional<TomonoidTable>& seed) {
  std::vector<GenRecord> out;
  generate(max_size, filter, [&](const GenRecord& rec) { out.push_back(rec); },
           jobs, seed);
  return out;
}

int oracle_cap() {
  if (const char* raw = std::getenv("TOMO_ORACLE_CAP")) {
    char* end = nullptr;
    const long value = std::strtol(raw, &end, 10);
    if (end != raw && *end == '\0' && value >= 1 && value <= 64)
      return static_cast<int>(value);
  }
  return 6;
}

void brute_force(int size, Filter filter,
                 const std::function<void(const TomonoidTable&)>& sink) {
  if (size < 1) throw std::invalid_argument("size must be positive");
  if (size > oracle_cap())
    throw std::invalid_argument(
        "oracle size " + std::to_string(size) + " exceeds the cap of " +
        std::to_string(oracle_cap()) + "; set TOMO_ORACLE_CAP to raise it");
  if (size == 1) {
    sink(TomonoidTable::trivial());
    return;
  }

  const int n = size;
  std::vector<int> cells(static_cast<std::size_t>(n) * n, 0);
  std::vector<char> known(static_cast<std::size_t>(n) * n, 0);
  auto at = [&](int a, int b) -> int& { return cells[a * n + b]; };
  auto is_known = [&](int a, int b) { return known[a * n + b] != 0; };
  for (int b = 0; b < n; ++b) {
    at(n - 1, b) = b;
    known[(n - 1) * n + b] = 1;
  }
  for (int a = 0; a < n; ++a) {
    at(a, n - 1) = a;
    known[a * n + (n - 1)] = 1;
  }

  std::vector<std::pair<int, int>> free_cells;
  for (int a = 0; a + 1 < n; ++a)
    for (int b = 0; b + 1 < n; ++b) free_cells.emplace_back(a, b);

  // checks exactly the triples that the newly placed cell completes
  auto assoc_ok = [&](int pa, int pb) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (!is_known(x, y)) continue;
        for (int z = 0; z < n; ++z) {
          if (!is_known(y, z)) continue;
          const int xy = at(x, y);
          const int yz = at(y, z);
          if (!is_known(xy, z) || !is_known(x, yz)) continue;
          const bool involved = (x == pa && y == pb) || (y == pa && z == pb) ||
                                (xy == pa && z == pb) || (x == pa && yz == pb);
          if (!involved) continue;
          if (at(xy, z) != at(x, yz)) return false;
        }
      }
    return true;
  };

  std::function<void(std::size_t)> dfs = [&](std::size_t k) {
    if (k == free_cells.size()) {
      TomonoidTable t(Chain(n), cells);
      assert(verify_table(t).ok());
      if (filter == Filter::commutative && !is_commutative(t)) return;
      if (filter == Filter::archimedean && !is_archimedean(t)) return;
      sink(t);
      return;
    }
    const auto [a, b] = free_cells[k];
    const int lo = std::max(b > 0 ? at(a, b - 1) : 0, a > 0 ? at(a - 1, b) : 0);
    const int hi = std::min(a, b);
    for (int v = lo; v <= hi; ++v) {
      at(a, b) = v;
      known[a * n + b] = 1;
      if (assoc_ok(a, b)) dfs(k + 1);
      known[a * n + b] = 0;
    }
    at(a, b) = 0;
  };
  dfs(0);
}

std::vector<TomonoidTable> brute_force_all(int size, Filter filter) {
  std::vector<TomonoidTable> out;
  brute_force(size, filter, [&](const TomonoidTable& t) { out.push_back(t); });
  return out;
}

CountReport count(int max_size, bool cross_check) {
  CountReport report;
  for (int k = 1; k <= max_size; ++k) report.by_size[k];  // keep empty sizes visible
  generate(max_size, Filter::all, [&](const GenRecord& rec) {
    SizeCounts& row = report.by_size[rec.table.size()];
    ++row.total;
    if (rec.commutative) ++row.commutative;
    if (rec.archimedean) ++row.archimedean;
    if (rec.commutative && rec.archimedean) ++row.commutative_archimedean;
  });
  if (cross_check) {
    const int limit = std::min(max_size, oracle_cap());
    for (int k = 1; k <= limit; ++k) {
      SizeCounts row;
      brute_force(k, Filter::all, [&](const TomonoidTable& t) {
        ++row.total;
        const bool c = is_commutative(t);
        const bool a = is_archimedean(t);
        if (c) ++row.commutative;
        if (a) ++row.archimedean;
        if (c && a) ++row.commutative_archimedean;
      });
      if (!(row == report.by_size.at(k)))
        throw std::logic_error("generated counts disagree with the oracle at size " +
                               std::to_string(k));
    }
  }
  return report;
}

}  // namespace tomo
