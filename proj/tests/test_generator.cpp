#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"

using namespace tomo;
using namespace tomo::testing;

namespace {

std::map<int, std::set<TomonoidTable>> by_size(const std::vector<GenRecord>& records) {
  std::map<int, std::set<TomonoidTable>> out;
  for (const GenRecord& rec : records) out[rec.table.size()].insert(rec.table);
  return out;
}

bool records_equal(const GenRecord& a, const GenRecord& b) {
  return a.id == b.id && a.parent == b.parent && a.table == b.table &&
         a.pair == b.pair && a.choice == b.choice && a.commutative == b.commutative &&
         a.archimedean == b.archimedean;
}

}  // namespace

TEST_SUITE("generator") {
  TEST_CASE("oracle finds the forced small tables") {
    CHECK(brute_force_all(1, Filter::all) ==
          std::vector<TomonoidTable>{TomonoidTable::trivial()});
    CHECK(brute_force_all(2, Filter::all) ==
          std::vector<TomonoidTable>{TomonoidTable::two_element()});
    const auto three = brute_force_all(3, Filter::all);
    REQUIRE(three.size() == 2);
    CHECK(std::set<TomonoidTable>(three.begin(), three.end()) ==
          std::set<TomonoidTable>{nilpotent3(), idempotent3()});
  }

  TEST_CASE("oracle emits in lexicographic order without duplicates") {
    for (int n = 1; n <= 5; ++n) {
      const auto tables = brute_force_all(n, Filter::all);
      for (std::size_t i = 0; i + 1 < tables.size(); ++i)
        CHECK(tables[i].cells() < tables[i + 1].cells());
    }
  }

  TEST_CASE("oracle filters are final predicates") {
    for (int n = 1; n <= 4; ++n) {
      const auto everything = brute_force_all(n, Filter::all);
      std::vector<TomonoidTable> commutative;
      std::vector<TomonoidTable> archimedean;
      for (const TomonoidTable& t : everything) {
        if (is_commutative(t)) commutative.push_back(t);
        if (is_archimedean(t)) archimedean.push_back(t);
      }
      CHECK(brute_force_all(n, Filter::commutative) == commutative);
      CHECK(brute_force_all(n, Filter::archimedean) == archimedean);
    }
  }

  TEST_CASE("oracle cap is enforced and configurable") {
    CHECK(oracle_cap() == 6);
    CHECK_THROWS_AS(brute_force_all(7, Filter::all), std::invalid_argument);
    setenv("TOMO_ORACLE_CAP", "3", 1);
    CHECK(oracle_cap() == 3);
    CHECK_THROWS_AS(brute_force_all(4, Filter::all), std::invalid_argument);
    unsetenv("TOMO_ORACLE_CAP");
    CHECK(oracle_cap() == 6);
  }

  TEST_CASE("generation starts with the forced seeds") {
    const auto records = generate_all(2, Filter::all);
    REQUIRE(records.size() == 2);
    CHECK(records[0].table == TomonoidTable::trivial());
    CHECK(records[0].id == 0);
    CHECK_FALSE(records[0].parent.has_value());
    CHECK(records[1].table == TomonoidTable::two_element());
    CHECK(records[1].parent == std::uint64_t{0});
    CHECK_FALSE(records[1].pair.has_value());
  }

  TEST_CASE("generation matches the oracle level by level") {
    const auto generated = by_size(generate_all(4, Filter::all));
    for (int n = 1; n <= 4; ++n) {
      const auto expected = brute_force_all(n, Filter::all);
      CHECK(generated.at(n) ==
            std::set<TomonoidTable>(expected.begin(), expected.end()));
      CHECK(generated.at(n).size() == expected.size());
    }
  }

  TEST_CASE("generated stream has no duplicates") {
    const auto records = generate_all(5, Filter::all);
    std::set<TomonoidTable> seen;
    for (const GenRecord& rec : records) CHECK(seen.insert(rec.table).second);
  }

  TEST_CASE("filtered generation agrees with filtering afterwards") {
    const auto everything = generate_all(4, Filter::all);
    for (const Filter filter : {Filter::commutative, Filter::archimedean}) {
      std::set<TomonoidTable> expected;
      for (const GenRecord& rec : everything) {
        const bool keep =
            filter == Filter::commutative ? rec.commutative : rec.archimedean;
        if (keep) expected.insert(rec.table);
      }
      std::set<TomonoidTable> got;
      for (const GenRecord& rec : generate_all(4, filter)) got.insert(rec.table);
      CHECK(got == expected);
    }
  }

  TEST_CASE("parent links replay") {
    const auto records = generate_all(4, Filter::all);
    std::map<std::uint64_t, TomonoidTable> table_of;
    for (const GenRecord& rec : records) table_of.emplace(rec.id, rec.table);
    for (const GenRecord& rec : records) {
      if (!rec.parent.has_value()) {
        CHECK(rec.table == TomonoidTable::trivial());
        continue;
      }
      const TomonoidTable& parent = table_of.at(*rec.parent);
      if (rec.table.size() >= 2)
        CHECK(rees_quotient(rec.table, rec.table.chain().atom()) == parent);
      if (rec.pair.has_value()) {
        bool found = false;
        for (const GenRecord& again : coextensions(parent, Filter::all))
          if (again.table == rec.table && *again.pair == *rec.pair &&
              again.choice == rec.choice)
            found = true;
        CHECK(found);
      }
    }
  }

  TEST_CASE("runs are deterministic and job-count independent") {
    const auto a = generate_all(5, Filter::all, 1);
    const auto b = generate_all(5, Filter::all, 1);
    const auto c = generate_all(5, Filter::all, 8);
    REQUIRE(a.size() == b.size());
    REQUIRE(a.size() == c.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(records_equal(a[i], b[i]));
      CHECK(records_equal(a[i], c[i]));
    }
  }

  TEST_CASE("seeded generation explores the cone above the seed") {
    const auto records = generate_all(4, Filter::all, 1, nilpotent3());
    REQUIRE(records.size() == 4);  // the seed plus its three children
    CHECK(records[0].table == nilpotent3());
    CHECK_FALSE(records[0].parent.has_value());
    for (std::size_t i = 1; i < records.size(); ++i) {
      CHECK(records[i].parent == std::uint64_t{0});
      CHECK(rees_quotient(records[i].table, 1) == nilpotent3());
    }
  }

  TEST_CASE("seed must satisfy the filter") {
    CHECK_THROWS_AS(generate_all(4, Filter::archimedean, 1, idempotent3()),
                    std::invalid_argument);
    CHECK_THROWS_AS(generate_all(4, Filter::commutative, 1, noncommutative4()),
                    std::invalid_argument);
    const TomonoidTable junk(Chain(2), {0, 1, 1, 1});
    CHECK_THROWS_AS(generate_all(3, Filter::all, 1, junk), std::invalid_argument);
  }

  TEST_CASE("counts for the forced sizes") {
    const CountReport report = count(3);
    CHECK(report.by_size.at(1) == SizeCounts{1, 1, 1, 1});
    CHECK(report.by_size.at(2) == SizeCounts{1, 1, 1, 1});
    CHECK(report.by_size.at(3) == SizeCounts{2, 2, 1, 1});
  }

  TEST_CASE("count cross-check mode agrees with the oracle") {
    CHECK_NOTHROW(count(4, true));
  }
}
