#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"

using namespace tomo;
using namespace tomo::testing;

namespace {

bool has_kind(const VerifyReport& report, ViolationKind kind) {
  return std::any_of(report.violations.begin(), report.violations.end(),
                     [&](const Violation& v) { return v.kind == kind; });
}

// left-fixed-point criterion, stated over columns instead of rows
bool archimedean_by_columns(const TomonoidTable& t) {
  const int n = t.size();
  for (int a = 1; a < n; ++a)
    for (int b = 0; b + 1 < n; ++b)
      if (t.prod(a, b) == a) return false;
  return true;
}

bool archimedean_by_nilpotency(const TomonoidTable& t) {
  const int n = t.size();
  for (int a = 0; a + 1 < n; ++a) {
    int power = a;
    for (int i = 0; i < n + 1 && power != 0; ++i) power = t.prod(power, a);
    if (power != 0) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("tables") {
  TEST_CASE("trivial table is valid") {
    CHECK(verify_table(TomonoidTable::trivial()).ok());
  }

  TEST_CASE("nilpotent three-element table is valid") {
    CHECK(verify_table(nilpotent3()).ok());
    CHECK(verify_table(idempotent3()).ok());
    CHECK(verify_table(noncommutative4()).ok());
  }

  TEST_CASE("monotonicity violation carries a witness") {
    const TomonoidTable bad =
        TomonoidTable::from_rows({{0, 0, 0}, {0, 2, 1}, {0, 1, 2}});
    const VerifyReport report = verify_table(bad);
    CHECK_FALSE(report.ok());
    CHECK(has_kind(report, ViolationKind::monotonicity));
    bool found = false;
    for (const Violation& v : report.violations)
      if (v.kind == ViolationKind::monotonicity &&
          v.witness == std::vector<int>{1, 1, 1, 2})
        found = true;
    CHECK(found);
  }

  TEST_CASE("negativity is checked in its own right") {
    const TomonoidTable bad = TomonoidTable::from_rows({{1, 0}, {0, 1}});
    CHECK(has_kind(verify_table(bad), ViolationKind::negativity));
  }

  TEST_CASE("malformed dimensions are a structural error, not a violation") {
    CHECK_THROWS_AS(TomonoidTable(Chain(2), {0, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(TomonoidTable(Chain(2), {0, 0, 0, 7}), std::invalid_argument);
    CHECK_THROWS_AS(TomonoidTable::from_rows({{0, 0}, {0}}), std::invalid_argument);
  }

  TEST_CASE("commutativity") {
    CHECK(is_commutative(TomonoidTable::trivial()));
    CHECK(is_commutative(nilpotent3()));
    CHECK_FALSE(is_commutative(noncommutative4()));
    bool oracle_found_noncommutative = false;
    for (const TomonoidTable& t : brute_force_all(4, Filter::all))
      if (!is_commutative(t)) oracle_found_noncommutative = true;
    CHECK(oracle_found_noncommutative);
  }

  TEST_CASE("archimedean predicate on the small examples") {
    CHECK(is_archimedean(TomonoidTable::two_element()));
    CHECK(is_archimedean(nilpotent3()));
    CHECK_FALSE(is_archimedean(idempotent3()));
  }

  TEST_CASE("the three archimedean criteria agree") {
    for (const TomonoidTable& t : oracle_tables_up_to(5)) {
      CHECK(is_archimedean(t) == archimedean_by_columns(t));
      CHECK(is_archimedean(t) == archimedean_by_nilpotency(t));
    }
  }

  TEST_CASE("idempotents") {
    CHECK(idempotents(TomonoidTable::two_element()) == std::vector<int>{0, 1});
    CHECK(idempotents(nilpotent3()) == std::vector<int>{0, 2});
    CHECK(idempotents(idempotent3()) == std::vector<int>{0, 1, 2});
  }

  TEST_CASE("atom-characterising idempotents") {
    CHECK(atom_char_idempotents(nilpotent3()) == IdempotentPair{2, 2});
    CHECK(atom_char_idempotents(idempotent3()) == IdempotentPair{1, 1});
    CHECK(atom_char_idempotents(TomonoidTable::two_element()) == IdempotentPair{1, 1});
    CHECK_THROWS_AS(atom_char_idempotents(TomonoidTable::trivial()), std::domain_error);
  }

  TEST_CASE("atom-characterising elements are idempotents of the table") {
    for (const TomonoidTable& t : oracle_tables_up_to(4)) {
      if (t.size() < 2) continue;
      const IdempotentPair pair = atom_char_idempotents(t);
      const std::vector<int> idem = idempotents(t);
      CHECK(std::binary_search(idem.begin(), idem.end(), pair.left));
      CHECK(std::binary_search(idem.begin(), idem.end(), pair.right));
    }
  }

  TEST_CASE("rees quotient collapses an initial segment") {
    CHECK(rees_quotient(nilpotent3(), 1) == TomonoidTable::two_element());
    CHECK(rees_quotient(nilpotent3(), 0) == nilpotent3());
    CHECK(rees_quotient(TomonoidTable::two_element(), 1) == TomonoidTable::trivial());
    CHECK_THROWS_AS(rees_quotient(nilpotent3(), 2), std::invalid_argument);
    CHECK_THROWS_AS(rees_quotient(TomonoidTable::trivial(), 0), std::invalid_argument);
  }

  TEST_CASE("quotient chain reaches the trivial table in n-1 steps") {
    for (const TomonoidTable& start : brute_force_all(5, Filter::all)) {
      TomonoidTable t = start;
      int steps = 0;
      while (t.size() > 1) {
        t = rees_quotient(t, t.chain().atom());
        CHECK(verify_table(t).ok());
        ++steps;
      }
      CHECK(steps == start.size() - 1);
      CHECK(t == TomonoidTable::trivial());
    }
  }

  TEST_CASE("quotienting twice by the bottom changes nothing") {
    for (const TomonoidTable& t : oracle_tables_up_to(4)) {
      for (int q = 0; q + 1 < t.size(); ++q) {
        const TomonoidTable once = rees_quotient(t, q);
        if (once.size() >= 2) CHECK(rees_quotient(once, 0) == once);
      }
    }
  }

  TEST_CASE("negativity holds for every generated table") {
    for (const TomonoidTable& t : oracle_tables_up_to(5))
      for (int a = 0; a < t.size(); ++a)
        for (int b = 0; b < t.size(); ++b)
          CHECK(t.prod(a, b) <= std::min(a, b));
  }
}
