#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "tomo/io.hpp"
#include "tomo/partition.hpp"

using namespace tomo;
using namespace tomo::testing;

TEST_SUITE("io") {
  TEST_CASE("format and parse are mutually inverse") {
    for (const TomonoidTable& t : oracle_tables_up_to(5)) {
      const std::string doc = format_table(t);
      CHECK(parse_table(doc) == t);
      CHECK(format_table(parse_table(doc)) == doc);
    }
  }

  TEST_CASE("fixed documents") {
    CHECK(format_table(TomonoidTable::trivial()) == "tomonoid v1 n=1\n0\n");
    CHECK(format_table(nilpotent3()) == "tomonoid v1 n=3\n0 0 0\n0 0 1\n0 1 2\n");
    CHECK(parse_table("tomonoid v1 n=1\n0\n") == TomonoidTable::trivial());
  }

  TEST_CASE("comments and blank lines are ignored") {
    const std::string doc =
        "# a comment\n\ntomonoid v1 n=2\n# rows follow\n0 0\n0 1\n\n";
    CHECK(parse_table(doc) == TomonoidTable::two_element());
  }

  TEST_CASE("parse errors carry distinct kinds") {
    auto kind_of = [](const std::string& doc) {
      try {
        parse_table(doc);
      } catch (const ParseError& e) {
        return e.kind();
      }
      throw std::runtime_error("expected a parse failure");
    };
    CHECK(kind_of("monoid v1 n=2\n0 0\n0 1\n") == ParseErrorKind::header);
    CHECK(kind_of("tomonoid v2 n=2\n0 0\n0 1\n") == ParseErrorKind::header);
    CHECK(kind_of("tomonoid v1 n=2\n0 0\n") == ParseErrorKind::dimensions);
    CHECK(kind_of("tomonoid v1 n=2\n0 0 0\n0 1\n") == ParseErrorKind::dimensions);
    CHECK(kind_of("tomonoid v1 n=2\n0 x\n0 1\n") == ParseErrorKind::dimensions);
    CHECK(kind_of("tomonoid v1 n=2\n0 5\n0 1\n") == ParseErrorKind::range);
    CHECK(kind_of("tomonoid v1 n=3\n0 0 0\n0 2 1\n0 1 2\n") == ParseErrorKind::axioms);
  }

  TEST_CASE("axiom rejections include the verifier report") {
    try {
      parse_table("tomonoid v1 n=3\n0 0 0\n0 2 1\n0 1 2\n");
      FAIL("expected rejection");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find("monotonicity") != std::string::npos);
      CHECK(std::string(e.what()).find("(1,1,1,2)") != std::string::npos);
    }
  }

  TEST_CASE("record lines have a stable shape") {
    const GenRecord rec{0,    std::nullopt,          TomonoidTable::trivial(),
                        std::nullopt, std::nullopt, true,
                        true};
    CHECK(record_line(rec) ==
          "{\"n\":1,\"table\":[[0]],\"parent\":null,\"pair\":null,\"choice\":null,"
          "\"flags\":{\"commutative\":true,\"archimedean\":true}}");
    const GenRecord child{7,
                          std::uint64_t{3},
                          nilpotent3(),
                          IdempotentPair{1, 1},
                          CoextensionChoice{{0}},
                          true,
                          true};
    CHECK(record_line(child) ==
          "{\"n\":3,\"table\":[[0,0,0],[0,0,1],[0,1,2]],\"parent\":3,\"pair\":[1,1],"
          "\"choice\":[0],\"flags\":{\"commutative\":true,\"archimedean\":true}}");
  }

  TEST_CASE("record lines reload and verify") {
    for (const GenRecord& rec : generate_all(4, Filter::all)) {
      const GenRecord back = record_from_line(record_line(rec));
      CHECK(back.table == rec.table);
      CHECK(back.parent == rec.parent);
      CHECK(back.pair == rec.pair);
      CHECK(back.choice == rec.choice);
      CHECK(back.commutative == rec.commutative);
      CHECK(back.archimedean == rec.archimedean);
    }
  }

  TEST_CASE("reloading rejects broken records") {
    CHECK_THROWS_AS(record_from_line("not json"), ParseError);
    CHECK_THROWS_AS(record_from_line("{\"n\":2}"), ParseError);
    // axiom-violating table
    CHECK_THROWS_AS(
        record_from_line("{\"n\":2,\"table\":[[0,1],[0,1]],\"parent\":null,"
                         "\"pair\":null,\"choice\":null,\"flags\":{\"commutative\":"
                         "true,\"archimedean\":true}}"),
        ParseError);
    // flags that contradict the table
    CHECK_THROWS_AS(
        record_from_line("{\"n\":1,\"table\":[[0]],\"parent\":null,\"pair\":null,"
                         "\"choice\":null,\"flags\":{\"commutative\":false,"
                         "\"archimedean\":true}}"),
        ParseError);
  }

  TEST_CASE("ascii rendering follows the chain order") {
    CHECK(render(TomonoidTable::trivial(), RenderFormat::ascii) == "1\n");
    CHECK(render(TomonoidTable::two_element(), RenderFormat::ascii) == "0 1\n0 0\n");
    CHECK(render(nilpotent3(), RenderFormat::ascii) == "0 a 1\n0 0 a\n0 0 0\n");
    CHECK(render(idempotent3(), RenderFormat::ascii) == "0 a 1\n0 a a\n0 0 0\n");
  }

  TEST_CASE("symbols cover the small range and fall back to decimal") {
    CHECK(symbol_for(0, 3) == "0");
    CHECK(symbol_for(1, 3) == "a");
    CHECK(symbol_for(2, 3) == "1");
    CHECK(symbol_for(0, 1) == "1");  // the lone element is the identity
    CHECK(symbol_for(26, 28) == "z");
    CHECK(symbol_for(26, 29) == "26");
    CHECK(symbol_for(0, 29) == "0");
  }

  TEST_CASE("labels share a symbol exactly within a level class") {
    for (const TomonoidTable& t : oracle_tables_up_to(4)) {
      const int n = t.size();
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c)
            for (int d = 0; d < n; ++d)
              CHECK((symbol_for(t.prod(a, b), n) == symbol_for(t.prod(c, d), n)) ==
                    (t.prod(a, b) == t.prod(c, d)));
    }
  }

  TEST_CASE("svg rendering is deterministic and outlines class boundaries") {
    const std::string svg = render(nilpotent3(), RenderFormat::svg);
    CHECK(svg == render(nilpotent3(), RenderFormat::svg));
    CHECK(svg.rfind("<svg", 0) == 0);
    std::size_t labels = 0;
    for (std::size_t pos = svg.find("<text"); pos != std::string::npos;
         pos = svg.find("<text", pos + 1))
      ++labels;
    CHECK(labels == 9);
    std::size_t boundaries = 0;
    for (std::size_t pos = svg.find("class=\"boundary\""); pos != std::string::npos;
         pos = svg.find("class=\"boundary\"", pos + 1))
      ++boundaries;
    CHECK(boundaries == 6);
  }

  TEST_CASE("count reports are aligned tables") {
    CountReport report;
    report.by_size[1] = {1, 1, 1, 1};
    report.by_size[2] = {1, 1, 1, 1};
    report.by_size[3] = {2, 2, 1, 1};
    CHECK(format_count_report(report) ==
          "size  total  commutative  archimedean  commutative-archimedean\n"
          "   1      1            1            1                        1\n"
          "   2      1            1            1                        1\n"
          "   3      2            2            1                        1\n");
  }
}
