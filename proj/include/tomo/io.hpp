#pragma once

#include <stdexcept>
#include <string>

#include "tomo/generator.hpp"

namespace tomo {

enum class ParseErrorKind { header, dimensions, range, axioms, record };

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  ParseErrorKind kind() const noexcept { return kind_; }

 private:
  ParseErrorKind kind_;
};

// Table documents: a `tomonoid v1 n=<size>` header followed by n rows of n
// whitespace-separated entries, bottom row first. Lines starting with `#`
// are comments. parse_table additionally runs the verifier and rejects
// axiom-violating tables with the report attached;
// read_table_structural stops at shape and range checks.
TomonoidTable read_table_structural(const std::string& doc);
TomonoidTable parse_table(const std::string& doc);
std::string format_table(const TomonoidTable& t);

// One self-contained JSON object per generated record. Reloading verifies
// the table and cross-checks the stored flags.
std::string record_line(const GenRecord& rec);
GenRecord record_from_line(const std::string& line);

enum class RenderFormat { ascii, svg };

// Square grid in chain order, rows bottom-to-top, each cell labelled with
// its product symbol, so level classes appear as constant-symbol regions.
// The SVG variant additionally outlines class boundaries.
std::string render(const TomonoidTable& t, RenderFormat format);

// `0`, `a`..`z`, `1` for sizes up to 28, decimal indices beyond that.
std::string symbol_for(int value, int n);

std::string format_count_report(const CountReport& report);

}  // namespace tomo
