#include "tomo/io.hpp"

#include <algorithm>
#include <cctype>
#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace tomo {

namespace {

bool is_comment_or_blank(const std::string& line) {
  for (char ch : line) {
    if (ch == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

TomonoidTable read_table_structural(const std::string& doc) {
  std::istringstream in(doc);
  std::string line;
  int n = -1;
  bool have_header = false;
  std::vector<std::vector<int>> rows;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (is_comment_or_blank(line)) continue;
    if (!have_header) {
      std::istringstream header(line);
      std::string word, version, size_field;
      header >> word >> version >> size_field;
      if (word != "tomonoid" || version != "v1" || size_field.rfind("n=", 0) != 0)
        throw ParseError(ParseErrorKind::header,
                         "expected a `tomonoid v1 n=<size>` header, got: " + line);
      try {
        n = std::stoi(size_field.substr(2));
      } catch (const std::exception&) {
        throw ParseError(ParseErrorKind::header, "unreadable size in header: " + line);
      }
      if (n < 1)
        throw ParseError(ParseErrorKind::header, "table size must be positive");
      std::string extra;
      if (header >> extra)
        throw ParseError(ParseErrorKind::header, "trailing tokens after header");
      have_header = true;
      continue;
    }
    std::istringstream cells(line);
    std::vector<int> row;
    int value = 0;
    while (cells >> value) row.push_back(value);
    if (!cells.eof())
      throw ParseError(ParseErrorKind::dimensions,
                       "row " + std::to_string(rows.size()) + " contains a non-integer token");
    rows.push_back(std::move(row));
  }
  if (!have_header)
    throw ParseError(ParseErrorKind::header, "missing `tomonoid v1 n=<size>` header");
  if (static_cast<int>(rows.size()) != n)
    throw ParseError(ParseErrorKind::dimensions,
                     "expected " + std::to_string(n) + " rows, got " +
                         std::to_string(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      throw ParseError(ParseErrorKind::dimensions,
                       "row " + std::to_string(i) + " has " +
                           std::to_string(rows[i].size()) + " entries, expected " +
                           std::to_string(n));
    for (int value : rows[i])
      if (value < 0 || value >= n)
        throw ParseError(ParseErrorKind::range,
                         "entry " + std::to_string(value) + " in row " +
                             std::to_string(i) + " is out of range");
  }
  return TomonoidTable::from_rows(rows);
}

TomonoidTable parse_table(const std::string& doc) {
  TomonoidTable t = read_table_structural(doc);
  const VerifyReport report = verify_table(t);
  if (!report.ok())
    throw ParseError(ParseErrorKind::axioms,
                     "table violates the tomonoid axioms:\n" + report.summary());
  return t;
}

std::string format_table(const TomonoidTable& t) {
  std::ostringstream out;
  const int n = t.size();
  out << "tomonoid v1 n=" << n << "\n";
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (b) out << ' ';
      out << t.prod(a, b);
    }
    out << "\n";
  }
  return out.str();
}

std::string record_line(const GenRecord& rec) {
  nlohmann::ordered_json j;
  j["n"] = rec.table.size();
  j["table"] = rec.table.rows();
  if (rec.parent)
    j["parent"] = *rec.parent;
  else
    j["parent"] = nullptr;
  if (rec.pair)
    j["pair"] = {rec.pair->left, rec.pair->right};
  else
    j["pair"] = nullptr;
  if (rec.choice)
    j["choice"] = rec.choice->downset;
  else
    j["choice"] = nullptr;
  j["flags"] = {{"commutative", rec.commutative}, {"archimedean", rec.archimedean}};
  return j.dump();
}

GenRecord record_from_line(const std::string& line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(ParseErrorKind::record,
                     std::string("record line is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("table") ||
      !j.contains("flags"))
    throw ParseError(ParseErrorKind::record, "record line misses required fields");
  std::vector<std::vector<int>> rows;
  try {
    rows = j.at("table").get<std::vector<std::vector<int>>>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError(ParseErrorKind::record, "record table is not an integer matrix");
  }
  if (static_cast<int>(rows.size()) != j.at("n").get<int>())
    throw ParseError(ParseErrorKind::dimensions, "record size disagrees with its table");
  for (const auto& row : rows) {
    if (row.size() != rows.size())
      throw ParseError(ParseErrorKind::dimensions, "record table is not square");
    for (int value : row)
      if (value < 0 || value >= static_cast<int>(rows.size()))
        throw ParseError(ParseErrorKind::range, "record table entry out of range");
  }
  TomonoidTable table = TomonoidTable::from_rows(rows);
  const VerifyReport report = verify_table(table);
  if (!report.ok())
    throw ParseError(ParseErrorKind::axioms,
                     "record table violates the tomonoid axioms:\n" + report.summary());

  GenRecord rec{0, std::nullopt, std::move(table), std::nullopt, std::nullopt,
                false, false};
  if (j.contains("parent") && !j.at("parent").is_null())
    rec.parent = j.at("parent").get<std::uint64_t>();
  if (j.contains("pair") && !j.at("pair").is_null()) {
    const auto pair = j.at("pair").get<std::vector<int>>();
    if (pair.size() != 2)
      throw ParseError(ParseErrorKind::record, "record pair must have two entries");
    rec.pair = IdempotentPair{pair[0], pair[1]};
  }
  if (j.contains("choice") && !j.at("choice").is_null())
    rec.choice = CoextensionChoice{j.at("choice").get<std::vector<int>>()};
  rec.commutative = j.at("flags").at("commutative").get<bool>();
  rec.archimedean = j.at("flags").at("archimedean").get<bool>();
  if (rec.commutative != is_commutative(rec.table) ||
      rec.archimedean != is_archimedean(rec.table))
    throw ParseError(ParseErrorKind::record, "record flags disagree with its table");
  return rec;
}

std::string symbol_for(int value, int n) {
  if (n <= 28) {
    if (value == n - 1) return "1";
    if (value == 0) return "0";
    return std::string(1, static_cast<char>('a' + value - 1));
  }
  return std::to_string(value);
}

namespace {

std::string render_ascii(const TomonoidTable& t) {
  const int n = t.size();
  std::size_t width = 1;
  for (int v = 0; v < n; ++v) width = std::max(width, symbol_for(v, n).size());
  std::ostringstream out;
  for (int a = n - 1; a >= 0; --a) {
    for (int b = 0; b < n; ++b) {
      if (b) out << ' ';
      const std::string sym = symbol_for(t.prod(a, b), n);
      out << std::setw(static_cast<int>(width)) << sym;
    }
    out << "\n";
  }
  return out.str();
}

std::string render_svg(const TomonoidTable& t) {
  const int n = t.size();
  const int cell = 28;
  const int margin = 2;
  const int span = n * cell;
  const int total = span + 2 * margin;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << total
      << "\" height=\"" << total << "\" viewBox=\"0 0 " << total << " " << total
      << "\">\n";
  out << "<rect x=\"" << margin << "\" y=\"" << margin << "\" width=\"" << span
      << "\" height=\"" << span << "\" fill=\"white\" stroke=\"none\"/>\n";
  for (int i = 1; i < n; ++i) {
    const int offset = margin + i * cell;
    out << "<line x1=\"" << offset << "\" y1=\"" << margin << "\" x2=\"" << offset
        << "\" y2=\"" << margin + span << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
    out << "<line x1=\"" << margin << "\" y1=\"" << offset << "\" x2=\""
        << margin + span << "\" y2=\"" << offset
        << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
  }
  // row a sits at height a from the bottom
  auto cell_x = [&](int b) { return margin + b * cell; };
  auto cell_y = [&](int a) { return margin + (n - 1 - a) * cell; };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      out << "<text x=\"" << cell_x(b) + cell / 2 << "\" y=\"" << cell_y(a) + cell / 2 + 5
          << "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"14\">"
          << symbol_for(t.prod(a, b), n) << "</text>\n";
  // outline borders between distinct level classes
  for (int a = 0; a < n; ++a)
    for (int b = 0; b + 1 < n; ++b)
      if (t.prod(a, b) != t.prod(a, b + 1))
        out << "<line class=\"boundary\" x1=\"" << cell_x(b + 1) << "\" y1=\""
            << cell_y(a) << "\" x2=\"" << cell_x(b + 1) << "\" y2=\""
            << cell_y(a) + cell << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
  for (int a = 0; a + 1 < n; ++a)
    for (int b = 0; b < n; ++b)
      if (t.prod(a, b) != t.prod(a + 1, b))
        out << "<line class=\"boundary\" x1=\"" << cell_x(b) << "\" y1=\"" << cell_y(a)
            << "\" x2=\"" << cell_x(b) + cell << "\" y2=\"" << cell_y(a)
            << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
  out << "<rect x=\"" << margin << "\" y=\"" << margin << "\" width=\"" << span
      << "\" height=\"" << span << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace

std::string render(const TomonoidTable& t, RenderFormat format) {
  return format == RenderFormat::ascii ? render_ascii(t) : render_svg(t);
}

std::string format_count_report(const CountReport& report) {
  const std::vector<std::string> headers = {"size", "total", "commutative",
                                            "archimedean", "commutative-archimedean"};
  std::vector<std::size_t> widths;
  for (const auto& h : headers) widths.push_back(h.size());
  auto digits = [](std::uint64_t v) {
    return std::to_string(v).size();
  };
  for (const auto& [size, row] : report.by_size) {
    widths[0] = std::max(widths[0], digits(size));
    widths[1] = std::max(widths[1], digits(row.total));
    widths[2] = std::max(widths[2], digits(row.commutative));
    widths[3] = std::max(widths[3], digits(row.archimedean));
    widths[4] = std::max(widths[4], digits(row.commutative_archimedean));
  }
  std::ostringstream out;
  for (std::size_t i = 0; i < headers.size(); ++i) {
    if (i) out << "  ";
    out << std::setw(static_cast<int>(widths[i])) << headers[i];
  }
  out << "\n";
  for (const auto& [size, row] : report.by_size) {
    out << std::setw(static_cast<int>(widths[0])) << size << "  "
        << std::setw(static_cast<int>(widths[1])) << row.total << "  "
        << std::setw(static_cast<int>(widths[2])) << row.commutative << "  "
        << std::setw(static_cast<int>(widths[3])) << row.archimedean << "  "
        << std::setw(static_cast<int>(widths[4])) << row.commutative_archimedean
        << "\n";
  }
  return out.str();
}

}  // namespace tomo
