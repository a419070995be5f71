#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "tomo/io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFinding = 1;  // axiom violations, obstructions
constexpr int kExitUsage = 2;

struct Options {
  bool quiet = false;
  std::string file;
  std::string out;
  int q = 0;
  int el = -1;
  int er = -1;
  bool all_pairs = false;
  bool commutative = false;
  bool archimedean = false;
  bool count_only = false;
  bool dot = false;
  int max_size = 0;
  int size = 0;
  int jobs = 1;
  std::string seed_file;
  std::string format = "ascii";
};

void diagnose(const Options& opt, const std::string& message) {
  if (!opt.quiet) std::cerr << message << "\n";
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw std::invalid_argument("cannot write file: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

tomo::Filter filter_from_flags(const Options& opt) {
  if (opt.commutative && opt.archimedean)
    throw std::invalid_argument("choose at most one of --commutative and --archimedean");
  if (opt.commutative) return tomo::Filter::commutative;
  if (opt.archimedean) return tomo::Filter::archimedean;
  return tomo::Filter::all;
}

std::string cell_list(const std::vector<tomo::Cell>& cells) {
  std::ostringstream out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out << ' ';
    out << '(' << cells[i].row << ',' << cells[i].col << ')';
  }
  return out.str();
}

int run_verify(const Options& opt) {
  const tomo::TomonoidTable t = tomo::read_table_structural(slurp(opt.file));
  const tomo::VerifyReport report = tomo::verify_table(t);
  std::cout << report.summary();
  return report.ok() ? kExitOk : kExitFinding;
}

int run_quotient(const Options& opt) {
  const tomo::TomonoidTable t = tomo::parse_table(slurp(opt.file));
  const tomo::TomonoidTable quotient = tomo::rees_quotient(t, opt.q);
  Output out(opt.out);
  out.stream() << tomo::format_table(quotient);
  return kExitOk;
}

int run_ramify(const Options& opt) {
  const tomo::TomonoidTable t = tomo::parse_table(slurp(opt.file));
  const tomo::Ramification ram =
      tomo::ramify(t, {opt.el, opt.er}, opt.commutative, opt.archimedean);
  Output out(opt.out);
  if (opt.dot) {
    if (ram.obstructed) {
      diagnose(opt, "obstructed ramification has no class DAG");
      return kExitFinding;
    }
    const tomo::ClassDag dag = tomo::class_poset(ram);
    out.stream() << "digraph classes {\n";
    for (int node = 0; node < dag.node_count(); ++node) {
      out.stream() << "  n" << node << " [label=\"node " << node;
      if (node == dag.zero_node) out.stream() << " (bottom)";
      if (node == dag.atom_node) out.stream() << " (atom)";
      out.stream() << "\"];\n";
    }
    for (int node = 0; node < dag.node_count(); ++node)
      for (int succ : dag.covers[node])
        out.stream() << "  n" << node << " -> n" << succ << ";\n";
    out.stream() << "}\n";
    return kExitOk;
  }
  out.stream() << "pair: (" << opt.el << "," << opt.er << ")\n";
  for (int id : ram.cosupport_class_ids()) {
    out.stream() << "class " << id;
    if (id == ram.zero_class && id == ram.atom_class)
      out.stream() << " [bottom atom]";
    else if (id == ram.zero_class)
      out.stream() << " [bottom]";
    else if (id == ram.atom_class)
      out.stream() << " [atom]";
    out.stream() << " cells: " << cell_list(ram.class_cells(id)) << "\n";
  }
  out.stream() << "obstructed: " << (ram.obstructed ? "true" : "false") << "\n";
  if (ram.obstructed) {
    diagnose(opt, "no one-element coextension exists for this pair: the new bottom and atom classes collide");
    return kExitFinding;
  }
  return kExitOk;
}

int run_extend(const Options& opt) {
  const bool have_pair = opt.el >= 0 || opt.er >= 0;
  if (have_pair && (opt.el < 0 || opt.er < 0))
    throw std::invalid_argument("--el and --er must be given together");
  if (have_pair && opt.all_pairs)
    throw std::invalid_argument("choose either an explicit pair or --all-pairs");
  const tomo::TomonoidTable t = tomo::parse_table(slurp(opt.file));
  Output out(opt.out);
  if (!have_pair) {
    const tomo::Filter filter = filter_from_flags(opt);
    for (const tomo::GenRecord& rec : tomo::coextensions(t, filter))
      out.stream() << tomo::record_line(rec) << "\n";
    return kExitOk;
  }
  const tomo::Ramification ram =
      tomo::ramify(t, {opt.el, opt.er}, opt.commutative, opt.archimedean);
  if (ram.obstructed) {
    diagnose(opt, "no one-element coextension exists for pair (" +
                      std::to_string(opt.el) + "," + std::to_string(opt.er) +
                      "): the new bottom and atom classes collide");
    return kExitFinding;
  }
  const tomo::ClassDag dag = tomo::class_poset(ram);
  for (const tomo::CoextensionChoice& choice : tomo::enumerate_choices(dag)) {
    tomo::TomonoidTable table = tomo::materialise(t, ram, dag, choice);
    const bool commutative = tomo::is_commutative(table);
    const bool archimedean = tomo::is_archimedean(table);
    const tomo::GenRecord rec{0,          std::nullopt,
                              table,      tomo::IdempotentPair{opt.el, opt.er},
                              choice,     commutative,
                              archimedean};
    out.stream() << tomo::record_line(rec) << "\n";
  }
  return kExitOk;
}

int run_generate(const Options& opt) {
  const tomo::Filter filter = filter_from_flags(opt);
  std::optional<tomo::TomonoidTable> seed;
  if (!opt.seed_file.empty()) seed = tomo::parse_table(slurp(opt.seed_file));
  Output out(opt.out);
  if (opt.count_only) {
    tomo::CountReport report;
    for (int k = seed ? seed->size() : 1; k <= opt.max_size; ++k) report.by_size[k];
    tomo::generate(
        opt.max_size, filter,
        [&](const tomo::GenRecord& rec) {
          tomo::SizeCounts& row = report.by_size[rec.table.size()];
          ++row.total;
          if (rec.commutative) ++row.commutative;
          if (rec.archimedean) ++row.archimedean;
          if (rec.commutative && rec.archimedean) ++row.commutative_archimedean;
        },
        opt.jobs, seed);
    out.stream() << tomo::format_count_report(report);
    return kExitOk;
  }
  std::uint64_t emitted = 0;
  tomo::generate(
      opt.max_size, filter,
      [&](const tomo::GenRecord& rec) {
        out.stream() << tomo::record_line(rec) << "\n";
        ++emitted;
      },
      opt.jobs, seed);
  diagnose(opt, "generated " + std::to_string(emitted) + " records");
  return kExitOk;
}

int run_oracle(const Options& opt) {
  const tomo::Filter filter = filter_from_flags(opt);
  Output out(opt.out);
  if (opt.count_only) {
    tomo::SizeCounts row;
    tomo::brute_force(opt.size, filter, [&](const tomo::TomonoidTable& t) {
      ++row.total;
      const bool c = tomo::is_commutative(t);
      const bool a = tomo::is_archimedean(t);
      if (c) ++row.commutative;
      if (a) ++row.archimedean;
      if (c && a) ++row.commutative_archimedean;
    });
    out.stream() << "size " << opt.size << " total " << row.total << " commutative "
                 << row.commutative << " archimedean " << row.archimedean
                 << " commutative-archimedean " << row.commutative_archimedean << "\n";
    return kExitOk;
  }
  tomo::brute_force(opt.size, filter, [&](const tomo::TomonoidTable& t) {
    const tomo::GenRecord rec{0,    std::nullopt,           t,
                              std::nullopt, std::nullopt,
                              tomo::is_commutative(t), tomo::is_archimedean(t)};
    out.stream() << tomo::record_line(rec) << "\n";
  });
  return kExitOk;
}

int run_render(const Options& opt) {
  const tomo::TomonoidTable t = tomo::parse_table(slurp(opt.file));
  tomo::RenderFormat format;
  if (opt.format == "ascii")
    format = tomo::RenderFormat::ascii;
  else if (opt.format == "svg")
    format = tomo::RenderFormat::svg;
  else
    throw std::invalid_argument("unknown render format: " + opt.format);
  Output out(opt.out);
  out.stream() << tomo::render(t, format);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generate, verify, and render finite negative totally ordered monoids"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--quiet", opt.quiet, "suppress diagnostics on stderr");

  CLI::App* verify = app.add_subcommand("verify", "check a table against the axioms");
  verify->add_option("file", opt.file, "table file")->required();

  CLI::App* quotient = app.add_subcommand("quotient", "Rees quotient by an element");
  quotient->add_option("file", opt.file, "table file")->required();
  quotient->add_option("--q", opt.q, "element to quotient by")->required();
  quotient->add_option("--out", opt.out, "output path");

  CLI::App* ramify = app.add_subcommand("ramify", "list the coextension classes for an idempotent pair");
  ramify->add_option("file", opt.file, "table file")->required();
  ramify->add_option("--el", opt.el, "left idempotent")->required();
  ramify->add_option("--er", opt.er, "right idempotent")->required();
  ramify->add_flag("--commutative", opt.commutative, "enable the symmetry rule");
  ramify->add_flag("--archimedean", opt.archimedean, "Archimedean mode");
  ramify->add_flag("--dot", opt.dot, "emit the class DAG as DOT");
  ramify->add_option("--out", opt.out, "output path");

  CLI::App* extend = app.add_subcommand("extend", "emit one-element coextensions");
  extend->add_option("file", opt.file, "table file")->required();
  extend->add_option("--el", opt.el, "left idempotent");
  extend->add_option("--er", opt.er, "right idempotent");
  extend->add_flag("--all-pairs", opt.all_pairs, "walk every ordered idempotent pair (default)");
  extend->add_flag("--commutative", opt.commutative, "commutative engine / filter");
  extend->add_flag("--archimedean", opt.archimedean, "Archimedean engine / filter");
  extend->add_option("--out", opt.out, "output path");

  CLI::App* generate = app.add_subcommand("generate", "breadth-first generation up to a size");
  generate->add_option("--max-size", opt.max_size, "largest size to emit")->required();
  generate->add_flag("--commutative", opt.commutative, "restrict to commutative tables");
  generate->add_flag("--archimedean", opt.archimedean, "restrict to Archimedean tables");
  generate->add_flag("--count-only", opt.count_only, "emit per-size counts instead of records");
  generate->add_option("--jobs", opt.jobs, "worker threads");
  generate->add_option("--seed-file", opt.seed_file, "start from this table instead of the trivial one");
  generate->add_option("--out", opt.out, "output path");

  CLI::App* oracle = app.add_subcommand("oracle", "exhaustive search at one size");
  oracle->add_option("--size", opt.size, "table size")->required();
  oracle->add_flag("--commutative", opt.commutative, "restrict to commutative tables");
  oracle->add_flag("--archimedean", opt.archimedean, "restrict to Archimedean tables");
  oracle->add_flag("--count-only", opt.count_only, "emit counts instead of records");
  oracle->add_option("--out", opt.out, "output path");

  CLI::App* render = app.add_subcommand("render", "draw the level-class grid");
  render->add_option("file", opt.file, "table file")->required();
  render->add_option("--format", opt.format, "ascii or svg")->required();
  render->add_option("--out", opt.out, "output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (verify->parsed()) return run_verify(opt);
    if (quotient->parsed()) return run_quotient(opt);
    if (ramify->parsed()) return run_ramify(opt);
    if (extend->parsed()) return run_extend(opt);
    if (generate->parsed()) return run_generate(opt);
    if (oracle->parsed()) return run_oracle(opt);
    if (render->parsed()) return run_render(opt);
  } catch (const tomo::ParseError& e) {
    std::cerr << e.what() << "\n";
    return e.kind() == tomo::ParseErrorKind::axioms ? kExitFinding : kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
