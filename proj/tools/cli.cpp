#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "syncalg/closure.hpp"
#include "syncalg/error.hpp"
#include "syncalg/format.hpp"
#include "syncalg/matrix.hpp"
#include "syncalg/oracle.hpp"

namespace syncalg::cli {

namespace {

constexpr std::size_t kMaxAtomEvents = 32;
constexpr std::size_t kMaxCountEvents = 1000;

enum class OutputFormat { text, interchange };

struct Options {
  std::string spec;
  std::vector<std::string> paths;
  std::vector<std::string> names;
  std::size_t n = 0;
  NeqMode neq = NeqMode::keep;
  OutputFormat format = OutputFormat::text;
  bool verify = false;
};

/// A spec file loaded as labels plus oriented declarations.
struct Loaded {
  std::vector<std::string> labels;
  std::vector<Entry> entries;

  SyncMatrix matrix(NeqMode mode = NeqMode::keep) const {
    return SyncMatrix::from_entries(labels, apply_neq_mode(entries, mode));
  }
};

class InputError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

Loaded load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream text;
  text << in.rdbuf();
  try {
    SyncSpec spec = parse_spec(text.str());
    if (spec.events.empty()) throw InputError(path + ": no events declared");
    auto entries = spec_entries(spec);
    return {std::move(spec.events), std::move(entries)};
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

void print_grid(std::ostream& out, const std::vector<std::string>& labels,
                const RelationTable& t) {
  std::size_t width = 5;
  for (const auto& l : labels) width = std::max(width, l.size());
  out << std::setw(static_cast<int>(width)) << "";
  for (const auto& l : labels) out << ' ' << std::setw(static_cast<int>(width)) << l;
  out << '\n';
  for (std::size_t i = 0; i < labels.size(); ++i) {
    out << std::setw(static_cast<int>(width)) << std::left << labels[i] << std::right;
    for (std::size_t j = 0; j < labels.size(); ++j) {
      out << ' ' << std::setw(static_cast<int>(width)) << to_symbol(t.at(i, j));
    }
    out << '\n';
  }
}

void print_bounds(std::ostream& out, const SyncMatrix& m, const BoundVector& bounds) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    out << "  " << m.labels()[i] << ": " << describe(bounds[i]) << " ["
        << to_symbol(bounds[i].value) << "]\n";
  }
}

void print_report(std::ostream& out, const ClosureReport& r) {
  const auto& labels = r.closed.labels();
  out << "closed matrix:\n";
  print_grid(out, labels, r.closed.table());
  out << "\nbounds:\n";
  print_bounds(out, r.closed, r.bounds);
  out << "\nimplied:\n";
  if (r.implied.empty()) out << "  (none)\n";
  for (const auto& e : r.implied) {
    out << "  " << labels[e.i] << ' ' << to_symbol(e.after) << ' ' << labels[e.j]
        << "  (was " << to_symbol(e.before) << ")\n";
  }
  out << "\ndeadlock: " << (r.deadlocked ? "yes" : "no") << '\n';
  for (const auto& [i, j] : r.deadlock_pairs) {
    out << "  " << labels[i] << ' ' << labels[j] << '\n';
  }
  out << "iterations: " << r.iterations << '\n';
}

// Checks the closure against exhaustive enumeration. Returns an error
// message on disagreement.
std::string verify(const SyncMatrix& declared, const ClosureReport& r,
                   const oracle::MinimalNetwork& truth, std::ostream& out) {
  std::ostringstream problems;
  const auto& labels = declared.labels();
  for (std::size_t i = 0; i < declared.size(); ++i) {
    for (std::size_t j = 0; j < declared.size(); ++j) {
      if (i == j || truth.cells.at(i, j).subset_of(r.closed.at(i, j))) continue;
      problems << "closure removed a realizable relation at (" << labels[i] << ", "
               << labels[j] << "): oracle " << to_symbol(truth.cells.at(i, j))
               << ", closed " << to_symbol(r.closed.at(i, j)) << '\n';
    }
  }
  if (r.deadlocked == truth.satisfiable) {
    problems << "deadlock flag disagrees with the oracle (oracle satisfiable: "
             << (truth.satisfiable ? "yes" : "no") << ")\n";
  }
  if (problems.str().empty()) {
    out << "verify: ok (" << truth.solutions << " satisfying assignments over domain "
        << declared.size() + 1 << ")\n";
  }
  return problems.str();
}

int cmd_close(const Options& o, std::ostream& out, std::ostream& err) {
  const Loaded spec = load(o.spec);
  const SyncMatrix declared = spec.matrix(o.neq);
  const ClosureReport r = close(declared);
  std::optional<oracle::MinimalNetwork> truth;
  if (o.verify) truth = oracle::minimal(declared, declared.size() + 1);
  if (o.format == OutputFormat::interchange) {
    out << report_to_interchange(r);
  } else {
    print_report(out, r);
  }
  if (truth) {
    const std::string problems = verify(declared, r, *truth, out);
    if (!problems.empty()) {
      err << "verify failed:\n" << problems;
      return kError;
    }
  }
  return r.deadlocked ? kDeadlock : kOk;
}

int cmd_deadlock(const Options& o, std::ostream& out) {
  const Loaded spec = load(o.spec);
  const ClosureReport r = close(spec.matrix(o.neq));
  out << (r.deadlocked ? "yes" : "no") << '\n';
  for (const auto& [i, j] : r.deadlock_pairs) {
    out << "  " << spec.labels[i] << ' ' << spec.labels[j] << '\n';
  }
  return r.deadlocked ? kDeadlock : kOk;
}

int cmd_bounds(const Options& o, std::ostream& out) {
  const Loaded spec = load(o.spec);
  const ClosureReport r = close(spec.matrix());
  out << "legend: bounded above / below / above and below / unbounded;"
         " (closed) includes the boundary, (open) excludes it\n";
  print_bounds(out, r.closed, r.bounds);
  return kOk;
}

int cmd_equiv(const Options& o, std::ostream& out) {
  const Loaded a = load(o.paths[0]);
  const Loaded b = load(o.paths[1]);
  auto sorted = [](std::vector<std::string> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  if (sorted(a.labels) != sorted(b.labels)) {
    throw InputError("the two specs declare different event sets");
  }
  const bool same = equivalent(a.matrix(o.neq), b.matrix(o.neq));
  out << (same ? "equivalent" : "not equivalent") << '\n';
  return same ? kOk : kNotEquivalent;
}

int cmd_swap(const Options& o, std::ostream& out) {
  const Loaded spec = load(o.spec);
  const SyncMatrix m = spec.matrix();
  out << matrix_to_interchange(eventswap(m, m.index_of(o.names[0]), m.index_of(o.names[1])));
  return kOk;
}

int cmd_atoms(const Options& o, std::ostream& out) {
  if (o.n < 2 || o.n > kMaxAtomEvents) {
    throw InputError("atoms: n must be between 2 and " + std::to_string(kMaxAtomEvents));
  }
  const auto atoms = atoms_of(o.n);
  for (std::size_t k = 0; k < atoms.size(); ++k) {
    if (o.format == OutputFormat::interchange) {
      out << matrix_to_interchange(atoms[k]);
      continue;
    }
    if (k > 0) out << '\n';
    out << "atom " << k + 1 << " of " << atoms.size() << ":\n";
    print_grid(out, atoms[k].labels(), atoms[k].table());
  }
  return kOk;
}

int cmd_count(const Options& o, std::ostream& out) {
  if (o.n < 1 || o.n > kMaxCountEvents) {
    throw InputError("count: n must be between 1 and " + std::to_string(kMaxCountEvents));
  }
  out << count_matrices(o.n) << '\n';
  return kOk;
}

int cmd_dot(const Options& o, std::ostream& out) {
  const Loaded spec = load(o.spec);
  out << to_dot(close(spec.matrix(o.neq)));
  return kOk;
}

const std::map<std::string, NeqMode> kNeqModes = {
    {"keep", NeqMode::keep}, {"lt", NeqMode::as_lt}, {"gt", NeqMode::as_gt}};
const std::map<std::string, OutputFormat> kFormats = {
    {"text", OutputFormat::text}, {"interchange", OutputFormat::interchange}};

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Synchronization algebra: closure, deadlock and equivalence of event "
               "synchronizations",
               "syncalg"};
  app.require_subcommand(1);
  Options o;

  auto add_neq = [&](CLI::App* cmd) {
    cmd->add_option("--neq-as", o.neq, "Treat declared != as: keep, lt or gt")
        ->transform(CLI::CheckedTransformer(kNeqModes, CLI::ignore_case));
  };
  auto add_spec = [&](CLI::App* cmd) {
    cmd->add_option("spec", o.spec, "Path to a .sync file")->required();
  };

  auto* close_cmd = app.add_subcommand("close", "Close a spec and print the report");
  add_spec(close_cmd);
  add_neq(close_cmd);
  close_cmd->add_option("--format", o.format, "Output format: text or interchange")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  close_cmd->add_flag("--verify", o.verify, "Cross-check the closure by enumeration");

  auto* deadlock_cmd = app.add_subcommand("deadlock", "Exit 2 if the spec deadlocks");
  add_spec(deadlock_cmd);
  add_neq(deadlock_cmd);

  auto* bounds_cmd = app.add_subcommand("bounds", "Print per-event boundedness");
  add_spec(bounds_cmd);

  auto* equiv_cmd = app.add_subcommand("equiv", "Exit 3 unless both specs close equally");
  equiv_cmd->add_option("specs", o.paths, "Two .sync files")->required()->expected(2);
  add_neq(equiv_cmd);

  auto* swap_cmd = app.add_subcommand("swap", "Exchange two events' positions");
  add_spec(swap_cmd);
  swap_cmd->add_option("events", o.names, "Two event names")->required()->expected(2);

  auto* atoms_cmd = app.add_subcommand("atoms", "Print the atom matrices for n events");
  atoms_cmd->add_option("n", o.n, "Event count")->required();
  atoms_cmd->add_option("--format", o.format, "Output format: text or interchange")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));

  auto* count_cmd = app.add_subcommand("count", "Number of matrices over n events");
  count_cmd->add_option("n", o.n, "Event count")->required();

  auto* dot_cmd = app.add_subcommand("dot", "Graphviz rendering of the closure");
  add_spec(dot_cmd);
  add_neq(dot_cmd);

  // CLI11 consumes the argument vector from the back.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kError;
  }

  try {
    if (close_cmd->parsed()) return cmd_close(o, out, err);
    if (deadlock_cmd->parsed()) return cmd_deadlock(o, out);
    if (bounds_cmd->parsed()) return cmd_bounds(o, out);
    if (equiv_cmd->parsed()) return cmd_equiv(o, out);
    if (swap_cmd->parsed()) return cmd_swap(o, out);
    if (atoms_cmd->parsed()) return cmd_atoms(o, out);
    if (count_cmd->parsed()) return cmd_count(o, out);
    if (dot_cmd->parsed()) return cmd_dot(o, out);
  } catch (const std::exception& e) {
    err << "syncalg: " << e.what() << '\n';
    return kError;
  }
  return kError;
}

} // namespace syncalg::cli
