#ifndef SYNCALG_FORMAT_HPP
#define SYNCALG_FORMAT_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "syncalg/closure.hpp"
#include "syncalg/matrix.hpp"

namespace syncalg {

/// `lhs rel rhs` as written in a `.sync` file.
struct Constraint {
  std::string lhs;
  Rel rel;
  std::string rhs;
  std::size_t line = 0;

  friend bool operator==(const Constraint&, const Constraint&) = default;
};

struct SyncSpec {
  std::vector<std::string> events;
  std::vector<Constraint> constraints;

  friend bool operator==(const SyncSpec&, const SyncSpec&) = default;
};

/// Parses the line-oriented declaration language:
///
///     # comment
///     events a b c        optional, must precede every constraint
///     a < b
///     b >= c
///
/// Operators: < <= = >= > != any never. Names: [A-Za-z_][A-Za-z0-9_]*.
/// Without an `events` line, names register in order of first appearance;
/// with one, undeclared names are an error. Throws ParseError.
SyncSpec parse_spec(std::string_view text);

/// Emits an `events` line followed by one constraint per line.
std::string write_spec(const SyncSpec& spec);

/// Declarations as index entries, keeping the orientation they were written in.
std::vector<Entry> spec_entries(const SyncSpec& spec);

SyncMatrix spec_to_matrix(const SyncSpec& spec);

/// One constraint per above-diagonal cell that is not `any`. Line numbers
/// match the output of write_spec.
SyncSpec matrix_to_spec(const SyncMatrix& p);

std::string matrix_to_interchange(const SyncMatrix& p);
std::string report_to_interchange(const ClosureReport& r);
/// Throws SchemaError naming the offending key.
SyncMatrix interchange_to_matrix(std::string_view text);
ClosureReport interchange_to_report(std::string_view text);

/// Graphviz digraph of a closure: one node per event labelled with its
/// bound, one edge per constrained above-diagonal cell.
std::string to_dot(const ClosureReport& r);

} // namespace syncalg

#endif // SYNCALG_FORMAT_HPP
