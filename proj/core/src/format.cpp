#include "syncalg/format.hpp"

#include <cctype>
#include <optional>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "syncalg/error.hpp"

namespace syncalg {

namespace {

using json = nlohmann::ordered_json;

constexpr std::string_view kEventsDirective = "events";

bool is_name_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_';
}
bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}
bool is_op_char(char c) { return c == '<' || c == '>' || c == '=' || c == '!'; }

bool is_reserved(std::string_view word) {
  return word == "any" || word == "never" || word == kEventsDirective;
}

enum class TokenKind { name, op };

struct Token {
  TokenKind kind;
  std::string text;
};

// Splits a comment-free line into names and operator runs, so both
// "a < b" and "a<b" tokenize the same way.
std::vector<Token> tokenize(std::string_view line, std::size_t line_no) {
  std::vector<Token> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    const char c = line[pos];
    if (std::isspace(static_cast<unsigned char>(c)) != 0) {
      ++pos;
    } else if (is_name_start(c)) {
      const std::size_t start = pos;
      while (pos < line.size() && is_name_char(line[pos])) ++pos;
      tokens.push_back({TokenKind::name, std::string(line.substr(start, pos - start))});
    } else if (is_op_char(c)) {
      const std::size_t start = pos;
      while (pos < line.size() && is_op_char(line[pos])) ++pos;
      tokens.push_back({TokenKind::op, std::string(line.substr(start, pos - start))});
    } else {
      throw ParseError(line_no, std::string("unexpected character '") + c + "'");
    }
  }
  return tokens;
}

class SpecParser {
public:
  SyncSpec run(std::string_view text) {
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      ++line_no;
      std::string_view line = text.substr(start, end - start);
      if (auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      parse_line(tokenize(line, line_no), line_no);
      start = end + 1;
    }
    return std::move(spec_);
  }

private:
  void parse_line(const std::vector<Token>& tokens, std::size_t line_no) {
    if (tokens.empty()) return;
    if (tokens[0].kind == TokenKind::name && tokens[0].text == kEventsDirective) {
      parse_directive(tokens, line_no);
      return;
    }
    if (tokens.size() != 3 || tokens[0].kind != TokenKind::name ||
        tokens[2].kind != TokenKind::name) {
      throw ParseError(line_no, "expected '<name> <relation> <name>'");
    }
    const auto rel = parse_symbol(tokens[1].text);
    if (!rel) throw ParseError(line_no, "unknown relation '" + tokens[1].text + "'");
    const std::string& lhs = tokens[0].text;
    const std::string& rhs = tokens[2].text;
    if (lhs == rhs) {
      throw ParseError(line_no, "event '" + lhs + "' cannot be synchronized with itself");
    }
    use_event(lhs, line_no);
    use_event(rhs, line_no);
    spec_.constraints.push_back({lhs, *rel, rhs, line_no});
  }

  void parse_directive(const std::vector<Token>& tokens, std::size_t line_no) {
    if (closed_world_) throw ParseError(line_no, "duplicate 'events' directive");
    if (!spec_.constraints.empty()) {
      throw ParseError(line_no, "'events' must come before any constraint");
    }
    if (tokens.size() < 2) throw ParseError(line_no, "'events' needs at least one name");
    closed_world_ = true;
    for (std::size_t k = 1; k < tokens.size(); ++k) {
      const Token& t = tokens[k];
      if (t.kind != TokenKind::name) {
        throw ParseError(line_no, "'" + t.text + "' is not an event name");
      }
      check_name(t.text, line_no);
      if (!known_.insert(t.text).second) {
        throw ParseError(line_no, "duplicate event '" + t.text + "'");
      }
      spec_.events.push_back(t.text);
    }
  }

  void use_event(const std::string& name, std::size_t line_no) {
    check_name(name, line_no);
    if (known_.contains(name)) return;
    if (closed_world_) {
      throw ParseError(line_no, "event '" + name + "' is not listed in 'events'");
    }
    known_.insert(name);
    spec_.events.push_back(name);
  }

  static void check_name(const std::string& name, std::size_t line_no) {
    if (is_reserved(name)) {
      throw ParseError(line_no, "'" + name + "' is reserved and cannot name an event");
    }
  }

  SyncSpec spec_;
  std::unordered_set<std::string> known_;
  bool closed_world_ = false;
};

// -- interchange -------------------------------------------------------------

json rel_json(Rel r) { return std::string(to_symbol(r)); }

json matrix_json(const SyncMatrix& p) {
  json rows = json::array();
  for (std::size_t i = 0; i < p.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < p.size(); ++j) row.push_back(rel_json(p.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string dump(const json& doc) { return doc.dump(2, ' ', true) + "\n"; }

json parse_document(std::string_view text) {
  json doc = json::parse(text.begin(), text.end(), nullptr, false);
  if (doc.is_discarded()) throw SchemaError("<document>", "not valid JSON");
  if (!doc.is_object()) throw SchemaError("<document>", "expected an object");
  return doc;
}

const json& require(const json& doc, const std::string& key) {
  const auto it = doc.find(key);
  if (it == doc.end()) throw SchemaError(key, "missing");
  return *it;
}

Rel rel_from(const json& value, const std::string& key) {
  if (!value.is_string()) throw SchemaError(key, "relations must be strings");
  const auto rel = parse_symbol(value.get<std::string>());
  if (!rel) throw SchemaError(key, "unknown relation '" + value.get<std::string>() + "'");
  return *rel;
}

std::vector<std::string> events_from(const json& doc) {
  const json& events = require(doc, "events");
  if (!events.is_array()) throw SchemaError("events", "expected an array of names");
  std::vector<std::string> labels;
  for (const json& e : events) {
    if (!e.is_string()) throw SchemaError("events", "event names must be strings");
    labels.push_back(e.get<std::string>());
  }
  return labels;
}

SyncMatrix matrix_from(const json& doc) {
  auto labels = events_from(doc);
  const json& rows = require(doc, "matrix");
  const std::size_t n = labels.size();
  if (!rows.is_array() || rows.size() != n) {
    throw SchemaError("matrix", "expected " + std::to_string(n) + " rows");
  }
  RelationTable table(n, Rel::any());
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n) {
      throw SchemaError("matrix", "row " + std::to_string(i) + " must have " +
                                      std::to_string(n) + " cells");
    }
    for (std::size_t j = 0; j < n; ++j) table.at(i, j) = rel_from(rows[i][j], "matrix");
  }
  try {
    return SyncMatrix::from_table(std::move(labels), table);
  } catch (const ValidationError& e) {
    throw SchemaError("matrix", e.what());
  }
}

std::pair<std::size_t, std::size_t> pair_from(const json& value, const SyncMatrix& m,
                                              const std::string& key) {
  if (!value.is_array() || value.size() != 2 || !value[0].is_string() ||
      !value[1].is_string()) {
    throw SchemaError(key, "pairs must be two event names");
  }
  const auto i = m.find(value[0].get<std::string>());
  const auto j = m.find(value[1].get<std::string>());
  if (!i || !j) throw SchemaError(key, "pair names an unknown event");
  return {*i, *j};
}

std::string dot_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

} // namespace

SyncSpec parse_spec(std::string_view text) { return SpecParser().run(text); }

std::string write_spec(const SyncSpec& spec) {
  std::ostringstream os;
  if (!spec.events.empty()) {
    os << kEventsDirective;
    for (const auto& e : spec.events) os << ' ' << e;
    os << '\n';
  }
  for (const auto& c : spec.constraints) {
    os << c.lhs << ' ' << to_symbol(c.rel) << ' ' << c.rhs << '\n';
  }
  return os.str();
}

std::vector<Entry> spec_entries(const SyncSpec& spec) {
  std::unordered_map<std::string_view, std::size_t> index;
  for (std::size_t k = 0; k < spec.events.size(); ++k) index.emplace(spec.events[k], k);
  std::vector<Entry> entries;
  entries.reserve(spec.constraints.size());
  for (const auto& c : spec.constraints) {
    const auto lhs = index.find(c.lhs);
    const auto rhs = index.find(c.rhs);
    if (lhs == index.end() || rhs == index.end()) {
      throw ValidationError("constraint on line " + std::to_string(c.line) +
                            " names an undeclared event");
    }
    entries.push_back({lhs->second, rhs->second, c.rel});
  }
  return entries;
}

SyncMatrix spec_to_matrix(const SyncSpec& spec) {
  return SyncMatrix::from_entries(spec.events, spec_entries(spec));
}

SyncSpec matrix_to_spec(const SyncMatrix& p) {
  SyncSpec spec{p.labels(), {}};
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (p.at(i, j).is_any()) continue;
      spec.constraints.push_back(
          {p.labels()[i], p.at(i, j), p.labels()[j], spec.constraints.size() + 2});
    }
  }
  return spec;
}

std::string matrix_to_interchange(const SyncMatrix& p) {
  json doc;
  doc["events"] = p.labels();
  doc["matrix"] = matrix_json(p);
  return dump(doc);
}

std::string report_to_interchange(const ClosureReport& r) {
  const auto& labels = r.closed.labels();
  json doc;
  doc["events"] = labels;
  doc["matrix"] = matrix_json(r.closed);
  json bounds = json::array();
  for (const Bound& b : r.bounds) bounds.push_back(rel_json(b.value));
  doc["bounds"] = std::move(bounds);
  doc["deadlock"] = r.deadlocked;
  json pairs = json::array();
  for (const auto& [i, j] : r.deadlock_pairs) pairs.push_back({labels[i], labels[j]});
  doc["deadlock_pairs"] = std::move(pairs);
  json implied = json::array();
  for (const auto& e : r.implied) {
    json item;
    item["pair"] = {labels[e.i], labels[e.j]};
    item["before"] = rel_json(e.before);
    item["after"] = rel_json(e.after);
    implied.push_back(std::move(item));
  }
  doc["implied"] = std::move(implied);
  doc["iterations"] = r.iterations;
  return dump(doc);
}

SyncMatrix interchange_to_matrix(std::string_view text) {
  return matrix_from(parse_document(text));
}

ClosureReport interchange_to_report(std::string_view text) {
  const json doc = parse_document(text);
  ClosureReport r{matrix_from(doc), {}, false, {}, {}, 0};
  const std::size_t n = r.closed.size();

  const json& bounds = require(doc, "bounds");
  if (!bounds.is_array() || bounds.size() != n) {
    throw SchemaError("bounds", "expected " + std::to_string(n) + " entries");
  }
  for (const json& b : bounds) r.bounds.push_back(Bound{rel_from(b, "bounds")});

  const json& deadlock = require(doc, "deadlock");
  if (!deadlock.is_boolean()) throw SchemaError("deadlock", "expected true or false");
  r.deadlocked = deadlock.get<bool>();

  const json& pairs = require(doc, "deadlock_pairs");
  if (!pairs.is_array()) throw SchemaError("deadlock_pairs", "expected an array");
  for (const json& p : pairs) r.deadlock_pairs.push_back(pair_from(p, r.closed, "deadlock_pairs"));

  const json& implied = require(doc, "implied");
  if (!implied.is_array()) throw SchemaError("implied", "expected an array");
  for (const json& item : implied) {
    if (!item.is_object()) throw SchemaError("implied", "entries must be objects");
    const auto [i, j] = pair_from(require(item, "pair"), r.closed, "implied");
    r.implied.push_back({i, j, rel_from(require(item, "before"), "implied"),
                         rel_from(require(item, "after"), "implied")});
  }

  const json& iterations = require(doc, "iterations");
  if (!iterations.is_number_unsigned()) {
    throw SchemaError("iterations", "expected a non-negative integer");
  }
  r.iterations = iterations.get<std::size_t>();
  return r;
}

std::string to_dot(const ClosureReport& r) {
  const auto& labels = r.closed.labels();
  std::ostringstream os;
  os << "digraph sync {\n";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    os << "  n" << i << " [label=\"" << dot_escape(labels[i]) << "\\n["
       << to_symbol(r.bounds[i].value) << "]\"];\n";
  }
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = i + 1; j < labels.size(); ++j) {
      const Rel cell = r.closed.at(i, j);
      if (cell.is_any()) continue;
      os << "  n" << i << " -> n" << j << " [label=\"" << dot_escape(to_symbol(cell))
         << '"';
      if (cell.empty()) os << ", style=bold, color=red, fontcolor=red";
      os << "];\n";
    }
  }
  os << "}\n";
  return os.str();
}

} // namespace syncalg
