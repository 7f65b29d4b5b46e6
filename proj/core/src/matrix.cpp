#include "syncalg/matrix.hpp"

#include <unordered_set>
#include <utility>

#include "syncalg/error.hpp"

namespace syncalg {

namespace {

void check_labels(const std::vector<std::string>& labels) {
  if (labels.empty()) throw ValidationError("a matrix needs at least one event");
  std::unordered_set<std::string_view> seen;
  for (const auto& label : labels) {
    if (label.empty()) throw ValidationError("event names must be non-empty");
    if (!seen.insert(label).second) {
      throw ValidationError("duplicate event name '" + label + "'");
    }
  }
}

void check_same_events(const SyncMatrix& p, const SyncMatrix& q) {
  if (p.labels() != q.labels()) {
    throw ValidationError("matrices are defined over different event lists");
  }
}

template <typename Op>
SyncMatrix elementwise(const SyncMatrix& p, const SyncMatrix& q, Op op) {
  check_same_events(p, q);
  const std::size_t n = p.size();
  RelationTable out(n, Rel::any());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.at(i, j) = op(p.at(i, j), q.at(i, j));
  }
  return SyncMatrix::from_table(p.labels(), out);
}

} // namespace

SyncMatrix SyncMatrix::from_entries(std::vector<std::string> labels,
                                    std::span<const Entry> entries) {
  check_labels(labels);
  const std::size_t n = labels.size();
  RelationTable table(n, Rel::any());
  for (const Entry& e : entries) {
    if (e.i >= n || e.j >= n) {
      throw ValidationError("entry index out of range (" + std::to_string(e.i) +
                            ", " + std::to_string(e.j) + ") for " +
                            std::to_string(n) + " events");
    }
    if (e.i == e.j) {
      throw ValidationError("an event cannot be synchronized with itself ('" +
                            labels[e.i] + "')");
    }
    table.at(e.i, e.j) = table.at(e.i, e.j) & e.rel;
    table.at(e.j, e.i) = table.at(e.j, e.i) & syncalg::mirror(e.rel);
  }
  return SyncMatrix(std::move(labels), std::move(table));
}

SyncMatrix SyncMatrix::from_table(std::vector<std::string> labels,
                                  const RelationTable& table) {
  check_labels(labels);
  const std::size_t n = labels.size();
  if (table.size() != n) {
    throw ValidationError("table is " + std::to_string(table.size()) + "x" +
                          std::to_string(table.size()) + " but there are " +
                          std::to_string(n) + " events");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!table.at(i, i).is_any()) {
      throw ValidationError("diagonal cell (" + labels[i] + ", " + labels[i] +
                            ") must be 'any'");
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      if (table.at(j, i) != syncalg::mirror(table.at(i, j))) {
        throw ValidationError("cell (" + labels[j] + ", " + labels[i] +
                              ") is not the mirror of (" + labels[i] + ", " +
                              labels[j] + ")");
      }
    }
  }
  return SyncMatrix(std::move(labels), table);
}

std::optional<std::size_t> SyncMatrix::find(std::string_view label) const noexcept {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

std::size_t SyncMatrix::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw ValidationError("unknown event '" + std::string(label) + "'");
}

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("e" + std::to_string(i));
  return labels;
}

SyncMatrix unite(const SyncMatrix& p, const SyncMatrix& q) {
  return elementwise(p, q, [](Rel a, Rel b) { return a | b; });
}

SyncMatrix intersect(const SyncMatrix& p, const SyncMatrix& q) {
  return elementwise(p, q, [](Rel a, Rel b) { return a & b; });
}

SyncMatrix mirror(const SyncMatrix& p) {
  const std::size_t n = p.size();
  RelationTable out(n, Rel::any());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.at(i, j) = syncalg::mirror(p.at(i, j));
  }
  return SyncMatrix::from_table(p.labels(), out);
}

RelationTable complement(const SyncMatrix& p) {
  const std::size_t n = p.size();
  RelationTable out(n, Rel::never());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.at(i, j) = ~p.at(i, j);
  }
  return out;
}

SyncMatrix eventswap(const SyncMatrix& p, std::size_t i, std::size_t j) {
  const std::size_t n = p.size();
  if (i >= n || j >= n) {
    throw ValidationError("swap index out of range for " + std::to_string(n) +
                          " events");
  }
  auto position = [&](std::size_t k) { return k == i ? j : (k == j ? i : k); };
  RelationTable out(n, Rel::any());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out.at(position(r), position(c)) = p.at(r, c);
  }
  auto labels = p.labels();
  std::swap(labels[i], labels[j]);
  return SyncMatrix::from_table(std::move(labels), out);
}

std::vector<SyncMatrix> atoms_of(std::size_t n) {
  if (n < 2) throw ValidationError("atoms need at least 2 events");
  const auto labels = default_labels(n);
  std::vector<SyncMatrix> atoms;
  atoms.reserve(3 * independent_cells(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (Atom a : kAtoms) {
        RelationTable table(n, Rel::never());
        for (std::size_t k = 0; k < n; ++k) table.at(k, k) = Rel::any();
        table.at(i, j) = Rel::of(a);
        table.at(j, i) = syncalg::mirror(Rel::of(a));
        atoms.push_back(SyncMatrix::from_table(labels, table));
      }
    }
  }
  return atoms;
}

boost::multiprecision::cpp_int count_matrices(std::size_t n) {
  boost::multiprecision::cpp_int one = 1;
  return one << (3 * independent_cells(n));
}

MatrixEnumerator::MatrixEnumerator(std::size_t n)
    : MatrixEnumerator(n, default_labels(n)) {}

MatrixEnumerator::MatrixEnumerator(std::size_t n, std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  if (n < 2 || n > kMaxEnumerationEvents) {
    throw ValidationError("enumeration supports 2 to " +
                          std::to_string(kMaxEnumerationEvents) + " events, got " +
                          std::to_string(n));
  }
  if (labels_.size() != n) throw ValidationError("label count does not match n");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) cells_.emplace_back(i, j);
  }
  total_ = std::uint64_t{1} << (3 * cells_.size());
}

std::optional<SyncMatrix> MatrixEnumerator::next() {
  if (cursor_ == total_) return std::nullopt;
  std::vector<Entry> entries;
  entries.reserve(cells_.size());
  std::uint64_t code = cursor_++;
  for (auto it = cells_.rbegin(); it != cells_.rend(); ++it) {
    entries.push_back({it->first, it->second, Rel::from_bits(code & 7U)});
    code >>= 3;
  }
  return SyncMatrix::from_entries(labels_, entries);
}

void for_each_matrix(std::size_t n,
                     const std::function<void(const SyncMatrix&)>& visit) {
  MatrixEnumerator it(n);
  while (auto m = it.next()) visit(*m);
}

} // namespace syncalg
