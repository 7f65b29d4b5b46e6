#ifndef SYNCALG_MATRIX_HPP
#define SYNCALG_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "syncalg/rel.hpp"

namespace syncalg {

/// A raw n x n grid of relations with no structural invariant.
class RelationTable {
public:
  RelationTable() = default;
  RelationTable(std::size_t n, Rel fill) : n_(n), cells_(n * n, fill) {}

  std::size_t size() const noexcept { return n_; }
  Rel at(std::size_t i, std::size_t j) const { return cells_[i * n_ + j]; }
  Rel& at(std::size_t i, std::size_t j) { return cells_[i * n_ + j]; }

  friend bool operator==(const RelationTable&, const RelationTable&) = default;

private:
  std::size_t n_ = 0;
  std::vector<Rel> cells_;
};

/// One declared synchronization: `labels[i] rel labels[j]`.
struct Entry {
  std::size_t i = 0;
  std::size_t j = 0;
  Rel rel = Rel::any();
};

/// Per-event boundedness, aligned with the matrix labels.
using BoundVector = std::vector<Bound>;

/// Synchronization matrix over n named events.
///
/// Invariants: the diagonal is `any`; `at(j, i) == mirror(at(i, j))`;
/// labels are distinct. Every constructor enforces them, so a SyncMatrix
/// value is always valid.
class SyncMatrix {
public:
  /// Starts from the all-`any` matrix and conjoins each entry (and its
  /// mirror) into place. Repeated entries for a pair intersect.
  static SyncMatrix from_entries(std::vector<std::string> labels,
                                 std::span<const Entry> entries);

  /// Validates a full grid against the invariants.
  static SyncMatrix from_table(std::vector<std::string> labels,
                               const RelationTable& table);

  std::size_t size() const noexcept { return labels_.size(); }
  Rel at(std::size_t i, std::size_t j) const { return table_.at(i, j); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const RelationTable& table() const noexcept { return table_; }

  std::optional<std::size_t> find(std::string_view label) const noexcept;
  /// Throws ValidationError for unknown names.
  std::size_t index_of(std::string_view label) const;

  friend bool operator==(const SyncMatrix&, const SyncMatrix&) = default;

private:
  SyncMatrix(std::vector<std::string> labels, RelationTable table)
      : labels_(std::move(labels)), table_(std::move(table)) {}

  std::vector<std::string> labels_;
  RelationTable table_;
};

/// "e1", "e2", ..., "en".
std::vector<std::string> default_labels(std::size_t n);

SyncMatrix unite(const SyncMatrix& p, const SyncMatrix& q);
SyncMatrix intersect(const SyncMatrix& p, const SyncMatrix& q);
SyncMatrix mirror(const SyncMatrix& p);
/// Element-wise complement. The diagonal becomes `never`, so the result is a
/// plain relation table rather than a synchronization matrix.
RelationTable complement(const SyncMatrix& p);

/// Exchanges the positions of events i and j (rows, columns and labels).
/// The relation between any two named events is unchanged.
SyncMatrix eventswap(const SyncMatrix& p, std::size_t i, std::size_t j);

/// Number of independent cells above the diagonal, (n^2 - n) / 2.
constexpr std::size_t independent_cells(std::size_t n) noexcept {
  return n < 2 ? 0 : n * (n - 1) / 2;
}

/// The 3p atom matrices: one above-diagonal cell holds a single atom, every
/// other off-diagonal cell is `never`. Requires n >= 2.
std::vector<SyncMatrix> atoms_of(std::size_t n);

/// 8^((n^2 - n) / 2), exact.
boost::multiprecision::cpp_int count_matrices(std::size_t n);

inline constexpr std::size_t kMaxEnumerationEvents = 4;

/// Walks every synchronization matrix over n events exactly once
/// (2 <= n <= 4). Above-diagonal cells are visited in row-major order and
/// the last cell varies fastest, through relation codes 0..7.
class MatrixEnumerator {
public:
  explicit MatrixEnumerator(std::size_t n);
  MatrixEnumerator(std::size_t n, std::vector<std::string> labels);

  std::optional<SyncMatrix> next();
  std::uint64_t total() const noexcept { return total_; }

private:
  std::vector<std::string> labels_;
  std::vector<std::pair<std::size_t, std::size_t>> cells_;
  std::uint64_t total_ = 0;
  std::uint64_t cursor_ = 0;
};

void for_each_matrix(std::size_t n,
                     const std::function<void(const SyncMatrix&)>& visit);

} // namespace syncalg

#endif // SYNCALG_MATRIX_HPP
