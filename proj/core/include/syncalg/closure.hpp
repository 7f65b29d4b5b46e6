#ifndef SYNCALG_CLOSURE_HPP
#define SYNCALG_CLOSURE_HPP

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "syncalg/matrix.hpp"

namespace syncalg {

/// How declared `!=` synchronizations are treated before propagation.
///
/// `!=` is not transitive. A critical section guarded by a queued semaphore
/// really orders its users, so `as_lt` / `as_gt` rewrite each declared
/// `a != b` into `a < b` / `a > b`, which exposes worst-case deadlocks.
enum class NeqMode { keep, as_lt, as_gt };

/// Order in which cells are revisited within a propagation pass. The fixed
/// point does not depend on it.
enum class SweepOrder { row_major, reverse };

struct ImpliedEntry {
  std::size_t i = 0;
  std::size_t j = 0;
  Rel before;
  Rel after;

  friend bool operator==(const ImpliedEntry&, const ImpliedEntry&) = default;
};

struct ClosureReport {
  SyncMatrix closed;
  BoundVector bounds;
  bool deadlocked = false;
  /// Above-diagonal pairs (i < j) whose closed cell is `never`.
  std::vector<std::pair<std::size_t, std::size_t>> deadlock_pairs;
  /// Above-diagonal cells narrowed by propagation, in (i, j) order.
  std::vector<ImpliedEntry> implied;
  /// Full passes run, including the final pass that changed nothing.
  std::size_t iterations = 0;

  friend bool operator==(const ClosureReport&, const ClosureReport&) = default;
};

/// Per-event bound: intersection of the event's row (diagonal excluded).
BoundVector boundedness(const SyncMatrix& p);

/// Rewrites declared `!=` cells per `mode`. The matrix route treats the
/// above-diagonal cell (i < j) as the declaration `labels[i] != labels[j]`.
SyncMatrix apply_neq_mode(const SyncMatrix& p, NeqMode mode);

/// Same rewrite on a declaration list, honouring each entry's orientation.
std::vector<Entry> apply_neq_mode(std::span<const Entry> entries, NeqMode mode);

/// Transitive closure (path consistency) of a synchronization matrix.
ClosureReport close(const SyncMatrix& p, NeqMode mode = NeqMode::keep,
                    SweepOrder order = SweepOrder::row_major);

/// Closure of a declaration list; `!=` rewriting follows the direction
/// each synchronization was written in.
ClosureReport close(std::vector<std::string> labels, std::span<const Entry> entries,
                    NeqMode mode = NeqMode::keep);

/// Two matrices over the same event set are equivalent when their closures
/// agree. `q` is first reordered to `p`'s event order.
bool equivalent(const SyncMatrix& p, const SyncMatrix& q,
                NeqMode mode = NeqMode::keep);

/// Reorders `q`'s events to the label order `order` by a sequence of swaps.
SyncMatrix reorder(const SyncMatrix& q, const std::vector<std::string>& order);

} // namespace syncalg

#endif // SYNCALG_CLOSURE_HPP
