#ifndef SYNCALG_ORACLE_HPP
#define SYNCALG_ORACLE_HPP

// Brute-force ground truth. Relations are explicit sets of (x, y) time pairs
// over the finite domain {0, ..., d-1}; matrices are checked by enumerating
// every assignment of times to events. Slow by construction and never used
// on the closure path.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "syncalg/matrix.hpp"

namespace syncalg::oracle {

class PairSet {
public:
  explicit PairSet(std::size_t domain);

  std::size_t domain() const noexcept { return domain_; }
  bool contains(std::size_t x, std::size_t y) const { return bits_[x * domain_ + y]; }
  void insert(std::size_t x, std::size_t y) { bits_[x * domain_ + y] = true; }
  std::size_t count() const noexcept;

  friend bool operator==(const PairSet&, const PairSet&) = default;

private:
  std::size_t domain_;
  std::vector<bool> bits_;
};

/// The atom x vs y.
Atom atom_between(std::size_t x, std::size_t y) noexcept;

/// {(x, y) : atom(x, y) in r}.
PairSet rel_to_pairs(Rel r, std::size_t domain);

/// Atoms realized by at least one pair of the set.
Rel atom_profile(const PairSet& s);

enum class SetOp { unite, intersect };

PairSet apply(SetOp op, const PairSet& a, const PairSet& b);
PairSet complement(const PairSet& a);
/// {(y, x) : (x, y) in a}.
PairSet transpose(const PairSet& a);
/// {(x, z) : exists y, (x, y) in a and (y, z) in b}.
PairSet join(const PairSet& a, const PairSet& b);

inline constexpr std::uint64_t kDefaultCeiling = 10'000'000;

struct MinimalNetwork {
  /// Atoms realized at each cell over all satisfying assignments; `never`
  /// everywhere when unsatisfiable. The diagonal holds `=` when satisfiable.
  RelationTable cells;
  bool satisfiable = false;
  std::uint64_t solutions = 0;
};

/// True iff times[i] vs times[j] is allowed by every off-diagonal cell.
bool satisfies(const SyncMatrix& p, const std::vector<std::size_t>& times);

/// Enumerates all d^n assignments. Throws GuardError when d^n exceeds
/// `ceiling` and ValidationError when d < n + 1.
MinimalNetwork minimal(const SyncMatrix& p, std::size_t domain,
                       std::uint64_t ceiling = kDefaultCeiling);

} // namespace syncalg::oracle

#endif // SYNCALG_ORACLE_HPP
