#ifndef SYNCALG_TESTS_SUPPORT_RANDOM_HPP
#define SYNCALG_TESTS_SUPPORT_RANDOM_HPP

#include <cstddef>
#include <initializer_list>
#include <random>
#include <vector>

#include "syncalg/matrix.hpp"

namespace syncalg::testing {

inline Rel random_rel(std::mt19937& rng) {
  return Rel::from_bits(std::uniform_int_distribution<unsigned>(0, 7)(rng));
}

/// Uniform over all matrices with n events.
inline SyncMatrix random_matrix(std::mt19937& rng, std::size_t n) {
  std::vector<Entry> entries;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) entries.push_back({i, j, random_rel(rng)});
  }
  return SyncMatrix::from_entries(default_labels(n), entries);
}

/// Cells drawn only from `pool`.
inline SyncMatrix random_matrix_from(std::mt19937& rng, std::size_t n,
                                     const std::vector<Rel>& pool) {
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::vector<Entry> entries;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) entries.push_back({i, j, pool[pick(rng)]});
  }
  return SyncMatrix::from_entries(default_labels(n), entries);
}

} // namespace syncalg::testing

#endif
