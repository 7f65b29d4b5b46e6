#include <doctest.h>

#include <random>

#include "support/random.hpp"
#include "syncalg/closure.hpp"
#include "syncalg/error.hpp"
#include "syncalg/oracle.hpp"

using namespace syncalg;
using syncalg::testing::random_matrix;
using syncalg::testing::random_matrix_from;

namespace {

const std::vector<std::string> kAbc = {"a", "b", "c"};

SyncMatrix declare(const std::vector<Entry>& entries,
                   const std::vector<std::string>& labels = kAbc) {
  return SyncMatrix::from_entries(labels, entries);
}

} // namespace

TEST_CASE("a > b > c implies a > c") {
  const auto r = close(declare({{0, 1, Rel::gt()}, {1, 2, Rel::gt()}}));
  CHECK(r.closed.at(0, 2) == Rel::gt());
  CHECK(r.closed.at(2, 0) == Rel::lt());
  CHECK_FALSE(r.deadlocked);
  REQUIRE(r.implied.size() == 1);
  CHECK(r.implied[0] == ImpliedEntry{0, 2, Rel::any(), Rel::gt()});
}

TEST_CASE("unconstrained matrices are fixed points") {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto m = SyncMatrix::from_entries(default_labels(n), {});
    const auto r = close(m);
    CHECK(r.closed == m);
    CHECK(r.implied.empty());
    CHECK_FALSE(r.deadlocked);
    CHECK(r.iterations == 1);
    for (const Bound& b : r.bounds) CHECK(b.value == Rel::any());
  }
}

TEST_CASE("a cyclic strict order deadlocks") {
  const auto r = close(declare({{0, 1, Rel::gt()}, {1, 2, Rel::gt()}, {2, 0, Rel::gt()}}));
  CHECK(r.deadlocked);
  CHECK_FALSE(r.deadlock_pairs.empty());
  // Zero propagates to every pair once the fixed point is reached.
  CHECK(r.deadlock_pairs.size() == 3);
  CHECK_FALSE(oracle::minimal(declare({{0, 1, Rel::gt()}, {1, 2, Rel::gt()}, {2, 0, Rel::gt()}}), 4)
                  .satisfiable);
}

TEST_CASE("equality passes relations through") {
  const auto r = close(declare({{0, 1, Rel::eq()}, {1, 2, Rel::le()}}));
  CHECK(r.closed.at(0, 2) == Rel::le());
}

TEST_CASE("!= is not transitive under keep") {
  const std::vector<Entry> entries = {{0, 1, Rel::ne()}, {1, 2, Rel::ne()}};
  const auto r = close(kAbc, entries, NeqMode::keep);
  CHECK(r.closed.at(0, 2) == Rel::any());
  CHECK_FALSE(r.deadlocked);
}

TEST_CASE("queued critical sections deadlock when != is ordered") {
  const std::vector<Entry> ring = {{0, 1, Rel::ne()}, {1, 2, Rel::ne()}, {2, 0, Rel::ne()}};
  CHECK_FALSE(close(kAbc, ring, NeqMode::keep).deadlocked);
  CHECK(oracle::minimal(declare(ring), 4).satisfiable);

  for (NeqMode mode : {NeqMode::as_lt, NeqMode::as_gt}) {
    const auto rewritten = apply_neq_mode(ring, mode);
    for (const Entry& e : rewritten) {
      CHECK(e.rel == (mode == NeqMode::as_lt ? Rel::lt() : Rel::gt()));
    }
    CHECK(close(kAbc, ring, mode).deadlocked);
    CHECK_FALSE(oracle::minimal(declare(rewritten), 4).satisfiable);
  }
}

TEST_CASE("neq rewriting on a matrix uses the upper triangle") {
  const auto m = declare({{0, 1, Rel::ne()}, {1, 2, Rel::gt()}});
  const auto lt = apply_neq_mode(m, NeqMode::as_lt);
  CHECK(lt.at(0, 1) == Rel::lt());
  CHECK(lt.at(1, 0) == Rel::gt());
  CHECK(lt.at(1, 2) == Rel::gt());
  CHECK(apply_neq_mode(m, NeqMode::keep) == m);
  CHECK(close(m, NeqMode::as_gt).closed.at(0, 2) == Rel::gt());
}

TEST_CASE("derived != cells come from declared ones") {
  const std::vector<Entry> entries = {{0, 1, Rel::eq()}, {1, 2, Rel::ne()}};
  const auto keep = close(kAbc, entries, NeqMode::keep);
  CHECK(keep.closed.at(0, 2) == Rel::ne());
  CHECK(keep.implied == std::vector<ImpliedEntry>{{0, 2, Rel::any(), Rel::ne()}});

  const auto lt = close(kAbc, entries, NeqMode::as_lt);
  CHECK(lt.closed.at(1, 2) == Rel::lt());
  CHECK(lt.closed.at(0, 2) == Rel::lt());
}

TEST_CASE("boundedness") {
  const Entry gt{0, 1, Rel::gt()};
  const auto two = SyncMatrix::from_entries({"a", "b"}, std::span(&gt, 1));
  const auto b = boundedness(two);
  REQUIRE(b.size() == 2);
  CHECK(b[0].value == Rel::gt());
  CHECK(b[1].value == Rel::lt());
  CHECK(b[0].bounded_below());
  CHECK_FALSE(b[0].bounded_above());
  CHECK(b[1].bounded_above());

  const auto eq_le = boundedness(declare({{0, 1, Rel::eq()}, {0, 2, Rel::le()}}));
  CHECK(eq_le[0].value == Rel::eq());
  CHECK(eq_le[1].value == Rel::eq());
  CHECK(eq_le[2].value == Rel::ge());

  CHECK(boundedness(SyncMatrix::from_entries({"solo"}, {}))[0].value == Rel::any());
}

TEST_CASE("boundedness equals the row intersection over every 3-event matrix") {
  for_each_matrix(3, [](const SyncMatrix& m) {
    const auto b = boundedness(m);
    for (std::size_t i = 0; i < 3; ++i) {
      Rel expect = Rel::any();
      for (std::size_t j = 0; j < 3; ++j) {
        if (j != i) expect = expect & m.at(i, j);
      }
      CHECK(b[i].value == expect);
      CHECK(b[i].value.bits() < 8);
    }
  });
}

TEST_CASE("closure invariants on random instances") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 1500; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const auto p = random_matrix(rng, n);
    const auto r = close(p);

    CHECK(r.iterations <= 3 * n * n + 1);
    CHECK(r.deadlocked == !r.deadlock_pairs.empty());
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(r.closed.at(i, i) == Rel::any());
      for (std::size_t j = 0; j < n; ++j) {
        CHECK(r.closed.at(i, j).subset_of(p.at(i, j)));
        CHECK(r.closed.at(j, i) == mirror(r.closed.at(i, j)));
        if (i != j && r.closed.at(i, j).empty()) CHECK(r.deadlocked);
      }
    }
    for (const auto& e : r.implied) {
      CHECK(e.after.subset_of(e.before));
      CHECK(e.after != e.before);
      CHECK(e.before == p.at(e.i, e.j));
    }

    const auto again = close(r.closed);
    CHECK(again.closed == r.closed);
    CHECK(again.implied.empty());

    CHECK(close(p, NeqMode::keep, SweepOrder::reverse).closed == r.closed);
  }
}

TEST_CASE("closure is sound against exhaustive enumeration") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 2 + rng() % 3;
    const auto p = random_matrix(rng, n);
    const auto r = close(p);
    const auto truth = oracle::minimal(p, n + 1);
    CHECK(r.deadlocked == !truth.satisfiable);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j) CHECK(truth.cells.at(i, j).subset_of(r.closed.at(i, j)));
      }
    }
  }
}

TEST_CASE("closure is exact without != and never") {
  const std::vector<Rel> convex = {Rel::any(), Rel::le(), Rel::ge(),
                                   Rel::eq(),  Rel::lt(), Rel::gt()};
  std::mt19937 rng(31);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 2 + rng() % 3;
    const auto p = random_matrix_from(rng, n, convex);
    const auto r = close(p);
    const auto truth = oracle::minimal(p, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j) CHECK(truth.cells.at(i, j) == r.closed.at(i, j));
      }
    }
  }
}

TEST_CASE("closure commutes with eventswap") {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 4;
    const auto p = random_matrix(rng, n);
    const auto r = close(p);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const auto swapped = close(eventswap(p, i, j));
        CHECK(swapped.closed == eventswap(r.closed, i, j));
        auto bounds = r.bounds;
        std::swap(bounds[i], bounds[j]);
        CHECK(swapped.bounds == bounds);
      }
    }
  }
}

TEST_CASE("equivalence is closure equality") {
  const auto implied = declare({{0, 1, Rel::gt()}, {1, 2, Rel::gt()}});
  const auto explicit_ = declare({{0, 1, Rel::gt()}, {1, 2, Rel::gt()}, {0, 2, Rel::gt()}});
  CHECK(equivalent(implied, explicit_));
  CHECK(equivalent(implied, close(implied).closed));

  const Entry lt{0, 1, Rel::lt()};
  const Entry gt{0, 1, Rel::gt()};
  CHECK_FALSE(equivalent(SyncMatrix::from_entries({"a", "b"}, std::span(&lt, 1)),
                         SyncMatrix::from_entries({"a", "b"}, std::span(&gt, 1))));

  // Same synchronization written over a different event order.
  const auto reordered = SyncMatrix::from_entries(
      {"c", "a", "b"}, std::vector<Entry>{{1, 2, Rel::gt()}, {2, 0, Rel::gt()}});
  CHECK(equivalent(implied, reordered));
  CHECK(reorder(reordered, kAbc) == implied);

  CHECK_THROWS_AS(equivalent(implied, declare({}, {"a", "b", "d"})), ValidationError);
  CHECK_THROWS_AS(equivalent(implied, declare({}, {"a", "b"})), ValidationError);
}
