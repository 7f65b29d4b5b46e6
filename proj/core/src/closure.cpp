#include "syncalg/closure.hpp"

#include <algorithm>

#include "syncalg/error.hpp"

namespace syncalg {

namespace {

Rel substitute(Rel r, NeqMode mode) {
  if (r != Rel::ne()) return r;
  switch (mode) {
  case NeqMode::as_lt: return Rel::lt();
  case NeqMode::as_gt: return Rel::gt();
  case NeqMode::keep: break;
  }
  return r;
}

// Narrows cell (i, j) by every path i -> k -> j. Returns true on change.
bool tighten(RelationTable& t, std::size_t i, std::size_t j, bool reverse_k) {
  const std::size_t n = t.size();
  Rel acc = t.at(i, j);
  for (std::size_t step = 0; step < n; ++step) {
    const std::size_t k = reverse_k ? n - 1 - step : step;
    if (k == i || k == j) continue;
    acc = acc & compose(t.at(i, k), t.at(k, j));
  }
  if (acc == t.at(i, j)) return false;
  t.at(i, j) = acc;
  t.at(j, i) = mirror(acc);
  return true;
}

std::size_t propagate(RelationTable& t, SweepOrder order) {
  const std::size_t n = t.size();
  const bool reverse = order == SweepOrder::reverse;
  std::size_t passes = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    ++passes;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        const std::size_t i = reverse ? n - 1 - a : a;
        const std::size_t j = reverse ? n - 1 - b : b;
        if (i == j) continue;
        changed |= tighten(t, i, j, reverse);
      }
    }
  }
  return passes;
}

} // namespace

BoundVector boundedness(const SyncMatrix& p) {
  const std::size_t n = p.size();
  BoundVector bounds(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rel acc = Rel::any();
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) acc = acc & p.at(i, j);
    }
    bounds[i] = Bound{acc};
  }
  return bounds;
}

SyncMatrix apply_neq_mode(const SyncMatrix& p, NeqMode mode) {
  if (mode == NeqMode::keep) return p;
  const std::size_t n = p.size();
  RelationTable t = p.table();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      t.at(i, j) = substitute(t.at(i, j), mode);
      t.at(j, i) = mirror(t.at(i, j));
    }
  }
  return SyncMatrix::from_table(p.labels(), t);
}

std::vector<Entry> apply_neq_mode(std::span<const Entry> entries, NeqMode mode) {
  std::vector<Entry> out(entries.begin(), entries.end());
  for (Entry& e : out) e.rel = substitute(e.rel, mode);
  return out;
}

ClosureReport close(const SyncMatrix& p, NeqMode mode, SweepOrder order) {
  const SyncMatrix start = apply_neq_mode(p, mode);
  RelationTable t = start.table();
  const std::size_t passes = propagate(t, order);

  ClosureReport report{SyncMatrix::from_table(start.labels(), t), {}, false, {}, {},
                       passes};
  const std::size_t n = t.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Rel before = start.at(i, j);
      const Rel after = t.at(i, j);
      if (after != before) report.implied.push_back({i, j, before, after});
      if (after.empty()) report.deadlock_pairs.emplace_back(i, j);
    }
  }
  report.deadlocked = !report.deadlock_pairs.empty();
  report.bounds = boundedness(report.closed);
  return report;
}

ClosureReport close(std::vector<std::string> labels, std::span<const Entry> entries,
                    NeqMode mode) {
  const auto rewritten = apply_neq_mode(entries, mode);
  return close(SyncMatrix::from_entries(std::move(labels), rewritten), NeqMode::keep);
}

SyncMatrix reorder(const SyncMatrix& q, const std::vector<std::string>& order) {
  if (order.size() != q.size()) {
    throw ValidationError("event sets differ in size");
  }
  SyncMatrix out = q;
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    const auto at = out.find(order[pos]);
    if (!at) throw ValidationError("event '" + order[pos] + "' is missing");
    if (*at != pos) out = eventswap(out, pos, *at);
  }
  return out;
}

bool equivalent(const SyncMatrix& p, const SyncMatrix& q, NeqMode mode) {
  const SyncMatrix aligned = reorder(q, p.labels());
  return close(p, mode).closed == close(aligned, mode).closed;
}

} // namespace syncalg
