#include "syncalg/oracle.hpp"

#include <algorithm>
#include <string>

#include "syncalg/error.hpp"

namespace syncalg::oracle {

namespace {

void check_domains(const PairSet& a, const PairSet& b) {
  if (a.domain() != b.domain()) {
    throw ValidationError("pair sets over different domains (" +
                          std::to_string(a.domain()) + " vs " +
                          std::to_string(b.domain()) + ")");
  }
}

} // namespace

PairSet::PairSet(std::size_t domain) : domain_(domain), bits_(domain * domain, false) {
  if (domain == 0) throw ValidationError("domain must be non-empty");
}

std::size_t PairSet::count() const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

Atom atom_between(std::size_t x, std::size_t y) noexcept {
  if (x < y) return Atom::lt;
  if (x == y) return Atom::eq;
  return Atom::gt;
}

PairSet rel_to_pairs(Rel r, std::size_t domain) {
  PairSet s(domain);
  for (std::size_t x = 0; x < domain; ++x) {
    for (std::size_t y = 0; y < domain; ++y) {
      if (r.has(atom_between(x, y))) s.insert(x, y);
    }
  }
  return s;
}

Rel atom_profile(const PairSet& s) {
  Rel r = Rel::never();
  for (std::size_t x = 0; x < s.domain(); ++x) {
    for (std::size_t y = 0; y < s.domain(); ++y) {
      if (s.contains(x, y)) r = r | Rel::of(atom_between(x, y));
    }
  }
  return r;
}

PairSet apply(SetOp op, const PairSet& a, const PairSet& b) {
  check_domains(a, b);
  PairSet out(a.domain());
  for (std::size_t x = 0; x < a.domain(); ++x) {
    for (std::size_t y = 0; y < a.domain(); ++y) {
      const bool in = op == SetOp::unite ? (a.contains(x, y) || b.contains(x, y))
                                         : (a.contains(x, y) && b.contains(x, y));
      if (in) out.insert(x, y);
    }
  }
  return out;
}

PairSet complement(const PairSet& a) {
  PairSet out(a.domain());
  for (std::size_t x = 0; x < a.domain(); ++x) {
    for (std::size_t y = 0; y < a.domain(); ++y) {
      if (!a.contains(x, y)) out.insert(x, y);
    }
  }
  return out;
}

PairSet transpose(const PairSet& a) {
  PairSet out(a.domain());
  for (std::size_t x = 0; x < a.domain(); ++x) {
    for (std::size_t y = 0; y < a.domain(); ++y) {
      if (a.contains(x, y)) out.insert(y, x);
    }
  }
  return out;
}

PairSet join(const PairSet& a, const PairSet& b) {
  check_domains(a, b);
  const std::size_t d = a.domain();
  PairSet out(d);
  for (std::size_t x = 0; x < d; ++x) {
    for (std::size_t y = 0; y < d; ++y) {
      if (!a.contains(x, y)) continue;
      for (std::size_t z = 0; z < d; ++z) {
        if (b.contains(y, z)) out.insert(x, z);
      }
    }
  }
  return out;
}

bool satisfies(const SyncMatrix& p, const std::vector<std::size_t>& times) {
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && !p.at(i, j).has(atom_between(times[i], times[j]))) return false;
    }
  }
  return true;
}

MinimalNetwork minimal(const SyncMatrix& p, std::size_t domain, std::uint64_t ceiling) {
  const std::size_t n = p.size();
  if (domain < n + 1) {
    throw ValidationError("oracle domain " + std::to_string(domain) +
                          " is too small for " + std::to_string(n) +
                          " events (need at least n + 1)");
  }
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > ceiling / domain) {
      throw GuardError("oracle enumeration of " + std::to_string(domain) + "^" +
                       std::to_string(n) + " assignments exceeds the ceiling of " +
                       std::to_string(ceiling));
    }
    total *= domain;
  }

  MinimalNetwork out{RelationTable(n, Rel::never()), false, 0};
  std::vector<std::size_t> times(n, 0);
  for (std::uint64_t k = 0; k < total; ++k) {
    std::uint64_t code = k;
    for (std::size_t i = 0; i < n; ++i) {
      times[i] = static_cast<std::size_t>(code % domain);
      code /= domain;
    }
    if (!satisfies(p, times)) continue;
    ++out.solutions;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        out.cells.at(i, j) = out.cells.at(i, j) | Rel::of(atom_between(times[i], times[j]));
      }
    }
  }
  out.satisfiable = out.solutions > 0;
  return out;
}

} // namespace syncalg::oracle
