#include "syncalg/rel.hpp"

namespace syncalg {

namespace {

// Composition of single atoms; '=' is the identity and opposite strict
// orders leave x vs z unconstrained.
constexpr Rel compose_atoms(Atom a, Atom b) noexcept {
  if (a == Atom::eq) return Rel::of(b);
  if (b == Atom::eq) return Rel::of(a);
  if (a == b) return Rel::of(a);
  return Rel::any();
}

constexpr std::array<std::array<Rel, 8>, 8> build_table() noexcept {
  std::array<std::array<Rel, 8>, 8> table{};
  for (unsigned x = 0; x < 8; ++x) {
    for (unsigned y = 0; y < 8; ++y) {
      const Rel a = Rel::from_bits(x);
      const Rel b = Rel::from_bits(y);
      Rel out = Rel::never();
      for (Atom p : kAtoms) {
        if (!a.has(p)) continue;
        for (Atom q : kAtoms) {
          if (b.has(q)) out = out | compose_atoms(p, q);
        }
      }
      table[x][y] = out;
    }
  }
  return table;
}

constexpr auto kComposeTable = build_table();

constexpr std::array<std::string_view, 8> kSymbols = {
    "never", "<", "=", "<=", ">", "!=", ">=", "any"};

} // namespace

Rel compose(Rel a, Rel b) noexcept { return kComposeTable[a.bits()][b.bits()]; }

std::string_view to_symbol(Rel r) noexcept { return kSymbols[r.bits()]; }

std::optional<Rel> parse_symbol(std::string_view text) noexcept {
  for (unsigned code = 0; code < kSymbols.size(); ++code) {
    if (kSymbols[code] == text) return Rel::from_bits(code);
  }
  return std::nullopt;
}

std::ostream& operator<<(std::ostream& os, Rel r) { return os << to_symbol(r); }

std::string_view describe(Bound b) noexcept {
  const bool below = b.bounded_below();
  const bool above = b.bounded_above();
  if (b.boundary_included()) {
    if (below && above) return "bounded above and below (closed)";
    if (below) return "bounded below (closed)";
    if (above) return "bounded above (closed)";
    return "unbounded (closed)";
  }
  if (below && above) return "bounded above and below (open)";
  if (below) return "bounded below (open)";
  if (above) return "bounded above (open)";
  return "unbounded (open)";
}

} // namespace syncalg
