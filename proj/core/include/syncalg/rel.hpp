#ifndef SYNCALG_REL_HPP
#define SYNCALG_REL_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string_view>

namespace syncalg {

/// The three indivisible orderings of a pair of event times.
enum class Atom : std::uint8_t { lt = 1U << 0, eq = 1U << 1, gt = 1U << 2 };

/// A binary synchronization relation: a subset of {<, =, >}.
///
/// The value is the bit set with LT at bit 0, EQ at bit 1 and GT at bit 2,
/// so the eight relations have integer codes 0..7 and every Boolean operator
/// is plain flag-wise logic.
class Rel {
public:
  constexpr Rel() noexcept = default;

  static constexpr Rel from_bits(unsigned bits) noexcept {
    return Rel(static_cast<std::uint8_t>(bits & 7U));
  }
  static constexpr Rel of(Atom a) noexcept {
    return Rel(static_cast<std::uint8_t>(a));
  }

  static constexpr Rel never() noexcept { return Rel(0); }
  static constexpr Rel lt() noexcept { return Rel(1); }
  static constexpr Rel eq() noexcept { return Rel(2); }
  static constexpr Rel le() noexcept { return Rel(3); }
  static constexpr Rel gt() noexcept { return Rel(4); }
  static constexpr Rel ne() noexcept { return Rel(5); }
  static constexpr Rel ge() noexcept { return Rel(6); }
  static constexpr Rel any() noexcept { return Rel(7); }

  constexpr unsigned bits() const noexcept { return bits_; }
  constexpr bool has(Atom a) const noexcept {
    return (bits_ & static_cast<std::uint8_t>(a)) != 0;
  }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr bool is_any() const noexcept { return bits_ == 7; }

  /// Atom-set containment.
  constexpr bool subset_of(Rel other) const noexcept {
    return (bits_ & ~other.bits_) == 0;
  }

  friend constexpr bool operator==(Rel, Rel) noexcept = default;

  friend constexpr Rel operator|(Rel a, Rel b) noexcept {
    return Rel(static_cast<std::uint8_t>(a.bits_ | b.bits_));
  }
  friend constexpr Rel operator&(Rel a, Rel b) noexcept {
    return Rel(static_cast<std::uint8_t>(a.bits_ & b.bits_));
  }
  friend constexpr Rel operator~(Rel a) noexcept {
    return Rel(static_cast<std::uint8_t>(~a.bits_ & 7U));
  }

private:
  constexpr explicit Rel(std::uint8_t bits) noexcept : bits_(bits) {}
  std::uint8_t bits_ = 0;
};

/// All eight relations in code order.
inline constexpr std::array<Rel, 8> kAllRels = {
    Rel::never(), Rel::lt(), Rel::eq(), Rel::le(),
    Rel::gt(),    Rel::ne(), Rel::ge(), Rel::any()};

inline constexpr std::array<Atom, 3> kAtoms = {Atom::lt, Atom::eq, Atom::gt};

constexpr Rel rel_union(Rel a, Rel b) noexcept { return a | b; }
constexpr Rel rel_intersect(Rel a, Rel b) noexcept { return a & b; }
constexpr Rel rel_complement(Rel a) noexcept { return ~a; }

/// Reverses the order of the pair: swaps the LT and GT flags.
constexpr Rel mirror(Rel a) noexcept {
  const unsigned b = a.bits();
  return Rel::from_bits((b & 2U) | ((b & 1U) << 2) | ((b & 4U) >> 2));
}

/// Relational composition: given x a y and y b z, the atoms possible for
/// x vs z. Built atom-wise; composing with `never` on either side is `never`.
Rel compose(Rel a, Rel b) noexcept;

/// Boundary-including relations {any, >=, <=, =}.
constexpr bool in_l1(Rel a) noexcept { return a.has(Atom::eq); }
/// Boundary-excluding relations {!=, >, <, never}.
constexpr bool in_l0(Rel a) noexcept { return !a.has(Atom::eq); }

/// Complement inside L1/L0, which is the mirror so membership is kept.
constexpr Rel sub_complement(Rel a) noexcept { return mirror(a); }

/// Canonical text: "never", "<", "=", ">", "<=", ">=", "!=", "any".
std::string_view to_symbol(Rel r) noexcept;
std::optional<Rel> parse_symbol(std::string_view text) noexcept;

std::ostream& operator<<(std::ostream& os, Rel r);

/// A per-event bound, sharing the relation carrier.
///
/// A missing LT flag means the event is bounded below, a missing GT flag
/// means bounded above, and the EQ flag means boundary points are included.
/// So `>` is bounded below (open), `=` is bounded on both sides (closed),
/// `!=` and `any` are unbounded.
struct Bound {
  Rel value = Rel::any();

  constexpr bool bounded_below() const noexcept { return !value.has(Atom::lt); }
  constexpr bool bounded_above() const noexcept { return !value.has(Atom::gt); }
  constexpr bool boundary_included() const noexcept {
    return value.has(Atom::eq);
  }

  friend constexpr bool operator==(Bound, Bound) noexcept = default;
};

/// Human description, e.g. "bounded below (open)".
std::string_view describe(Bound b) noexcept;

} // namespace syncalg

#endif // SYNCALG_REL_HPP
