#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace satplan {

/**
 * Axial (q, r) coordinate on a pointy-top hexagonal grid.
 *
 * The six unit directions are ordered E, NE, NW, W, SW, SE (counterclockwise
 * starting from +x); this ordering is the system-wide tie-break order.
 * Comparison is lexicographic (q, then r), which is the canonical coordinate
 * order used wherever cells must be listed deterministically.
 */
struct HexCoord {
  int q = 0;
  int r = 0;

  friend constexpr auto operator<=>(const HexCoord&, const HexCoord&) = default;
};

inline std::ostream& operator<<(std::ostream& out, const HexCoord& c) {
  return out << '(' << c.q << ',' << c.r << ')';
}

enum class Direction : int { E = 0, NE = 1, NW = 2, W = 3, SW = 4, SE = 5 };

inline constexpr std::array<Direction, 6> kDirections = {
    Direction::E,  Direction::NE, Direction::NW,
    Direction::W,  Direction::SW, Direction::SE};

// Axial offsets, index-aligned with kDirections.
inline constexpr std::array<HexCoord, 6> kDirectionOffsets = {
    HexCoord{1, 0},  HexCoord{1, -1}, HexCoord{0, -1},
    HexCoord{-1, 0}, HexCoord{-1, 1}, HexCoord{0, 1}};

inline constexpr int direction_index(Direction d) { return static_cast<int>(d); }

inline constexpr Direction opposite(Direction d) {
  return static_cast<Direction>((direction_index(d) + 3) % 6);
}

inline constexpr std::string_view direction_name(Direction d) {
  constexpr std::array<std::string_view, 6> names = {"E", "NE", "NW", "W", "SW", "SE"};
  return names[static_cast<size_t>(direction_index(d))];
}

// Exact-token lookup ("E".."SE", uppercase only). Returns false on anything else.
inline bool direction_from_token(std::string_view token, Direction& out) {
  for (Direction d : kDirections) {
    if (direction_name(d) == token) {
      out = d;
      return true;
    }
  }
  return false;
}

inline constexpr HexCoord step(const HexCoord& c, Direction d) {
  const HexCoord& off = kDirectionOffsets[static_cast<size_t>(direction_index(d))];
  return HexCoord{c.q + off.q, c.r + off.r};
}

/// The six adjacent cells in canonical direction order.
inline constexpr std::array<HexCoord, 6> neighbors(const HexCoord& c) {
  std::array<HexCoord, 6> out{};
  for (size_t i = 0; i < 6; ++i) {
    out[i] = HexCoord{c.q + kDirectionOffsets[i].q, c.r + kDirectionOffsets[i].r};
  }
  return out;
}

/// Minimal number of neighbor steps between two cells on an empty grid
/// (cube-coordinate formula; validated against a BFS oracle in the tests).
inline constexpr int hex_distance(const HexCoord& a, const HexCoord& b) {
  const int dq = a.q - b.q;
  const int dr = a.r - b.r;
  const int ds = dq + dr;  // cube y differs by -(dq+dr)
  const int aq = dq < 0 ? -dq : dq;
  const int ar = dr < 0 ? -dr : dr;
  const int as = ds < 0 ? -ds : ds;
  return (aq + ar + as) / 2;
}

/**
 * Pointy-top embedding of a cell center; adjacent centers are exactly
 * `cell_spacing` apart. +x is E, +y is the SE/SW half-plane, so on screen
 * (y down) the direction names match compass intuition.
 */
inline std::pair<double, double> to_cartesian(const HexCoord& c, double cell_spacing) {
  const double x = cell_spacing * (static_cast<double>(c.q) + 0.5 * static_cast<double>(c.r));
  const double y = cell_spacing * (std::sqrt(3.0) / 2.0) * static_cast<double>(c.r);
  return {x, y};
}

// 60-degree axial rotations about the origin.
inline constexpr HexCoord rotate_cw(const HexCoord& v) { return HexCoord{-v.r, v.q + v.r}; }
inline constexpr HexCoord rotate_ccw(const HexCoord& v) { return HexCoord{v.q + v.r, -v.q}; }

namespace detail {
// Closed sector around direction E: angle within [-30, +30] degrees.
// Integer form of 3|r| <= 2q + r in the unit-spacing embedding.
inline constexpr bool in_e_sector(const HexCoord& v) {
  return v.r >= 0 ? v.q >= v.r : v.q >= -2 * v.r;
}
}  // namespace detail

/**
 * The unit direction whose embedding angle is closest to the vector
 * from -> to. Exact 30-degree ties resolve to the lower canonical index,
 * so results are integer-exact and platform independent.
 * Undefined inputs (from == to) return E.
 */
inline constexpr Direction bearing(const HexCoord& from, const HexCoord& to) {
  HexCoord v{to.q - from.q, to.r - from.r};
  if (v.q == 0 && v.r == 0) return Direction::E;
  for (int k = 0; k < 6; ++k) {
    if (detail::in_e_sector(v)) return static_cast<Direction>(k);
    v = rotate_cw(v);
  }
  return Direction::E;  // unreachable: closed sectors cover the plane
}

/// Position of direction d in the canonical order rotated to start at `first`.
inline constexpr int rotation_index(Direction d, Direction first) {
  return (direction_index(d) - direction_index(first) + 6) % 6;
}

}  // namespace satplan

template <>
struct std::hash<satplan::HexCoord> {
  size_t operator()(const satplan::HexCoord& c) const noexcept {
    const uint64_t a = static_cast<uint32_t>(c.q);
    const uint64_t b = static_cast<uint32_t>(c.r);
    uint64_t h = (a << 32) ^ b;
    h ^= h >> 33;
    h *= 0xff51afd7ed558ccdULL;
    h ^= h >> 33;
    return static_cast<size_t>(h);
  }
};
