#pragma once

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <string>

namespace dmfb {

// One electrode of the DMFB grid. x is the column, y the row; y grows
// southward (row 0 is the north edge).
struct Cell {
  int x = 0;
  int y = 0;

  friend bool operator==(const Cell& a, const Cell& b) = default;
  friend auto operator<=>(const Cell& a, const Cell& b) = default;
};

enum class Direction : std::uint8_t { North, South, East, West, Hold };

inline int manhattan(Cell a, Cell b) {
  return std::abs(a.x - b.x) + std::abs(a.y - b.y);
}

inline Cell step(Cell c, Direction d) {
  switch (d) {
    case Direction::North: return {c.x, c.y - 1};
    case Direction::South: return {c.x, c.y + 1};
    case Direction::East: return {c.x + 1, c.y};
    case Direction::West: return {c.x - 1, c.y};
    case Direction::Hold: return c;
  }
  return c;
}

// Direction of the unit step from `from` to `to`; Hold when equal.
Direction direction_between(Cell from, Cell to);

const char* direction_name(Direction d);

inline std::uint64_t cell_key(Cell c) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(c.y)) << 32) |
         static_cast<std::uint32_t>(c.x);
}

inline std::string cell_str(Cell c) {
  return std::to_string(c.x) + "," + std::to_string(c.y);
}

struct CellHash {
  std::size_t operator()(const Cell& c) const {
    return std::hash<std::uint64_t>{}(cell_key(c));
  }
};

}  // namespace dmfb
