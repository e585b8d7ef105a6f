#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "bapp/errors.hpp"

namespace bapp {

using CellIndex = std::size_t;

/// Row-major a x b grid.
struct GridDims {
  int rows = 0;
  int cols = 0;

  GridDims() = default;
  GridDims(int r, int c) : rows(r), cols(c) {
    if (r < 1 || c < 1) {
      throw InvalidParameter("grid must have at least one row and one column");
    }
  }

  [[nodiscard]] std::size_t cell_count() const {
    return static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
  }
  [[nodiscard]] bool contains(int r, int c) const {
    return r >= 0 && r < rows && c >= 0 && c < cols;
  }
  [[nodiscard]] bool contains(CellIndex cell) const { return cell < cell_count(); }
  [[nodiscard]] CellIndex index(int r, int c) const {
    return static_cast<CellIndex>(r) * static_cast<CellIndex>(cols) + static_cast<CellIndex>(c);
  }
  [[nodiscard]] int row(CellIndex cell) const { return static_cast<int>(cell / static_cast<CellIndex>(cols)); }
  [[nodiscard]] int col(CellIndex cell) const { return static_cast<int>(cell % static_cast<CellIndex>(cols)); }
  [[nodiscard]] CellIndex center() const { return index(rows / 2, cols / 2); }

  friend bool operator==(const GridDims&, const GridDims&) = default;
};

/// Set of cells a robot may occupy. A default-constructed mask allows every cell.
class CellMask {
 public:
  CellMask() = default;
  explicit CellMask(std::size_t cell_count) : allowed_(cell_count, 0) {}

  static CellMask all() { return CellMask(); }

  [[nodiscard]] bool unrestricted() const { return allowed_.empty(); }
  [[nodiscard]] bool allows(CellIndex cell) const {
    return allowed_.empty() || (cell < allowed_.size() && allowed_[cell] != 0);
  }
  void allow(CellIndex cell) {
    if (cell >= allowed_.size()) {
      throw OutOfBounds("mask cell out of range");
    }
    allowed_[cell] = 1;
  }
  [[nodiscard]] std::size_t allowed_count(std::size_t cell_count) const;

 private:
  std::vector<std::uint8_t> allowed_;
};

inline std::size_t CellMask::allowed_count(std::size_t cell_count) const {
  if (allowed_.empty()) {
    return cell_count;
  }
  std::size_t n = 0;
  for (auto a : allowed_) {
    n += a;
  }
  return n;
}

/// A fixed-horizon path. `start` is where the robot is released (the base);
/// `cells` are the T cells it then occupies, in order.
struct Trajectory {
  CellIndex start = 0;
  std::vector<CellIndex> cells;

  [[nodiscard]] std::size_t horizon() const { return cells.size(); }
  friend bool operator==(const Trajectory&, const Trajectory&) = default;
};

/// Distinct cells of a path in first-visit order.
std::vector<CellIndex> distinct_cells(const std::vector<CellIndex>& cells);

}  // namespace bapp
