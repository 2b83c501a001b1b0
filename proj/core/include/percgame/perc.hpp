#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "percgame/bitrow.hpp"
#include "percgame/lattice.hpp"

namespace percgame {

// Vertex set center + (-m, m] x (-n, n] intersected with L. The center is any
// integer point; boxes of a tessellation need not be centered on L.
struct BoxSpec {
  Vertex center;
  std::int64_t half_width = 1;   // m >= 1
  std::int64_t half_height = 1;  // n >= 1

  // Non-integer dimensions are floored.
  static BoxSpec from_real(Vertex center, double half_width, double half_height);

  std::int64_t x_min() const noexcept { return center.x - half_width + 1; }
  std::int64_t x_max() const noexcept { return center.x + half_width; }
  std::int64_t y_min() const noexcept { return center.y - half_height + 1; }
  std::int64_t y_max() const noexcept { return center.y + half_height; }
  std::int64_t width() const noexcept { return 2 * half_width; }
  std::int64_t height() const noexcept { return 2 * half_height; }
  bool contains(const Vertex& v) const noexcept {
    return v.x >= x_min() && v.x <= x_max() && v.y >= y_min() && v.y <= y_max();
  }
};

// Upward path: each step is (+-1, +1).
struct VerticalPath {
  std::vector<Vertex> vertices;

  bool empty() const noexcept { return vertices.empty(); }
  std::int64_t y_first() const noexcept { return vertices.front().y; }
  std::int64_t y_last() const noexcept { return vertices.back().y; }
  bool covers_row(std::int64_t y) const noexcept { return !empty() && y >= y_first() && y <= y_last(); }
  // Precondition: covers_row(y).
  std::int64_t x_at(std::int64_t y) const noexcept { return vertices[static_cast<std::size_t>(y - y_first())].x; }
  bool contains(const Vertex& v) const noexcept { return covers_row(v.y) && x_at(v.y) == v.x; }
};

bool is_vertical_path(const VerticalPath& path) noexcept;
bool is_open_path(const Configuration& config, const VerticalPath& path);

// Per-row bitsets over a box, row 0 = y_min(), bit i = x_min() + i.
class RowTable {
 public:
  RowTable() = default;
  explicit RowTable(const BoxSpec& box);

  const BoxSpec& box() const noexcept { return box_; }
  std::size_t rows() const noexcept { return rows_.size(); }
  const BitRow& row(std::size_t r) const noexcept { return rows_[r]; }
  BitRow& row(std::size_t r) noexcept { return rows_[r]; }

  bool contains(const Vertex& v) const noexcept;
  std::vector<Vertex> vertices_in_row(std::size_t r) const;

 private:
  BoxSpec box_;
  std::vector<BitRow> rows_;
};

// Open-edge masks of one box row: right.test(i) iff the edge from
// (x_min + i, y) to (x_min + i + 1, y + 1) is open; left likewise toward x - 1.
// Edges leaving the box laterally are reported closed.
struct RowMasks {
  BitRow right;
  BitRow left;
};
RowMasks row_masks(const Configuration& config, const BoxSpec& box, std::int64_t y);

// Vertices reachable from `sources` (bottom-row vertices) by open upward paths
// inside the box, one row at a time. Sources outside the bottom row are ignored.
RowTable reach_up(const Configuration& config, const BoxSpec& box, std::span<const Vertex> sources);
RowTable reach_up(const Configuration& config, const BoxSpec& box);

// Vertices from which an open upward path inside the box reaches the top row.
RowTable reach_down(const Configuration& config, const BoxSpec& box);

bool has_vertical_crossing(const Configuration& config, const BoxSpec& box);

// Pointwise left-most open crossing, extracted backward from the reach table
// with a left-predecessor preference.
std::optional<VerticalPath> leftmost_crossing_path(const Configuration& config, const BoxSpec& box);

// Vertices lying on at least one open vertical crossing of the box.
RowTable crossing_vertices(const Configuration& config, const BoxSpec& box);

// Last-passage value: maximum number of open edges over upward paths of
// `length` edges from `start`.
std::int64_t max_oriented_path_cost(const Configuration& config, const Vertex& start, std::int64_t length);

// Face centers have odd coordinate sum. The four edges join (x-1,y), (x,y+1),
// (x+1,y), (x,y-1) cyclically.
bool is_face_center(std::int64_t x, std::int64_t y) noexcept;
std::array<EdgeId, 4> square_edges(std::int64_t cx, std::int64_t cy);
bool is_zero_square(const Configuration& config, std::int64_t cx, std::int64_t cy);

struct FaceCenter {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend constexpr bool operator==(const FaceCenter&, const FaceCenter&) = default;
};

// Consecutive centers differ by (+-2, 0) or (+-1, +-1).
struct SquareChain {
  std::vector<FaceCenter> centers;
};

bool squares_adjacent(const FaceCenter& a, const FaceCenter& b) noexcept;

// Breadth-first search over 0-square centers of the window, from the two
// left-most center columns to the two right-most ones.
std::optional<SquareChain> find_zero_chain(const Configuration& config, const BoxSpec& window);

}  // namespace percgame
