#include "percgame/perc.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <stdexcept>

namespace percgame {

namespace {

void check_box(const BoxSpec& box) {
  if (box.half_width < 1 || box.half_height < 1) throw std::invalid_argument("box half-width and half-height must be >= 1");
}

// First column offset in row y holding a lattice vertex.
std::int64_t first_parity_offset(const BoxSpec& box, std::int64_t y) noexcept {
  return is_vertex(box.x_min(), y) ? 0 : 1;
}

}  // namespace

BoxSpec BoxSpec::from_real(Vertex center, double half_width, double half_height) {
  return BoxSpec{center, static_cast<std::int64_t>(std::floor(half_width)),
                 static_cast<std::int64_t>(std::floor(half_height))};
}

bool is_vertical_path(const VerticalPath& path) noexcept {
  for (std::size_t i = 0; i < path.vertices.size(); ++i) {
    if (!is_vertex(path.vertices[i])) return false;
    if (i == 0) continue;
    const auto& a = path.vertices[i - 1];
    const auto& b = path.vertices[i];
    if (b.y != a.y + 1 || (b.x - a.x != 1 && b.x - a.x != -1)) return false;
  }
  return true;
}

bool is_open_path(const Configuration& config, const VerticalPath& path) {
  if (!is_vertical_path(path)) return false;
  for (std::size_t i = 1; i < path.vertices.size(); ++i) {
    const auto& a = path.vertices[i - 1];
    if (!config.is_open(EdgeId{a, static_cast<int>(path.vertices[i].x - a.x)})) return false;
  }
  return true;
}

RowTable::RowTable(const BoxSpec& box) : box_(box) {
  check_box(box);
  rows_.assign(static_cast<std::size_t>(box.height()), BitRow(static_cast<std::size_t>(box.width())));
}

bool RowTable::contains(const Vertex& v) const noexcept {
  if (!box_.contains(v)) return false;
  return rows_[static_cast<std::size_t>(v.y - box_.y_min())].test(static_cast<std::size_t>(v.x - box_.x_min()));
}

std::vector<Vertex> RowTable::vertices_in_row(std::size_t r) const {
  std::vector<Vertex> out;
  const auto y = box_.y_min() + static_cast<std::int64_t>(r);
  for (std::size_t i = 0; i < rows_[r].width(); ++i)
    if (rows_[r].test(i)) out.push_back({box_.x_min() + static_cast<std::int64_t>(i), y});
  return out;
}

RowMasks row_masks(const Configuration& config, const BoxSpec& box, std::int64_t y) {
  const auto w = static_cast<std::size_t>(box.width());
  RowMasks m{BitRow(w), BitRow(w)};
  const auto x0 = box.x_min();
  auto* right = m.right.data();
  auto* left = m.left.data();
  const auto w1 = box.width() - 1;
  // Branch-free: the open bits are close to coin flips.
  for (auto i = first_parity_offset(box, y); i < box.width(); i += 2) {
    const auto x = x0 + i;
    const auto word = static_cast<std::size_t>(i) >> 6;
    const auto bit = static_cast<unsigned>(i & 63);
    right[word] |= static_cast<std::uint64_t>(i < w1 && config.is_open(x, y, +1)) << bit;
    left[word] |= static_cast<std::uint64_t>(i > 0 && config.is_open(x, y, -1)) << bit;
  }
  return m;
}

RowTable reach_up(const Configuration& config, const BoxSpec& box, std::span<const Vertex> sources) {
  RowTable table(box);
  for (const auto& s : sources) {
    if (s.y == box.y_min() && box.contains(s) && is_vertex(s))
      table.row(0).set(static_cast<std::size_t>(s.x - box.x_min()));
  }
  for (std::size_t r = 1; r < table.rows(); ++r) {
    const auto& prev = table.row(r - 1);
    if (!prev.any()) break;
    const auto masks = row_masks(config, box, box.y_min() + static_cast<std::int64_t>(r) - 1);
    BitRow::sweep_up(prev, masks.right, masks.left, table.row(r));
  }
  return table;
}

RowTable reach_up(const Configuration& config, const BoxSpec& box) {
  std::vector<Vertex> bottom;
  const auto y = box.y_min();
  for (auto i = first_parity_offset(box, y); i < box.width(); i += 2) bottom.push_back({box.x_min() + i, y});
  return reach_up(config, box, bottom);
}

RowTable reach_down(const Configuration& config, const BoxSpec& box) {
  RowTable table(box);
  const auto top = table.rows() - 1;
  const auto y_top = box.y_max();
  for (auto i = first_parity_offset(box, y_top); i < box.width(); i += 2) table.row(top).set(static_cast<std::size_t>(i));
  for (std::size_t r = top; r-- > 0;) {
    const auto& above = table.row(r + 1);
    if (!above.any()) break;
    const auto masks = row_masks(config, box, box.y_min() + static_cast<std::int64_t>(r));
    BitRow::sweep_down(above, masks.right, masks.left, table.row(r));
  }
  return table;
}

bool has_vertical_crossing(const Configuration& config, const BoxSpec& box) {
  check_box(box);
  const auto w = static_cast<std::size_t>(box.width());
  BitRow cur(w), next(w);
  const auto y0 = box.y_min();
  for (auto i = first_parity_offset(box, y0); i < box.width(); i += 2) cur.set(static_cast<std::size_t>(i));
  for (auto y = y0; y < box.y_max(); ++y) {
    const auto masks = row_masks(config, box, y);
    BitRow::sweep_up(cur, masks.right, masks.left, next);
    if (!next.any()) return false;
    std::swap(cur, next);
  }
  return cur.any();
}

std::optional<VerticalPath> leftmost_crossing_path(const Configuration& config, const BoxSpec& box) {
  const auto table = reach_up(config, box);
  const auto top = table.rows() - 1;
  const auto i_top = table.row(top).first();
  if (i_top >= table.row(top).width()) return std::nullopt;

  VerticalPath path;
  path.vertices.resize(table.rows());
  auto x = box.x_min() + static_cast<std::int64_t>(i_top);
  path.vertices[top] = {x, box.y_max()};
  for (std::size_t r = top; r-- > 0;) {
    const auto y = box.y_min() + static_cast<std::int64_t>(r);
    const auto& row = table.row(r);
    const auto left = x - 1;
    const bool left_ok = left >= box.x_min() && row.test(static_cast<std::size_t>(left - box.x_min())) &&
                         config.is_open(left, y, +1);
    x = left_ok ? left : x + 1;
    path.vertices[r] = {x, y};
  }
  return path;
}

RowTable crossing_vertices(const Configuration& config, const BoxSpec& box) {
  auto up = reach_up(config, box);
  const auto down = reach_down(config, box);
  for (std::size_t r = 0; r < up.rows(); ++r) {
    auto* a = up.row(r).data();
    const auto* b = down.row(r).data();
    for (std::size_t k = 0; k < up.row(r).word_count(); ++k) a[k] &= b[k];
  }
  return up;
}

std::int64_t max_oriented_path_cost(const Configuration& config, const Vertex& start, std::int64_t length) {
  if (length < 1) throw std::invalid_argument("path length must be >= 1");
  // best[k] is the value at x = start.x - length + k; -1 marks unreachable.
  const auto span = static_cast<std::size_t>(2 * length + 1);
  std::vector<std::int64_t> best(span, -1), next(span, -1);
  best[static_cast<std::size_t>(length)] = 0;
  for (std::int64_t t = 0; t < length; ++t) {
    std::fill(next.begin(), next.end(), -1);
    const auto y = start.y + t;
    for (auto k = length - t; k <= length + t; k += 2) {
      const auto v = best[static_cast<std::size_t>(k)];
      if (v < 0) continue;
      const auto x = start.x - length + k;
      auto& r = next[static_cast<std::size_t>(k + 1)];
      r = std::max(r, v + (config.is_open(x, y, +1) ? 1 : 0));
      auto& l = next[static_cast<std::size_t>(k - 1)];
      l = std::max(l, v + (config.is_open(x, y, -1) ? 1 : 0));
    }
    std::swap(best, next);
  }
  return *std::max_element(best.begin(), best.end());
}

bool is_face_center(std::int64_t x, std::int64_t y) noexcept { return ((x + y) & 1) != 0; }

std::array<EdgeId, 4> square_edges(std::int64_t cx, std::int64_t cy) {
  if (!is_face_center(cx, cy)) throw std::invalid_argument("square center must have odd coordinate sum");
  return {EdgeId{{cx - 1, cy}, +1}, EdgeId{{cx + 1, cy}, -1}, EdgeId{{cx, cy - 1}, +1}, EdgeId{{cx, cy - 1}, -1}};
}

bool is_zero_square(const Configuration& config, std::int64_t cx, std::int64_t cy) {
  for (const auto& e : square_edges(cx, cy))
    if (config.is_open(e)) return false;
  return true;
}

bool squares_adjacent(const FaceCenter& a, const FaceCenter& b) noexcept {
  const auto dx = b.x - a.x;
  const auto dy = b.y - a.y;
  return (dy == 0 && (dx == 2 || dx == -2)) || ((dy == 1 || dy == -1) && (dx == 1 || dx == -1));
}

std::optional<SquareChain> find_zero_chain(const Configuration& config, const BoxSpec& window) {
  check_box(window);
  const auto w = window.width();
  const auto h = window.height();
  const auto x0 = window.x_min();
  const auto y0 = window.y_min();
  const auto index = [&](std::int64_t x, std::int64_t y) { return static_cast<std::size_t>((y - y0) * w + (x - x0)); };
  const auto inside = [&](std::int64_t x, std::int64_t y) {
    return x >= x0 && x <= window.x_max() && y >= y0 && y <= window.y_max();
  };

  std::vector<std::uint8_t> zero(static_cast<std::size_t>(w * h), 0);
  for (auto y = y0; y <= window.y_max(); ++y)
    for (auto x = x0; x <= window.x_max(); ++x)
      if (is_face_center(x, y) && is_zero_square(config, x, y)) zero[index(x, y)] = 1;

  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> parent(zero.size(), kNone);
  std::vector<std::uint8_t> seen(zero.size(), 0);
  std::deque<FaceCenter> queue;
  for (auto y = y0; y <= window.y_max(); ++y)
    for (auto x = x0; x <= std::min(x0 + 1, window.x_max()); ++x)
      if (zero[index(x, y)]) {
        seen[index(x, y)] = 1;
        queue.push_back({x, y});
      }

  static constexpr std::array<std::array<int, 2>, 6> kSteps{{{2, 0}, {1, 1}, {1, -1}, {-1, 1}, {-1, -1}, {-2, 0}}};
  while (!queue.empty()) {
    const auto c = queue.front();
    queue.pop_front();
    if (c.x >= window.x_max() - 1) {
      SquareChain chain;
      for (auto at = index(c.x, c.y);; at = parent[at]) {
        const auto y = y0 + static_cast<std::int64_t>(at) / w;
        const auto x = x0 + static_cast<std::int64_t>(at) % w;
        chain.centers.push_back({x, y});
        if (parent[at] == kNone) break;
      }
      std::reverse(chain.centers.begin(), chain.centers.end());
      return chain;
    }
    for (const auto& [sx, sy] : kSteps) {
      const auto nx = c.x + sx;
      const auto ny = c.y + sy;
      if (!inside(nx, ny)) continue;
      const auto k = index(nx, ny);
      if (!zero[k] || seen[k]) continue;
      seen[k] = 1;
      parent[k] = index(c.x, c.y);
      queue.push_back({nx, ny});
    }
  }
  return std::nullopt;
}

}  // namespace percgame
