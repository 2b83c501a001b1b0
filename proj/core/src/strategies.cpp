#include "percgame/strategies.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

namespace percgame {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) noexcept {
  const auto q = a / b;
  return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) noexcept { return -floor_div(-a, b); }

BitRow shifted_down(const BitRow& a) {  // bit i <- bit i + 1
  BitRow out(a.width());
  const auto n = a.word_count();
  for (std::size_t k = 0; k < n; ++k)
    out.data()[k] = (a.data()[k] >> 1) | (k + 1 < n ? a.data()[k + 1] << 63 : 0);
  return out;
}

BitRow shifted_up(const BitRow& a) {  // bit i <- bit i - 1
  BitRow out(a.width());
  const auto n = a.word_count();
  for (std::size_t k = 0; k < n; ++k) out.data()[k] = (a.data()[k] << 1) | (k > 0 ? a.data()[k - 1] >> 63 : 0);
  if (const auto rem = a.width() & 63; rem && n) out.data()[n - 1] &= (std::uint64_t{1} << rem) - 1;
  return out;
}

void and_into(BitRow& dst, const BitRow& src) {
  for (std::size_t k = 0; k < dst.word_count(); ++k) dst.data()[k] &= src.data()[k];
}

void or_into(BitRow& dst, const BitRow& src) {
  for (std::size_t k = 0; k < dst.word_count(); ++k) dst.data()[k] |= src.data()[k];
}

}  // namespace

Lateral follow_path_response(const VerticalPath& path, const Vertex& current, Vertical announced) {
  if (!path.contains(current)) throw std::invalid_argument("current vertex is not on the path");
  const auto next_y = current.y + dy_of(announced);
  if (!path.covers_row(next_y)) throw std::out_of_range("path has no neighbour in the announced direction");
  return path.x_at(next_y) > current.x ? Lateral::Right : Lateral::Left;
}

Lateral lateral_toward(std::int64_t from_x, std::int64_t target_x) noexcept {
  return target_x >= from_x ? Lateral::Right : Lateral::Left;
}

Lateral chase_path(const VerticalPath& path, const GameView& view, Vertical announced) {
  const auto next_y = view.current.y + dy_of(announced);
  if (!path.covers_row(next_y)) return GreedyMax::choose(view.config, view.current, announced);
  if (path.contains(view.current)) return follow_path_response(path, view.current, announced);
  return lateral_toward(view.current.x, path.x_at(next_y));
}

Lateral ride_crossings(const RowTable& crossings, const GameView& view, Vertical announced) {
  const auto& v = view.current;
  const auto& box = crossings.box();
  const int dy = dy_of(announced);
  const auto next_y = v.y + dy;
  if (next_y < box.y_min() || next_y > box.y_max()) return GreedyMax::choose(view.config, v, announced);
  if (crossings.contains(v)) {
    for (auto a : {Lateral::Right, Lateral::Left}) {
      if (view.config.is_open(edge_between(v, dx_of(a), dy)) && crossings.contains(Vertex{v.x + dx_of(a), next_y}))
        return a;
    }
    return GreedyMax::choose(view.config, v, announced);
  }
  const auto& row = crossings.row(static_cast<std::size_t>(next_y - box.y_min()));
  std::optional<std::int64_t> best;
  for (std::size_t i = 0; i < row.width(); ++i) {
    if (!row.test(i)) continue;
    const auto x = box.x_min() + static_cast<std::int64_t>(i);
    if (!best || std::abs(x - v.x) <= std::abs(*best - v.x)) best = x;
  }
  if (!best) return GreedyMax::choose(view.config, v, announced);
  return lateral_toward(v.x, *best);
}

// -- GreedyMin / GreedyMax -------------------------------------------------------

Vertical GreedyMin::choose(const Configuration& config, const Vertex& v, const Vertex& start) {
  const auto worst = [&](int dy) {
    return std::max(edge_cost(config, edge_between(v, +1, dy)), edge_cost(config, edge_between(v, -1, dy)));
  };
  const int top = worst(+1);
  const int bottom = worst(-1);
  if (top != bottom) return top < bottom ? Vertical::Top : Vertical::Bottom;
  return v.y > start.y ? Vertical::Bottom : Vertical::Top;
}

Vertical GreedyMin::act(const GameView& view) { return choose(view.config, view.current, view.start); }

Lateral GreedyMax::choose(const Configuration& config, const Vertex& v, Vertical announced) {
  const int dy = dy_of(announced);
  const int right = edge_cost(config, edge_between(v, +1, dy));
  const int left = edge_cost(config, edge_between(v, -1, dy));
  return right >= left ? Lateral::Right : Lateral::Left;
}

Lateral GreedyMax::respond(const GameView& view, Vertical announced) {
  return choose(view.config, view.current, announced);
}

// -- ZeroPathTrap ------------------------------------------------------------------

std::string ZeroPathTrap::name() const {
  std::string out = "zero_trap";
  if (params_.half_width > 0) out += fmt::format(":width={}", params_.half_width);
  if (params_.half_height > 0) out += fmt::format(":height={}", params_.half_height);
  if (params_.squares_only) out += ":squares=1";
  return out;
}

BoxSpec ZeroPathTrap::default_window(const Vertex& start, std::int64_t horizon, const ZeroTrapParams& params) {
  return BoxSpec{start, params.half_width > 0 ? params.half_width : horizon + 2,
                 params.half_height > 0 ? params.half_height : 20};
}

bool ZeroPathTrap::zero_edge(std::int64_t x, std::int64_t y, int dx) const noexcept {
  const auto r = y - gy0_;
  const auto i = x - gx0_;
  if (r < 0 || r >= gh_ || i < 0 || i >= gw_) return false;
  const auto& row = dx > 0 ? zero_right_[static_cast<std::size_t>(r)] : zero_left_[static_cast<std::size_t>(r)];
  return row.test(static_cast<std::size_t>(i));
}

bool ZeroPathTrap::in_trap_region(const Vertex& v, std::int64_t remaining) const noexcept {
  const auto r = v.y - gy0_;
  const auto i = v.x - gx0_;
  if (depth_.empty() || r < 0 || r >= gh_ || i < 0 || i >= gw_) return false;
  return depth_[static_cast<std::size_t>(r * gw_ + i)] >= remaining;
}

bool ZeroPathTrap::safe_move(const Vertex& v, Vertical a, std::int64_t level) const noexcept {
  const int dy = dy_of(a);
  for (int dx : {+1, -1}) {
    const auto e = edge_between(v, dx, dy);
    if (!zero_edge(e.lower.x, e.lower.y, e.dx)) return false;
    if (!in_trap_region(Vertex{v.x + dx, v.y + dy}, level)) return false;
  }
  return true;
}

void ZeroPathTrap::prepare(const GameView& view) {
  prepared_ = true;
  const auto window = default_window(view.start, view.horizon, params_);
  chain_ = find_zero_chain(view.config, window);
  if (params_.squares_only && !chain_) return;

  // Vertex grid: one extra column and row around the window's face centers.
  gx0_ = window.x_min() - 1;
  gy0_ = window.y_min() - 1;
  gw_ = window.width() + 2;
  gh_ = window.height() + 2;
  const auto w = static_cast<std::size_t>(gw_);
  zero_right_.assign(static_cast<std::size_t>(gh_), BitRow(w));
  zero_left_.assign(static_cast<std::size_t>(gh_), BitRow(w));
  const auto mark = [&](const EdgeId& e) {
    const auto r = e.lower.y - gy0_;
    const auto i = e.lower.x - gx0_;
    if (r < 0 || r >= gh_ || i < 0 || i >= gw_) return;
    auto& row = e.dx > 0 ? zero_right_[static_cast<std::size_t>(r)] : zero_left_[static_cast<std::size_t>(r)];
    row.set(static_cast<std::size_t>(i));
  };
  if (params_.squares_only) {
    for (auto cy = window.y_min(); cy <= window.y_max(); ++cy)
      for (auto cx = window.x_min(); cx <= window.x_max(); ++cx)
        if (is_face_center(cx, cy) && is_zero_square(view.config, cx, cy))
          for (const auto& e : square_edges(cx, cy)) mark(e);
  } else {
    for (auto y = gy0_; y + 1 < gy0_ + gh_; ++y)
      for (auto x = gx0_; x < gx0_ + gw_; ++x)
        if (is_vertex(x, y))
          for (const int dx : {+1, -1})
            if (!view.config.is_open(x, y, dx)) mark(EdgeId{{x, y}, dx});
  }

  // Level k holds the vertices from which Player 1 can keep every one of the
  // next k edges at cost 0 whatever the lateral replies. Levels are nested, so
  // depth_ keeps the largest k per vertex (kUnbounded past a fixed point).
  const auto rows = static_cast<std::size_t>(gh_);
  std::vector<BitRow> level(rows, BitRow(w));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::int64_t i = 0; i < gw_; ++i)
      if (is_vertex(gx0_ + i, gy0_ + static_cast<std::int64_t>(r))) level[r].set(static_cast<std::size_t>(i));
  const auto grid = level;
  depth_.assign(rows * w, 0);
  // Stamps depth k on the vertices of `from` missing from `to` (all of them
  // when `to` is null).
  const auto stamp = [&](const std::vector<BitRow>& from, const std::vector<BitRow>* to, std::int64_t k) {
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t word = 0; word < from[r].word_count(); ++word) {
        auto bits = from[r].data()[word] & (to ? ~(*to)[r].data()[word] : ~std::uint64_t{0});
        for (; bits; bits &= bits - 1)
          depth_[r * w + word * 64 + static_cast<std::size_t>(std::countr_zero(bits))] = k;
      }
  };
  std::int64_t k = 1;
  for (; k <= view.horizon; ++k) {
    std::vector<BitRow> next(rows, BitRow(w));
    for (std::size_t r = 0; r < rows; ++r) {
      if (r + 1 < rows) {
        BitRow top = zero_right_[r];
        and_into(top, zero_left_[r]);
        and_into(top, shifted_down(level[r + 1]));
        and_into(top, shifted_up(level[r + 1]));
        or_into(next[r], top);
      }
      if (r > 0) {
        BitRow bottom = shifted_down(zero_left_[r - 1]);
        and_into(bottom, shifted_up(zero_right_[r - 1]));
        and_into(bottom, shifted_down(level[r - 1]));
        and_into(bottom, shifted_up(level[r - 1]));
        or_into(next[r], bottom);
      }
    }
    if (next == level) break;  // fixed point: deeper levels are identical
    stamp(level, &next, k - 1);
    level = std::move(next);
  }
  stamp(level, nullptr, k > view.horizon ? view.horizon : kUnbounded);

  // attractor_[j]: vertices from which Player 1 can force the token into the
  // deepest level within j stages, whatever the lateral replies.
  attractor_.clear();
  attractor_.push_back(level);
  for (std::int64_t j = 1; j <= 4 * gh_; ++j) {
    const auto& prev = attractor_.back();
    auto next = prev;
    for (std::size_t r = 0; r < rows; ++r) {
      for (const auto nb : {r + 1, r - 1}) {
        if (nb >= rows) continue;
        BitRow both = shifted_down(prev[nb]);
        and_into(both, shifted_up(prev[nb]));
        and_into(both, grid[r]);
        or_into(next[r], both);
      }
    }
    if (next == prev) break;
    attractor_.push_back(std::move(next));
  }
  trap_ready_ = std::any_of(level.begin(), level.end(), [](const BitRow& r) { return r.any(); });
}

bool ZeroPathTrap::in_set(const std::vector<BitRow>& set, const Vertex& v) const noexcept {
  const auto r = v.y - gy0_;
  const auto i = v.x - gx0_;
  if (r < 0 || r >= gh_ || i < 0 || i >= gw_) return false;
  return set[static_cast<std::size_t>(r)].test(static_cast<std::size_t>(i));
}

Vertical ZeroPathTrap::act(const GameView& view) {
  if (!prepared_) prepare(view);
  if (!trap_ready_) return GreedyMin::choose(view.config, view.current, view.start);

  const auto remaining = view.horizon - view.stage + 1;
  const auto& v = view.current;
  if (in_trap_region(v, remaining)) {
    if (!arrival_) arrival_ = view.stage;
    return safe_move(v, Vertical::Top, remaining - 1) ? Vertical::Top : Vertical::Bottom;
  }
  for (std::size_t j = 1; j < attractor_.size(); ++j) {
    if (!in_set(attractor_[j], v)) continue;
    for (const auto a : {Vertical::Top, Vertical::Bottom}) {
      const int dy = dy_of(a);
      if (in_set(attractor_[j - 1], Vertex{v.x + 1, v.y + dy}) && in_set(attractor_[j - 1], Vertex{v.x - 1, v.y + dy}))
        return a;
    }
  }
  // Outside the attractor: head for the nearest row holding attractor vertices
  // in the current column or its neighbours.
  const auto& widest = attractor_.back();
  std::optional<std::int64_t> target;
  for (std::int64_t r = 0; r < gh_; ++r) {
    const auto y = gy0_ + r;
    bool hit = false;
    for (const auto dx : {-1, 0, 1}) hit = hit || in_set(widest, Vertex{v.x + dx, y});
    if (hit && (!target || std::abs(y - v.y) < std::abs(*target - v.y))) target = y;
  }
  if (target && *target > v.y) return Vertical::Top;
  if (target && *target < v.y) return Vertical::Bottom;
  return GreedyMin::choose(view.config, v, view.start);
}

// -- CrossingFollower --------------------------------------------------------------

std::string CrossingFollower::name() const {
  std::string out = "follower";
  if (params_.height > 0) out += fmt::format(":height={}", params_.height);
  if (params_.max_width > 0) out += fmt::format(":width={}", params_.max_width);
  return out;
}

void CrossingFollower::prepare(const GameView& view) {
  prepared_ = true;
  const auto height = params_.height > 0 ? params_.height : 2 * view.horizon;
  const auto max_width = std::max<std::int64_t>(1, params_.max_width > 0 ? params_.max_width : view.horizon);
  for (std::int64_t m = 1;; m = std::min(2 * m, max_width)) {
    const BoxSpec box{view.start, m, height};
    if (has_vertical_crossing(view.config, box)) {
      path_ = leftmost_crossing_path(view.config, box);
      crossing_ = crossing_vertices(view.config, box);
      return;
    }
    if (m == max_width) return;
  }
}

Lateral CrossingFollower::respond(const GameView& view, Vertical announced) {
  if (!prepared_) prepare(view);
  if (!path_) return GreedyMax::choose(view.config, view.current, announced);
  return ride_crossings(crossing_, view, announced);
}

// -- MultiscaleChaser ----------------------------------------------------------------

MultiscaleChaser::MultiscaleChaser(MultiscaleParams params) : params_(params) {
  if (!(params_.sigma > 0.0 && params_.sigma < 1.0)) throw std::invalid_argument("multiscale sigma must lie in (0, 1)");
  if (params_.max_scale < 1 || params_.max_scale > 14) throw std::invalid_argument("multiscale cap must lie in [1, 14]");
}

std::string MultiscaleChaser::name() const {
  std::string out = fmt::format("multiscale:sigma={}", params_.sigma);
  if (params_.max_scale != 14) out += fmt::format(":cap={}", params_.max_scale);
  return out;
}

std::int64_t MultiscaleChaser::schedule_stage(int n0, int k) noexcept {
  std::int64_t m = 1;
  for (int l = n0; l < n0 + k; ++l) m += std::int64_t{1} << (l - 1);
  return m;
}

BoxSpec MultiscaleChaser::scale_box(const Vertex& start, int n, double sigma) {
  const auto half_height = std::int64_t{1} << n;
  const auto half_width = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::floor(std::exp2(n * sigma))));
  return BoxSpec{start, half_width, half_height};
}

const std::optional<VerticalPath>& MultiscaleChaser::crossing_at(const GameView& view, int n) {
  auto it = paths_.find(n);
  if (it == paths_.end()) {
    const auto box = scale_box(view.start, n, params_.sigma);
    it = paths_.emplace(n, leftmost_crossing_path(view.config, box)).first;
  }
  return it->second;
}

void MultiscaleChaser::prepare(const GameView& view) {
  prepared_ = true;
  // Scales up to 2^n <= 4 * horizon, capped.
  int cap = 1;
  while (cap < params_.max_scale && (std::int64_t{1} << (cap + 1)) <= 4 * view.horizon) ++cap;

  for (int n0 = 1; n0 <= cap && !n0_; ++n0) {
    int last = n0;
    while (schedule_stage(n0, last - n0 + 1) <= view.horizon) ++last;
    if (last > cap) continue;
    bool ok = true;
    for (int n = n0; n <= last && ok; ++n) ok = crossing_at(view, n).has_value();
    if (ok) n0_ = n0;
  }
  if (n0_) return;
  for (int n = cap; n >= 1; --n) {
    if (crossing_at(view, n)) {
      fallback_ = n;
      return;
    }
  }
}

Lateral MultiscaleChaser::respond(const GameView& view, Vertical announced) {
  if (!prepared_) prepare(view);
  if (n0_) {
    int k = 0;
    while (schedule_stage(*n0_, k + 1) <= view.stage) ++k;
    return chase_path(*paths_.at(*n0_ + k), view, announced);
  }
  if (fallback_) return chase_path(*paths_.at(*fallback_), view, announced);
  return GreedyMax::choose(view.config, view.current, announced);
}

// -- GoodBoxNavigator ----------------------------------------------------------------

GoodBoxNavigator::GoodBoxNavigator(GoodBoxParams params) : params_(params) {
  if (params_.n < 2) throw std::invalid_argument("goodbox n must be >= 2");
  if (!(params_.sigma > 0.0 && params_.sigma < 1.0)) throw std::invalid_argument("goodbox sigma must lie in (0, 1)");
  m_ = static_cast<std::int64_t>(std::floor(std::pow(static_cast<double>(params_.n), params_.sigma)));
  if (m_ < 1) throw std::invalid_argument("goodbox needs floor(n^sigma) >= 1");
}

std::string GoodBoxNavigator::name() const { return fmt::format("goodbox:n={}:sigma={}", params_.n, params_.sigma); }

Vertex GoodBoxNavigator::center_for(const Vertex& v) const noexcept {
  const auto slit = ceil_div(v.x - m_, 2 * m_);
  const auto level = floor_div(2 * v.y + params_.n, 2 * params_.n);
  return Vertex{2 * m_ * slit, level * params_.n};
}

const GoodBoxNavigator::BoxInfo& GoodBoxNavigator::info(const Configuration& config, const Vertex& center) {
  const auto key = std::make_pair(center.x, center.y);
  auto it = boxes_.find(key);
  if (it == boxes_.end()) {
    BoxInfo b;
    const auto box = box_at(center);
    b.good = has_vertical_crossing(config, box);
    if (b.good) b.crossing = crossing_vertices(config, box);
    it = boxes_.emplace(key, std::move(b)).first;
  }
  return it->second;
}

void GoodBoxNavigator::enter(const Configuration& config, const Vertex& v, std::int64_t stage) {
  center_ = center_for(v);
  heading_.reset();
  visits_.push_back(Visit{*center_, info(config, *center_).good, stage});
}

Lateral GoodBoxNavigator::respond(const GameView& view, Vertical announced) {
  const auto& v = view.current;
  if (!center_ || !box_at(*center_).contains(v)) enter(view.config, v, view.stage);
  const auto& b = info(view.config, *center_);
  if (!b.good) return Lateral::Right;

  const auto box = box_at(*center_);
  const int dy = dy_of(announced);
  if (b.crossing.contains(v)) {
    heading_.reset();
    for (auto a : {Lateral::Right, Lateral::Left}) {
      const Vertex dest{v.x + dx_of(a), v.y + dy};
      if (!view.config.is_open(edge_between(v, dx_of(a), dy))) continue;
      if (!box.contains(dest) || b.crossing.contains(dest)) return a;
    }
    return GreedyMax::choose(view.config, v, announced);
  }
  if (!heading_) {
    const auto r = static_cast<std::size_t>(v.y - box.y_min());
    const auto& row = b.crossing.row(r);
    std::int64_t best = -1;
    for (std::size_t i = 0; i < row.width(); ++i) {
      if (!row.test(i)) continue;
      const auto x = box.x_min() + static_cast<std::int64_t>(i);
      if (best < 0 || std::abs(x - v.x) < std::abs(best - v.x) ||
          (std::abs(x - v.x) == std::abs(best - v.x) && x > best))
        best = x;
    }
    heading_ = lateral_toward(v.x, best);
  }
  return *heading_;
}

// -- Portfolio specs --------------------------------------------------------------------

namespace {

struct ParsedSpec {
  std::string name;
  std::map<std::string, std::string> params;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

ParsedSpec parse_spec(std::string_view spec) {
  ParsedSpec out;
  spec = trim(spec);
  auto colon = spec.find(':');
  out.name = std::string(trim(spec.substr(0, colon)));
  if (out.name.empty()) throw std::invalid_argument("empty strategy name");
  while (colon != std::string_view::npos) {
    spec.remove_prefix(colon + 1);
    colon = spec.find(':');
    const auto item = trim(spec.substr(0, colon));
    const auto eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0)
      throw std::invalid_argument(fmt::format("strategy parameter '{}' must be key=value", item));
    out.params[std::string(trim(item.substr(0, eq)))] = std::string(trim(item.substr(eq + 1)));
  }
  return out;
}

double take_real(ParsedSpec& s, const std::string& key, double fallback) {
  auto it = s.params.find(key);
  if (it == s.params.end()) return fallback;
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(it->second, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != it->second.size()) throw std::invalid_argument(fmt::format("{}: '{}' is not a number", key, it->second));
  s.params.erase(it);
  return v;
}

std::int64_t take_int(ParsedSpec& s, const std::string& key, std::int64_t fallback) {
  auto it = s.params.find(key);
  if (it == s.params.end()) return fallback;
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(it->second, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != it->second.size()) throw std::invalid_argument(fmt::format("{}: '{}' is not an integer", key, it->second));
  s.params.erase(it);
  return v;
}

void reject_leftovers(const ParsedSpec& s) {
  if (!s.params.empty())
    throw std::invalid_argument(fmt::format("unknown parameter '{}' for strategy '{}'", s.params.begin()->first, s.name));
}

std::vector<std::string_view> split_list(std::string_view list) {
  std::vector<std::string_view> out;
  while (true) {
    const auto comma = list.find(',');
    const auto item = trim(list.substr(0, comma));
    if (item.empty()) throw std::invalid_argument("empty portfolio member");
    out.push_back(item);
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  return out;
}

template <class Strategy>
std::string join_names(const std::vector<std::unique_ptr<Strategy>>& portfolio) {
  std::string out;
  for (const auto& s : portfolio) {
    if (!out.empty()) out += ',';
    out += s->name();
  }
  return out;
}

}  // namespace

std::unique_ptr<StrategyP1> make_p1(std::string_view spec) {
  auto s = parse_spec(spec);
  std::unique_ptr<StrategyP1> out;
  if (s.name == "always_top") {
    out = std::make_unique<AlwaysTop>();
  } else if (s.name == "greedy") {
    out = std::make_unique<GreedyMin>();
  } else if (s.name == "zero_trap") {
    ZeroTrapParams p;
    p.half_width = take_int(s, "width", 0);
    p.half_height = take_int(s, "height", 0);
    p.squares_only = take_int(s, "squares", 0) != 0;
    if (p.half_width < 0 || p.half_height < 0) throw std::invalid_argument("zero_trap window sizes must be >= 0");
    out = std::make_unique<ZeroPathTrap>(p);
  } else {
    throw std::invalid_argument(fmt::format("unknown Player 1 strategy '{}'", s.name));
  }
  reject_leftovers(s);
  return out;
}

std::unique_ptr<StrategyP2> make_p2(std::string_view spec) {
  auto s = parse_spec(spec);
  std::unique_ptr<StrategyP2> out;
  if (s.name == "greedy") {
    out = std::make_unique<GreedyMax>();
  } else if (s.name == "follower") {
    FollowerParams p;
    p.height = take_int(s, "height", 0);
    p.max_width = take_int(s, "width", 0);
    if (p.height < 0 || p.max_width < 0) throw std::invalid_argument("follower height/width must be >= 0");
    out = std::make_unique<CrossingFollower>(p);
  } else if (s.name == "multiscale") {
    MultiscaleParams p;
    p.sigma = take_real(s, "sigma", p.sigma);
    p.max_scale = static_cast<int>(take_int(s, "cap", p.max_scale));
    out = std::make_unique<MultiscaleChaser>(p);
  } else if (s.name == "goodbox") {
    GoodBoxParams p;
    p.n = take_int(s, "n", p.n);
    p.sigma = take_real(s, "sigma", p.sigma);
    out = std::make_unique<GoodBoxNavigator>(p);
  } else {
    throw std::invalid_argument(fmt::format("unknown Player 2 strategy '{}'", s.name));
  }
  reject_leftovers(s);
  return out;
}

std::vector<std::unique_ptr<StrategyP1>> parse_p1_portfolio(std::string_view list) {
  std::vector<std::unique_ptr<StrategyP1>> out;
  for (auto item : split_list(list)) out.push_back(make_p1(item));
  return out;
}

std::vector<std::unique_ptr<StrategyP2>> parse_p2_portfolio(std::string_view list) {
  std::vector<std::unique_ptr<StrategyP2>> out;
  for (auto item : split_list(list)) out.push_back(make_p2(item));
  return out;
}

std::string portfolio_name(const std::vector<std::unique_ptr<StrategyP1>>& portfolio) { return join_names(portfolio); }
std::string portfolio_name(const std::vector<std::unique_ptr<StrategyP2>>& portfolio) { return join_names(portfolio); }

}  // namespace percgame
