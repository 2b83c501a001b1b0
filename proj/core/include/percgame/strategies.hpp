#pragma once

#include <cstdint>
#include <climits>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "percgame/game.hpp"
#include "percgame/perc.hpp"

namespace percgame {

// Player 1 (minimizer) picks the vertical action and announces it.
class StrategyP1 {
 public:
  virtual ~StrategyP1() = default;
  virtual Vertical act(const GameView& view) = 0;
  // Canonical portfolio spec, e.g. "zero_trap" or "greedy".
  virtual std::string name() const = 0;
  // Same parameters, fresh per-game state.
  virtual std::unique_ptr<StrategyP1> clone() const = 0;
};

// Player 2 (maximizer) answers the announced vertical action laterally.
class StrategyP2 {
 public:
  virtual ~StrategyP2() = default;
  virtual Lateral respond(const GameView& view, Vertical announced) = 0;
  virtual std::string name() const = 0;
  virtual std::unique_ptr<StrategyP2> clone() const = 0;
};

// Lateral reply keeping the token on `path`. Throws std::invalid_argument when
// `current` is off the path and std::out_of_range when the path has no
// neighbour of `current` in the announced direction.
Lateral follow_path_response(const VerticalPath& path, const Vertex& current, Vertical announced);

// Lateral reply moving toward column `target_x` of the next row (tie: R).
Lateral lateral_toward(std::int64_t from_x, std::int64_t target_x) noexcept;

// -- Player 1 -----------------------------------------------------------------

class AlwaysTop final : public StrategyP1 {
 public:
  Vertical act(const GameView&) override { return Vertical::Top; }
  std::string name() const override { return "always_top"; }
  std::unique_ptr<StrategyP1> clone() const override { return std::make_unique<AlwaysTop>(); }
};

// Vertical action minimizing the worst edge cost over the two replies; ties
// go toward the start row, then T.
class GreedyMin final : public StrategyP1 {
 public:
  Vertical act(const GameView& view) override;
  std::string name() const override { return "greedy"; }
  std::unique_ptr<StrategyP1> clone() const override { return std::make_unique<GreedyMin>(); }
  static Vertical choose(const Configuration& config, const Vertex& current, const Vertex& start);
};

struct ZeroTrapParams {
  // Window half-sizes; 0 selects the defaults (horizon + 2 wide, 20 tall).
  std::int64_t half_width = 0;
  std::int64_t half_height = 0;
  // Restrict the trap to edges of 0-squares instead of every closed edge.
  bool squares_only = false;
};

// Solves the zero-cost safety game in a window around the start: the trap
// region holds the vertices from which Player 1 can keep every remaining edge
// closed whatever the lateral replies. The strategy forces the token into that
// region and then never leaves it. With squares_only the safe edges are those
// of 0-squares and a crossing 0-square chain is required. Falls back to
// GreedyMin when the region is empty.
class ZeroPathTrap final : public StrategyP1 {
 public:
  explicit ZeroPathTrap(ZeroTrapParams params = {}) : params_(params) {}

  Vertical act(const GameView& view) override;
  std::string name() const override;
  std::unique_ptr<StrategyP1> clone() const override { return std::make_unique<ZeroPathTrap>(params_); }

  const ZeroTrapParams& params() const noexcept { return params_; }
  bool has_trap() const noexcept { return trap_ready_; }
  bool has_chain() const noexcept { return chain_.has_value(); }
  const std::optional<SquareChain>& chain() const noexcept { return chain_; }
  // First stage at which the token stood in the trap region; from then on the
  // strategy never takes an edge outside 0-squares.
  std::optional<std::int64_t> arrival_stage() const noexcept { return arrival_; }
  // Whether the vertex lies in the trap region with `remaining` stages to go.
  bool in_trap_region(const Vertex& v, std::int64_t remaining) const noexcept;

  static BoxSpec default_window(const Vertex& start, std::int64_t horizon, const ZeroTrapParams& params);

 private:
  void prepare(const GameView& view);
  bool zero_edge(std::int64_t x, std::int64_t y, int dx) const noexcept;
  bool safe_move(const Vertex& v, Vertical a, std::int64_t level) const noexcept;
  bool in_set(const std::vector<BitRow>& set, const Vertex& v) const noexcept;

  ZeroTrapParams params_;
  bool prepared_ = false;
  bool trap_ready_ = false;
  std::optional<SquareChain> chain_;
  std::optional<std::int64_t> arrival_;
  // Vertex grid covering the window with its safe-edge masks per row; depth_
  // holds, per grid vertex, the largest number of remaining stages for which
  // it lies in the trap region.
  static constexpr std::int64_t kUnbounded = INT64_MAX;
  std::int64_t gx0_ = 0, gy0_ = 0, gw_ = 0, gh_ = 0;
  std::vector<BitRow> zero_right_, zero_left_;
  std::vector<std::int64_t> depth_;
  std::vector<std::vector<BitRow>> attractor_;
};

// -- Player 2 -----------------------------------------------------------------

// Lateral reply maximizing the announced edge cost; ties go R.
class GreedyMax final : public StrategyP2 {
 public:
  Lateral respond(const GameView& view, Vertical announced) override;
  std::string name() const override { return "greedy"; }
  std::unique_ptr<StrategyP2> clone() const override { return std::make_unique<GreedyMax>(); }
  static Lateral choose(const Configuration& config, const Vertex& current, Vertical announced);
};

struct FollowerParams {
  // Half-height of the tall box; 0 selects 2 * horizon.
  std::int64_t height = 0;
  // Widest half-width tried when searching for a crossing; 0 selects horizon.
  std::int64_t max_width = 0;
};

// Picks the narrowest tall box around the start that is crossed vertically
// (half-widths 1, 2, 4, ...) and rides the union of its crossings: on a vertex
// of some crossing it takes an open edge to the next vertex of a crossing, off
// them it moves toward the nearest one. Without any crossing it plays as
// GreedyMax. path() is the box's left-most crossing.
class CrossingFollower final : public StrategyP2 {
 public:
  explicit CrossingFollower(FollowerParams params = {}) : params_(params) {}

  Lateral respond(const GameView& view, Vertical announced) override;
  std::string name() const override;
  std::unique_ptr<StrategyP2> clone() const override { return std::make_unique<CrossingFollower>(params_); }

  const std::optional<VerticalPath>& path() const noexcept { return path_; }

 private:
  void prepare(const GameView& view);

  FollowerParams params_;
  bool prepared_ = false;
  std::optional<VerticalPath> path_;
  RowTable crossing_;
};

// Shared move rule: follow `path` when on it, otherwise head for it; greedy
// when the path does not reach the next row.
Lateral chase_path(const VerticalPath& path, const GameView& view, Vertical announced);

// Rule shared by the crossing riders. On a vertex of `crossings` (a
// reach-and-coreach table) it takes an open edge into the next row of the set
// (R first); off the set it moves toward the nearest set vertex of the next row
// (ties R). Greedy outside the table's rows or when the next row is empty.
Lateral ride_crossings(const RowTable& crossings, const GameView& view, Vertical announced);

struct MultiscaleParams {
  double sigma = 0.75;
  int max_scale = 14;
};

// Dyadic multiscale chaser: during stages [m_k, m_{k+1}) it rides the
// left-most crossing P^{n0+k} of (-2^{(n0+k)sigma}, 2^{(n0+k)sigma}] x
// (-2^{n0+k}, 2^{n0+k}], moving laterally onto it first when needed.
class MultiscaleChaser final : public StrategyP2 {
 public:
  explicit MultiscaleChaser(MultiscaleParams params = {});

  Lateral respond(const GameView& view, Vertical announced) override;
  std::string name() const override;
  std::unique_ptr<StrategyP2> clone() const override { return std::make_unique<MultiscaleChaser>(params_); }

  // m_k = 1 + sum_{l = n0}^{n0 + k - 1} 2^{l - 1}.
  static std::int64_t schedule_stage(int n0, int k) noexcept;
  static BoxSpec scale_box(const Vertex& start, int n, double sigma);

  std::optional<int> base_scale() const noexcept { return n0_; }
  // Scale used as a plain follower when no admissible n0 exists.
  std::optional<int> fallback_scale() const noexcept { return fallback_; }

 private:
  void prepare(const GameView& view);
  const std::optional<VerticalPath>& crossing_at(const GameView& view, int n);

  MultiscaleParams params_;
  bool prepared_ = false;
  std::optional<int> n0_;
  std::optional<int> fallback_;
  std::map<int, std::optional<VerticalPath>> paths_;
};

struct GoodBoxParams {
  std::int64_t n = 64;
  double sigma = 0.75;
};

// Navigator over the tessellation by boxes x + (-m, m] x (-n, n], m = floor(n^sigma),
// centers in (2m Z) x (n Z). In a good box (one with a vertical crossing) it
// steers in a constant direction onto the crossing and rides it to a top or
// bottom exit; in a bad box it answers R until the token leaves laterally.
class GoodBoxNavigator final : public StrategyP2 {
 public:
  explicit GoodBoxNavigator(GoodBoxParams params = {});

  Lateral respond(const GameView& view, Vertical announced) override;
  std::string name() const override;
  std::unique_ptr<StrategyP2> clone() const override { return std::make_unique<GoodBoxNavigator>(params_); }

  std::int64_t box_half_width() const noexcept { return m_; }
  BoxSpec box_at(const Vertex& center) const noexcept { return BoxSpec{center, m_, params_.n}; }
  // Box containing v whose center is vertically nearest (ties upward).
  Vertex center_for(const Vertex& v) const noexcept;

  struct Visit {
    Vertex center;
    bool good = false;
    std::int64_t entered_stage = 0;
  };
  const std::vector<Visit>& visits() const noexcept { return visits_; }

 private:
  struct BoxInfo {
    bool good = false;
    RowTable crossing;
  };
  const BoxInfo& info(const Configuration& config, const Vertex& center);
  void enter(const Configuration& config, const Vertex& v, std::int64_t stage);

  GoodBoxParams params_;
  std::int64_t m_ = 1;
  std::optional<Vertex> center_;
  std::optional<Lateral> heading_;
  std::map<std::pair<std::int64_t, std::int64_t>, BoxInfo> boxes_;
  std::vector<Visit> visits_;
};

// -- Portfolio specs ------------------------------------------------------------
// Members are comma separated; parameters follow the name after ':' as
// key=value pairs, themselves separated by ':'. Example:
//   "follower:height=10000,multiscale:sigma=0.75,goodbox:n=64,greedy"

std::unique_ptr<StrategyP1> make_p1(std::string_view spec);
std::unique_ptr<StrategyP2> make_p2(std::string_view spec);
std::vector<std::unique_ptr<StrategyP1>> parse_p1_portfolio(std::string_view list);
std::vector<std::unique_ptr<StrategyP2>> parse_p2_portfolio(std::string_view list);

std::string portfolio_name(const std::vector<std::unique_ptr<StrategyP1>>& portfolio);
std::string portfolio_name(const std::vector<std::unique_ptr<StrategyP2>>& portfolio);

inline constexpr std::string_view kDefaultP1Portfolio = "always_top,zero_trap,greedy";
inline constexpr std::string_view kDefaultP2Portfolio = "follower,multiscale:sigma=0.75,goodbox:n=64,greedy";

}  // namespace percgame
