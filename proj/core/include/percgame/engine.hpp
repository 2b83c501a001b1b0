#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <vector>

#include "percgame/game.hpp"
#include "percgame/strategies.hpp"

namespace percgame {

class Trajectory {
 public:
  explicit Trajectory(Vertex start = {}) : start_(start) { cost_sum_.push_back(0); }

  const Vertex& start() const noexcept { return start_; }
  const std::vector<Step>& steps() const noexcept { return steps_; }
  std::int64_t length() const noexcept { return static_cast<std::int64_t>(steps_.size()); }
  const Vertex& position() const noexcept { return steps_.empty() ? start_ : steps_.back().position_after; }

  void append(const Step& s);

  // (1/n) * sum of the first n costs; n in [1, length()].
  Rational running_avg(std::int64_t n) const;
  std::vector<Rational> running_avgs() const;
  std::int64_t cost_sum(std::int64_t n) const { return cost_sum_.at(static_cast<std::size_t>(n)); }

 private:
  Vertex start_;
  std::vector<Step> steps_;
  std::vector<std::int64_t> cost_sum_;  // cost_sum_[n] = sum of the first n costs
};

// Announce-then-respond loop for `horizon` stages. Player 2 is queried only
// after Player 1's action for the stage is fixed.
Trajectory play(const Configuration& config, const Vertex& start, StrategyP1& s1, StrategyP2& s2, std::int64_t horizon);

// Throws std::out_of_range unless 1 <= n <= t.length().
Rational average_cost(const Trajectory& t, std::int64_t n);

// Costs of stages M, M+1, ..., length(); throws std::out_of_range unless 1 <= M <= length().
std::vector<int> suffix_costs(const Trajectory& t, std::int64_t M);
std::vector<int> suffix_costs(const std::vector<int>& costs, std::int64_t M);
std::vector<int> costs_of(const Trajectory& t);

// Largest running average over the final quarter of the stages.
double tail_max_average(const Trajectory& t);

// sigma[h] and tau[h]: fresh clones of the given strategies that have been fed
// the first M - 1 stages of `recorded` and then answer a game restarted at
// stage M's position as if that history preceded it.
std::unique_ptr<StrategyP1> shift_p1(const StrategyP1& proto, const Configuration& config, const Trajectory& recorded,
                                     std::int64_t M, std::int64_t horizon);
std::unique_ptr<StrategyP2> shift_p2(const StrategyP2& proto, const Configuration& config, const Trajectory& recorded,
                                     std::int64_t M, std::int64_t horizon);

// Columns: stage,a1,a2,edge_lower_x,edge_lower_y,dx,cost,avg_num,avg_den.
void write_trajectory_csv(std::ostream& out, const Trajectory& t);

}  // namespace percgame
