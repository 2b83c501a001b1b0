#include "percgame/engine.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string>

#include <fmt/format.h>

namespace percgame {

void Trajectory::append(const Step& s) {
  steps_.push_back(s);
  cost_sum_.push_back(cost_sum_.back() + s.cost);
}

Rational Trajectory::running_avg(std::int64_t n) const {
  if (n < 1 || n > length()) throw std::out_of_range(fmt::format("stage {} outside [1, {}]", n, length()));
  return Rational{cost_sum_[static_cast<std::size_t>(n)], n};
}

std::vector<Rational> Trajectory::running_avgs() const {
  std::vector<Rational> out;
  out.reserve(steps_.size());
  for (std::int64_t n = 1; n <= length(); ++n) out.push_back(Rational{cost_sum_[static_cast<std::size_t>(n)], n});
  return out;
}

Trajectory play(const Configuration& config, const Vertex& start, StrategyP1& s1, StrategyP2& s2, std::int64_t horizon) {
  if (!is_vertex(start)) throw std::invalid_argument("start must be a vertex of L");
  if (horizon < 1) throw std::invalid_argument("horizon must be >= 1");
  Trajectory t(start);
  for (std::int64_t stage = 1; stage <= horizon; ++stage) {
    const GameView view{config, start, t.position(), stage, horizon, t.steps()};
    const Vertical a1 = s1.act(view);
    const Lateral a2 = s2.respond(view, a1);
    const ActionPair action{a1, a2};
    const auto move = step(view.current, action);
    t.append(Step{stage, action, move.edge, edge_cost(config, move.edge), move.to});
  }
  return t;
}

Rational average_cost(const Trajectory& t, std::int64_t n) { return t.running_avg(n); }

std::vector<int> costs_of(const Trajectory& t) {
  std::vector<int> out;
  out.reserve(t.steps().size());
  for (const auto& s : t.steps()) out.push_back(s.cost);
  return out;
}

std::vector<int> suffix_costs(const std::vector<int>& costs, std::int64_t M) {
  const auto len = static_cast<std::int64_t>(costs.size());
  if (M < 1 || M > len) throw std::out_of_range(fmt::format("suffix start {} outside [1, {}]", M, len));
  return std::vector<int>(costs.begin() + (M - 1), costs.end());
}

std::vector<int> suffix_costs(const Trajectory& t, std::int64_t M) { return suffix_costs(costs_of(t), M); }

double tail_max_average(const Trajectory& t) {
  const auto n = t.length();
  if (n == 0) return 0.0;
  const auto from = std::max<std::int64_t>(1, n - n / 4);
  double best = 0.0;
  for (auto k = from; k <= n; ++k) best = std::max(best, t.running_avg(k).to_double());
  return best;
}

namespace {

// Replays the recorded prefix into a strategy and then relabels every view
// so the strategy sees the concatenated history.
class HistoryShim {
 public:
  HistoryShim(const Configuration& config, const Trajectory& recorded, std::int64_t M, std::int64_t horizon)
      : config_(config), start_(recorded.start()), offset_(M - 1), horizon_(horizon) {
    if (M < 1 || M > recorded.length()) throw std::out_of_range("shift stage outside the recorded trajectory");
    history_.assign(recorded.steps().begin(), recorded.steps().begin() + offset_);
  }

  template <class Fn>
  void replay(Fn&& fn) const {
    for (std::int64_t s = 1; s <= offset_; ++s) {
      const auto before = static_cast<std::size_t>(s - 1);
      const Vertex current = before == 0 ? start_ : history_[before - 1].position_after;
      const GameView view{config_, start_, current, s, horizon_, std::span<const Step>(history_.data(), before)};
      fn(view, history_[before].action);
    }
  }

  GameView translate(const GameView& view) {
    const auto prefix = static_cast<std::size_t>(offset_);
    while (history_.size() < prefix + view.history.size()) {
      Step s = view.history[history_.size() - prefix];
      s.stage += offset_;
      history_.push_back(s);
    }
    history_.resize(prefix + view.history.size());
    return GameView{config_, start_, view.current, view.stage + offset_, horizon_, history_};
  }

  std::int64_t offset() const noexcept { return offset_; }
  HistoryShim fresh() const {
    HistoryShim copy = *this;
    copy.history_.resize(static_cast<std::size_t>(offset_));
    return copy;
  }

 private:
  Configuration config_;
  Vertex start_;
  std::int64_t offset_;
  std::int64_t horizon_;
  std::vector<Step> history_;
};

class ShiftedP1 final : public StrategyP1 {
 public:
  ShiftedP1(const StrategyP1& proto, HistoryShim shim) : proto_(proto.clone()), shim_(std::move(shim)) {
    inner_ = proto_->clone();
    shim_.replay([&](const GameView& v, const ActionPair&) { inner_->act(v); });
  }
  Vertical act(const GameView& view) override { return inner_->act(shim_.translate(view)); }
  std::string name() const override { return fmt::format("{}@{}", proto_->name(), shim_.offset() + 1); }
  std::unique_ptr<StrategyP1> clone() const override { return std::make_unique<ShiftedP1>(*proto_, shim_.fresh()); }

 private:
  std::unique_ptr<StrategyP1> proto_;
  std::unique_ptr<StrategyP1> inner_;
  HistoryShim shim_;
};

class ShiftedP2 final : public StrategyP2 {
 public:
  ShiftedP2(const StrategyP2& proto, HistoryShim shim) : proto_(proto.clone()), shim_(std::move(shim)) {
    inner_ = proto_->clone();
    shim_.replay([&](const GameView& v, const ActionPair& a) { inner_->respond(v, a.a1); });
  }
  Lateral respond(const GameView& view, Vertical announced) override {
    return inner_->respond(shim_.translate(view), announced);
  }
  std::string name() const override { return fmt::format("{}@{}", proto_->name(), shim_.offset() + 1); }
  std::unique_ptr<StrategyP2> clone() const override { return std::make_unique<ShiftedP2>(*proto_, shim_.fresh()); }

 private:
  std::unique_ptr<StrategyP2> proto_;
  std::unique_ptr<StrategyP2> inner_;
  HistoryShim shim_;
};

}  // namespace

std::unique_ptr<StrategyP1> shift_p1(const StrategyP1& proto, const Configuration& config, const Trajectory& recorded,
                                     std::int64_t M, std::int64_t horizon) {
  return std::make_unique<ShiftedP1>(proto, HistoryShim(config, recorded, M, horizon));
}

std::unique_ptr<StrategyP2> shift_p2(const StrategyP2& proto, const Configuration& config, const Trajectory& recorded,
                                     std::int64_t M, std::int64_t horizon) {
  return std::make_unique<ShiftedP2>(proto, HistoryShim(config, recorded, M, horizon));
}

void write_trajectory_csv(std::ostream& out, const Trajectory& t) {
  out << "stage,a1,a2,edge_lower_x,edge_lower_y,dx,cost,avg_num,avg_den\n";
  for (const auto& s : t.steps()) {
    const auto avg = t.running_avg(s.stage);
    out << fmt::format("{},{},{},{},{},{},{},{},{}\n", s.stage, to_char(s.action.a1), to_char(s.action.a2),
                       s.edge.lower.x, s.edge.lower.y, s.edge.dx, s.cost, avg.num, avg.den);
  }
}

}  // namespace percgame
