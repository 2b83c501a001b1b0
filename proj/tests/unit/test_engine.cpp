#include <doctest.h>

#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

#include "percgame/engine.hpp"
#include "replay.hpp"

using namespace percgame;

namespace {

// Records the order of queries into a shared log.
struct Log {
  std::string events;
};

class ProbeP1 final : public StrategyP1 {
 public:
  explicit ProbeP1(Log& log) : log_(log) {}
  Vertical act(const GameView& view) override {
    log_.events += '1';
    return view.stage % 3 == 0 ? Vertical::Bottom : Vertical::Top;
  }
  std::string name() const override { return "probe"; }
  std::unique_ptr<StrategyP1> clone() const override { return std::make_unique<ProbeP1>(log_); }

 private:
  Log& log_;
};

class ProbeP2 final : public StrategyP2 {
 public:
  explicit ProbeP2(Log& log) : log_(log) {}
  Lateral respond(const GameView&, Vertical announced) override {
    log_.events += announced == Vertical::Top ? 'T' : 'B';
    return Lateral::Left;
  }
  std::string name() const override { return "probe"; }
  std::unique_ptr<StrategyP2> clone() const override { return std::make_unique<ProbeP2>(log_); }

 private:
  Log& log_;
};

Trajectory from_costs(const std::vector<int>& costs) {
  Trajectory t;
  Vertex v{0, 0};
  for (std::size_t i = 0; i < costs.size(); ++i) {
    const auto m = step(v, {Vertical::Top, Lateral::Right});
    t.append(Step{static_cast<std::int64_t>(i + 1), {Vertical::Top, Lateral::Right}, m.edge, costs[i], m.to});
    v = m.to;
  }
  return t;
}

}  // namespace

TEST_CASE("play at p = 0 and p = 1") {
  for (double p : {0.0, 1.0}) {
    auto p1 = parse_p1_portfolio(kDefaultP1Portfolio);
    auto p2 = parse_p2_portfolio(kDefaultP2Portfolio);
    for (auto& s1 : p1)
      for (auto& s2 : p2) {
        auto a = s1->clone();
        auto b = s2->clone();
        const auto t = play(Configuration(3, p), {0, 0}, *a, *b, 150);
        CHECK(t.length() == 150);
        CHECK(t.running_avg(150) == Rational{p == 1.0 ? 150 : 0, 150});
      }
  }
}

TEST_CASE("always_top climbs one row per stage") {
  AlwaysTop top;
  GreedyMax g;
  const auto t = play(Configuration(1, 0.4), {4, 6}, top, g, 100);
  for (std::int64_t k = 1; k <= 100; ++k) CHECK(t.steps()[static_cast<std::size_t>(k - 1)].position_after.y == 6 + k);
}

TEST_CASE("positions follow the recorded actions") {
  GreedyMin a;
  CrossingFollower b;
  const auto t = play(Configuration(8, 0.55), {0, 0}, a, b, 300);
  Vertex v = t.start();
  for (const auto& s : t.steps()) {
    const auto m = step(v, s.action);
    CHECK(m.edge == s.edge);
    CHECK(m.to == s.position_after);
    v = m.to;
  }
}

TEST_CASE("play rejects bad inputs") {
  AlwaysTop a;
  GreedyMax b;
  CHECK_THROWS_AS(play(Configuration(0, 0.5), {1, 0}, a, b, 10), std::invalid_argument);
  CHECK_THROWS_AS(play(Configuration(0, 0.5), {0, 0}, a, b, 0), std::invalid_argument);
}

TEST_CASE("average_cost arithmetic") {
  const auto t = from_costs({1, 0, 1, 0});
  CHECK(average_cost(t, 4) == Rational{1, 2});
  CHECK(average_cost(t, 4).num == 2);
  CHECK(average_cost(t, 4).den == 4);
  CHECK(average_cost(t, 1) == Rational{1, 1});
  CHECK(average_cost(from_costs({0, 0, 0}), 3) == Rational{0, 1});
  CHECK_THROWS_AS(average_cost(t, 0), std::out_of_range);
  CHECK_THROWS_AS(average_cost(t, 5), std::out_of_range);
}

TEST_CASE("average_cost matches direct summation") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<int> costs(1 + rng() % 200);
    for (auto& c : costs) c = static_cast<int>(rng() & 1);
    const auto t = from_costs(costs);
    std::int64_t sum = 0;
    for (std::size_t n = 1; n <= costs.size(); ++n) {
      sum += costs[n - 1];
      const auto avg = average_cost(t, static_cast<std::int64_t>(n));
      CHECK(avg.num == sum);
      CHECK(avg.den == static_cast<std::int64_t>(n));
    }
  }
}

TEST_CASE("suffix_costs index algebra") {
  const std::vector<int> costs{1, 0, 0, 1, 1, 0, 1};
  const auto t = from_costs(costs);
  CHECK(suffix_costs(t, 1) == costs);
  CHECK(suffix_costs(t, 7) == std::vector<int>{1});
  for (std::int64_t a = 1; a <= 7; ++a)
    for (std::int64_t b = 1; b <= 8 - a; ++b) CHECK(suffix_costs(suffix_costs(t, a), b) == suffix_costs(t, a + b - 1));
  CHECK_THROWS_AS(suffix_costs(t, 0), std::out_of_range);
  CHECK_THROWS_AS(suffix_costs(t, 8), std::out_of_range);
}

TEST_CASE("shifted strategies replay the suffix") {
  std::mt19937_64 rng(12);
  auto p1 = parse_p1_portfolio(kDefaultP1Portfolio);
  auto p2 = parse_p2_portfolio(kDefaultP2Portfolio);
  for (int trial = 0; trial < 24; ++trial) {
    const Configuration c(rng(), 0.3 + 0.05 * static_cast<double>(rng() % 10));
    const auto& s1 = *p1[rng() % p1.size()];
    const auto& s2 = *p2[rng() % p2.size()];
    const std::int64_t horizon = 200;
    auto a = s1.clone();
    auto b = s2.clone();
    const auto t = play(c, {0, 0}, *a, *b, horizon);
    const auto M = 1 + static_cast<std::int64_t>(rng() % horizon);
    INFO(s1.name(), " vs ", s2.name(), " M=", M);
    CHECK(oracle::replay_suffix(c, s1, s2, t, M) == suffix_costs(t, M));
  }
}

TEST_CASE("shifted strategies report their offset") {
  AlwaysTop a;
  GreedyMax b;
  const Configuration c(0, 0.5);
  const auto t = play(c, {0, 0}, a, b, 10);
  CHECK(shift_p1(a, c, t, 4, 10)->name() == "always_top@4");
  CHECK_THROWS_AS(shift_p2(b, c, t, 11, 10), std::out_of_range);
}

TEST_CASE("Player 2 is queried after Player 1 each stage") {
  Log log;
  ProbeP1 a(log);
  ProbeP2 b(log);
  play(Configuration(0, 0.5), {0, 0}, a, b, 6);
  CHECK(log.events == "1T1T1B1T1T1B");
}

TEST_CASE("recorded costs match the field") {
  auto p1 = parse_p1_portfolio(kDefaultP1Portfolio);
  auto p2 = parse_p2_portfolio(kDefaultP2Portfolio);
  const Configuration c(77, 0.5);
  for (auto& s1 : p1)
    for (auto& s2 : p2) {
      auto a = s1->clone();
      auto b = s2->clone();
      const auto t = play(c, {0, 0}, *a, *b, 200);
      for (const auto& s : t.steps()) CHECK(s.cost == edge_cost(c, s.edge));
    }
}

TEST_CASE("tail_max_average") {
  CHECK(tail_max_average(from_costs({0, 0, 0, 1})) == doctest::Approx(0.25));
  CHECK(tail_max_average(from_costs({1, 1, 1, 0, 0, 0, 0, 0})) == doctest::Approx(0.5));
  CHECK(tail_max_average(Trajectory{}) == 0.0);
}

TEST_CASE("trajectory csv") {
  const auto t = from_costs({1, 0});
  std::ostringstream out;
  write_trajectory_csv(out, t);
  CHECK(out.str() ==
        "stage,a1,a2,edge_lower_x,edge_lower_y,dx,cost,avg_num,avg_den\n"
        "1,T,R,0,0,1,1,1,1\n"
        "2,T,R,1,1,1,0,1,2\n");
}
