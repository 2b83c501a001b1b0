#include <doctest.h>

#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "percgame/perc.hpp"

using namespace percgame;

namespace {

Configuration pinned(const BoxSpec& box, std::uint64_t mask) {
  EdgeOverrides pins;
  const auto edges = oracle::interior_edges(box);
  for (std::size_t i = 0; i < edges.size(); ++i) pins[edges[i]] = (mask >> i) & 1;
  return Configuration(0, 0.0).with_overrides(pins);
}

std::vector<BoxSpec> small_boxes(std::size_t max_edges) {
  std::vector<BoxSpec> out;
  for (std::int64_t m = 1; m <= 4; ++m)
    for (std::int64_t n = 1; n <= 6; ++n)
      for (std::int64_t cx : {0, 1})
        for (std::int64_t cy : {0, -3}) {
          const BoxSpec b{{cx, cy}, m, n};
          if (oracle::interior_edges(b).size() <= max_edges) out.push_back(b);
        }
  return out;
}

}  // namespace

TEST_CASE("box geometry is half-open") {
  const BoxSpec b{{0, 0}, 2, 3};
  CHECK(b.x_min() == -1);
  CHECK(b.x_max() == 2);
  CHECK(b.y_min() == -2);
  CHECK(b.y_max() == 3);
  CHECK(b.contains({2, 2}));
  CHECK_FALSE(b.contains({-2, 0}));
  const auto r = BoxSpec::from_real({0, 0}, 2.9, 3.2);
  CHECK(r.half_width == 2);
  CHECK(r.half_height == 3);
}

TEST_CASE("reach_up at p = 1 is the clipped light cone") {
  const Configuration c(1, 1.0);
  const BoxSpec b{{0, 0}, 5, 4};
  const std::vector<Vertex> src{{1, -3}};
  const auto table = reach_up(c, b, src);
  for (std::int64_t y = b.y_min(); y <= b.y_max(); ++y)
    for (std::int64_t x = b.x_min(); x <= b.x_max(); ++x) {
      if (!is_vertex(x, y)) continue;
      const bool cone = std::abs(x - 1) <= y + 3;
      CHECK(table.contains({x, y}) == cone);
    }
}

TEST_CASE("reach_up at p = 0 leaves the upper rows empty") {
  const Configuration c(1, 0.0);
  const BoxSpec b{{0, 0}, 4, 4};
  const auto table = reach_up(c, b);
  CHECK(table.row(0).any());
  for (std::size_t r = 1; r < table.rows(); ++r) CHECK_FALSE(table.row(r).any());
}

TEST_CASE("reach_up matches path enumeration on small boxes") {
  for (const auto& b : small_boxes(12)) {
    const auto edges = oracle::interior_edges(b);
    std::vector<Vertex> bottom;
    for (const auto& v : oracle::box_vertices(b))
      if (v.y == b.y_min()) bottom.push_back(v);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.size()); mask += 7) {
      const auto c = pinned(b, mask);
      const auto table = reach_up(c, b, bottom);
      const auto truth = oracle::brute_reach(c, b, bottom);
      for (const auto& v : oracle::box_vertices(b)) CHECK(table.contains(v) == truth.count({v.x, v.y}));
    }
  }
}

TEST_CASE("crossing agrees with brute force on every assignment of small boxes") {
  std::size_t boxes = 0, configs = 0;
  for (const auto& b : small_boxes(12)) {
    const auto k = oracle::interior_edges(b).size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
      const auto c = pinned(b, mask);
      REQUIRE(has_vertical_crossing(c, b) == oracle::brute_crossing(c, b));
      ++configs;
    }
    ++boxes;
  }
  CHECK(boxes >= 8);
  CHECK(configs > 1000);
}

TEST_CASE("crossing at p = 0 and p = 1") {
  for (const auto& b : small_boxes(40)) {
    CHECK(has_vertical_crossing(Configuration(3, 1.0), b));
    CHECK_FALSE(has_vertical_crossing(Configuration(3, 0.0), b));
  }
}

TEST_CASE("crossing is monotone in p under the coupling") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    const BoxSpec b{{static_cast<std::int64_t>(rng() % 21) - 10, static_cast<std::int64_t>(rng() % 21) - 10},
                    1 + static_cast<std::int64_t>(rng() % 12), 1 + static_cast<std::int64_t>(rng() % 12)};
    const auto seed = rng();
    bool prev = false;
    for (int k = 0; k <= 20; ++k) {
      const bool now = has_vertical_crossing(Configuration(seed, k / 20.0), b);
      CHECK((!prev || now));
      prev = now;
    }
  }
}

TEST_CASE("left-most crossing equals the lexicographic minimum") {
  for (const auto& b : small_boxes(12)) {
    const auto k = oracle::interior_edges(b).size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
      const auto c = pinned(b, mask);
      const auto path = leftmost_crossing_path(c, b);
      const auto truth = oracle::brute_leftmost(c, b);
      REQUIRE(path.has_value() == !truth.empty());
      if (!path) continue;
      REQUIRE(path->vertices.size() == truth.size());
      for (std::size_t i = 0; i < truth.size(); ++i) CHECK(path->vertices[i] == truth[i]);
      // Pointwise left of every other crossing.
      for (const auto& other : oracle::all_crossings(c, b))
        for (std::size_t i = 0; i < other.size(); ++i) CHECK(path->vertices[i].x <= other[i].x);
    }
  }
}

TEST_CASE("left-most crossing of a fully open two-row box") {
  // Rows y = 0 and 1 of (-2, 2] x (-1, 1]: bottom (0,0),(2,0); top (-1,1),(1,1).
  const BoxSpec b{{0, 0}, 2, 1};
  const auto path = leftmost_crossing_path(Configuration(0, 1.0), b);
  REQUIRE(path);
  REQUIRE(path->vertices.size() == 2);
  CHECK(path->vertices[0] == Vertex{0, 0});
  CHECK(path->vertices[1] == Vertex{-1, 1});
}

TEST_CASE("left-most crossing at p = 1 hugs the left edge") {
  const BoxSpec b{{0, 0}, 3, 3};
  const auto path = leftmost_crossing_path(Configuration(0, 1.0), b);
  REQUIRE(path);
  // x_min = -2; rows -2..3 alternate between the two left-most columns.
  const std::int64_t expect[] = {-2, -1, -2, -1, -2, -1};
  for (std::size_t i = 0; i < 6; ++i) CHECK(path->vertices[i].x == expect[i]);
}

TEST_CASE("left-most crossing is an open vertical path spanning the box") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const BoxSpec b{{0, 0}, 6, 10};
    const Configuration c(seed, 0.65);
    const auto path = leftmost_crossing_path(c, b);
    CHECK(path.has_value() == has_vertical_crossing(c, b));
    if (!path) continue;
    CHECK(is_vertical_path(*path));
    CHECK(is_open_path(c, *path));
    CHECK(path->y_first() == b.y_min());
    CHECK(path->y_last() == b.y_max());
    for (const auto& v : path->vertices) CHECK(b.contains(v));
  }
  CHECK_FALSE(leftmost_crossing_path(Configuration(0, 0.0), BoxSpec{{0, 0}, 3, 3}));
}

TEST_CASE("crossing vertices are exactly the vertices on some crossing") {
  for (const auto& b : small_boxes(12)) {
    const auto k = oracle::interior_edges(b).size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); mask += 3) {
      const auto c = pinned(b, mask);
      const auto set = crossing_vertices(c, b);
      std::set<std::pair<std::int64_t, std::int64_t>> on;
      for (const auto& p : oracle::all_crossings(c, b))
        for (const auto& v : p) on.insert({v.x, v.y});
      for (const auto& v : oracle::box_vertices(b)) CHECK(set.contains(v) == on.count({v.x, v.y}));
    }
  }
}

TEST_CASE("answers are translation equivariant") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Configuration c(seed, 0.6);
    const auto t = c.translated(8, 6);
    const BoxSpec here{{0, 0}, 4, 5}, there{{8, 6}, 4, 5};
    CHECK(has_vertical_crossing(t, here) == has_vertical_crossing(c, there));
    CHECK(max_oriented_path_cost(t, {0, 0}, 12) == max_oriented_path_cost(c, {8, 6}, 12));
  }
}

TEST_CASE("max_oriented_path_cost agrees with enumeration") {
  for (std::uint64_t seed = 0; seed < 40; ++seed)
    for (int len : {1, 2, 5, 9, 14}) {
      const Configuration c(seed, 0.4 + 0.01 * static_cast<double>(seed % 10));
      CHECK(max_oriented_path_cost(c, {0, 0}, len) == oracle::brute_lpp(c, {0, 0}, len));
      CHECK(max_oriented_path_cost(c, {3, -7}, len) == oracle::brute_lpp(c, {3, -7}, len));
    }
}

TEST_CASE("max_oriented_path_cost boundary cases") {
  CHECK(max_oriented_path_cost(Configuration(1, 1.0), {0, 0}, 37) == 37);
  CHECK(max_oriented_path_cost(Configuration(1, 0.0), {0, 0}, 37) == 0);
  CHECK_THROWS_AS(max_oriented_path_cost(Configuration(1, 0.5), {0, 0}, 0), std::invalid_argument);
}

TEST_CASE("max_oriented_path_cost is monotone and super-additive") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Configuration c(seed, 0.5);
    std::int64_t prev = 0;
    for (int len = 1; len <= 40; ++len) {
      const auto v = max_oriented_path_cost(c, {0, 0}, len);
      CHECK(v >= prev);
      prev = v;
    }
    // Any a-step prefix followed by the best b-step continuation is a path of a + b steps.
    const int a = 7, b = 6;
    const auto whole = max_oriented_path_cost(c, {0, 0}, a + b);
    for (std::uint64_t choice = 0; choice < (1u << a); ++choice) {
      Vertex v{0, 0};
      std::int64_t sum = 0;
      for (int s = 0; s < a; ++s) {
        const int dx = ((choice >> s) & 1) ? 1 : -1;
        sum += c.is_open(EdgeId{v, dx});
        v = {v.x + dx, v.y + 1};
      }
      CHECK(whole >= sum + max_oriented_path_cost(c, v, b));
    }
  }
}

TEST_CASE("zero squares") {
  CHECK(is_zero_square(Configuration(1, 0.0), 1, 0));
  CHECK_FALSE(is_zero_square(Configuration(1, 1.0), 1, 0));
  CHECK_THROWS_AS(is_zero_square(Configuration(1, 0.0), 0, 0), std::invalid_argument);
  const auto edges = square_edges(1, 0);
  const auto ref = oracle::square_edges(1, 0);
  for (const auto& e : ref) CHECK(std::find(edges.begin(), edges.end(), e) != edges.end());
  for (std::size_t k = 0; k < 4; ++k) {
    EdgeOverrides pins;
    pins[ref[k]] = true;
    CHECK_FALSE(is_zero_square(Configuration(1, 0.0).with_overrides(pins), 1, 0));
  }
}

TEST_CASE("square adjacency") {
  CHECK(squares_adjacent({1, 0}, {3, 0}));
  CHECK(squares_adjacent({1, 0}, {2, 1}));
  CHECK(squares_adjacent({1, 0}, {0, -1}));
  CHECK_FALSE(squares_adjacent({1, 0}, {1, 2}));
  CHECK_FALSE(squares_adjacent({1, 0}, {5, 0}));
  for (std::int64_t dx = -3; dx <= 3; ++dx)
    for (std::int64_t dy = -3; dy <= 3; ++dy) {
      if ((dx + dy) % 2 != 0 || (dx == 0 && dy == 0)) continue;
      CHECK(squares_adjacent({1, 0}, {1 + dx, dy}) == oracle::squares_touch(1, 0, 1 + dx, dy));
    }
}

TEST_CASE("zero chains at the extremes") {
  const BoxSpec w{{0, 0}, 10, 3};
  const auto chain = find_zero_chain(Configuration(1, 0.0), w);
  REQUIRE(chain);
  CHECK(chain->centers.front().x <= w.x_min() + 1);
  CHECK(chain->centers.back().x >= w.x_max() - 1);
  CHECK_FALSE(find_zero_chain(Configuration(1, 1.0), w));
}

TEST_CASE("zero chains agree with a union-find oracle") {
  int found = 0;
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const BoxSpec w{{static_cast<std::int64_t>(seed % 3), 0}, 3 + static_cast<std::int64_t>(seed % 2), 2};
    const Configuration c(seed, 0.15 + 0.001 * static_cast<double>(seed % 100));
    const auto chain = find_zero_chain(c, w);
    REQUIRE(chain.has_value() == oracle::zero_squares_connected(c, w));
    if (!chain) continue;
    ++found;
    for (std::size_t i = 0; i < chain->centers.size(); ++i) {
      const auto& f = chain->centers[i];
      CHECK(w.contains({f.x, f.y}));
      CHECK(is_zero_square(c, f.x, f.y));
      if (i > 0) CHECK(squares_adjacent(chain->centers[i - 1], f));
    }
  }
  CHECK(found > 20);
}
