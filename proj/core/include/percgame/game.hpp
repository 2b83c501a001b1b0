#pragma once

#include <cstdint>
#include <span>

#include "percgame/lattice.hpp"

namespace percgame {

// Exact average: num / den with den the stage count.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  double to_double() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Rational& a, const Rational& b) noexcept { return a.num * b.den == b.num * a.den; }
  friend bool operator<(const Rational& a, const Rational& b) noexcept { return a.num * b.den < b.num * a.den; }
};

struct Step {
  std::int64_t stage = 0;
  ActionPair action;
  EdgeId edge;
  int cost = 0;
  Vertex position_after;
};

// What a strategy sees before acting at `stage`: the configuration, the start
// vertex, the current vertex and the history of the stage - 1 moves so far.
struct GameView {
  const Configuration& config;
  Vertex start;
  Vertex current;
  std::int64_t stage = 1;
  std::int64_t horizon = 1;
  std::span<const Step> history;
};

}  // namespace percgame
