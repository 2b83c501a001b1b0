#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string_view>
#include <unordered_map>
#include <utility>

namespace percgame {

// Point of the tilted lattice L = {(x, y) in Z^2 : x + y even}.
struct Vertex {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend constexpr bool operator==(const Vertex&, const Vertex&) = default;
};

constexpr bool is_vertex(std::int64_t x, std::int64_t y) noexcept { return ((x + y) & 1) == 0; }
constexpr bool is_vertex(const Vertex& v) noexcept { return is_vertex(v.x, v.y); }

// Canonical id of a non-oriented edge: the lower endpoint and the lateral
// direction of the upper endpoint, which is (lower.x + dx, lower.y + 1).
struct EdgeId {
  Vertex lower;
  int dx = +1;  // -1 or +1

  constexpr Vertex upper() const noexcept { return {lower.x + dx, lower.y + 1}; }
  friend constexpr bool operator==(const EdgeId&, const EdgeId&) = default;
};

// Edge from v to one of its four neighbours (v.x +/- 1, v.y +/- 1).
constexpr EdgeId edge_between(const Vertex& v, int dx, int dy) noexcept {
  if (dy > 0) return EdgeId{v, dx};
  return EdgeId{Vertex{v.x + dx, v.y - 1}, -dx};
}

enum class Vertical : std::uint8_t { Top, Bottom };
enum class Lateral : std::uint8_t { Left, Right };

constexpr int dy_of(Vertical a) noexcept { return a == Vertical::Top ? +1 : -1; }
constexpr int dx_of(Lateral a) noexcept { return a == Lateral::Right ? +1 : -1; }
constexpr char to_char(Vertical a) noexcept { return a == Vertical::Top ? 'T' : 'B'; }
constexpr char to_char(Lateral a) noexcept { return a == Lateral::Right ? 'R' : 'L'; }

struct ActionPair {
  Vertical a1 = Vertical::Top;
  Lateral a2 = Lateral::Right;

  friend constexpr bool operator==(const ActionPair&, const ActionPair&) = default;
};

struct Move {
  EdgeId edge;
  Vertex to;

  friend constexpr bool operator==(const Move&, const Move&) = default;
};

// (T,R) -> up-right, (T,L) -> up-left, (B,R) -> down-right, (B,L) -> down-left.
constexpr Move step(const Vertex& z, ActionPair a) noexcept {
  const int dx = dx_of(a.a2);
  const int dy = dy_of(a.a1);
  return Move{edge_between(z, dx, dy), Vertex{z.x + dx, z.y + dy}};
}

struct EdgeIdHash {
  std::size_t operator()(const EdgeId& e) const noexcept;
};

using EdgeOverrides = std::unordered_map<EdgeId, bool, EdgeIdHash>;

namespace detail {

constexpr std::uint64_t fmix64(std::uint64_t k) noexcept {
  k ^= k >> 33;
  k *= 0xff51afd7ed558ccdULL;
  k ^= k >> 33;
  k *= 0xc4ceb9fe1a85ec53ULL;
  k ^= k >> 33;
  return k;
}

constexpr std::uint64_t zigzag(std::int64_t v) noexcept {
  return (static_cast<std::uint64_t>(v) << 1) ^ static_cast<std::uint64_t>(v >> 63);
}

// Fixed serialization of the canonical key: 31 bits per zig-zagged coordinate
// plus the direction bit. Coordinates are bounded well inside +/-2^30.
constexpr std::uint64_t pack_edge_key(std::int64_t x, std::int64_t y, int dx) noexcept {
  return (zigzag(x) << 33) ^ (zigzag(y) << 1) ^ static_cast<std::uint64_t>(dx > 0 ? 1 : 0);
}

}  // namespace detail

// Infinite i.i.d. Bernoulli(p) edge field, realised as a keyed hash of the
// canonical edge key. The edge is open iff u(seed, e) < p, where u is the top
// 53 bits of the hash read as a dyadic uniform, so raising p never closes an edge.
class Configuration {
 public:
  Configuration() = default;
  Configuration(std::uint64_t seed, double p);

  std::uint64_t seed() const noexcept { return seed_; }
  double p() const noexcept { return p_; }

  // Same field viewed in a frame shifted by (dx, dy): edge e here is edge
  // e + (dx, dy) of the original.
  Configuration translated(std::int64_t dx, std::int64_t dy) const;
  Configuration with_p(double p) const;
  // Pin explicit bits on chosen edges; every other edge keeps its hashed value.
  Configuration with_overrides(EdgeOverrides overrides) const;

  // Uniform in [0, 1) attached to edge e, as a 53-bit integer.
  std::uint64_t uniform_bits(const EdgeId& e) const noexcept {
    const auto key = detail::pack_edge_key(e.lower.x + off_x_, e.lower.y + off_y_, e.dx);
    return detail::fmix64(detail::fmix64(key ^ key_a_) + key_b_) >> 11;
  }

  bool is_open(const EdgeId& e) const {
    if (overrides_) {
      if (auto it = overrides_->find(e); it != overrides_->end()) return it->second;
    }
    return uniform_bits(e) < threshold_;
  }

  // Hot-path accessors used by row sweeps: lower vertex (x, y), direction dx.
  bool is_open(std::int64_t x, std::int64_t y, int dx) const { return is_open(EdgeId{{x, y}, dx}); }

 private:
  std::uint64_t seed_ = 0;
  double p_ = 0.0;
  std::uint64_t threshold_ = 0;
  std::uint64_t key_a_ = 0;
  std::uint64_t key_b_ = 0;
  std::int64_t off_x_ = 0;
  std::int64_t off_y_ = 0;
  std::shared_ptr<const EdgeOverrides> overrides_;
};

inline int edge_cost(const Configuration& config, const EdgeId& e) { return config.is_open(e) ? 1 : 0; }

// Seed of replication `index` under `master`; independent-looking streams.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept;

}  // namespace percgame
