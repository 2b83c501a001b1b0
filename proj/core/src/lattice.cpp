#include "percgame/lattice.hpp"

#include <cmath>
#include <stdexcept>

namespace percgame {

namespace {

constexpr double kTwo53 = 9007199254740992.0;

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t threshold_for(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must lie in [0, 1]");
  // u < p  <=>  bits < ceil(p * 2^53); exact because p * 2^53 is exact in binary64.
  return static_cast<std::uint64_t>(std::ceil(p * kTwo53));
}

}  // namespace

std::size_t EdgeIdHash::operator()(const EdgeId& e) const noexcept {
  return static_cast<std::size_t>(detail::fmix64(detail::pack_edge_key(e.lower.x, e.lower.y, e.dx)));
}

Configuration::Configuration(std::uint64_t seed, double p)
    : seed_(seed),
      p_(p),
      threshold_(threshold_for(p)),
      key_a_(splitmix64(seed)),
      key_b_(splitmix64(seed ^ 0x6a09e667f3bcc909ULL)) {}

Configuration Configuration::translated(std::int64_t dx, std::int64_t dy) const {
  Configuration c = *this;
  c.off_x_ += dx;
  c.off_y_ += dy;
  return c;
}

Configuration Configuration::with_p(double p) const {
  Configuration c = *this;
  c.p_ = p;
  c.threshold_ = threshold_for(p);
  return c;
}

Configuration Configuration::with_overrides(EdgeOverrides overrides) const {
  Configuration c = *this;
  if (overrides_) {
    for (const auto& [e, bit] : *overrides_) overrides.try_emplace(e, bit);
  }
  c.overrides_ = std::make_shared<const EdgeOverrides>(std::move(overrides));
  return c;
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept {
  return splitmix64(splitmix64(master) ^ splitmix64(index + 0x3c6ef372fe94f82bULL));
}

}  // namespace percgame
