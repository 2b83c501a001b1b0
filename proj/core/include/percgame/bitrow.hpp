#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace percgame {

// Fixed-width bit row; bit i is column i of a box. Bits at or beyond width()
// are kept clear by every mutating operation.
class BitRow {
 public:
  BitRow() = default;
  explicit BitRow(std::size_t width) : width_(width), words_((width + 63) / 64, 0) {}

  std::size_t width() const noexcept { return width_; }
  std::size_t word_count() const noexcept { return words_.size(); }

  bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void clear() noexcept {
    for (auto& w : words_) w = 0;
  }

  bool any() const noexcept {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  std::size_t count() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  // Lowest set bit, or width() when empty.
  std::size_t first() const noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k]) return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
    return width_;
  }

  std::uint64_t* data() noexcept { return words_.data(); }
  const std::uint64_t* data() const noexcept { return words_.data(); }

  // dst = ((a & ra) << 1) | ((a & la) >> 1): one upward sweep step.
  static void sweep_up(const BitRow& a, const BitRow& ra, const BitRow& la, BitRow& dst) noexcept {
    const std::size_t n = a.words_.size();
    std::uint64_t carry_left = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const std::uint64_t r = a.words_[k] & ra.words_[k];
      dst.words_[k] = (r << 1) | carry_left;
      carry_left = r >> 63;
    }
    for (std::size_t k = 0; k < n; ++k) {
      const std::uint64_t l = a.words_[k] & la.words_[k];
      const std::uint64_t from_next = (k + 1 < n) ? ((a.words_[k + 1] & la.words_[k + 1]) << 63) : 0;
      dst.words_[k] |= (l >> 1) | from_next;
    }
    dst.trim();
  }

  // dst = (ra & (a >> 1)) | (la & (a << 1)): one downward (co-reachability) step,
  // where a is the row above and ra/la are the open masks of the row below.
  static void sweep_down(const BitRow& a, const BitRow& ra, const BitRow& la, BitRow& dst) noexcept {
    const std::size_t n = a.words_.size();
    for (std::size_t k = 0; k < n; ++k) {
      const std::uint64_t shr = (a.words_[k] >> 1) | ((k + 1 < n) ? (a.words_[k + 1] << 63) : 0);
      const std::uint64_t shl = (a.words_[k] << 1) | (k > 0 ? (a.words_[k - 1] >> 63) : 0);
      dst.words_[k] = (ra.words_[k] & shr) | (la.words_[k] & shl);
    }
    dst.trim();
  }

  friend bool operator==(const BitRow&, const BitRow&) = default;

 private:
  void trim() noexcept {
    if (const auto rem = width_ & 63; rem && !words_.empty()) words_.back() &= (std::uint64_t{1} << rem) - 1;
  }

  std::size_t width_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace percgame
