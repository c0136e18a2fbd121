#pragma once

#include <cassert>
#include <cstdint>
#include <limits>
#include <string>

namespace gctsp {

/// Non-negative integer edge cost with an infinity sentinel.
///
/// All instance costs are stored as exact integers (true cost times the
/// instance scale factor), so comparisons and sums never involve floating
/// point. Infinity absorbs addition and compares greater than every finite
/// value. Generator parameters are bounded so that finite sums of up to n^2
/// terms stay far below the sentinel.
class Cost {
 public:
  constexpr Cost() = default;

  static constexpr Cost finite(std::uint64_t value) {
    assert(value < kInfiniteValue);
    return Cost(value);
  }
  static constexpr Cost infinite() { return Cost(kInfiniteValue); }

  constexpr bool is_infinite() const { return raw_ == kInfiniteValue; }
  constexpr bool is_finite() const { return raw_ != kInfiniteValue; }

  /// Scaled integer value; only meaningful for finite costs.
  constexpr std::uint64_t value() const {
    assert(is_finite());
    return raw_;
  }

  friend constexpr Cost operator+(Cost a, Cost b) {
    if (a.is_infinite() || b.is_infinite()) return infinite();
    assert(a.raw_ <= kInfiniteValue - b.raw_);
    return Cost(a.raw_ + b.raw_);
  }
  Cost& operator+=(Cost other) { return *this = *this + other; }

  friend constexpr bool operator==(Cost a, Cost b) { return a.raw_ == b.raw_; }
  friend constexpr bool operator!=(Cost a, Cost b) { return a.raw_ != b.raw_; }
  friend constexpr bool operator<(Cost a, Cost b) { return a.raw_ < b.raw_; }
  friend constexpr bool operator<=(Cost a, Cost b) { return a.raw_ <= b.raw_; }
  friend constexpr bool operator>(Cost a, Cost b) { return a.raw_ > b.raw_; }
  friend constexpr bool operator>=(Cost a, Cost b) { return a.raw_ >= b.raw_; }

 private:
  static constexpr std::uint64_t kInfiniteValue =
      std::numeric_limits<std::uint64_t>::max();

  explicit constexpr Cost(std::uint64_t raw) : raw_(raw) {}

  std::uint64_t raw_ = 0;
};

inline std::string to_string(Cost c) {
  return c.is_infinite() ? "inf" : std::to_string(c.value());
}

}  // namespace gctsp
