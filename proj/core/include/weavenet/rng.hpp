#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace weavenet {

/// Counter-based pseudo-random generator (Philox4x32-10).
///
/// Counter-based generation keeps every stream reproducible across
/// platforms and lets callers split independent streams by index without
/// sharing state: stream `k` of seed `s` produces the same sequence no
/// matter how many other streams were consumed before it.
///
/// The generator identity is part of every serialized format that embeds
/// randomness, see kRngId.
class Philox {
 public:
  static constexpr std::string_view kRngId = "philox4x32-10";

  Philox(std::uint64_t seed, std::uint64_t stream) noexcept;

  std::uint32_t next_u32() noexcept;
  std::uint64_t next_u64() noexcept;

  /// Uniform draw in [0, 1), 53-bit resolution.
  double uniform() noexcept;
  /// Uniform draw in (0, 1], safe as a log() argument.
  double uniform_pos() noexcept;
  /// Uniform draw in [lo, hi).
  double uniform(double lo, double hi) noexcept;
  /// Standard normal via Box-Muller; consumes two uniforms per pair.
  double normal() noexcept;
  double normal(double mean, double stddev) noexcept;
  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) noexcept;

 private:
  std::array<std::uint32_t, 4> counter_;
  std::array<std::uint32_t, 2> key_;
  std::array<std::uint32_t, 4> block_{};
  int block_pos_ = 4;  // forces generation on first draw
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;

  void fill_block() noexcept;
};

}  // namespace weavenet
