#pragma once

#include <cstdint>
#include <vector>

namespace pco {

namespace detail {
// splitmix64 finalizer (Steele/Lea/Flood). Full-period mixer, passes the
// usual statistical batteries, and — unlike the standard <random>
// distributions — produces the same stream on every platform.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline double to_unit_double(std::uint64_t x) {
  // 53 random mantissa bits -> [0, 1)
  return static_cast<double>(x >> 11) * 0x1.0p-53;
}
}  // namespace detail

/// Sequential deterministic RNG (splitmix64).
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : state_(seed) {}

  std::uint64_t next_u64() { return detail::mix64(state_++); }

  /// Uniform in [0, 1).
  double uniform01() { return detail::to_unit_double(next_u64()); }

  /// Uniform in (0, 1]: never returns 0.
  double uniform_open0_closed1() { return 1.0 - uniform01(); }

  /// Uniform integer in [0, n).
  std::uint64_t uniform_below(std::uint64_t n) {
    // Lemire multiply-shift with rejection; unbiased and portable.
    std::uint64_t x = next_u64();
    __uint128_t m = static_cast<__uint128_t>(x) * n;
    auto lo = static_cast<std::uint64_t>(m);
    if (lo < n) {
      const std::uint64_t threshold = (0 - n) % n;
      while (lo < threshold) {
        x = next_u64();
        m = static_cast<__uint128_t>(x) * n;
        lo = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  bool bernoulli(double p) { return uniform01() < p; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t k = static_cast<std::size_t>(uniform_below(i));
      std::swap(v[i - 1], v[k]);
    }
  }

 private:
  std::uint64_t state_;
};

/// Purpose tags keep the independent random streams of one trajectory
/// from aliasing each other.
enum class RngPurpose : std::uint64_t {
  EdgeDraw = 1,    // Bernoulli pulse-delivery draws
  TieBreak = 2,    // coin flips for phases sitting exactly on a threshold
  FiringOrder = 3, // random permutations of simultaneous firings
};

/// Counter-based RNG keyed by (seed, trajectory, jump, purpose, index).
///
/// Stateless draws make trajectories reproducible under parallel trial
/// execution, and guarantee that a draw can only be observed at the jump
/// that consumes it: there is no shared stream a policy could read ahead of.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t trajectory_id)
      : base_(detail::mix64(seed ^ detail::mix64(trajectory_id + 0x517cc1b727220a95ULL))) {}

  std::uint64_t draw_u64(RngPurpose purpose, std::uint64_t jump, std::uint64_t index) const {
    std::uint64_t h = base_;
    h = detail::mix64(h ^ (static_cast<std::uint64_t>(purpose) + 0x2545f4914f6cdd1dULL));
    h = detail::mix64(h ^ jump);
    h = detail::mix64(h ^ index);
    return h;
  }

  double draw_unit(RngPurpose purpose, std::uint64_t jump, std::uint64_t index) const {
    return detail::to_unit_double(draw_u64(purpose, jump, index));
  }

  bool draw_bernoulli(RngPurpose purpose, std::uint64_t jump, std::uint64_t index, double p) const {
    return draw_unit(purpose, jump, index) < p;
  }

  /// Fisher-Yates driven by per-jump counters.
  template <class T>
  void shuffle(RngPurpose purpose, std::uint64_t jump, std::vector<T>& v) const {
    std::uint64_t ctr = 0;
    for (std::size_t i = v.size(); i > 1; --i) {
      std::uint64_t k = draw_u64(purpose, jump, ctr++) % i;  // i <= N, modulo bias negligible
      std::swap(v[i - 1], v[k]);
    }
  }

 private:
  std::uint64_t base_;
};

}  // namespace pco
