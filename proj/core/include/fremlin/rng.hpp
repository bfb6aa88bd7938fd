#pragma once

#include <cstdint>
#include <limits>

#include "fremlin/rational.hpp"

namespace fremlin {

/// Counter-based splittable generator ("SplitMix-CTR").
///
/// Output i of stream s under seed k is mix64(mix64(k ^ mix64(s)) + i * golden),
/// where mix64 is the SplitMix64 finalizer. Streams are derived with `split`, so
/// a suite can hand sample i its own stream and any sharding of the samples over
/// workers reproduces the same values.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0) noexcept
      : key_(mix64(seed ^ mix64(stream + kGolden))) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() noexcept { return mix64(key_ + (++counter_) * kGolden); }

  /// Independent child stream; does not advance this generator.
  CounterRng split(std::uint64_t child) const noexcept {
    CounterRng out(0);
    out.key_ = mix64(key_ ^ mix64(child * 0xd1b54a32d192ed03ULL + 1));
    return out;
  }

  /// Uniform integer in [lo, hi] (inclusive), rejection sampled.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) noexcept;

  /// Uniform rational lo + (hi - lo) * k / denominator for k in [0, denominator].
  Rational uniform_rational(const Rational& lo, const Rational& hi, std::int64_t denominator = 8) noexcept;

  bool coin() noexcept { return ((*this)() >> 63) != 0; }

  static std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace fremlin
