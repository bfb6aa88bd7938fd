#include "fremlin/rng.hpp"

namespace fremlin {

std::int64_t CounterRng::uniform_int(std::int64_t lo, std::int64_t hi) noexcept {
  if (hi <= lo) return lo;
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>((*this)());
  const std::uint64_t limit = max() - (max() % span);
  std::uint64_t draw;
  do {
    draw = (*this)();
  } while (draw >= limit);
  return lo + static_cast<std::int64_t>(draw % span);
}

Rational CounterRng::uniform_rational(const Rational& lo, const Rational& hi, std::int64_t denominator) noexcept {
  const std::int64_t k = uniform_int(0, denominator);
  Rational out = lo + (hi - lo) * ratio(k, denominator);
  out.canonicalize();
  return out;
}

}  // namespace fremlin
