#pragma once

#include <cstdint>
#include <random>

#include "barbilian/geometry.hpp"

namespace barbilian {

// Seeded generator with explicit mappings so streams are identical across
// platforms and standard libraries (std::uniform_real_distribution is not).
class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t raw() { return gen_(); }

  // uniform in [0, 1)
  double u01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * u01(); }

  // inclusive range
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  Vec2 in_disk(Vec2 center, double radius) {
    const double r = radius * std::sqrt(u01());
    const double th = 6.283185307179586 * u01();
    return {center.x + r * std::cos(th), center.y + r * std::sin(th)};
  }

private:
  std::mt19937_64 gen_;
};

}  // namespace barbilian
