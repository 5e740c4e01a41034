#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "gala/ga.hpp"

namespace gala {

// Deterministic random source.  Distribution code is self-contained so that
// identical seeds give identical streams independent of the standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t raw() { return engine_(); }

  // [lo, hi)
  double uniform(double lo = 0.0, double hi = 1.0) {
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }

  // Box-Muller
  double normal(double mu = 0.0, double sigma = 1.0) {
    if (has_spare_) {
      has_spare_ = false;
      return mu + sigma * spare_;
    }
    const double u1 = 1.0 - static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    const double u2 = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return mu + sigma * r * std::cos(a);
  }

  // [0, n)
  std::int64_t uniform_int(std::int64_t n) {
    const std::uint64_t bound = static_cast<std::uint64_t>(n);
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return static_cast<std::int64_t>(x % bound);
  }

  template <class T>
  void shuffle(std::vector<T>& xs) {
    for (std::size_t i = xs.size(); i > 1; --i)
      std::swap(xs[i - 1], xs[static_cast<std::size_t>(uniform_int(static_cast<std::int64_t>(i)))]);
  }

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// Uniform random proper rotation (normalized 4-normal quaternion).
inline ga::Rotation random_rotation(Rng& rng) {
  std::array<double, 4> q;
  double n2 = 0.0;
  do {
    for (auto& c : q) c = rng.normal();
    n2 = q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3];
  } while (n2 < 1e-12);
  const double inv = 1.0 / std::sqrt(n2);
  for (auto& c : q) c *= inv;
  return ga::Rotation::from_quaternion(q);
}

inline ga::Vec3 random_unit_vector(Rng& rng) {
  ga::Vec3 v;
  double n = 0.0;
  do {
    v = {rng.normal(), rng.normal(), rng.normal()};
    n = ga::norm(v);
  } while (n < 1e-6);
  return (1.0 / n) * v;
}

}  // namespace gala
