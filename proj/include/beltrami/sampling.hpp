#pragma once

#include <cstdint>

#include "beltrami/geometry.hpp"

namespace beltrami {

// Radical-inverse (van der Corput) value of index i in the given base.
inline double radical_inverse(std::uint64_t i, std::uint32_t base) {
  double inv = 1.0 / base, f = inv, r = 0.0;
  while (i > 0) {
    r += f * static_cast<double>(i % base);
    i /= base;
    f *= inv;
  }
  return r;
}

// Deterministic low-discrepancy point sequence (Halton, bases 2/3/5).
// The seed offsets the start index, so reports are bit-reproducible per seed.
class HaltonSampler {
 public:
  explicit HaltonSampler(std::uint64_t seed = 0) : index_(1 + seed) {}

  Vec3 next() {
    const std::uint64_t i = index_++;
    return {radical_inverse(i, 2), radical_inverse(i, 3), radical_inverse(i, 5)};
  }

  Vec3 next_in(const Box3& box) { return box.lerp(next()); }

  Vec2 next_in(const Box2& box) {
    const Vec3 t = next();
    return {box.lo.u + (box.hi.u - box.lo.u) * t.x, box.lo.v + (box.hi.v - box.lo.v) * t.y};
  }

 private:
  std::uint64_t index_;
};

}  // namespace beltrami
