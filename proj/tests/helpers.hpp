#pragma once

#include <cmath>
#include <random>

#include "geosub/sphere.hpp"

namespace geosub::test {

constexpr double kPi = 3.14159265358979323846;

inline std::mt19937& rng() {
  static std::mt19937 gen(20240915u);
  return gen;
}

inline double uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline UnitVector random_unit() {
  std::normal_distribution<double> n(0.0, 1.0);
  Vec3 v{n(rng()), n(rng()), n(rng())};
  while (norm(v) < 1e-3) v = {n(rng()), n(rng()), n(rng())};
  return UnitVector(normalized(v));
}

/// Random unit direction in the tangent plane at p.
inline Vec3 random_tangent_dir(const UnitVector& p) {
  Vec3 w = random_unit().vec();
  Vec3 t = w - p.vec() * dot(w, p.vec());
  while (norm(t) < 1e-3) {
    w = random_unit().vec();
    t = w - p.vec() * dot(w, p.vec());
  }
  return normalized(t);
}

}  // namespace geosub::test
