#pragma once

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "qclone/cloner.hpp"
#include "qclone/hermat.hpp"

namespace testing {

inline qclone::DensityMatrix4 to_library(const oracle::Mat4& m) { return qclone::DensityMatrix4(m); }

inline oracle::Mat4 to_oracle(const qclone::DensityMatrix4& m) { return m.rows(); }

inline qclone::DensityMatrix4 bell_phi_plus() { return qclone::pure_state({1, 0, 0, 1}); }

inline qclone::DensityMatrix4 cloner(double alpha, double j) {
  return qclone::build_output_state(qclone::InputState::from_alpha(alpha), qclone::MachineParams(j));
}

inline double max_abs_diff(const qclone::DensityMatrix4& a, const qclone::DensityMatrix4& b) {
  double d = 0.0;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) d = std::max(d, std::abs(a(r, c) - b(r, c)));
  return d;
}

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen); }

  qclone::DensityMatrix4 symmetric() {
    qclone::Matrix4 m{};
    for (int r = 0; r < 4; ++r)
      for (int c = r; c < 4; ++c) m[r][c] = m[c][r] = uniform(-1.0, 1.0);
    return qclone::DensityMatrix4(m);
  }

  /// Random real qubit state.
  qclone::DensityMatrix2 qubit() {
    const double r = std::sqrt(uniform(0.0, 1.0));
    const double th = uniform(0.0, 2.0 * std::numbers::pi);
    return {0.5 * (1 + r * std::cos(th)), 0.5 * (1 - r * std::cos(th)), 0.5 * r * std::sin(th)};
  }

  qclone::DensityMatrix4 product() { return qclone::product_state(qubit(), qubit()); }
};

}  // namespace testing
