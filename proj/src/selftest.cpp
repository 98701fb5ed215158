#include "qclone/selftest.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <string>

#include "qclone/cloner.hpp"
#include "qclone/discord.hpp"
#include "qclone/hermat.hpp"
#include "qclone/separability.hpp"

namespace qclone {

namespace {

struct Sampler {
  std::mt19937_64 rng;
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

  DensityMatrix4 symmetric() {
    Matrix4 m{};
    for (int r = 0; r < 4; ++r)
      for (int c = r; c < 4; ++c) m[r][c] = m[c][r] = uniform(-1.0, 1.0);
    return DensityMatrix4(m);
  }

  DensityMatrix2 qubit() {
    // Real Bloch vector inside the unit disc.
    const double r = std::sqrt(uniform(0.0, 1.0));
    const double th = uniform(0.0, 2.0 * std::numbers::pi);
    return {0.5 * (1 + r * std::cos(th)), 0.5 * (1 - r * std::cos(th)), 0.5 * r * std::sin(th)};
  }
};

}  // namespace

bool run_selftest(std::uint64_t seed, std::ostream& os) {
  Sampler s{std::mt19937_64(seed)};
  bool all = true;
  auto check = [&](const std::string& name, const std::function<bool()>& body) {
    bool ok = false;
    try {
      ok = body();
    } catch (const std::exception& e) {
      os << "  exception: " << e.what() << '\n';
    }
    os << (ok ? "PASS " : "FAIL ") << name << '\n';
    all = all && ok;
  };

  check("eigenvalues reproduce trace and Frobenius norm", [&] {
    for (int i = 0; i < 1000; ++i) {
      const DensityMatrix4 m = s.symmetric();
      const Spectrum sp = eig_sym4(m);
      double fro = 0.0, sq = 0.0;
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) fro += m(r, c) * m(r, c);
      for (double v : sp.values) sq += v * v;
      if (std::abs(sp.sum() - m.trace()) > 1e-12 || std::abs(sq - fro) > 1e-10) return false;
    }
    return true;
  });

  check("partial transpose is an involution", [&] {
    for (int i = 0; i < 1000; ++i) {
      const DensityMatrix4 m = s.symmetric();
      if (!(partial_transpose_b(partial_transpose_b(m)) == m)) return false;
    }
    return true;
  });

  check("output state: singlet zero mode, swap symmetry, alpha/beta covariance", [&] {
    for (int i = 0; i < 1000; ++i) {
      const InputState in = InputState::from_alpha(s.uniform(0.0, 1.0));
      const MachineParams m(s.uniform(0.0, 0.5));
      const DensityMatrix4 rho = build_output_state(in, m);
      for (int r = 0; r < 4; ++r) {
        if (std::abs(rho(r, 1) - rho(r, 2)) / std::numbers::sqrt2 > 1e-14) return false;
      }
      if (!(swap_subsystems(rho) == rho)) return false;
      // (X (x) X) reverses the basis order.
      const DensityMatrix4 flipped = build_output_state(in.swapped(), m);
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
          if (std::abs(flipped(r, c) - rho(3 - r, 3 - c)) > 1e-14) return false;
    }
    return true;
  });

  check("fidelity equals 1 - j", [&] {
    for (int i = 0; i < 1000; ++i) {
      const InputState in = InputState::from_alpha(s.uniform(0.0, 1.0));
      const MachineParams m(s.uniform(0.0, 0.5));
      if (std::abs(clone_fidelity(in, m) - (1.0 - m.j())) > 1e-12) return false;
    }
    return true;
  });

  check("closed-form W3/W4 match partial-transpose minors", [&] {
    for (int i = 0; i < 10000; ++i) {
      const InputState in = InputState::from_alpha(s.uniform(0.0, 1.0));
      const MachineParams m(s.uniform(0.0, 0.5));
      const WMinors w = w_direct(build_output_state(in, m));
      if (std::abs(w.w3 - w3_closed(in, m)) > 1e-12 || std::abs(w.w4 - w4_closed(in, m)) > 1e-12) return false;
    }
    return true;
  });

  check("D = J - I at random bases", [&] {
    for (int i = 0; i < 1000; ++i) {
      const InputState in = InputState::from_alpha(s.uniform(0.0, 1.0));
      const DensityMatrix4 rho = build_output_state(in, MachineParams(s.uniform(kUniversalJ, 0.5)));
      const MeasurementBasis b{s.uniform(0.0, std::numbers::pi), 0.0};
      if (std::abs(discord_at(rho, b) - (mutual_info_J(rho) - mutual_info_I(rho, b))) > 1e-12) return false;
    }
    return true;
  });

  check("product states have zero discord", [&] {
    for (int i = 0; i < 100; ++i) {
      const DensityMatrix4 rho = product_state(s.qubit(), s.qubit());
      if (std::abs(discord_min(rho).discord) > 1e-9) return false;
    }
    return true;
  });

  check("minimised discord is nonnegative on output states", [&] {
    for (int i = 0; i < 100; ++i) {
      const InputState in = InputState::from_alpha(s.uniform(0.0, 1.0));
      const DensityMatrix4 rho = build_output_state(in, MachineParams(s.uniform(kUniversalJ, 0.5)));
      if (discord_min(rho).discord < -1e-9) return false;
    }
    return true;
  });

  check("W3/W4 test agrees with PPT on physical output states", [&] {
    for (int i = 0; i < 2000; ++i) {
      const InputState in = InputState::from_alpha(s.uniform(0.0, 1.0));
      const MachineParams m(s.uniform(kUniversalJ, 0.5));
      if (!is_state(build_output_state(in, m))) continue;
      if (!classify(in, m).agreement) return false;
    }
    return true;
  });

  return all;
}

}  // namespace qclone
