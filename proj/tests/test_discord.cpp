#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "qclone/discord.hpp"
#include "qclone/errors.hpp"
#include "test_helpers.hpp"

using namespace qclone;
using doctest::Approx;

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

DensityMatrix4 classical_correlated() {
  Matrix4 m{};
  m[0][0] = m[3][3] = 0.5;
  return DensityMatrix4(m);
}

DensityMatrix4 werner(double z) {
  const auto bell = testing::bell_phi_plus();
  Matrix4 m{};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m[r][c] = z * bell(r, c) + (r == c ? (1.0 - z) / 4.0 : 0.0);
  return DensityMatrix4(m);
}

}  // namespace

TEST_SUITE("discord") {
  TEST_CASE("measurement basis") {
    const MeasurementBasis b{0.3, 0.7};
    const auto e0 = b.vector(0), e1 = b.vector(1);
    const complex overlap = std::conj(e0[0]) * e1[0] + std::conj(e0[1]) * e1[1];
    CHECK(std::abs(overlap) < 1e-16);
    CHECK(std::norm(e0[0]) + std::norm(e0[1]) == Approx(1.0));
    CHECK(MeasurementBasis{kHalfPi + 0.25, 0.0}.canonical().t == Approx(0.25));
    CHECK(MeasurementBasis{-0.25, 0.0}.canonical().t == Approx(kHalfPi - 0.25));
  }

  TEST_CASE("measure_b on a product state does not steer a") {
    const DensityMatrix2 ra(0.7, 0.3, 0.2), rb(0.4, 0.6, -0.1);
    const auto rho = product_state(ra, rb);
    for (double t : {0.0, 0.4, 1.1}) {
      const auto out = measure_b(rho, {t, 0.0});
      CHECK(out[0].probability + out[1].probability == Approx(1.0).epsilon(1e-12));
      for (const auto& o : out) {
        REQUIRE_FALSE(o.degenerate);
        for (int r = 0; r < 2; ++r)
          for (int c = 0; c < 2; ++c) CHECK(std::abs(o.conditional_state(r, c) - ra(r, c)) < 1e-14);
      }
    }
  }

  TEST_CASE("measure_b examples") {
    const auto u = measure_b(testing::cloner(1.0 / std::sqrt(2.0), 1.0 / 6.0), {0.0, 0.0});
    CHECK(u[0].probability == Approx(0.5).epsilon(1e-15));
    CHECK(u[1].probability == Approx(0.5).epsilon(1e-15));

    const auto bell = measure_b(testing::bell_phi_plus(), {0.0, 0.0});
    CHECK(bell[0].probability == Approx(0.5));
    CHECK(bell[0].conditional_state(0, 0).real() == Approx(1.0));
    CHECK(std::abs(bell[0].conditional_state(1, 1)) < 1e-15);
    CHECK(bell[1].probability == Approx(0.5));
    CHECK(bell[1].conditional_state(1, 1).real() == Approx(1.0));

    // |00><00| measured along t = 0 never yields outcome 1.
    const auto pure = measure_b(pure_state({1, 0, 0, 0}), {0.0, 0.0});
    CHECK_FALSE(pure[0].degenerate);
    CHECK(pure[1].degenerate);
    CHECK(conditional_entropy(pure_state({1, 0, 0, 0}), {0.0, 0.0}) == 0.0);

    CHECK_THROWS_AS(measure_b(partial_transpose_b(testing::bell_phi_plus()), {0.0, 0.0}), InvalidStateError);
  }

  TEST_CASE("conditional_entropy") {
    const DensityMatrix2 ra(0.7, 0.3, 0.2), rb(0.5, 0.5, 0.1);
    const auto prod = product_state(ra, rb);
    const double ha = vn_entropy(eig_herm2(ra));
    for (double t : {0.0, 0.3, 0.9, 1.5}) CHECK(conditional_entropy(prod, {t, 0.0}) == Approx(ha).epsilon(1e-13));
    for (double t : {0.0, 0.3, 0.9, 1.5}) CHECK(std::abs(conditional_entropy(testing::bell_phi_plus(), {t, 0.0})) < 1e-12);

    // Frozen from the projector-based oracle.
    const auto rho = testing::cloner(0.5, 0.3);
    const double frozen = 0.8258372290990348;
    CHECK(oracle::conditional_entropy(testing::to_oracle(rho), 0.0) == Approx(frozen).epsilon(1e-13));
    CHECK(conditional_entropy(rho, {0.0, 0.0}) == Approx(frozen).epsilon(1e-13));
  }

  TEST_CASE("conditional_entropy matches the projector oracle at random angles") {
    testing::Rng rng(31);
    for (int i = 0; i < 300; ++i) {
      const double a = rng.uniform(0.0, 1.0), j = rng.uniform(kUniversalJ, 0.5), t = rng.uniform(0.0, 3.0);
      const auto rho = testing::cloner(a, j);
      if (!is_state(rho)) continue;
      REQUIRE(std::abs(conditional_entropy(rho, {t, 0.0}) - oracle::conditional_entropy(testing::to_oracle(rho), t)) <
              1e-12);
    }
  }

  TEST_CASE("mutual information and discord at a fixed basis") {
    const auto prod = product_state(DensityMatrix2(0.7, 0.3, 0.2), DensityMatrix2(0.4, 0.6, 0.1));
    CHECK(std::abs(mutual_info_J(prod)) < 1e-12);
    CHECK(std::abs(mutual_info_I(prod, {0.4, 0.0})) < 1e-12);
    CHECK(std::abs(discord_at(prod, {0.4, 0.0})) < 1e-12);

    CHECK(mutual_info_J(testing::bell_phi_plus()) == Approx(2.0).epsilon(1e-12));
    CHECK(mutual_info_I(testing::bell_phi_plus(), {0.0, 0.0}) == Approx(1.0).epsilon(1e-12));
    CHECK(discord_at(testing::bell_phi_plus(), {0.0, 0.0}) == Approx(1.0).epsilon(1e-12));

    CHECK(mutual_info_I(classical_correlated(), {0.0, 0.0}) == Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(discord_at(classical_correlated(), {0.0, 0.0})) < 1e-12);

    // Composition of the frozen reduced-state and joint-spectrum entropies.
    const double h_clone = 0.6500224216483542;
    const double h_joint = 0.918295834054492;  // H(2/3, 1/3)
    CHECK(mutual_info_J(testing::cloner(1.0 / std::sqrt(2.0), 1.0 / 6.0)) ==
          Approx(2.0 * h_clone - h_joint).epsilon(1e-12));
  }

  TEST_CASE("D = J - I at random bases") {
    testing::Rng rng(32);
    for (int i = 0; i < 1000; ++i) {
      const auto rho = testing::cloner(rng.uniform(0.0, 1.0), rng.uniform(kUniversalJ, 0.5));
      if (!is_state(rho)) continue;
      const MeasurementBasis b{rng.uniform(0.0, std::numbers::pi), rng.uniform(0.0, std::numbers::pi)};
      REQUIRE(std::abs(discord_at(rho, b) - (mutual_info_J(rho) - mutual_info_I(rho, b))) <= 1e-12);
    }
  }

  TEST_CASE("conditional entropy has period pi/2 in t and is continuous") {
    testing::Rng rng(33);
    for (int i = 0; i < 300; ++i) {
      const auto rho = testing::cloner(rng.uniform(0.0, 1.0), rng.uniform(0.17, 0.5));
      const double t = rng.uniform(0.0, kHalfPi);
      const double h = conditional_entropy(rho, {t, 0.0});
      REQUIRE(std::abs(conditional_entropy(rho, {t + kHalfPi, 0.0}) - h) <= 1e-12);
      REQUIRE(std::abs(conditional_entropy(rho, {t + 1e-6, 0.0}) - h) <= 10.0 * 1e-6);
    }
  }

  TEST_CASE("golden_section_minimize") {
    const double x = golden_section_minimize([](double v) { return (v - 0.3) * (v - 0.3); }, 0.0, 1.0, 1e-10);
    CHECK(x == Approx(0.3).epsilon(1e-9));
  }

  TEST_CASE("discord_min reference states") {
    testing::Rng rng(34);
    for (int i = 0; i < 100; ++i) {
      const auto r = discord_min(rng.product());
      REQUIRE(std::abs(r.discord) <= 1e-9);
    }
    CHECK(discord_min(werner(1.0)).discord == Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(discord_min(werner(0.0)).discord) < 1e-12);
    CHECK_THROWS_AS(discord_min(partial_transpose_b(testing::bell_phi_plus())), InvalidStateError);
    DiscordOptions coarse;
    coarse.grid_points = 10;
    CHECK_THROWS_AS(discord_min(werner(0.5), coarse), ContractError);
  }

  TEST_CASE("discord_min on the universal machine against the brute-force grid") {
    const auto rho = testing::cloner(1.0 / std::sqrt(2.0), 1.0 / 6.0);
    const auto brute = oracle::discord_grid(testing::to_oracle(rho), 100000);
    const auto r = discord_min(rho);
    // Frozen from the 1e5-point grid.
    const double frozen = 0.2817743471766208;
    CHECK(std::abs(brute.discord - frozen) < 1e-12);
    CHECK(std::abs(r.discord - frozen) < 1e-9);
    CHECK(r.discord > 0.0);
    CHECK(std::abs(r.discord - (r.mutual_info_J - r.mutual_info_I)) <= 1e-12);
    CHECK(r.entropy_a == Approx(r.entropy_b).epsilon(1e-14));
  }

  TEST_CASE("discord_min agrees with the brute-force grid on sampled output states") {
    testing::Rng rng(35);
    for (int i = 0; i < 6; ++i) {
      const auto rho = testing::cloner(rng.uniform(0.05, 0.95), rng.uniform(0.17, 0.5));
      const auto brute = oracle::discord_grid(testing::to_oracle(rho), 100000);
      const auto r = discord_min(rho);
      // The grid can only overestimate the minimum.
      CHECK(r.discord <= brute.discord + 1e-12);
      CHECK(r.discord >= brute.discord - 1e-8);
    }
  }

  TEST_CASE("discord_min measuring a equals measuring b on output states") {
    testing::Rng rng(36);
    DiscordOptions on_a;
    on_a.measured = Subsystem::A;
    for (int i = 0; i < 50; ++i) {
      const auto rho = testing::cloner(rng.uniform(0.0, 1.0), rng.uniform(0.17, 0.5));
      REQUIRE(std::abs(discord_min(rho).discord - discord_min(rho, on_a).discord) <= 1e-12);
      REQUIRE(discord_min(rho).discord >= -1e-9);
    }
  }

  TEST_CASE("phase scan never raises the discord") {
    testing::Rng rng(37);
    DiscordOptions phase;
    phase.scan_phase = true;
    phase.grid_points = 180;
    for (int i = 0; i < 12; ++i) {
      const auto rho = testing::cloner(rng.uniform(0.0, 1.0), rng.uniform(0.17, 0.5));
      const auto r = discord_min(rho, phase);
      REQUIRE(r.discord <= discord_min(rho).discord + 1e-12);
      REQUIRE(r.discord >= -1e-9);
      REQUIRE(std::abs(r.discord - (r.mutual_info_J - r.mutual_info_I)) <= 1e-12);
    }
  }

  TEST_CASE("phase scan finds the sigma_y optimum missed by real bases") {
    // Frozen from a Nelder-Mead search over (t, phi) on an independent
    // numpy construction; the optimum sits at t = pi/4, phi = pi/2.
    struct Ref {
      double alpha, j, full, real;
    };
    const Ref refs[] = {{0.7, 0.22, 0.1717559274826589, 0.31473447937},
                        {0.6, 0.2, 0.18795000679296958, -1.0},
                        {0.5, 0.3, 0.3034861113400785, -1.0}};
    DiscordOptions phase;
    phase.scan_phase = true;
    for (const auto& ref : refs) {
      const auto rho = testing::cloner(ref.alpha, ref.j);
      const auto r = discord_min(rho, phase);
      CHECK(std::abs(r.discord - ref.full) < 1e-9);
      CHECK(std::abs(discord_at(rho, {std::numbers::pi / 4, std::numbers::pi / 2}) - ref.full) < 1e-12);
      CHECK(std::abs(std::sin(2 * r.optimal_t)) == Approx(1.0).epsilon(1e-6));
      CHECK(std::abs(std::cos(r.optimal_phi)) < 1e-4);
      if (ref.real > 0) CHECK(std::abs(discord_min(rho).discord - ref.real) < 1e-9);
    }
    // At the universal machine the real optimum is already global.
    const auto u = testing::cloner(1.0 / std::sqrt(2.0), 1.0 / 6.0);
    CHECK(std::abs(discord_min(u, phase).discord - discord_min(u).discord) < 1e-9);
  }

  TEST_CASE("discord_surface") {
    const InputState in = InputState::from_alpha(0.5);
    std::vector<double> js, ts;
    for (int k = 0; k < 8; ++k) js.push_back(0.1 + 0.05 * k);
    for (int k = 0; k <= 20; ++k) ts.push_back(kHalfPi * k / 20.0);
    const auto s = discord_surface(in, js, ts);
    REQUIRE(s.size() == js.size() * ts.size());
    const auto range = valid_j_range(in);
    for (std::size_t i = 0; i < s.size(); ++i) {
      CHECK(std::isfinite(s[i].discord));
      CHECK(s[i].j == js[i / ts.size()]);
      CHECK(s[i].t == ts[i % ts.size()]);
      CHECK(s[i].physical == range->contains(s[i].j));
      if (s[i].physical) CHECK(s[i].discord > 0.0);
    }
    CHECK_FALSE(s.front().physical);  // j = 0.1

    const std::vector<double> one_j{0.3}, one_t{0.4};
    const auto single = discord_surface(in, one_j, one_t);
    REQUIRE(single.size() == 1);
    CHECK(single[0].discord == Approx(discord_at(testing::cloner(0.5, 0.3), {0.4, 0.0})).epsilon(1e-15));

    CHECK_THROWS_AS(discord_surface(in, std::vector<double>{}, one_t), ContractError);
  }

  TEST_CASE("discord_surface is covariant under alpha -> sqrt(1 - alpha^2) with t -> pi/2 - t") {
    std::vector<double> js, ts;
    for (int k = 0; k <= 20; ++k) js.push_back(0.1 + 0.02 * k);
    const int nt = 31;
    for (int k = 0; k < nt; ++k) ts.push_back(kHalfPi * k / (nt - 1));
    for (double a : {0.1, 0.3, 0.6}) {
      const auto s1 = discord_surface(InputState::from_alpha(a), js, ts);
      const auto s2 = discord_surface(InputState::from_alpha(std::sqrt(1.0 - a * a)), js, ts);
      for (std::size_t r = 0; r < js.size(); ++r) {
        for (int c = 0; c < nt; ++c) {
          const auto& p = s1[r * nt + c];
          const auto& q = s2[r * nt + (nt - 1 - c)];
          REQUIRE(std::abs(p.discord - q.discord) <= 1e-10);
          REQUIRE(p.physical == q.physical);
        }
      }
    }
  }
}
