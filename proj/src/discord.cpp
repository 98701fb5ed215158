#include "qclone/discord.hpp"

#include <cmath>
#include <numbers>

#include "qclone/errors.hpp"

namespace qclone {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

std::array<MeasurementOutcome, 2> measure_unchecked(const DensityMatrix4& rho,
                                                    const MeasurementBasis& basis) {
  std::array<MeasurementOutcome, 2> out;
  for (int k = 0; k < 2; ++k) {
    const auto e = basis.vector(k);
    // block(m, n) = <m, e_k| rho |n, e_k>
    complex block[2][2];
    for (int m = 0; m < 2; ++m) {
      for (int n = 0; n < 2; ++n) {
        complex acc = 0.0;
        for (int mu = 0; mu < 2; ++mu)
          for (int nu = 0; nu < 2; ++nu)
            acc += std::conj(e[mu]) * rho(pair_index(m, mu), pair_index(n, nu)) * e[nu];
        block[m][n] = acc;
      }
    }
    const double p = block[0][0].real() + block[1][1].real();
    out[k].probability = p;
    if (p <= kDegenerateProbability) {
      out[k].degenerate = true;
      continue;
    }
    out[k].conditional_state = DensityMatrix2(block[0][0].real() / p, block[1][1].real() / p, block[0][1] / p);
  }
  return out;
}

double conditional_entropy_unchecked(const DensityMatrix4& rho, const MeasurementBasis& basis,
                                     bool strict) {
  double h = 0.0;
  for (const auto& o : measure_unchecked(rho, basis)) {
    if (o.degenerate) continue;
    const Spectrum s = eig_herm2(o.conditional_state);
    h += o.probability * (strict ? vn_entropy(s) : clamped_entropy(s));
  }
  return h;
}

struct Entropies {
  double joint;
  double a;
  double b;
};

Entropies state_entropies(const DensityMatrix4& rho, bool strict) {
  auto h = [strict](const Spectrum& s) { return strict ? vn_entropy(s) : clamped_entropy(s); };
  return {h(eig_sym4(rho)), h(eig_herm2(partial_trace(rho, Subsystem::A))),
          h(eig_herm2(partial_trace(rho, Subsystem::B)))};
}

}  // namespace

std::array<complex, 2> MeasurementBasis::vector(int k) const {
  const complex phase = std::polar(1.0, phi);
  const double c = std::cos(t);
  const double s = std::sin(t);
  if (k == 0) return {complex(c), phase * s};
  return {complex(s), -phase * c};
}

MeasurementBasis MeasurementBasis::canonical() const {
  double tc = std::fmod(t, kHalfPi);
  if (tc < 0.0) tc += kHalfPi;
  if (tc >= kHalfPi) tc = 0.0;
  return {tc, phi};
}

std::array<MeasurementOutcome, 2> measure_b(const DensityMatrix4& rho, const MeasurementBasis& basis) {
  require_state(rho);
  return measure_unchecked(rho, basis);
}

double conditional_entropy(const DensityMatrix4& rho, const MeasurementBasis& basis) {
  require_state(rho);
  return conditional_entropy_unchecked(rho, basis, true);
}

double mutual_info_J(const DensityMatrix4& rho) {
  require_state(rho);
  const Entropies h = state_entropies(rho, true);
  return h.a + h.b - h.joint;
}

double mutual_info_I(const DensityMatrix4& rho, const MeasurementBasis& basis) {
  require_state(rho);
  return vn_entropy(eig_herm2(partial_trace(rho, Subsystem::A))) -
         conditional_entropy_unchecked(rho, basis, true);
}

double discord_at(const DensityMatrix4& rho, const MeasurementBasis& basis) {
  require_state(rho);
  const Entropies h = state_entropies(rho, true);
  return h.b - h.joint + conditional_entropy_unchecked(rho, basis, true);
}

DiscordResult discord_min(const DensityMatrix4& rho, const DiscordOptions& opts) {
  if (opts.grid_points < 64) throw ContractError("discord_min: grid_points must be at least 64");
  if (!(opts.refine_tol > 0.0)) throw ContractError("discord_min: refine_tol must be positive");
  require_state(rho);

  const DensityMatrix4 state = opts.measured == Subsystem::A ? swap_subsystems(rho) : rho;
  auto cond = [&state](double t, double phi) {
    return conditional_entropy_unchecked(state, {t, phi}, true);
  };

  const int n = opts.grid_points;
  const double dt = kHalfPi / n;
  const double dphi = std::numbers::pi / n;
  const int phase_points = opts.scan_phase ? n : 1;

  double best_t = 0.0;
  double best_phi = 0.0;
  double best = cond(0.0, 0.0);
  for (int k = 0; k < phase_points; ++k) {
    for (int i = 0; i < n; ++i) {
      const double v = cond(i * dt, k * dphi);
      if (v < best) {
        best = v;
        best_t = i * dt;
        best_phi = k * dphi;
      }
    }
  }

  // The grid point brackets a local minimum to within one cell on each side.
  const int rounds = opts.scan_phase ? 4 : 1;
  for (int r = 0; r < rounds; ++r) {
    const double phi = best_phi;
    const double t = golden_section_minimize([&](double x) { return cond(x, phi); }, best_t - dt,
                                             best_t + dt, opts.refine_tol);
    if (const double v = cond(t, phi); v < best) {
      best = v;
      best_t = t;
    }
    if (!opts.scan_phase) break;
    const double tt = best_t;
    const double p = golden_section_minimize([&](double x) { return cond(tt, x); }, best_phi - dphi,
                                             best_phi + dphi, opts.refine_tol);
    if (const double v = cond(tt, p); v < best) {
      best = v;
      best_phi = p;
    }
  }

  const Entropies h = state_entropies(state, true);
  DiscordResult res;
  const MeasurementBasis opt = MeasurementBasis{best_t, best_phi}.canonical();
  res.optimal_t = opt.t;
  res.optimal_phi = opt.phi;
  res.entropy_joint = h.joint;
  res.entropy_a = h.a;
  res.entropy_b = h.b;
  res.conditional_entropy = best;
  res.mutual_info_J = h.a + h.b - h.joint;
  res.mutual_info_I = h.a - best;
  res.discord = h.b - h.joint + best;
  return res;
}

std::vector<SurfacePoint> discord_surface(const InputState& in, std::span<const double> j_grid,
                                          std::span<const double> t_grid) {
  if (j_grid.empty() || t_grid.empty()) throw ContractError("discord_surface: grids must be nonempty");
  const auto range = valid_j_range(in);

  std::vector<SurfacePoint> out;
  out.reserve(j_grid.size() * t_grid.size());
  for (double j : j_grid) {
    const DensityMatrix4 rho = build_output_state(in, MachineParams(j));
    const bool physical = range && range->contains(j);
    const Entropies h = state_entropies(rho, physical);
    for (double t : t_grid) {
      const double s = conditional_entropy_unchecked(rho, {t, 0.0}, physical);
      out.push_back({j, t, h.b - h.joint + s, physical});
    }
  }
  return out;
}

}  // namespace qclone
