#pragma once

// Quantum discord between the two halves of a two-qubit state, with a
// rank-1 projective measurement on one subsystem.

#include <array>
#include <span>
#include <vector>

#include "qclone/cloner.hpp"
#include "qclone/hermat.hpp"

namespace qclone {

/// Measurement basis {cos t|0> + e^{i phi} sin t|1>, sin t|0> - e^{i phi} cos t|1>}.
/// With phi = 0 this is the real one-parameter family in t.
struct MeasurementBasis {
  double t = 0.0;
  double phi = 0.0;

  /// Basis vector k in {0, 1}.
  std::array<complex, 2> vector(int k) const;
  /// Same projector pair with t reduced to [0, pi/2) (outcomes may swap).
  MeasurementBasis canonical() const;
};

/// Outcome probabilities at or below this are degenerate.
inline constexpr double kDegenerateProbability = 1e-12;

struct MeasurementOutcome {
  double probability = 0.0;
  /// Post-measurement state of the unmeasured subsystem; zero when degenerate.
  DensityMatrix2 conditional_state;
  bool degenerate = false;
};

/// Measures subsystem b. Throws InvalidStateError if rho is not a state.
std::array<MeasurementOutcome, 2> measure_b(const DensityMatrix4& rho, const MeasurementBasis& basis);

/// sum_k p_k H(rho_a|k) in bits; degenerate outcomes contribute 0.
double conditional_entropy(const DensityMatrix4& rho, const MeasurementBasis& basis);

/// H(a) + H(b) - H(ab).
double mutual_info_J(const DensityMatrix4& rho);
/// H(a) - H(a | measurement on b).
double mutual_info_I(const DensityMatrix4& rho, const MeasurementBasis& basis);
/// H(b) - H(ab) + H(a | measurement on b), not minimised.
double discord_at(const DensityMatrix4& rho, const MeasurementBasis& basis);

struct DiscordOptions {
  /// Grid size over t in [0, pi/2); also over phi in [0, pi) if scan_phase.
  int grid_points = 721;
  /// Golden-section stopping width in radians.
  double refine_tol = 1e-9;
  bool scan_phase = false;
  /// Which subsystem is measured. A is evaluated as B on the swapped state,
  /// and the entropy fields then refer to the swapped labelling.
  Subsystem measured = Subsystem::B;
};

struct DiscordResult {
  double discord = 0.0;
  double optimal_t = 0.0;
  double optimal_phi = 0.0;
  double entropy_joint = 0.0;
  double entropy_b = 0.0;
  double entropy_a = 0.0;
  double conditional_entropy = 0.0;
  double mutual_info_J = 0.0;
  double mutual_info_I = 0.0;
};

/// Discord minimised over the measurement basis: dense grid, then
/// golden-section refinement around the best grid point.
DiscordResult discord_min(const DensityMatrix4& rho, const DiscordOptions& opts = {});

struct SurfacePoint {
  double j = 0.0;
  double t = 0.0;
  double discord = 0.0;
  bool physical = true;
};

/// Row-major (j outer, t inner) table of discord_at. Points outside
/// valid_j_range are flagged and evaluated with clamped entropies so the
/// table stays finite.
std::vector<SurfacePoint> discord_surface(const InputState& in, std::span<const double> j_grid,
                                          std::span<const double> t_grid);

/// Minimiser on [lo, hi] for a unimodal f, stopping when the bracket is
/// narrower than tol. Returns the abscissa.
template <class F>
double golden_section_minimize(F&& f, double lo, double hi, double tol) {
  const double inv_phi = 0.6180339887498949;  // (sqrt(5) - 1) / 2
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  for (int it = 0; it < 200 && hi - lo > tol; ++it) {
    if (fc < fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
    }
  }
  return fc < fd ? c : d;
}

}  // namespace qclone
