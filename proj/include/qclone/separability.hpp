#pragma once

// Peres-Horodecki separability of the cloner output: closed-form W3/W4
// determinants, the same minors taken directly from the partial transpose,
// and the minimum eigenvalue of the partial transpose as ground truth.

#include <string_view>
#include <vector>

#include "qclone/cloner.hpp"
#include "qclone/hermat.hpp"

namespace qclone {

enum class Classification { Separable, Entangled };

std::string_view to_string(Classification c);

/// Leading 3x3 and 4x4 minors of the partial transpose.
struct WMinors {
  double w3 = 0.0;
  double w4 = 0.0;
};

struct SeparabilityVerdict {
  /// Closed-form minors at (alpha, j); they match the direct minors.
  double w3 = 0.0;
  double w4 = 0.0;
  double min_ppt_eigenvalue = 0.0;
  /// Decided by min_ppt_eigenvalue >= kEigenFloor.
  Classification classification = Classification::Entangled;
  /// Whether (w3 >= 0 and w4 >= 0) gives the same answer.
  bool agreement = true;
};

/// alpha^2 j (1-2j) / 2 * [2j - beta^2 (1-2j)]
double w3_closed(const InputState& in, const MachineParams& m);
/// [alpha^2 beta^2 j (1-2j)^2 (6j-1) - 2 j^4] / 2
double w4_closed(const InputState& in, const MachineParams& m);

WMinors w_direct(const DensityMatrix4& rho);

/// PPT test on an arbitrary state (no physicality check). w3/w4 are the
/// direct minors here.
SeparabilityVerdict classify_state(const DensityMatrix4& rho);

/// Throws InvalidStateError (carrying the offending eigenvalue) when the
/// output state at (alpha, j) is not positive semidefinite.
SeparabilityVerdict classify(const InputState& in, const MachineParams& m);

/// Maximal j-intervals inside valid_j_range(in) and (0, 1/2] where the
/// output is separable. Boundaries between grid points are bisected on the
/// sign of min(w3, w4, min PPT eigenvalue) to `tol`.
std::vector<JInterval> separable_intervals(const InputState& in, double scan_step = 1e-4,
                                           double tol = 1e-6);

}  // namespace qclone
