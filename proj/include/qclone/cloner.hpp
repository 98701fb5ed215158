#pragma once

// Buzek-Hillery copying machine: the two-clone output state as a function
// of the input amplitudes (alpha, beta) and the machine parameter j.

#include <optional>

#include "qclone/hermat.hpp"

namespace qclone {

/// Real input amplitudes alpha|0> + beta|1>.
class InputState {
 public:
  /// Throws ContractError unless alpha^2 + beta^2 = 1 within 1e-12.
  InputState(double alpha, double beta);
  /// beta = +sqrt(1 - alpha^2); requires |alpha| <= 1.
  static InputState from_alpha(double alpha);

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  /// The state with alpha and beta exchanged.
  InputState swapped() const { return {beta_, alpha_}; }

 private:
  double alpha_;
  double beta_;
};

/// Machine parameter j. Any finite value is representable so that the
/// constraint report can describe out-of-domain machines; operations that
/// build a state require j in [0, 1/2].
class MachineParams {
 public:
  explicit MachineParams(double j);

  double j() const { return j_; }
  double n() const { return 1.0 - 2.0 * j_; }

 private:
  double j_;
};

/// Closed interval of the machine parameter with endpoint accuracy.
struct JInterval {
  double lo = 0.0;
  double hi = 0.0;
  double boundary_tol = 0.0;

  bool contains(double j) const { return lo <= j && j <= hi; }
};

inline constexpr double kUniversalJ = 1.0 / 6.0;

/// Throws DomainError for j outside [0, 1/2].
void require_machine_domain(const MachineParams& m);

DensityMatrix4 build_output_state(const InputState& in, const MachineParams& m);

/// Reduced state of one clone; equal for both clones on machine output.
DensityMatrix2 reduced_clone(const DensityMatrix4& rho, Subsystem which);

/// <chi| rho_a |chi> for the input state chi. Equals 1 - j.
double clone_fidelity(const InputState& in, const MachineParams& m);

/// Largest interval of j in [0, 1/2] where the output state is positive
/// semidefinite (minimum eigenvalue >= kEigenFloor). Boundaries are found by
/// a 1e-3 grid scan then bisected; the bisection runs to double precision,
/// so the reported boundary_tol is at most `tol`.
std::optional<JInterval> valid_j_range(const InputState& in, double tol = 1e-6);

struct MachineConstraintReport {
  double j = 0.0;
  /// <Q_i|Q_i> = 1 - 2j, from the normalisation constraint.
  double q_norm = 0.0;
  /// |<Y_i|Q_k>| = n/2 as fixed by the machine.
  double cross_overlap = 0.0;
  /// sqrt(<Y|Y><Q|Q>) = sqrt(j (1 - 2j)); NaN when the product is negative.
  double cauchy_schwarz_bound = 0.0;
  bool j_nonnegative = false;
  bool q_norm_nonnegative = false;
  bool cauchy_schwarz_ok = false;
  bool cauchy_schwarz_tight = false;
  bool satisfied = false;
  /// Values of j for which all constraints hold: [1/6, 1/2].
  JInterval admissible{kUniversalJ, 0.5, 0.0};
};

MachineConstraintReport check_machine_constraints(const MachineParams& m);

}  // namespace qclone
