#include "qclone/cloner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "qclone/errors.hpp"

namespace qclone {

InputState::InputState(double alpha, double beta) : alpha_(alpha), beta_(beta) {
  if (!std::isfinite(alpha) || !std::isfinite(beta) ||
      std::abs(alpha * alpha + beta * beta - 1.0) > 1e-12) {
    throw ContractError("InputState: alpha^2 + beta^2 must equal 1");
  }
}

InputState InputState::from_alpha(double alpha) {
  if (!(std::abs(alpha) <= 1.0)) throw ContractError("InputState: |alpha| must not exceed 1");
  return {alpha, std::sqrt(1.0 - alpha * alpha)};
}

MachineParams::MachineParams(double j) : j_(j) {
  if (!std::isfinite(j)) throw ContractError("MachineParams: j must be finite");
}

void require_machine_domain(const MachineParams& m) {
  if (m.j() < 0.0 || m.j() > 0.5) {
    std::ostringstream msg;
    msg << "machine parameter j = " << m.j() << " is outside [0, 1/2]";
    throw DomainError(msg.str());
  }
}

DensityMatrix4 build_output_state(const InputState& in, const MachineParams& m) {
  require_machine_domain(m);
  const double a = in.alpha();
  const double b = in.beta();
  const double n = m.n();
  const double j = m.j();
  const double c = a * b * n / 2.0;
  // Rows |00>, |01>, |10>, |11>; the |01>,|10> block is 2j|+><+|.
  return DensityMatrix4(Matrix4{{
      {a * a * n, c, c, 0.0},
      {c, j, j, c},
      {c, j, j, c},
      {0.0, c, c, b * b * n},
  }});
}

DensityMatrix2 reduced_clone(const DensityMatrix4& rho, Subsystem which) {
  // Keeping clone `which` means tracing out the other one.
  return partial_trace(rho, which);
}

double clone_fidelity(const InputState& in, const MachineParams& m) {
  const DensityMatrix2 ra = reduced_clone(build_output_state(in, m), Subsystem::A);
  const double a = in.alpha();
  const double b = in.beta();
  return a * a * ra(0, 0).real() + 2.0 * a * b * ra(0, 1).real() + b * b * ra(1, 1).real();
}

namespace {

bool physical_at(const InputState& in, double j) {
  return min_eigenvalue(build_output_state(in, MachineParams(j))) >= kEigenFloor;
}

// Shrinks [bad, good] around the physicality boundary until no double lies
// strictly between them; returns the physical endpoint.
double bisect_boundary(const InputState& in, double bad, double good) {
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (bad + good);
    if (mid == bad || mid == good) break;
    (physical_at(in, mid) ? good : bad) = mid;
  }
  return good;
}

}  // namespace

std::optional<JInterval> valid_j_range(const InputState& in, double tol) {
  if (!(tol > 0.0)) throw ContractError("valid_j_range: tol must be positive");
  constexpr int kSteps = 500;  // grid step 1e-3 over [0, 1/2]
  auto grid = [](int i) { return i == kSteps ? 0.5 : i * 1e-3; };

  int best_lo = -1;
  int best_hi = -1;
  int run_lo = -1;
  for (int i = 0; i <= kSteps; ++i) {
    if (physical_at(in, grid(i))) {
      if (run_lo < 0) run_lo = i;
      if (best_lo < 0 || i - run_lo > best_hi - best_lo) {
        best_lo = run_lo;
        best_hi = i;
      }
    } else {
      run_lo = -1;
    }
  }
  if (best_lo < 0) return std::nullopt;

  JInterval r{grid(best_lo), grid(best_hi), 0.0};
  if (best_lo > 0) r.lo = bisect_boundary(in, grid(best_lo - 1), r.lo);
  if (best_hi < kSteps) r.hi = bisect_boundary(in, grid(best_hi + 1), r.hi);
  r.boundary_tol = std::min(tol, 4.0 * std::numeric_limits<double>::epsilon());
  return r;
}

MachineConstraintReport check_machine_constraints(const MachineParams& m) {
  MachineConstraintReport r;
  r.j = m.j();
  r.q_norm = m.n();
  r.cross_overlap = std::abs(m.n() / 2.0);
  const double prod = m.j() * m.n();
  r.cauchy_schwarz_bound = prod >= 0.0 ? std::sqrt(prod) : std::numeric_limits<double>::quiet_NaN();
  r.j_nonnegative = m.j() >= 0.0;
  r.q_norm_nonnegative = m.n() >= 0.0;
  constexpr double kEq = 1e-12;
  r.cauchy_schwarz_ok = prod >= 0.0 && r.cross_overlap <= r.cauchy_schwarz_bound + kEq;
  r.cauchy_schwarz_tight = r.cauchy_schwarz_ok && std::abs(r.cross_overlap - r.cauchy_schwarz_bound) <= kEq;
  r.satisfied = r.j_nonnegative && r.q_norm_nonnegative && r.cauchy_schwarz_ok;
  return r;
}

}  // namespace qclone
