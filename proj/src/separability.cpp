#include "qclone/separability.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qclone/errors.hpp"

namespace qclone {

std::string_view to_string(Classification c) {
  return c == Classification::Separable ? "Separable" : "Entangled";
}

double w3_closed(const InputState& in, const MachineParams& m) {
  require_machine_domain(m);
  const double a2 = in.alpha() * in.alpha();
  const double b2 = in.beta() * in.beta();
  const double j = m.j();
  const double n = m.n();
  return a2 * j * n / 2.0 * (2.0 * j - b2 * n);
}

double w4_closed(const InputState& in, const MachineParams& m) {
  require_machine_domain(m);
  const double a2 = in.alpha() * in.alpha();
  const double b2 = in.beta() * in.beta();
  const double j = m.j();
  const double n = m.n();
  return 0.5 * (a2 * b2 * j * n * n * (6.0 * j - 1.0) - 2.0 * j * j * j * j);
}

WMinors w_direct(const DensityMatrix4& rho) {
  const DensityMatrix4 sigma = partial_transpose_b(rho);
  return {principal_minor(sigma, 3), principal_minor(sigma, 4)};
}

namespace {

bool w_test_separable(double w3, double w4) { return w3 >= 0.0 && w4 >= 0.0; }

SeparabilityVerdict verdict_from(double w3, double w4, double min_ppt) {
  SeparabilityVerdict v;
  v.w3 = w3;
  v.w4 = w4;
  v.min_ppt_eigenvalue = min_ppt;
  v.classification = min_ppt >= kEigenFloor ? Classification::Separable : Classification::Entangled;
  v.agreement = w_test_separable(w3, w4) == (v.classification == Classification::Separable);
  return v;
}

// min(w3, w4, lambda_min) >= 0 exactly on the separable set.
double separability_margin(const InputState& in, double j) {
  const MachineParams m(j);
  const double ppt = min_eigenvalue(partial_transpose_b(build_output_state(in, m)));
  return std::min({w3_closed(in, m), w4_closed(in, m), ppt});
}

double bisect_margin(const InputState& in, double outside, double inside, double tol) {
  while (std::abs(inside - outside) > tol) {
    const double mid = 0.5 * (inside + outside);
    if (mid == inside || mid == outside) break;
    (separability_margin(in, mid) >= 0.0 ? inside : outside) = mid;
  }
  return inside;
}

}  // namespace

SeparabilityVerdict classify_state(const DensityMatrix4& rho) {
  const WMinors w = w_direct(rho);
  return verdict_from(w.w3, w.w4, min_eigenvalue(partial_transpose_b(rho)));
}

SeparabilityVerdict classify(const InputState& in, const MachineParams& m) {
  const DensityMatrix4 rho = build_output_state(in, m);
  const double lo = min_eigenvalue(rho);
  if (lo < kEigenFloor) {
    std::ostringstream msg;
    msg << "output state at alpha = " << in.alpha() << ", j = " << m.j()
        << " is unphysical (minimum eigenvalue " << lo << ")";
    throw InvalidStateError(msg.str(), lo);
  }
  return verdict_from(w3_closed(in, m), w4_closed(in, m), min_eigenvalue(partial_transpose_b(rho)));
}

std::vector<JInterval> separable_intervals(const InputState& in, double scan_step, double tol) {
  if (!(scan_step > 0.0) || !(tol > 0.0)) {
    throw ContractError("separable_intervals: scan_step and tol must be positive");
  }
  std::vector<JInterval> out;
  const auto domain = valid_j_range(in);
  if (!domain) return out;

  // Grid over the domain with j = 0 excluded; the last point is the domain
  // edge itself.
  std::vector<double> grid;
  const double first = domain->lo > 0.0 ? domain->lo : scan_step;
  for (long k = 0;; ++k) {
    const double j = first + static_cast<double>(k) * scan_step;
    if (j >= domain->hi) break;
    grid.push_back(j);
  }
  if (domain->hi > 0.0) grid.push_back(domain->hi);

  auto separable_at = [&](double j) {
    return classify(in, MachineParams(j)).classification == Classification::Separable;
  };

  bool in_run = false;
  JInterval cur{0.0, 0.0, tol};
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const bool sep = separable_at(grid[i]);
    if (sep && !in_run) {
      cur.lo = i == 0 ? grid[i] : bisect_margin(in, grid[i - 1], grid[i], tol);
      in_run = true;
    } else if (!sep && in_run) {
      cur.hi = bisect_margin(in, grid[i], grid[i - 1], tol);
      out.push_back(cur);
      in_run = false;
    }
  }
  if (in_run) {
    cur.hi = grid.back();
    out.push_back(cur);
  }
  return out;
}

}  // namespace qclone
