#include "qclone/hermat.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>
#include <utility>

#include "qclone/errors.hpp"

namespace qclone {

DensityMatrix2 DensityMatrix2::from_entries(const Matrix2c& m) {
  if (m[0][0].imag() != 0.0 || m[1][1].imag() != 0.0 || m[0][1] != std::conj(m[1][0])) {
    throw ContractError("DensityMatrix2: matrix is not Hermitian");
  }
  return {m[0][0].real(), m[1][1].real(), m[0][1]};
}

complex DensityMatrix2::operator()(int row, int col) const {
  if (row == col) return row == 0 ? d0_ : d1_;
  return row == 0 ? off_ : std::conj(off_);
}

Matrix2c DensityMatrix2::entries() const {
  return {{{d0_, off_}, {std::conj(off_), d1_}}};
}

DensityMatrix4::DensityMatrix4(const Matrix4& rows) : m_(rows) {
  for (int r = 0; r < 4; ++r) {
    for (int c = r + 1; c < 4; ++c) {
      if (m_[r][c] != m_[c][r]) {
        throw ContractError("DensityMatrix4: matrix is not symmetric");
      }
    }
  }
}

DensityMatrix4 DensityMatrix4::identity() {
  Matrix4 m{};
  for (int i = 0; i < 4; ++i) m[i][i] = 1.0;
  return DensityMatrix4(m);
}

double DensityMatrix4::trace() const { return m_[0][0] + m_[1][1] + m_[2][2] + m_[3][3]; }

double Spectrum::sum() const { return std::accumulate(values.begin(), values.end(), 0.0); }

double Spectrum::min() const { return *std::min_element(values.begin(), values.end()); }

double Spectrum::product() const {
  return std::accumulate(values.begin(), values.end(), 1.0, std::multiplies<>());
}

Spectrum eig_herm2(const DensityMatrix2& m) {
  // lambda = mean +- hypot(half-difference, |offdiag|); no cancellation
  // inside the square root.
  const double a = m(0, 0).real();
  const double d = m(1, 1).real();
  const double mean = 0.5 * (a + d);
  const double radius = std::hypot(0.5 * (a - d), std::abs(m(0, 1)));
  return Spectrum{{mean + radius, mean - radius}};
}

Spectrum eig_herm2(const Matrix2c& m) { return eig_herm2(DensityMatrix2::from_entries(m)); }

namespace {

double offdiag_norm(const Matrix4& a) {
  double s = 0.0;
  for (int p = 0; p < 4; ++p)
    for (int q = p + 1; q < 4; ++q) s += a[p][q] * a[p][q];
  return std::sqrt(2.0 * s);
}

double frobenius(const Matrix4& a) {
  double s = 0.0;
  for (const auto& row : a)
    for (double x : row) s += x * x;
  return std::sqrt(s);
}

void jacobi_rotate(Matrix4& a, int p, int q) {
  const double apq = a[p][q];
  if (apq == 0.0) return;
  const double theta = (a[q][q] - a[p][p]) / (2.0 * apq);
  const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  a[p][p] -= t * apq;
  a[q][q] += t * apq;
  a[p][q] = a[q][p] = 0.0;
  for (int r = 0; r < 4; ++r) {
    if (r == p || r == q) continue;
    const double arp = a[r][p];
    const double arq = a[r][q];
    a[r][p] = a[p][r] = c * arp - s * arq;
    a[r][q] = a[q][r] = s * arp + c * arq;
  }
}

}  // namespace

Spectrum eig_sym4(const DensityMatrix4& m) {
  constexpr int kMaxSweeps = 50;
  Matrix4 a = m.rows();
  const double threshold = 1e-13 * std::max(1.0, frobenius(a));

  bool converged = false;
  for (int sweep = 0; sweep <= kMaxSweeps; ++sweep) {
    if (offdiag_norm(a) < threshold) {
      converged = true;
      break;
    }
    if (sweep == kMaxSweeps) break;
    for (int p = 0; p < 4; ++p)
      for (int q = p + 1; q < 4; ++q) jacobi_rotate(a, p, q);
  }
  if (!converged) throw NumericalError("eig_sym4: Jacobi iteration did not converge in 50 sweeps");

  Spectrum s{{a[0][0], a[1][1], a[2][2], a[3][3]}};
  std::sort(s.values.begin(), s.values.end(), std::greater<>());
  return s;
}

double vn_entropy(const Spectrum& s) {
  for (double v : s.values) {
    if (v < kEigenFloor) {
      std::ostringstream msg;
      msg << "vn_entropy: eigenvalue " << v << " is below " << kEigenFloor;
      throw InvalidStateError(msg.str(), v);
    }
  }
  if (std::abs(s.sum() - 1.0) > kSpectrumSumTol) {
    throw ContractError("vn_entropy: spectrum does not sum to 1");
  }
  return clamped_entropy(s);
}

double clamped_entropy(const Spectrum& s) {
  double h = 0.0;
  for (double v : s.values) {
    if (v > 0.0) h -= v * std::log2(v);
  }
  // -0.0 from an all-zero sum is reported as 0.
  return h + 0.0;
}

DensityMatrix2 partial_trace(const DensityMatrix4& m, Subsystem keep) {
  Matrix2c r{};
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      double acc = 0.0;
      for (int k = 0; k < 2; ++k) {
        acc += keep == Subsystem::B ? m(pair_index(k, x), pair_index(k, y))
                                    : m(pair_index(x, k), pair_index(y, k));
      }
      r[x][y] = acc;
    }
  }
  return DensityMatrix2::from_entries(r);
}

DensityMatrix4 partial_transpose_b(const DensityMatrix4& m) {
  Matrix4 s{};
  for (int a1 = 0; a1 < 2; ++a1)
    for (int b1 = 0; b1 < 2; ++b1)
      for (int a2 = 0; a2 < 2; ++a2)
        for (int b2 = 0; b2 < 2; ++b2)
          s[pair_index(a1, b1)][pair_index(a2, b2)] = m(pair_index(a1, b2), pair_index(a2, b1));
  return DensityMatrix4(s);
}

DensityMatrix4 swap_subsystems(const DensityMatrix4& m) {
  constexpr std::array<int, 4> perm{0, 2, 1, 3};
  Matrix4 s{};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) s[r][c] = m(perm[r], perm[c]);
  return DensityMatrix4(s);
}

double principal_minor(const DensityMatrix4& m, int k) {
  if (k < 1 || k > 4) throw ContractError("principal_minor: order must be in [1, 4]");
  Matrix4 a = m.rows();
  double det = 1.0;
  for (int col = 0; col < k; ++col) {
    int pivot = col;
    for (int r = col + 1; r < k; ++r)
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    if (a[pivot][col] == 0.0) return 0.0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (int r = col + 1; r < k; ++r) {
      const double f = a[r][col] / a[col][col];
      for (int c = col; c < k; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return det;
}

DensityMatrix4 product_state(const DensityMatrix2& a, const DensityMatrix2& b) {
  if (!a.is_real() || !b.is_real()) {
    throw ContractError("product_state: only real factors are representable");
  }
  Matrix4 m{};
  for (int a1 = 0; a1 < 2; ++a1)
    for (int b1 = 0; b1 < 2; ++b1)
      for (int a2 = 0; a2 < 2; ++a2)
        for (int b2 = 0; b2 < 2; ++b2)
          m[pair_index(a1, b1)][pair_index(a2, b2)] = a(a1, a2).real() * b(b1, b2).real();
  return DensityMatrix4(m);
}

DensityMatrix4 pure_state(const std::array<double, 4>& amplitudes) {
  double norm2 = 0.0;
  for (double x : amplitudes) norm2 += x * x;
  if (norm2 <= 0.0) throw ContractError("pure_state: zero vector");
  Matrix4 m{};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m[r][c] = amplitudes[r] * amplitudes[c] / norm2;
  return DensityMatrix4(m);
}

double min_eigenvalue(const DensityMatrix4& m) { return eig_sym4(m).min(); }

bool is_state(const DensityMatrix4& m) {
  return std::abs(m.trace() - 1.0) <= kTraceTol && min_eigenvalue(m) >= kEigenFloor;
}

void require_state(const DensityMatrix4& m) {
  const double lo = min_eigenvalue(m);
  if (lo < kEigenFloor) {
    std::ostringstream msg;
    msg << "not a density matrix: minimum eigenvalue " << lo;
    throw InvalidStateError(msg.str(), lo);
  }
  if (std::abs(m.trace() - 1.0) > kTraceTol) {
    throw InvalidStateError("not a density matrix: trace differs from 1", lo);
  }
}

}  // namespace qclone
