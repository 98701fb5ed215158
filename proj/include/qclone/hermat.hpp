#pragma once

// Small fixed-size Hermitian matrix numerics for two-qubit states.
//
// Basis order for 4x4 objects is |00>, |01>, |10>, |11> where the first
// label belongs to subsystem a and the second to subsystem b, i.e. the
// row index of |m mu> is 2*m + mu.

#include <array>
#include <complex>
#include <vector>

namespace qclone {

using complex = std::complex<double>;
using Matrix2c = std::array<std::array<complex, 2>, 2>;
using Matrix4 = std::array<std::array<double, 4>, 4>;

enum class Subsystem { A, B };

/// Trace tolerance for matrices flagged as states.
inline constexpr double kTraceTol = 1e-12;
/// Eigenvalues in [kEigenFloor, 0) are roundoff; anything lower is invalid.
inline constexpr double kEigenFloor = -1e-10;
/// Spectrum normalisation tolerance accepted by the entropy.
inline constexpr double kSpectrumSumTol = 1e-10;

/// Row/column index of the product basis vector |first, second>.
constexpr int pair_index(int first, int second) { return 2 * first + second; }

/// 2x2 Hermitian matrix. The lower off-diagonal entry is never stored, so
/// Hermiticity holds by construction.
class DensityMatrix2 {
 public:
  DensityMatrix2() = default;
  DensityMatrix2(double m00, double m11, complex m01) : d0_(m00), d1_(m11), off_(m01) {}

  static DensityMatrix2 diagonal(double m00, double m11) { return {m00, m11, 0.0}; }

  /// Throws ContractError unless `m` is exactly Hermitian.
  static DensityMatrix2 from_entries(const Matrix2c& m);

  complex operator()(int row, int col) const;
  double trace() const { return d0_ + d1_; }
  bool is_real() const { return off_.imag() == 0.0; }
  Matrix2c entries() const;

  friend bool operator==(const DensityMatrix2&, const DensityMatrix2&) = default;

 private:
  double d0_ = 0.0;
  double d1_ = 0.0;
  complex off_{};
};

/// 4x4 real symmetric matrix over the two-qubit product basis.
class DensityMatrix4 {
 public:
  DensityMatrix4() = default;
  /// Throws ContractError unless `rows` is exactly symmetric.
  explicit DensityMatrix4(const Matrix4& rows);

  static DensityMatrix4 identity();

  double operator()(int row, int col) const { return m_[row][col]; }
  const Matrix4& rows() const { return m_; }
  double trace() const;

  friend bool operator==(const DensityMatrix4&, const DensityMatrix4&) = default;

 private:
  Matrix4 m_{};
};

/// Eigenvalues sorted in descending order.
struct Spectrum {
  std::vector<double> values;

  double sum() const;
  double min() const;
  double product() const;
};

Spectrum eig_herm2(const DensityMatrix2& m);
/// Checks Hermiticity of a raw matrix first (ContractError otherwise).
Spectrum eig_herm2(const Matrix2c& m);

/// Cyclic Jacobi. Throws NumericalError if 50 sweeps do not bring the
/// off-diagonal Frobenius norm below 1e-13 (relative to max(1, |m|_F)).
Spectrum eig_sym4(const DensityMatrix4& m);

/// Von Neumann entropy in bits. Throws InvalidStateError for an eigenvalue
/// below kEigenFloor and ContractError if the spectrum does not sum to 1.
double vn_entropy(const Spectrum& s);

/// Entropy of the nonnegative part of the spectrum, with no validation.
/// Used only to tabulate formally unphysical operators.
double clamped_entropy(const Spectrum& s);

DensityMatrix2 partial_trace(const DensityMatrix4& m, Subsystem keep);
DensityMatrix4 partial_transpose_b(const DensityMatrix4& m);
DensityMatrix4 swap_subsystems(const DensityMatrix4& m);

/// Determinant of the leading k x k block, k in [1, 4].
double principal_minor(const DensityMatrix4& m, int k);

/// rho_a (x) rho_b for real reduced states.
DensityMatrix4 product_state(const DensityMatrix2& a, const DensityMatrix2& b);

/// Projector onto a real pure two-qubit state (normalised internally).
DensityMatrix4 pure_state(const std::array<double, 4>& amplitudes);

double min_eigenvalue(const DensityMatrix4& m);
bool is_state(const DensityMatrix4& m);
/// Throws InvalidStateError unless `m` has unit trace and no eigenvalue
/// below kEigenFloor.
void require_state(const DensityMatrix4& m);

}  // namespace qclone
