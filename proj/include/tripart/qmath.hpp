// Copyright 2026 The tripart Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TRIPART_QMATH_HPP
#define TRIPART_QMATH_HPP

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace tripart {

using Complex = std::complex<double>;

template <typename Scalar>
using ComplexMatrixT =
    Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using RealVectorT = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using ComplexMatrix = ComplexMatrixT<double>;
using ComplexVector = Eigen::VectorXcd;
using RealVector = RealVectorT<double>;

/// Qubit label. In a 2-qubit register A is the first (most significant)
/// qubit and B the second; C is only valid for 3 qubits.
enum class Qubit { A = 0, B = 1, C = 2 };

inline constexpr Qubit kAllQubits[] = {Qubit::A, Qubit::B, Qubit::C};

inline std::string_view to_string(Qubit q) {
  switch (q) {
    case Qubit::A: return "A";
    case Qubit::B: return "B";
    case Qubit::C: return "C";
  }
  return "?";
}

inline Qubit parse_qubit(std::string_view s) {
  if (s == "A" || s == "a" || s == "first") return Qubit::A;
  if (s == "B" || s == "b" || s == "second") return Qubit::B;
  if (s == "C" || s == "c") return Qubit::C;
  throw std::invalid_argument("unknown qubit label '" + std::string(s) + "'");
}

// Standard basis convention: bit value 0 <-> |e>, 1 <-> |g>, qubit A is the
// most significant bit. Index 0 is |eee>, index 7 is |ggg>.
inline constexpr int kExcited = 0;
inline constexpr int kGround = 1;

namespace detail {

inline int checked_qubit_count(Eigen::Index dim) {
  if (dim <= 0) throw std::invalid_argument("matrix dimension must be positive");
  int n = 0;
  while ((Eigen::Index{1} << n) < dim) ++n;
  if ((Eigen::Index{1} << n) != dim)
    throw std::invalid_argument("matrix dimension is not a power of two");
  return n;
}

inline Eigen::Index bit_mask(int n_qubits, Qubit q) {
  const int k = static_cast<int>(q);
  if (k >= n_qubits)
    throw std::invalid_argument("qubit label " + std::string(to_string(q)) +
                                " out of range for a " +
                                std::to_string(n_qubits) + "-qubit register");
  return Eigen::Index{1} << (n_qubits - 1 - k);
}

template <typename Derived>
void require_square(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix is not square");
  if (m.rows() == 0) throw std::invalid_argument("matrix has dimension 0");
}

}  // namespace detail

/// Largest entry-wise deviation from Hermiticity, max |M - M^dagger|.
template <typename Derived>
typename Derived::RealScalar hermiticity_defect(const Eigen::MatrixBase<Derived>& m) {
  detail::require_square(m);
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

/// Eigenvalues of a complex Hermitian matrix in ascending order.
///
/// Cyclic Jacobi rotations, iterated until the off-diagonal Frobenius mass
/// drops below 1e-14 (relative to the matrix norm when it exceeds one).
/// The input is symmetrized as (M + M^dagger)/2 first; an asymmetry larger
/// than `hermitian_tol` is rejected.
template <typename Derived>
RealVectorT<typename Derived::RealScalar> hermitian_eigenvalues(
    const Eigen::MatrixBase<Derived>& m,
    typename Derived::RealScalar hermitian_tol = 1e-10) {
  using Real = typename Derived::RealScalar;
  using Cplx = std::complex<Real>;
  detail::require_square(m);
  if (hermiticity_defect(m) > hermitian_tol)
    throw std::domain_error("matrix is not Hermitian within tolerance");

  const Eigen::Index n = m.rows();
  ComplexMatrixT<Real> a = (m + m.adjoint()) / Real(2);

  auto off_norm = [&] {
    Real s = 0;
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index i = 0; i < n; ++i)
        if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
  };
  const Real scale = std::max(Real(1), a.norm());
  const Real target = Real(1e-14) * scale;

  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps && off_norm() >= target; ++sweep) {
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const Real apq = std::abs(a(p, q));
        if (apq == Real(0)) continue;
        const Cplx phase = a(p, q) / apq;  // e^{i phi}
        const Real app = a(p, p).real();
        const Real aqq = a(q, q).real();
        const Real theta = (aqq - app) / (Real(2) * apq);
        const Real t = (theta >= 0 ? Real(1) : Real(-1)) /
                       (std::abs(theta) + std::sqrt(theta * theta + Real(1)));
        const Real c = Real(1) / std::sqrt(t * t + Real(1));
        const Real s = t * c;
        // a <- J^dagger a J with J_pp = J_qq = c, J_pq = s e^{i phi},
        // J_qp = -s e^{-i phi}.
        for (Eigen::Index k = 0; k < n; ++k) {
          const Cplx akp = a(k, p);
          const Cplx akq = a(k, q);
          a(k, p) = c * akp - s * std::conj(phase) * akq;
          a(k, q) = s * phase * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const Cplx apk = a(p, k);
          const Cplx aqk = a(q, k);
          a(p, k) = c * apk - s * phase * aqk;
          a(q, k) = s * std::conj(phase) * apk + c * aqk;
        }
        a(p, q) = Cplx(0);
        a(q, p) = Cplx(0);
        a(p, p) = Cplx(a(p, p).real());
        a(q, q) = Cplx(a(q, q).real());
      }
    }
  }
  if (off_norm() >= target)
    throw std::runtime_error("Jacobi eigensolver failed to converge");

  RealVectorT<Real> evals = a.diagonal().real();
  std::sort(evals.data(), evals.data() + n);
  return evals;
}

/// Partial transpose with respect to one qubit of an n-qubit operator: the
/// bra and ket bits of that qubit are swapped, all other bits are untouched.
template <typename Derived>
ComplexMatrixT<typename Derived::RealScalar> partial_transpose(
    const Eigen::MatrixBase<Derived>& m, Qubit q) {
  detail::require_square(m);
  const int n_qubits = detail::checked_qubit_count(m.rows());
  const Eigen::Index mask = detail::bit_mask(n_qubits, q);
  const Eigen::Index dim = m.rows();
  ComplexMatrixT<typename Derived::RealScalar> out(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      const Eigen::Index si = (i & ~mask) | (j & mask);
      const Eigen::Index sj = (j & ~mask) | (i & mask);
      out(i, j) = m(si, sj);
    }
  }
  return out;
}

/// Traces out one qubit; the remaining qubits keep their relative order.
template <typename Derived>
ComplexMatrixT<typename Derived::RealScalar> partial_trace(
    const Eigen::MatrixBase<Derived>& m, Qubit q) {
  detail::require_square(m);
  const int n_qubits = detail::checked_qubit_count(m.rows());
  if (n_qubits < 2) throw std::invalid_argument("partial trace needs at least 2 qubits");
  detail::bit_mask(n_qubits, q);  // validates the label
  const int pos = n_qubits - 1 - static_cast<int>(q);
  const Eigen::Index low = (Eigen::Index{1} << pos) - 1;
  const Eigen::Index dim_out = m.rows() / 2;
  auto expand = [&](Eigen::Index r, Eigen::Index bit) {
    return ((r & ~low) << 1) | (bit << pos) | (r & low);
  };
  ComplexMatrixT<typename Derived::RealScalar> out =
      ComplexMatrixT<typename Derived::RealScalar>::Zero(dim_out, dim_out);
  for (Eigen::Index i = 0; i < dim_out; ++i)
    for (Eigen::Index j = 0; j < dim_out; ++j)
      for (Eigen::Index b = 0; b < 2; ++b) out(i, j) += m(expand(i, b), expand(j, b));
  return out;
}

/// Tr(M^2) for a Hermitian M, computed as the Frobenius norm squared.
template <typename Derived>
typename Derived::RealScalar purity(const Eigen::MatrixBase<Derived>& m) {
  detail::require_square(m);
  return m.squaredNorm();
}

/// Density matrix of a small qubit register in the standard basis.
///
/// Construction validates Hermiticity (1e-12), trace (1 - trace_residual
/// within 1e-10) and positivity (minimum eigenvalue >= -1e-10).
class QubitRegisterDensity {
 public:
  static constexpr double kHermitianTol = 1e-12;
  static constexpr double kTraceTol = 1e-10;
  static constexpr double kPositivityTol = 1e-10;

  explicit QubitRegisterDensity(ComplexMatrix matrix, double trace_residual = 0.0)
      : matrix_(std::move(matrix)), trace_residual_(trace_residual) {
    n_qubits_ = detail::checked_qubit_count(matrix_.rows());
    if (matrix_.rows() != matrix_.cols())
      throw std::invalid_argument("density matrix is not square");
    if (!(trace_residual_ >= 0.0))
      throw std::invalid_argument("trace residual must be nonnegative");
    if (hermiticity_defect(matrix_) > kHermitianTol)
      throw std::domain_error("density matrix is not Hermitian");
    const Complex tr = matrix_.trace();
    if (std::abs(tr.real() - (1.0 - trace_residual_)) > kTraceTol ||
        std::abs(tr.imag()) > kTraceTol)
      throw std::domain_error("density matrix trace is off by more than the recorded residual");
    if (hermitian_eigenvalues(matrix_)(0) < -kPositivityTol)
      throw std::domain_error("density matrix is not positive semidefinite");
  }

  int n_qubits() const { return n_qubits_; }
  Eigen::Index dim() const { return matrix_.rows(); }
  const ComplexMatrix& matrix() const { return matrix_; }
  double trace_residual() const { return trace_residual_; }
  Complex operator()(Eigen::Index i, Eigen::Index j) const { return matrix_(i, j); }

 private:
  ComplexMatrix matrix_;
  int n_qubits_ = 0;
  double trace_residual_ = 0.0;
};

inline ComplexMatrix partial_transpose(const QubitRegisterDensity& rho, Qubit q) {
  return partial_transpose(rho.matrix(), q);
}

inline QubitRegisterDensity partial_trace(const QubitRegisterDensity& rho, Qubit q) {
  return QubitRegisterDensity(partial_trace(rho.matrix(), q), rho.trace_residual());
}

inline double purity(const QubitRegisterDensity& rho) { return purity(rho.matrix()); }

/// Projector |psi><psi| of a state vector (not normalized here).
template <typename Derived>
ComplexMatrixT<typename Derived::RealScalar> projector(const Eigen::MatrixBase<Derived>& psi) {
  return psi * psi.adjoint();
}

/// |<psi|rho|psi>| for normalized psi: fidelity of a density with a pure state.
template <typename DerivedM, typename DerivedV>
double pure_fidelity(const Eigen::MatrixBase<DerivedM>& rho,
                     const Eigen::MatrixBase<DerivedV>& psi) {
  return std::abs(psi.dot(rho * psi));
}

/// Standard-basis index of a product of atomic levels, e.g. {g, e, g}.
inline int basis_index(std::initializer_list<int> bits) {
  int idx = 0;
  for (int b : bits) idx = (idx << 1) | (b & 1);
  return idx;
}

}  // namespace tripart

#endif  // TRIPART_QMATH_HPP
