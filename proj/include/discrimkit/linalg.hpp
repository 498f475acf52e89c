// Copyright 2026 The discrimkit developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include "discrimkit/common.hpp"

namespace discrimkit {

template <typename Scalar = double>
using ComplexMatrix =
    Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar = double>
using ComplexVector = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;
template <typename Scalar = double>
using RealVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar = double>
using RealMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Derived>
using RealScalarOf = typename Eigen::NumTraits<typename Derived::Scalar>::Real;

template <typename Derived>
RealScalarOf<Derived> max_abs(const Eigen::MatrixBase<Derived>& a) {
  if (a.size() == 0) return RealScalarOf<Derived>(0);
  return a.derived().cwiseAbs().maxCoeff();
}

template <typename Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived>& a,
                  RealScalarOf<Derived> rel_tol =
                      Tolerances<RealScalarOf<Derived>>::hermitian_rel) {
  using Real = RealScalarOf<Derived>;
  if (a.rows() != a.cols()) return false;
  const Real scale = std::max(Real(1), max_abs(a));
  const Real dev = max_abs((a.derived() - a.derived().adjoint()).eval());
  return dev <= rel_tol * scale;
}

namespace detail {

template <typename Derived>
void require_square(const Eigen::MatrixBase<Derived>& a, const char* who) {
  if (a.rows() != a.cols()) {
    throw DomainError(std::string(who) + ": matrix is not square (" +
                      std::to_string(a.rows()) + "x" +
                      std::to_string(a.cols()) + ")");
  }
}

template <typename Derived>
void require_hermitian(const Eigen::MatrixBase<Derived>& a, const char* who) {
  require_square(a, who);
  if (!is_hermitian(a)) {
    throw DomainError(std::string(who) + ": matrix is not Hermitian");
  }
}

}  // namespace detail

// Eigenvalues sorted in descending order with the matching orthonormal
// eigenvector columns.
template <typename Scalar = double>
struct SpectralDecomposition {
  RealVector<Scalar> eigenvalues;
  ComplexMatrix<Scalar> eigenvectors;

  ComplexMatrix<Scalar> reconstruct() const {
    return eigenvectors * eigenvalues.asDiagonal() * eigenvectors.adjoint();
  }
};

template <typename Derived>
SpectralDecomposition<RealScalarOf<Derived>> spectral_decompose(
    const Eigen::MatrixBase<Derived>& a) {
  using Real = RealScalarOf<Derived>;
  detail::require_hermitian(a, "spectral_decompose");
  // Symmetrize away roundoff before handing the matrix to the solver.
  const ComplexMatrix<Real> sym =
      ((a.derived() + a.derived().adjoint()) * Real(0.5))
          .template cast<std::complex<Real>>();
  Eigen::SelfAdjointEigenSolver<ComplexMatrix<Real>> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("spectral_decompose: eigensolver failed");
  }
  const Eigen::Index n = sym.rows();
  SpectralDecomposition<Real> out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    out.eigenvalues(k) = solver.eigenvalues()(n - 1 - k);
    out.eigenvectors.col(k) = solver.eigenvectors().col(n - 1 - k);
  }
  return out;
}

// Trace norm of a Hermitian matrix: the sum of absolute eigenvalues.
// General (non-Hermitian) trace norms are deliberately unsupported.
template <typename Derived>
RealScalarOf<Derived> trace_norm(const Eigen::MatrixBase<Derived>& a) {
  detail::require_hermitian(a, "trace_norm");
  return spectral_decompose(a).eigenvalues.cwiseAbs().sum();
}

// Kronecker product with the left factor most significant:
// out(i*rowsB + k, j*colsB + l) = A(i, j) * B(k, l).
template <typename Derived1, typename Derived2>
typename Derived1::PlainObject kron(const Eigen::MatrixBase<Derived1>& a,
                                    const Eigen::MatrixBase<Derived2>& b) {
  static_assert(std::is_same_v<typename Derived1::Scalar,
                               typename Derived2::Scalar>,
                "kron: operands must share a scalar type");
  typename Derived1::PlainObject out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

// d^M guarded by `cap`; throws ResourceError with the computed size.
inline std::size_t checked_power_dim(std::size_t dim, int copies,
                                     std::size_t cap, const char* who) {
  if (copies < 1) {
    throw DomainError(std::string(who) + ": copy count must be at least 1");
  }
  constexpr std::size_t kMax = static_cast<std::size_t>(-1);
  std::size_t total = 1;
  bool overflow = false;
  for (int m = 0; m < copies; ++m) {
    if (dim != 0 && total > kMax / dim) {
      overflow = true;
      break;
    }
    total *= dim;
  }
  if (overflow || total > cap) {
    const std::string size = overflow ? std::to_string(dim) + "^" +
                                            std::to_string(copies)
                                      : std::to_string(total);
    throw ResourceError(std::string(who) + ": dimension " + size +
                        " exceeds cap " + std::to_string(cap));
  }
  return total;
}

// M-fold Kronecker power, copy 1 most significant.
template <typename Derived>
typename Derived::PlainObject kron_power(const Eigen::MatrixBase<Derived>& a,
                                         int copies) {
  if (copies < 1) throw DomainError("kron_power: copy count must be at least 1");
  typename Derived::PlainObject out = a.derived();
  for (int m = 1; m < copies; ++m) out = kron(out, a).eval();
  return out;
}

enum class Subsystem { A, B };

// Partial trace of a (dA*dB)-dimensional operator over the discarded
// subsystem; index convention matches kron (subsystem A most significant).
template <typename Derived>
typename Derived::PlainObject partial_trace(const Eigen::MatrixBase<Derived>& a,
                                            Eigen::Index dim_a,
                                            Eigen::Index dim_b,
                                            Subsystem keep) {
  detail::require_square(a, "partial_trace");
  if (dim_a < 1 || dim_b < 1 || dim_a * dim_b != a.rows()) {
    throw DomainError("partial_trace: dimension factorization mismatch (" +
                      std::to_string(dim_a) + "x" + std::to_string(dim_b) +
                      " vs " + std::to_string(a.rows()) + ")");
  }
  using Plain = typename Derived::PlainObject;
  if (keep == Subsystem::A) {
    Plain out = Plain::Zero(dim_a, dim_a);
    for (Eigen::Index i = 0; i < dim_a; ++i)
      for (Eigen::Index j = 0; j < dim_a; ++j)
        for (Eigen::Index b = 0; b < dim_b; ++b)
          out(i, j) += a(i * dim_b + b, j * dim_b + b);
    return out;
  }
  Plain out = Plain::Zero(dim_b, dim_b);
  for (Eigen::Index k = 0; k < dim_b; ++k)
    for (Eigen::Index l = 0; l < dim_b; ++l)
      for (Eigen::Index x = 0; x < dim_a; ++x)
        out(k, l) += a(x * dim_b + k, x * dim_b + l);
  return out;
}

// Fractional power of a Hermitian PSD matrix through its spectrum, with the
// support convention 0^s = 0: eigenvalues at or below
// support_cutoff_rel x (largest eigenvalue) do not contribute. At s = 0 this
// yields the projector onto the support.
template <typename Derived>
typename Eigen::MatrixBase<Derived>::PlainObject fractional_power_psd(
    const Eigen::MatrixBase<Derived>& a, RealScalarOf<Derived> s) {
  using Real = RealScalarOf<Derived>;
  const auto sd = spectral_decompose(a);
  const Eigen::Index n = sd.eigenvalues.size();
  const Real largest = n > 0 ? sd.eigenvalues(0) : Real(0);
  const Real cutoff = Tolerances<Real>::support_cutoff_rel * largest;
  RealVector<Real> powered = RealVector<Real>::Zero(n);
  if (largest > Real(0)) {
    for (Eigen::Index k = 0; k < n; ++k) {
      if (sd.eigenvalues(k) > cutoff) {
        powered(k) = std::pow(sd.eigenvalues(k), s);
      }
    }
  }
  typename Derived::PlainObject out =
      sd.eigenvectors * powered.asDiagonal() * sd.eigenvectors.adjoint();
  return ((out + out.adjoint()) * Real(0.5)).eval();
}

// Projector onto the support (range) of a Hermitian PSD matrix.
template <typename Derived>
typename Derived::PlainObject support_projector(
    const Eigen::MatrixBase<Derived>& a) {
  return fractional_power_psd(a, RealScalarOf<Derived>(0));
}

}  // namespace discrimkit
