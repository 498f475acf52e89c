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

#include <cmath>
#include <string>
#include <utility>

#include "discrimkit/linalg.hpp"
#include "discrimkit/rng.hpp"

namespace discrimkit {

// Positive semidefinite, unit-trace Hermitian operator.
template <typename Scalar = double>
class DensityOperator {
 public:
  explicit DensityOperator(ComplexMatrix<Scalar> mat) : mat_(std::move(mat)) {
    check();
  }

  // Constructs without validation. For results of operations that preserve
  // validity by construction (tensor powers, partial traces, channel
  // outputs); tests re-check such results through check().
  static DensityOperator trusted(ComplexMatrix<Scalar> mat) {
    DensityOperator out;
    out.mat_ = std::move(mat);
    return out;
  }

  const ComplexMatrix<Scalar>& matrix() const { return mat_; }
  Eigen::Index dim() const { return mat_.rows(); }

  // Re-validates all invariants; throws DomainError naming the violated one.
  void check() const {
    if (mat_.rows() != mat_.cols() || mat_.rows() < 1) {
      throw DomainError("density operator: matrix is not square");
    }
    if (!mat_.allFinite()) {
      throw DomainError("density operator: entries must be finite");
    }
    const Scalar scale = max_abs(mat_);
    const Scalar herm_dev = max_abs((mat_ - mat_.adjoint()).eval());
    if (herm_dev > Tolerances<Scalar>::hermitian_rel * std::max(Scalar(1), scale)) {
      throw DomainError("density operator: matrix is not Hermitian");
    }
    const Scalar trace_dev = std::abs(mat_.trace().real() - Scalar(1)) +
                             std::abs(mat_.trace().imag());
    if (trace_dev > Tolerances<Scalar>::unit_trace) {
      throw DomainError("density operator: unit trace violated (|Tr - 1| = " +
                        std::to_string(trace_dev) + ")");
    }
    const auto sd = spectral_decompose(mat_);
    const Scalar min_eig = sd.eigenvalues(sd.eigenvalues.size() - 1);
    if (min_eig < Tolerances<Scalar>::psd_min_eig) {
      throw DomainError(
          "density operator: not positive semidefinite (min eigenvalue = " +
          std::to_string(min_eig) + ")");
    }
  }

 private:
  DensityOperator() = default;
  ComplexMatrix<Scalar> mat_;
};

// Unit-norm state vector.
template <typename Scalar = double>
class PureState {
 public:
  explicit PureState(ComplexVector<Scalar> amplitudes)
      : amp_(std::move(amplitudes)) {
    if (amp_.size() < 1) {
      throw DomainError("pure state: amplitude vector is empty");
    }
    if (!amp_.allFinite()) {
      throw DomainError("pure state: amplitudes must be finite");
    }
    const Scalar dev = std::abs(amp_.squaredNorm() - Scalar(1));
    if (dev > Tolerances<Scalar>::unit_norm) {
      throw DomainError("pure state: unit norm violated (|<psi|psi> - 1| = " +
                        std::to_string(dev) + ")");
    }
  }

  // Normalizes and wraps; rejects (near-)zero vectors.
  static PureState normalized(ComplexVector<Scalar> v) {
    const Scalar n = v.norm();
    if (!(n > Scalar(0)) || !v.allFinite()) {
      throw DomainError("pure state: cannot normalize a zero vector");
    }
    return PureState(ComplexVector<Scalar>(v / n));
  }

  const ComplexVector<Scalar>& amplitudes() const { return amp_; }
  Eigen::Index dim() const { return amp_.size(); }

  DensityOperator<Scalar> to_density() const {
    return DensityOperator<Scalar>::trusted(
        (amp_ * amp_.adjoint()).eval());
  }

 private:
  ComplexVector<Scalar> amp_;
};

template <typename Scalar>
std::complex<Scalar> overlap(const PureState<Scalar>& a,
                             const PureState<Scalar>& b) {
  if (a.dim() != b.dim()) {
    throw DomainError("overlap: dimension mismatch");
  }
  return a.amplitudes().dot(b.amplitudes());
}

// Uhlmann fidelity F = [Tr sqrt(sqrt(rho0) rho1 sqrt(rho0))]^2.
template <typename Scalar>
Scalar fidelity(const DensityOperator<Scalar>& rho0,
                const DensityOperator<Scalar>& rho1) {
  if (rho0.dim() != rho1.dim()) {
    throw DomainError("fidelity: dimension mismatch");
  }
  const ComplexMatrix<Scalar> root0 =
      fractional_power_psd(rho0.matrix(), Scalar(0.5));
  const ComplexMatrix<Scalar> inner = root0 * rho1.matrix() * root0;
  const auto sd = spectral_decompose(inner);
  Scalar sum = 0;
  for (Eigen::Index k = 0; k < sd.eigenvalues.size(); ++k) {
    sum += std::sqrt(std::max(sd.eigenvalues(k), Scalar(0)));
  }
  return std::clamp(sum * sum, Scalar(0), Scalar(1));
}

// rho^s for s in [0, 1] with the support convention (rho^0 is the projector
// onto the support of rho).
template <typename Scalar>
ComplexMatrix<Scalar> fractional_power(const DensityOperator<Scalar>& rho,
                                       Scalar s) {
  if (!(s >= Scalar(0) && s <= Scalar(1))) {
    throw DomainError("fractional_power: exponent outside [0, 1]");
  }
  return fractional_power_psd(rho.matrix(), s);
}

// rho^{tensor M}; copy 1 is the most significant Kronecker factor.
template <typename Scalar>
DensityOperator<Scalar> tensor_power(const DensityOperator<Scalar>& rho,
                                     int copies,
                                     std::size_t cap = dim_cap()) {
  checked_power_dim(static_cast<std::size_t>(rho.dim()), copies, cap,
                    "tensor_power");
  return DensityOperator<Scalar>::trusted(kron_power(rho.matrix(), copies));
}

template <typename Scalar>
DensityOperator<Scalar> partial_trace(const DensityOperator<Scalar>& rho_ab,
                                      Eigen::Index dim_a, Eigen::Index dim_b,
                                      Subsystem keep) {
  return DensityOperator<Scalar>::trusted(
      partial_trace(rho_ab.matrix(), dim_a, dim_b, keep));
}

template <typename Scalar = double>
DensityOperator<Scalar> maximally_mixed(Eigen::Index dim) {
  if (dim < 1) throw DomainError("maximally_mixed: dimension must be positive");
  return DensityOperator<Scalar>::trusted(ComplexMatrix<Scalar>(
      ComplexMatrix<Scalar>::Identity(dim, dim) / Scalar(dim)));
}

// |Psi> = (1/sqrt(d)) sum_i |i>_A |i>_B, subsystem A most significant.
template <typename Scalar = double>
PureState<Scalar> maximally_entangled_state(Eigen::Index dim) {
  if (dim < 1) {
    throw DomainError("maximally_entangled_state: dimension must be positive");
  }
  ComplexVector<Scalar> amp = ComplexVector<Scalar>::Zero(dim * dim);
  const Scalar coeff = Scalar(1) / std::sqrt(Scalar(dim));
  for (Eigen::Index i = 0; i < dim; ++i) amp(i * dim + i) = coeff;
  return PureState<Scalar>(std::move(amp));
}

// Ginibre sampler: G with iid standard complex normal entries, then
// G G^dag normalized to unit trace. Full support almost surely.
template <typename Scalar = double>
DensityOperator<Scalar> random_density(Eigen::Index dim, SplitMix64& g) {
  ComplexMatrix<Scalar> ginibre(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      ginibre(i, j) = std::complex<Scalar>(
          static_cast<Scalar>(standard_normal(g)),
          static_cast<Scalar>(standard_normal(g)));
    }
  }
  ComplexMatrix<Scalar> w = ginibre * ginibre.adjoint();
  w = ((w + w.adjoint()) * Scalar(0.5)).eval();
  w /= w.trace().real();
  return DensityOperator<Scalar>(std::move(w));
}

// Haar-distributed pure state (normalized complex normal vector).
template <typename Scalar = double>
PureState<Scalar> random_pure(Eigen::Index dim, SplitMix64& g) {
  ComplexVector<Scalar> v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    v(i) = std::complex<Scalar>(static_cast<Scalar>(standard_normal(g)),
                                static_cast<Scalar>(standard_normal(g)));
  }
  return PureState<Scalar>::normalized(std::move(v));
}

}  // namespace discrimkit
