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

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "discrimkit/states.hpp"

namespace discrimkit {

// Positive operator valued measure: one PSD element per outcome, summing to
// the identity.
template <typename Scalar = double>
class Povm {
 public:
  explicit Povm(std::vector<ComplexMatrix<Scalar>> elements)
      : elements_(std::move(elements)) {
    check();
  }

  static Povm trusted(std::vector<ComplexMatrix<Scalar>> elements) {
    Povm out;
    out.elements_ = std::move(elements);
    return out;
  }

  std::size_t size() const { return elements_.size(); }
  Eigen::Index dim() const { return elements_.front().rows(); }
  const ComplexMatrix<Scalar>& element(std::size_t k) const {
    return elements_.at(k);
  }
  const std::vector<ComplexMatrix<Scalar>>& elements() const {
    return elements_;
  }

  void check() const {
    if (elements_.empty()) {
      throw DomainError("POVM: must have at least one element");
    }
    const Eigen::Index d = elements_.front().rows();
    ComplexMatrix<Scalar> sum = ComplexMatrix<Scalar>::Zero(d, d);
    for (std::size_t k = 0; k < elements_.size(); ++k) {
      const auto& e = elements_[k];
      const std::string label = "POVM element " + std::to_string(k);
      if (e.rows() != d || e.cols() != d) {
        throw DomainError(label + ": dimension mismatch");
      }
      if (!is_hermitian(e)) {
        throw DomainError(label + ": matrix is not Hermitian");
      }
      const auto sd = spectral_decompose(e);
      const Scalar min_eig = sd.eigenvalues(sd.eigenvalues.size() - 1);
      if (min_eig < Tolerances<Scalar>::psd_min_eig) {
        throw DomainError(label +
                          ": not positive semidefinite (min eigenvalue = " +
                          std::to_string(min_eig) + ")");
      }
      sum += e;
    }
    const Scalar dev =
        max_abs((sum - ComplexMatrix<Scalar>::Identity(d, d)).eval());
    if (dev > Tolerances<Scalar>::completeness) {
      throw DomainError(
          "POVM: completeness violated (max |sum - I| = " +
          std::to_string(dev) + ")");
    }
  }

  // Outcome distribution Tr(rho E_k), clamped to [0, 1] and renormalized.
  // A total further than prob_sum from 1 signals an inconsistent pairing of
  // state and POVM and is reported as a logic error.
  RealVector<Scalar> outcome_probabilities(
      const DensityOperator<Scalar>& rho) const {
    if (rho.dim() != dim()) {
      throw DomainError("POVM: state dimension mismatch");
    }
    RealVector<Scalar> p(static_cast<Eigen::Index>(size()));
    for (std::size_t k = 0; k < size(); ++k) {
      const Scalar raw = (rho.matrix() * elements_[k]).trace().real();
      p(static_cast<Eigen::Index>(k)) =
          std::clamp(raw, Scalar(0), Scalar(1));
    }
    const Scalar total = p.sum();
    if (std::abs(total - Scalar(1)) > Tolerances<Scalar>::prob_sum) {
      throw std::logic_error(
          "POVM: outcome probabilities sum to " + std::to_string(total));
    }
    return p / total;
  }

 private:
  Povm() = default;
  std::vector<ComplexMatrix<Scalar>> elements_;
};

}  // namespace discrimkit
