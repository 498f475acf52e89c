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

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <utility>
#include <vector>

#include "discrimkit/povm.hpp"

namespace discrimkit {

// Binary hypothesis pair: states rho0, rho1 with prior probabilities.
template <typename Scalar = double>
struct BinaryEnsemble {
  DensityOperator<Scalar> rho0;
  DensityOperator<Scalar> rho1;
  Scalar prior0;
  Scalar prior1;

  BinaryEnsemble(DensityOperator<Scalar> r0, DensityOperator<Scalar> r1,
                 Scalar p0)
      : BinaryEnsemble(std::move(r0), std::move(r1), p0, Scalar(1) - p0) {}

  BinaryEnsemble(DensityOperator<Scalar> r0, DensityOperator<Scalar> r1,
                 Scalar p0, Scalar p1)
      : rho0(std::move(r0)), rho1(std::move(r1)), prior0(p0), prior1(p1) {
    if (rho0.dim() != rho1.dim()) {
      throw DomainError("binary ensemble: dimension mismatch");
    }
    if (!(prior0 >= Scalar(0) && prior0 <= Scalar(1)) ||
        !(prior1 >= Scalar(0) && prior1 <= Scalar(1))) {
      throw DomainError("binary ensemble: priors outside [0, 1]");
    }
    if (std::abs(prior0 + prior1 - Scalar(1)) >
        Tolerances<Scalar>::prior_sum) {
      throw DomainError("binary ensemble: priors must sum to 1");
    }
  }

  Eigen::Index dim() const { return rho0.dim(); }
};

// Outcome of minimum-error discrimination: the two-element POVM, the
// minimum average error and the two conditional errors
// (type1 = Tr rho0 E1, type2 = Tr rho1 E0).
template <typename Scalar = double>
struct DiscriminationResult {
  Scalar error_probability;
  Povm<Scalar> povm;
  Scalar type1_error;
  Scalar type2_error;
};

// Outcome of unambiguous discrimination: three-element POVM {E0, E1, E2},
// identification probabilities q_i = Tr(rho_i E_i) and the average
// inconclusive probability prior0 (1 - q0) + prior1 (1 - q1).
template <typename Scalar = double>
struct UnambiguousResult {
  Povm<Scalar> povm;
  Scalar q0;
  Scalar q1;
  Scalar inconclusive_probability;
};

template <typename Scalar>
ComplexMatrix<Scalar> helstrom_matrix(const BinaryEnsemble<Scalar>& ensemble) {
  return ensemble.prior1 * ensemble.rho1.matrix() -
         ensemble.prior0 * ensemble.rho0.matrix();
}

namespace detail {

// Two-outcome minimum-error POVM for the (possibly posterior-weighted)
// matrix p1 rho1 - p0 rho0. Outcome 1 is decided on the strictly positive
// eigenspace; the kernel goes to outcome 0.
template <typename Scalar>
std::pair<ComplexMatrix<Scalar>, ComplexMatrix<Scalar>> binary_min_error_povm(
    const ComplexMatrix<Scalar>& gamma) {
  const auto sd = spectral_decompose(gamma);
  const Eigen::Index n = sd.eigenvalues.size();
  const Scalar largest = sd.eigenvalues.cwiseAbs().maxCoeff();
  const Scalar cutoff = Tolerances<Scalar>::support_cutoff_rel * largest;
  ComplexMatrix<Scalar> e1 = ComplexMatrix<Scalar>::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    if (sd.eigenvalues(k) > cutoff) {
      e1 += sd.eigenvectors.col(k) * sd.eigenvectors.col(k).adjoint();
    }
  }
  e1 = ((e1 + e1.adjoint()) * Scalar(0.5)).eval();
  ComplexMatrix<Scalar> e0 = ComplexMatrix<Scalar>::Identity(n, n) - e1;
  return {std::move(e0), std::move(e1)};
}

}  // namespace detail

// Holevo-Helstrom optimal measurement. Outcome 1 projects onto the positive
// eigenspace of Gamma = prior1 rho1 - prior0 rho0, outcome 0 onto its
// complement (eigenvalues inside the rank cutoff count as kernel and are
// assigned to outcome 0). The minimum error is (1 - ||Gamma||_1) / 2.
template <typename Scalar>
DiscriminationResult<Scalar> optimal_discrimination(
    const BinaryEnsemble<Scalar>& ensemble) {
  const ComplexMatrix<Scalar> gamma = helstrom_matrix(ensemble);
  const Scalar tnorm = trace_norm(gamma);
  auto [e0, e1] = detail::binary_min_error_povm(gamma);
  const Scalar type1 = std::clamp(
      (ensemble.rho0.matrix() * e1).trace().real(), Scalar(0), Scalar(1));
  const Scalar type2 = std::clamp(
      (ensemble.rho1.matrix() * e0).trace().real(), Scalar(0), Scalar(1));
  const Scalar error =
      std::clamp(Scalar(0.5) * (Scalar(1) - tnorm), Scalar(0), Scalar(0.5));
  return DiscriminationResult<Scalar>{
      error, Povm<Scalar>({std::move(e0), std::move(e1)}), type1, type2};
}

// Minimum error for two pure states. Equal priors use the closed form
// (1 - sqrt(1 - |<psi0|psi1>|^2)) / 2; other priors go through
// optimal_discrimination on the rank-one ensemble.
template <typename Scalar>
Scalar pure_state_error(const PureState<Scalar>& psi0,
                        const PureState<Scalar>& psi1, Scalar prior0) {
  if (std::abs(prior0 - Scalar(0.5)) <= Scalar(1e-12)) {
    const Scalar ov2 = std::norm(overlap(psi0, psi1));
    return Scalar(0.5) *
           (Scalar(1) - std::sqrt(std::max(Scalar(0), Scalar(1) - ov2)));
  }
  return optimal_discrimination(BinaryEnsemble<Scalar>(
             psi0.to_density(), psi1.to_density(), prior0))
      .error_probability;
}

// Average Bayes cost sum_{a,b} prior_a C(a,b) Tr(rho_a E_b). With the 0/1
// cost matrix this is the average error probability of the strategy.
template <typename Scalar>
Scalar average_cost(const std::vector<DensityOperator<Scalar>>& states,
                    const std::vector<Scalar>& priors,
                    const RealMatrix<Scalar>& costs,
                    const Povm<Scalar>& povm) {
  const std::size_t n = states.size();
  if (n == 0) throw DomainError("average_cost: no hypotheses given");
  if (priors.size() != n) {
    throw DomainError("average_cost: priors/states length mismatch");
  }
  if (povm.size() != n) {
    throw DomainError("average_cost: POVM outcome count must equal state count");
  }
  if (costs.rows() != static_cast<Eigen::Index>(n) ||
      costs.cols() != static_cast<Eigen::Index>(n)) {
    throw DomainError("average_cost: cost matrix shape mismatch");
  }
  Scalar prior_total = 0;
  for (std::size_t a = 0; a < n; ++a) {
    if (states[a].dim() != povm.dim()) {
      throw DomainError("average_cost: dimension mismatch");
    }
    if (priors[a] < Scalar(0)) {
      throw DomainError("average_cost: negative prior");
    }
    prior_total += priors[a];
  }
  if (std::abs(prior_total - Scalar(1)) > Scalar(1e-10)) {
    throw DomainError("average_cost: priors must sum to 1");
  }
  Scalar cost = 0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      cost += priors[a] * costs(a, b) *
              (states[a].matrix() * povm.element(b)).trace().real();
    }
  }
  return cost;
}

namespace detail {

template <typename Scalar>
Scalar min_eigenvalue(const ComplexMatrix<Scalar>& a) {
  const auto sd = spectral_decompose(a);
  return sd.eigenvalues(sd.eigenvalues.size() - 1);
}

}  // namespace detail

// Unambiguous (zero-misidentification) discrimination of two pure states.
// E0 is supported on the direction orthogonal to psi1 within span{psi0,
// psi1}, E1 on the one orthogonal to psi0, so Tr(rho1 E0) = Tr(rho0 E1) = 0.
// The identification weights target 1 - q_i = sqrt(prior_j / prior_i) |ov|;
// when that point is infeasible (q outside [0, 1] or E2 losing positivity)
// the weights are clamped to [0, 1] and scaled back to the feasibility
// boundary by bisection on the minimum eigenvalue of E2.
template <typename Scalar>
UnambiguousResult<Scalar> unambiguous_discrimination(
    const PureState<Scalar>& psi0, const PureState<Scalar>& psi1,
    Scalar prior0) {
  if (psi0.dim() != psi1.dim()) {
    throw DomainError("unambiguous_discrimination: dimension mismatch");
  }
  if (!(prior0 >= Scalar(0) && prior0 <= Scalar(1))) {
    throw DomainError("unambiguous_discrimination: prior outside [0, 1]");
  }
  const Scalar prior1 = Scalar(1) - prior0;
  const std::complex<Scalar> ov = overlap(psi0, psi1);
  const Scalar ov_abs = std::abs(ov);
  if (ov_abs >= Scalar(1) - Scalar(1e-12)) {
    throw DomainError(
        "unambiguous_discrimination: states not unambiguously "
        "distinguishable (overlap 1)");
  }

  const Eigen::Index d = psi0.dim();
  const auto& a0 = psi0.amplitudes();
  const auto& a1 = psi1.amplitudes();
  // In-span unit vectors orthogonal to psi1 and to psi0 respectively.
  const ComplexVector<Scalar> perp1 =
      (a0 - a1 * a1.dot(a0)).normalized();
  const ComplexVector<Scalar> perp0 =
      (a1 - a0 * a0.dot(a1)).normalized();
  const Scalar c0 = std::norm(a0.dot(perp1));
  const Scalar c1 = std::norm(a1.dot(perp0));

  const auto make_elements = [&](Scalar q0, Scalar q1) {
    ComplexMatrix<Scalar> e0 = (q0 / c0) * (perp1 * perp1.adjoint());
    ComplexMatrix<Scalar> e1 = (q1 / c1) * (perp0 * perp0.adjoint());
    ComplexMatrix<Scalar> e2 =
        ComplexMatrix<Scalar>::Identity(d, d) - e0 - e1;
    return std::array<ComplexMatrix<Scalar>, 3>{std::move(e0), std::move(e1),
                                                std::move(e2)};
  };

  const Scalar failure0 =
      prior0 > Scalar(0) ? std::sqrt(prior1 / prior0) * ov_abs : Scalar(1);
  const Scalar failure1 =
      prior1 > Scalar(0) ? std::sqrt(prior0 / prior1) * ov_abs : Scalar(1);
  Scalar q0 = Scalar(1) - failure0;
  Scalar q1 = Scalar(1) - failure1;

  bool feasible = q0 >= Scalar(0) && q0 <= Scalar(1) && q1 >= Scalar(0) &&
                  q1 <= Scalar(1);
  if (feasible) {
    const auto elems = make_elements(q0, q1);
    feasible = detail::min_eigenvalue(elems[2]) >=
               Tolerances<Scalar>::psd_min_eig;
  }
  if (!feasible) {
    q0 = std::clamp(q0, Scalar(0), Scalar(1));
    q1 = std::clamp(q1, Scalar(0), Scalar(1));
    const auto ok = [&](Scalar t) {
      const auto elems = make_elements(t * q0, t * q1);
      return detail::min_eigenvalue(elems[2]) >= -Scalar(1e-12);
    };
    Scalar lo = 0, hi = 1;
    if (ok(hi)) {
      lo = hi;
    } else {
      for (int iter = 0; iter < 80; ++iter) {
        const Scalar mid = (lo + hi) / 2;
        (ok(mid) ? lo : hi) = mid;
      }
    }
    q0 *= lo;
    q1 *= lo;
  }

  auto elems = make_elements(q0, q1);
  const Scalar inconclusive =
      prior0 * (Scalar(1) - q0) + prior1 * (Scalar(1) - q1);
  return UnambiguousResult<Scalar>{
      Povm<Scalar>({std::move(elems[0]), std::move(elems[1]),
                    std::move(elems[2])}),
      q0, q1, inconclusive};
}

}  // namespace discrimkit
