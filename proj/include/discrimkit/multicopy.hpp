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
#include <limits>
#include <optional>
#include <vector>

#include "discrimkit/golden.hpp"
#include "discrimkit/helstrom.hpp"

namespace discrimkit {

// Resolution of the s-minimization underlying the Chernoff quantities.
inline constexpr double kChernoffSTolerance = 1e-8;

// Chernoff overlap and exponent. A vanishing overlap (disjoint supports)
// is reported with an infinite exponent rather than a NaN.
template <typename Scalar = double>
struct ChernoffResult {
  Scalar q_min;
  Scalar s_star;
  Scalar exponent;
};

// All the computable error bounds for M-copy discrimination of one pair of
// states, plus the exact tensor-product error where the dimension cap
// allows it.
template <typename Scalar = double>
struct BoundReport {
  int m_copies;
  std::optional<Scalar> exact_error;
  Scalar fidelity_lower;
  Scalar fidelity_upper;
  Scalar bhattacharya_lower;
  Scalar bhattacharya_upper;
  Scalar qcb_upper;
  Scalar chernoff_exponent;
  Scalar optimal_s;
};

// Tr(rho0^s rho1^{1-s}) with the support convention at the endpoints.
template <typename Scalar>
Scalar chernoff_q(const DensityOperator<Scalar>& rho0,
                  const DensityOperator<Scalar>& rho1, Scalar s) {
  if (rho0.dim() != rho1.dim()) {
    throw DomainError("chernoff_q: dimension mismatch");
  }
  const ComplexMatrix<Scalar> lhs = fractional_power(rho0, s);
  const ComplexMatrix<Scalar> rhs = fractional_power(rho1, Scalar(1) - s);
  return std::max(Scalar(0), (lhs * rhs).trace().real());
}

namespace detail {

// Q(s) evaluated from cached spectra: sum_ij a_i^s b_j^{1-s} |<u_i|v_j>|^2
// over the supports of rho0 and rho1. Identical in value to chernoff_q but
// O(d^2) per s, which keeps the golden-section search cheap.
template <typename Scalar>
class ChernoffObjective {
 public:
  ChernoffObjective(const DensityOperator<Scalar>& rho0,
                    const DensityOperator<Scalar>& rho1) {
    const auto sd0 = spectral_decompose(rho0.matrix());
    const auto sd1 = spectral_decompose(rho1.matrix());
    const Scalar cut0 =
        Tolerances<Scalar>::support_cutoff_rel * sd0.eigenvalues(0);
    const Scalar cut1 =
        Tolerances<Scalar>::support_cutoff_rel * sd1.eigenvalues(0);
    for (Eigen::Index i = 0; i < sd0.eigenvalues.size(); ++i) {
      if (sd0.eigenvalues(i) <= cut0) continue;
      for (Eigen::Index j = 0; j < sd1.eigenvalues.size(); ++j) {
        if (sd1.eigenvalues(j) <= cut1) continue;
        const Scalar w =
            std::norm(sd0.eigenvectors.col(i).dot(sd1.eigenvectors.col(j)));
        if (w > Scalar(0)) {
          terms_.push_back({sd0.eigenvalues(i), sd1.eigenvalues(j), w});
        }
      }
    }
  }

  Scalar operator()(Scalar s) const {
    Scalar q = 0;
    for (const auto& t : terms_) {
      q += std::pow(t.lam0, s) * std::pow(t.lam1, Scalar(1) - s) * t.weight;
    }
    return q;
  }

 private:
  struct Term {
    Scalar lam0, lam1, weight;
  };
  std::vector<Term> terms_;
};

template <typename Scalar, typename F>
ChernoffResult<Scalar> minimize_chernoff(F&& q_of_s) {
  const auto best = golden_section_minimize<Scalar>(
      q_of_s, Scalar(0), Scalar(1), Scalar(kChernoffSTolerance));
  const Scalar q_min = std::max(Scalar(0), best.value);
  const Scalar exponent =
      q_min > Scalar(0)
          ? std::max(Scalar(0), -std::log(q_min))
          : std::numeric_limits<Scalar>::infinity();
  return ChernoffResult<Scalar>{q_min, best.x, exponent};
}

}  // namespace detail

// Quantum Chernoff quantities: q_min = inf_s Tr(rho0^s rho1^{1-s}) found by
// golden-section search (Q is convex in s), exponent = -log q_min.
template <typename Scalar>
ChernoffResult<Scalar> quantum_chernoff(const DensityOperator<Scalar>& rho0,
                                        const DensityOperator<Scalar>& rho1) {
  if (rho0.dim() != rho1.dim()) {
    throw DomainError("quantum_chernoff: dimension mismatch");
  }
  detail::ChernoffObjective<Scalar> q(rho0, rho1);
  return detail::minimize_chernoff<Scalar>(q);
}

// Quantum Chernoff bound on the M-copy error: (inf_s Q)^M / 2.
template <typename Scalar>
Scalar qcb_bound(const DensityOperator<Scalar>& rho0,
                 const DensityOperator<Scalar>& rho1, int copies) {
  if (copies < 1) throw DomainError("qcb_bound: copy count must be at least 1");
  const auto ch = quantum_chernoff(rho0, rho1);
  return Scalar(0.5) * std::pow(ch.q_min, Scalar(copies));
}

// Closed-form M-copy error for two pure states with equal priors:
// (1 - sqrt(1 - ov2^M)) / 2 where ov2 = |<psi0|psi1>|^2.
template <typename Scalar>
Scalar pure_mcopy_error(Scalar overlap_sq, int copies) {
  if (!(overlap_sq >= Scalar(0) && overlap_sq <= Scalar(1))) {
    throw DomainError("pure_mcopy_error: overlap squared outside [0, 1]");
  }
  if (copies < 1) {
    throw DomainError("pure_mcopy_error: copy count must be at least 1");
  }
  const Scalar pow_m = std::pow(overlap_sq, Scalar(copies));
  return Scalar(0.5) *
         (Scalar(1) - std::sqrt(std::max(Scalar(0), Scalar(1) - pow_m)));
}

// Exact M-copy error: Helstrom measurement on the tensor powers with the
// ensemble's priors.
template <typename Scalar>
Scalar exact_mcopy_error(const BinaryEnsemble<Scalar>& ensemble, int copies,
                         std::size_t cap = dim_cap()) {
  checked_power_dim(static_cast<std::size_t>(ensemble.dim()), copies, cap,
                    "exact_mcopy_error");
  const BinaryEnsemble<Scalar> grown(
      tensor_power(ensemble.rho0, copies, cap),
      tensor_power(ensemble.rho1, copies, cap), ensemble.prior0,
      ensemble.prior1);
  return optimal_discrimination(grown).error_probability;
}

// Fidelity bounds on the M-copy error:
// (1 - sqrt(1 - F^M)) / 2 <= P_e <= sqrt(F)^M / 2.
template <typename Scalar>
std::pair<Scalar, Scalar> fidelity_bounds(const DensityOperator<Scalar>& rho0,
                                          const DensityOperator<Scalar>& rho1,
                                          int copies) {
  if (copies < 1) {
    throw DomainError("fidelity_bounds: copy count must be at least 1");
  }
  const Scalar f = fidelity(rho0, rho1);
  const Scalar f_m = std::pow(f, Scalar(copies));
  const Scalar lower =
      Scalar(0.5) *
      (Scalar(1) - std::sqrt(std::max(Scalar(0), Scalar(1) - f_m)));
  const Scalar upper =
      Scalar(0.5) * std::pow(std::sqrt(f), Scalar(copies));
  return {lower, upper};
}

// Bhattacharya bounds built from T = Tr(rho0^{1/2} rho1^{1/2}):
// (1 - sqrt(1 - T^{2M})) / 2 <= P_e <= T^M / 2. T never exceeds sqrt(F).
template <typename Scalar>
std::pair<Scalar, Scalar> bhattacharya_bounds(
    const DensityOperator<Scalar>& rho0, const DensityOperator<Scalar>& rho1,
    int copies) {
  if (copies < 1) {
    throw DomainError("bhattacharya_bounds: copy count must be at least 1");
  }
  const Scalar t = chernoff_q(rho0, rho1, Scalar(0.5));
  const Scalar t_2m = std::pow(t, Scalar(2 * copies));
  const Scalar lower =
      Scalar(0.5) *
      (Scalar(1) - std::sqrt(std::max(Scalar(0), Scalar(1) - t_2m)));
  const Scalar upper = Scalar(0.5) * std::pow(t, Scalar(copies));
  return {lower, upper};
}

// Classical Chernoff exponent -log inf_s sum_a p0(a)^s p1(a)^{1-s}, with the
// same support convention and s-search as the quantum version. Disjoint
// supports yield an infinite exponent.
template <typename Scalar>
Scalar classical_chernoff_exponent(const RealVector<Scalar>& p0,
                                   const RealVector<Scalar>& p1) {
  if (p0.size() != p1.size() || p0.size() == 0) {
    throw DomainError("classical_chernoff_exponent: length mismatch");
  }
  for (const auto* p : {&p0, &p1}) {
    if ((p->array() < Scalar(0)).any()) {
      throw DomainError(
          "classical_chernoff_exponent: negative probability entry");
    }
    if (std::abs(p->sum() - Scalar(1)) > Scalar(1e-10)) {
      throw DomainError(
          "classical_chernoff_exponent: probabilities must sum to 1");
    }
  }
  const auto q_of_s = [&](Scalar s) {
    Scalar q = 0;
    for (Eigen::Index a = 0; a < p0.size(); ++a) {
      if (p0(a) > Scalar(0) && p1(a) > Scalar(0)) {
        q += std::pow(p0(a), s) * std::pow(p1(a), Scalar(1) - s);
      }
    }
    return q;
  };
  return detail::minimize_chernoff<Scalar>(q_of_s).exponent;
}

// Assembles every bound for one ensemble. The bound formulas are the
// equal-prior ones, so skewed priors are rejected; the exact tensor-product
// error is attached when d^M fits under the cap.
template <typename Scalar>
BoundReport<Scalar> bound_report(const BinaryEnsemble<Scalar>& ensemble,
                                 int copies, std::size_t cap = dim_cap()) {
  if (std::abs(ensemble.prior0 - Scalar(0.5)) > Scalar(1e-12)) {
    throw DomainError("bound_report: bounds are defined for equal priors");
  }
  if (copies < 1) {
    throw DomainError("bound_report: copy count must be at least 1");
  }
  BoundReport<Scalar> report;
  report.m_copies = copies;
  const auto fid = fidelity_bounds(ensemble.rho0, ensemble.rho1, copies);
  report.fidelity_lower = fid.first;
  report.fidelity_upper = fid.second;
  const auto bh = bhattacharya_bounds(ensemble.rho0, ensemble.rho1, copies);
  report.bhattacharya_lower = bh.first;
  report.bhattacharya_upper = bh.second;
  const auto ch = quantum_chernoff(ensemble.rho0, ensemble.rho1);
  report.chernoff_exponent = ch.exponent;
  report.optimal_s = ch.s_star;
  report.qcb_upper = Scalar(0.5) * std::pow(ch.q_min, Scalar(copies));
  std::size_t total = 1;
  bool fits = true;
  for (int m = 0; m < copies && fits; ++m) {
    const std::size_t d = static_cast<std::size_t>(ensemble.dim());
    fits = total <= cap / d;
    total *= d;
  }
  if (fits && total <= cap) {
    report.exact_error = exact_mcopy_error(ensemble, copies, cap);
  }
  return report;
}

}  // namespace discrimkit
