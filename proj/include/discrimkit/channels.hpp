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

#include <cstdint>
#include <numbers>
#include <utility>
#include <vector>

#include "discrimkit/states.hpp"

namespace discrimkit {

// Completely positive trace-preserving map in Kraus form
// rho -> sum_k K_k rho K_k^dag with sum_k K_k^dag K_k = I.
template <typename Scalar = double>
class KrausChannel {
 public:
  explicit KrausChannel(std::vector<ComplexMatrix<Scalar>> kraus)
      : kraus_(std::move(kraus)) {
    if (kraus_.empty()) {
      throw DomainError("Kraus channel: must have at least one operator");
    }
    const Eigen::Index rows = kraus_.front().rows();
    const Eigen::Index cols = kraus_.front().cols();
    if (rows < 1 || cols < 1) {
      throw DomainError("Kraus channel: empty operator");
    }
    ComplexMatrix<Scalar> sum = ComplexMatrix<Scalar>::Zero(cols, cols);
    for (const auto& k : kraus_) {
      if (k.rows() != rows || k.cols() != cols) {
        throw DomainError("Kraus channel: operators must share dimensions");
      }
      if (!k.allFinite()) {
        throw DomainError("Kraus channel: entries must be finite");
      }
      sum += k.adjoint() * k;
    }
    const Scalar dev =
        max_abs((sum - ComplexMatrix<Scalar>::Identity(cols, cols)).eval());
    if (dev > Tolerances<Scalar>::completeness) {
      throw DomainError(
          "Kraus channel: trace preservation violated (max |sum K^dag K - I| "
          "= " + std::to_string(dev) + ")");
    }
  }

  Eigen::Index input_dim() const { return kraus_.front().cols(); }
  Eigen::Index output_dim() const { return kraus_.front().rows(); }
  const std::vector<ComplexMatrix<Scalar>>& kraus_ops() const {
    return kraus_;
  }

 private:
  std::vector<ComplexMatrix<Scalar>> kraus_;
};

template <typename Scalar>
DensityOperator<Scalar> apply(const KrausChannel<Scalar>& channel,
                              const DensityOperator<Scalar>& rho) {
  if (rho.dim() != channel.input_dim()) {
    throw DomainError("apply: dimension mismatch");
  }
  ComplexMatrix<Scalar> out = ComplexMatrix<Scalar>::Zero(
      channel.output_dim(), channel.output_dim());
  for (const auto& k : channel.kraus_ops()) {
    out += k * rho.matrix() * k.adjoint();
  }
  out = ((out + out.adjoint()) * Scalar(0.5)).eval();
  return DensityOperator<Scalar>::trusted(std::move(out));
}

// (Phi x id)(rho_AB) where the channel acts on subsystem A (the most
// significant Kronecker factor).
template <typename Scalar>
DensityOperator<Scalar> apply_extended(const KrausChannel<Scalar>& channel,
                                       const DensityOperator<Scalar>& rho_ab,
                                       Eigen::Index dim_a,
                                       Eigen::Index dim_b) {
  if (dim_a != channel.input_dim() || dim_a * dim_b != rho_ab.dim()) {
    throw DomainError("apply_extended: dimension mismatch");
  }
  const ComplexMatrix<Scalar> id_b =
      ComplexMatrix<Scalar>::Identity(dim_b, dim_b);
  ComplexMatrix<Scalar> out = ComplexMatrix<Scalar>::Zero(
      channel.output_dim() * dim_b, channel.output_dim() * dim_b);
  for (const auto& k : channel.kraus_ops()) {
    const ComplexMatrix<Scalar> lifted = kron(k, id_b);
    out += lifted * rho_ab.matrix() * lifted.adjoint();
  }
  out = ((out + out.adjoint()) * Scalar(0.5)).eval();
  return DensityOperator<Scalar>::trusted(std::move(out));
}

// One probe evaluated (or found by search) against a channel pair at equal
// channel priors. For searches the achieved norm is a certified lower bound
// on the corresponding norm maximum, hence `heuristic` is set.
template <typename Scalar = double>
struct ProbeResult {
  DensityOperator<Scalar> probe;
  Scalar error_probability;
  bool used_ancilla;
  bool heuristic;
  Scalar achieved_norm;
  std::vector<Scalar> norm_trajectory;  // running maximum during a search
};

struct ProbeSearchConfig {
  int starts = 32;
  std::uint64_t seed = 0x5eed5eedULL;
  double improvement_tol = 1e-9;
  double initial_step = 0.25;
  double min_step = 1e-7;
  int max_sweeps = 2000;  // hard bound on coordinate sweeps per start
};

// P_e = (1 - ||out0 - out1||_1 / 2) / 2 at equal channel priors.
template <typename Scalar>
ProbeResult<Scalar> discriminate_with_probe(const KrausChannel<Scalar>& phi0,
                                            const KrausChannel<Scalar>& phi1,
                                            const DensityOperator<Scalar>& probe,
                                            bool extended,
                                            Eigen::Index dim_a = 0,
                                            Eigen::Index dim_b = 0) {
  if (phi0.input_dim() != phi1.input_dim() ||
      phi0.output_dim() != phi1.output_dim()) {
    throw DomainError("discriminate_with_probe: channel dimension mismatch");
  }
  DensityOperator<Scalar> out0 = extended
                                     ? apply_extended(phi0, probe, dim_a, dim_b)
                                     : apply(phi0, probe);
  DensityOperator<Scalar> out1 = extended
                                     ? apply_extended(phi1, probe, dim_a, dim_b)
                                     : apply(phi1, probe);
  const Scalar norm = trace_norm((out0.matrix() - out1.matrix()).eval());
  const Scalar error = std::clamp(
      Scalar(0.5) * (Scalar(1) - Scalar(0.5) * norm), Scalar(0), Scalar(0.5));
  return ProbeResult<Scalar>{probe, error, extended, false, norm, {}};
}

namespace detail {

// Coordinate-wise hill climbing on the real/imaginary parts of a pure-probe
// amplitude vector, renormalizing after every move. Stops once a full sweep
// at the smallest step gains less than improvement_tol.
template <typename Scalar, typename Objective>
Scalar refine_probe(ComplexVector<Scalar>& psi, Scalar value,
                    const Objective& objective, const ProbeSearchConfig& cfg,
                    std::vector<Scalar>& trajectory) {
  Scalar step = static_cast<Scalar>(cfg.initial_step);
  const Scalar tol = static_cast<Scalar>(cfg.improvement_tol);
  int sweeps = 0;
  while (step >= static_cast<Scalar>(cfg.min_step) &&
         sweeps++ < cfg.max_sweeps) {
    Scalar gained = 0;
    for (Eigen::Index i = 0; i < psi.size(); ++i) {
      for (int part = 0; part < 2; ++part) {
        for (const Scalar sign : {Scalar(1), Scalar(-1)}) {
          ComplexVector<Scalar> cand = psi;
          const std::complex<Scalar> delta =
              part == 0 ? std::complex<Scalar>(sign * step, 0)
                        : std::complex<Scalar>(0, sign * step);
          cand(i) += delta;
          const Scalar n = cand.norm();
          if (!(n > Scalar(1e-12))) continue;
          cand /= n;
          const Scalar v = objective(cand);
          if (v > value + tol) {
            gained += v - value;
            value = v;
            psi = std::move(cand);
            trajectory.push_back(value);
          }
        }
      }
    }
    if (gained < tol) step /= Scalar(2);
  }
  return value;
}

template <typename Scalar, typename Objective>
ProbeResult<Scalar> multistart_probe_search(
    Eigen::Index probe_dim, const Objective& objective,
    const ProbeSearchConfig& cfg, bool used_ancilla,
    const std::vector<ComplexVector<Scalar>>& extra_starts) {
  if (cfg.starts < 1 && extra_starts.empty()) {
    throw DomainError("probe search: needs at least one start");
  }
  ComplexVector<Scalar> best_psi;
  Scalar best_value = -1;
  std::vector<Scalar> trajectory;
  const auto try_start = [&](ComplexVector<Scalar> psi) {
    Scalar value = objective(psi);
    trajectory.push_back(std::max(value, trajectory.empty()
                                             ? value
                                             : trajectory.back()));
    std::vector<Scalar> local;
    value = refine_probe(psi, value, objective, cfg, local);
    for (const Scalar v : local) {
      trajectory.push_back(std::max(v, trajectory.back()));
    }
    if (value > best_value) {
      best_value = value;
      best_psi = std::move(psi);
    }
  };
  for (int s = 0; s < cfg.starts; ++s) {
    SplitMix64 g = substream(cfg.seed, static_cast<std::uint64_t>(s));
    try_start(random_pure<Scalar>(probe_dim, g).amplitudes());
  }
  for (const auto& psi : extra_starts) try_start(psi);
  const Scalar error = std::clamp(
      Scalar(0.5) * (Scalar(1) - Scalar(0.5) * best_value), Scalar(0),
      Scalar(0.5));
  DensityOperator<Scalar> probe =
      PureState<Scalar>::normalized(best_psi).to_density();
  return ProbeResult<Scalar>{std::move(probe), error,        used_ancilla,
                             true,             best_value,   std::move(trajectory)};
}

}  // namespace detail

// Maximizes ||Phi0(rho) - Phi1(rho)||_1 over pure probe states by
// multi-start hill climbing. The result is a heuristic: its norm is a lower
// bound on the true maximum, its error an upper bound on the true minimum.
template <typename Scalar>
ProbeResult<Scalar> best_unentangled_probe(
    const KrausChannel<Scalar>& phi0, const KrausChannel<Scalar>& phi1,
    const ProbeSearchConfig& cfg = {}) {
  if (phi0.input_dim() != phi1.input_dim() ||
      phi0.output_dim() != phi1.output_dim()) {
    throw DomainError("best_unentangled_probe: channel dimension mismatch");
  }
  const auto objective = [&](const ComplexVector<Scalar>& psi) {
    const DensityOperator<Scalar> rho =
        DensityOperator<Scalar>::trusted((psi * psi.adjoint()).eval());
    return trace_norm(
        (apply(phi0, rho).matrix() - apply(phi1, rho).matrix()).eval());
  };
  return detail::multistart_probe_search<Scalar>(phi0.input_dim(), objective,
                                                 cfg, false, {});
}

// Maximizes ||(Phi0 x id)(psi) - (Phi1 x id)(psi)||_1 over pure bipartite
// probes (pure probes suffice for the diamond-norm optimum). In addition
// to the random starts, the refined best unentangled probe tensored with an
// ancilla basis state is used as a seed, so the entangled search never
// reports less than the unentangled one.
template <typename Scalar>
ProbeResult<Scalar> best_entangled_probe(const KrausChannel<Scalar>& phi0,
                                         const KrausChannel<Scalar>& phi1,
                                         Eigen::Index ancilla_dim,
                                         const ProbeSearchConfig& cfg = {}) {
  if (ancilla_dim < 1) {
    throw DomainError("best_entangled_probe: ancilla dimension must be >= 1");
  }
  if (phi0.input_dim() != phi1.input_dim() ||
      phi0.output_dim() != phi1.output_dim()) {
    throw DomainError("best_entangled_probe: channel dimension mismatch");
  }
  const Eigen::Index dim_a = phi0.input_dim();
  const auto objective = [&](const ComplexVector<Scalar>& psi) {
    const DensityOperator<Scalar> rho =
        DensityOperator<Scalar>::trusted((psi * psi.adjoint()).eval());
    return trace_norm((apply_extended(phi0, rho, dim_a, ancilla_dim).matrix() -
                       apply_extended(phi1, rho, dim_a, ancilla_dim).matrix())
                          .eval());
  };

  const ProbeResult<Scalar> local = best_unentangled_probe(phi0, phi1, cfg);
  const auto local_sd = spectral_decompose(local.probe.matrix());
  ComplexVector<Scalar> seed =
      ComplexVector<Scalar>::Zero(dim_a * ancilla_dim);
  for (Eigen::Index i = 0; i < dim_a; ++i) {
    seed(i * ancilla_dim) = local_sd.eigenvectors(i, 0);
  }
  return detail::multistart_probe_search<Scalar>(
      dim_a * ancilla_dim, objective, cfg, true, {std::move(seed)});
}

// Completely depolarizing channel rho -> I/d realized by the d^2 Kraus
// operators X^j Z^k / d built from the clock-and-shift unitaries.
template <typename Scalar = double>
KrausChannel<Scalar> depolarizing_channel(Eigen::Index dim) {
  if (dim < 2) {
    throw DomainError("depolarizing_channel: dimension must be at least 2");
  }
  ComplexMatrix<Scalar> shift = ComplexMatrix<Scalar>::Zero(dim, dim);
  for (Eigen::Index m = 0; m < dim; ++m) shift((m + 1) % dim, m) = Scalar(1);
  ComplexMatrix<Scalar> clock = ComplexMatrix<Scalar>::Zero(dim, dim);
  const Scalar theta = Scalar(2) * std::numbers::pi_v<Scalar> / Scalar(dim);
  for (Eigen::Index m = 0; m < dim; ++m) {
    clock(m, m) = std::polar(Scalar(1), theta * Scalar(m));
  }
  std::vector<ComplexMatrix<Scalar>> kraus;
  kraus.reserve(static_cast<std::size_t>(dim * dim));
  ComplexMatrix<Scalar> shift_j = ComplexMatrix<Scalar>::Identity(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    ComplexMatrix<Scalar> u = shift_j;
    for (Eigen::Index k = 0; k < dim; ++k) {
      kraus.push_back(u / Scalar(dim));
      u = (u * clock).eval();
    }
    shift_j = (shift * shift_j).eval();
  }
  return KrausChannel<Scalar>(std::move(kraus));
}

template <typename Scalar = double>
KrausChannel<Scalar> identity_channel(Eigen::Index dim) {
  if (dim < 1) {
    throw DomainError("identity_channel: dimension must be positive");
  }
  return KrausChannel<Scalar>({ComplexMatrix<Scalar>::Identity(dim, dim)});
}

}  // namespace discrimkit
