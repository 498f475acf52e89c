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
#include <functional>
#include <optional>
#include <thread>
#include <vector>

#include "discrimkit/multicopy.hpp"
#include "discrimkit/rng.hpp"

namespace discrimkit {

enum class StrategyKind { fixed_individual, adaptive_local, collective };

// Measurement strategy on M copies. fixed_individual repeats one two-outcome
// single-copy POVM on every copy; adaptive_local re-optimizes it per copy
// from the running posterior; collective measures all copies jointly with
// the Helstrom-optimal POVM on the tensor product.
template <typename Scalar = double>
struct StrategySpec {
  StrategyKind kind;
  int m_copies;
  std::optional<Povm<Scalar>> fixed_povm;  // required for fixed_individual
};

template <typename Scalar = double>
struct SimulationConfig {
  std::int64_t trials;
  std::uint64_t seed;
  BinaryEnsemble<Scalar> ensemble;
  int threads = 1;
};

template <typename Scalar = double>
struct SimulationReport {
  Scalar empirical_error;
  Scalar standard_error;  // sqrt(p(1-p)/trials) from the empirical rate
  std::optional<Scalar> analytic_error;
  std::int64_t trials;
  std::uint64_t seed;
};

// Analytic error of the fixed individual strategy under the decision rule
// "declare H1 unless every copy yields outcome 0":
//   prior0 (1 - Tr(rho0 E0)^M) + prior1 Tr(rho1 E0)^M.
// With E0 = |psi0><psi0| and pure rho0 this reduces to <psi0|rho1|psi0>^M / 2
// at equal priors.
template <typename Scalar>
Scalar fixed_individual_error(const BinaryEnsemble<Scalar>& ensemble,
                              const Povm<Scalar>& povm, int copies) {
  if (povm.size() != 2) {
    throw DomainError(
        "fixed_individual_error: POVM must have exactly two outcomes");
  }
  if (povm.dim() != ensemble.dim()) {
    throw DomainError("fixed_individual_error: dimension mismatch");
  }
  if (copies < 1) {
    throw DomainError("fixed_individual_error: copy count must be at least 1");
  }
  const Scalar p00 = std::clamp(
      (ensemble.rho0.matrix() * povm.element(0)).trace().real(), Scalar(0),
      Scalar(1));
  const Scalar p10 = std::clamp(
      (ensemble.rho1.matrix() * povm.element(0)).trace().real(), Scalar(0),
      Scalar(1));
  return ensemble.prior0 * (Scalar(1) - std::pow(p00, Scalar(copies))) +
         ensemble.prior1 * std::pow(p10, Scalar(copies));
}

namespace detail {

template <typename Scalar>
int sample_outcome(const RealVector<Scalar>& probs, SplitMix64& g) {
  const double u = g.next_double();
  double cum = 0;
  for (Eigen::Index k = 0; k < probs.size(); ++k) {
    cum += static_cast<double>(probs(k));
    if (u < cum) return static_cast<int>(k);
  }
  return static_cast<int>(probs.size() - 1);
}

// Runs `trials` independent trials on up to `threads` workers. Each trial
// draws from its own substream(seed, trial), so the error count -- an
// order-independent integer sum -- is identical for any thread count.
inline std::int64_t count_errors(
    std::int64_t trials, int threads,
    const std::function<bool(std::int64_t)>& trial_errs) {
  threads = std::max(1, threads);
  if (threads == 1 || trials < 2) {
    std::int64_t errors = 0;
    for (std::int64_t t = 0; t < trials; ++t) errors += trial_errs(t) ? 1 : 0;
    return errors;
  }
  const std::int64_t chunk = (trials + threads - 1) / threads;
  std::vector<std::int64_t> counts(static_cast<std::size_t>(threads), 0);
  std::vector<std::thread> workers;
  workers.reserve(static_cast<std::size_t>(threads));
  for (int w = 0; w < threads; ++w) {
    workers.emplace_back([&, w] {
      const std::int64_t begin = w * chunk;
      const std::int64_t end = std::min(trials, begin + chunk);
      std::int64_t local = 0;
      for (std::int64_t t = begin; t < end; ++t) local += trial_errs(t) ? 1 : 0;
      counts[static_cast<std::size_t>(w)] = local;
    });
  }
  for (auto& w : workers) w.join();
  std::int64_t errors = 0;
  for (const auto c : counts) errors += c;
  return errors;
}

}  // namespace detail

// Monte Carlo simulation of a discrimination strategy. Per trial: draw the
// true hypothesis from the priors, sample measurement outcomes under it,
// decide, and count wrong decisions. Deterministic given the seed,
// independent of the thread count.
template <typename Scalar>
SimulationReport<Scalar> simulate(const StrategySpec<Scalar>& strategy,
                                  const SimulationConfig<Scalar>& config,
                                  std::size_t cap = dim_cap()) {
  if (config.trials < 1) {
    throw DomainError("simulate: trials must be at least 1");
  }
  if (strategy.m_copies < 1) {
    throw DomainError("simulate: copy count must be at least 1");
  }
  const auto& ens = config.ensemble;
  const int copies = strategy.m_copies;

  std::optional<Scalar> analytic;
  std::function<bool(std::int64_t)> trial_errs;

  // Per-hypothesis outcome distributions, shared across trials.
  std::vector<RealVector<Scalar>> probs;

  switch (strategy.kind) {
    case StrategyKind::fixed_individual: {
      if (!strategy.fixed_povm || strategy.fixed_povm->size() != 2) {
        throw DomainError(
            "simulate: fixed_individual requires a two-outcome single-copy "
            "POVM");
      }
      const Povm<Scalar>& povm = *strategy.fixed_povm;
      analytic = fixed_individual_error(ens, povm, copies);
      probs = {povm.outcome_probabilities(ens.rho0),
               povm.outcome_probabilities(ens.rho1)};
      trial_errs = [&ens, &probs, copies, seed = config.seed](std::int64_t t) {
        SplitMix64 g = substream(seed, static_cast<std::uint64_t>(t));
        const int truth = g.next_double() < ens.prior0 ? 0 : 1;
        bool all_zero = true;
        for (int m = 0; m < copies; ++m) {
          if (detail::sample_outcome(probs[truth], g) != 0) all_zero = false;
        }
        const int decided = all_zero ? 0 : 1;
        return decided != truth;
      };
      break;
    }
    case StrategyKind::collective: {
      const BinaryEnsemble<Scalar> grown(tensor_power(ens.rho0, copies, cap),
                                         tensor_power(ens.rho1, copies, cap),
                                         ens.prior0, ens.prior1);
      const auto result = optimal_discrimination(grown);
      analytic = result.error_probability;
      probs = {result.povm.outcome_probabilities(grown.rho0),
               result.povm.outcome_probabilities(grown.rho1)};
      trial_errs = [&ens, &probs, seed = config.seed](std::int64_t t) {
        SplitMix64 g = substream(seed, static_cast<std::uint64_t>(t));
        const int truth = g.next_double() < ens.prior0 ? 0 : 1;
        const int decided = detail::sample_outcome(probs[truth], g);
        return decided != truth;
      };
      break;
    }
    case StrategyKind::adaptive_local: {
      // Bayesian-update policy: before each copy build the minimum-error
      // POVM for the posterior-weighted Helstrom matrix, measure, update the
      // posterior with the outcome likelihoods, and finally decide by
      // maximum posterior (ties to H0).
      trial_errs = [&ens, copies, seed = config.seed](std::int64_t t) {
        SplitMix64 g = substream(seed, static_cast<std::uint64_t>(t));
        const int truth = g.next_double() < ens.prior0 ? 0 : 1;
        Scalar post0 = ens.prior0;
        Scalar post1 = ens.prior1;
        const auto& m0 = ens.rho0.matrix();
        const auto& m1 = ens.rho1.matrix();
        for (int m = 0; m < copies; ++m) {
          const ComplexMatrix<Scalar> gamma = post1 * m1 - post0 * m0;
          const auto povm01 = detail::binary_min_error_povm(gamma);
          const ComplexMatrix<Scalar>& e_first = povm01.first;
          const Scalar like00 =
              std::clamp((m0 * e_first).trace().real(), Scalar(0), Scalar(1));
          const Scalar like10 =
              std::clamp((m1 * e_first).trace().real(), Scalar(0), Scalar(1));
          const Scalar p_truth0 = truth == 0 ? like00 : like10;
          RealVector<Scalar> p(2);
          p << p_truth0, Scalar(1) - p_truth0;
          const int outcome = detail::sample_outcome(p, g);
          const Scalar w0 =
              post0 * (outcome == 0 ? like00 : Scalar(1) - like00);
          const Scalar w1 =
              post1 * (outcome == 0 ? like10 : Scalar(1) - like10);
          const Scalar total = w0 + w1;
          if (total > Scalar(0)) {
            post0 = w0 / total;
            post1 = w1 / total;
          }
        }
        const int decided = post1 > post0 ? 1 : 0;
        return decided != truth;
      };
      break;
    }
  }

  const std::int64_t errors =
      detail::count_errors(config.trials, config.threads, trial_errs);
  const Scalar empirical =
      static_cast<Scalar>(errors) / static_cast<Scalar>(config.trials);
  const Scalar stderr_est = std::sqrt(
      std::max(Scalar(0), empirical * (Scalar(1) - empirical) /
                              static_cast<Scalar>(config.trials)));
  return SimulationReport<Scalar>{empirical, stderr_est, analytic,
                                  config.trials, config.seed};
}

// Convenience wrapper running the adaptive-local policy.
template <typename Scalar>
SimulationReport<Scalar> adaptive_local_error(
    const BinaryEnsemble<Scalar>& ensemble, int copies, std::int64_t trials,
    std::uint64_t seed, int threads = 1) {
  const StrategySpec<Scalar> spec{StrategyKind::adaptive_local, copies,
                                  std::nullopt};
  const SimulationConfig<Scalar> config{trials, seed, ensemble, threads};
  return simulate(spec, config);
}

}  // namespace discrimkit
