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

#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace discrimkit {

// Violated mathematical precondition or invariant. The message names the
// offending check ("unit trace", "Hermitian", "dimension mismatch", ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A computation would exceed the configured dimension cap. The message
// carries the size that was requested.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Numeric tolerances per scalar type. The double values are the contract
// the rest of the library (and its tests) are written against; the float
// specialization exists so the templated core stays instantiable.
template <typename Scalar>
struct Tolerances;

template <>
struct Tolerances<double> {
  static constexpr double hermitian_rel = 1e-12;    // |A - A^dag| vs max entry
  static constexpr double unit_trace = 1e-10;       // |Tr - 1|
  static constexpr double psd_min_eig = -1e-10;     // smallest admissible eigenvalue
  static constexpr double completeness = 1e-10;     // POVM sum vs identity, entrywise
  static constexpr double support_cutoff_rel = 1e-12;  // eigenvalues below this x max are rank noise
  static constexpr double unit_norm = 1e-12;        // pure state normalization
  static constexpr double prior_sum = 1e-12;        // prior0 + prior1 vs 1
  static constexpr double prob_sum = 1e-9;          // outcome distribution total vs 1
};

template <>
struct Tolerances<float> {
  static constexpr float hermitian_rel = 1e-5f;
  static constexpr float unit_trace = 1e-4f;
  static constexpr float psd_min_eig = -1e-4f;
  static constexpr float completeness = 1e-4f;
  static constexpr float support_cutoff_rel = 1e-6f;
  static constexpr float unit_norm = 1e-5f;
  static constexpr float prior_sum = 1e-6f;
  static constexpr float prob_sum = 1e-4f;
};

inline constexpr std::size_t kDefaultDimCap = 4096;

// Cap on total Hilbert-space dimension (d^M) for dense computations.
// DISCRIMKIT_DIM_CAP in the environment overrides the default.
inline std::size_t dim_cap() {
  if (const char* env = std::getenv("DISCRIMKIT_DIM_CAP")) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) {
      return static_cast<std::size_t>(value);
    }
  }
  return kDefaultDimCap;
}

}  // namespace discrimkit
