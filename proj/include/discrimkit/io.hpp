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

#include <map>
#include <optional>
#include <string>
#include <utility>

#include <json.hpp>

#include "discrimkit/channels.hpp"
#include "discrimkit/povm.hpp"

namespace discrimkit::io {

using json = nlohmann::json;

// Malformed or inconsistent input (files, schema objects, references). The
// message names the violated check; the CLI maps it to exit code 2, as
// opposed to DomainError/ResourceError from computations (exit code 1).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// JSON encodings:
//   complex      [re, im]
//   matrix       row-major array of rows of complex pairs
//   density      {"dim": d, "matrix": [[...], ...]}
//   pure state   {"amplitudes": [[re, im], ...]}
//   channel      {"kraus": [matrix, ...]}
json encode_complex(std::complex<double> z);
json encode_matrix(const ComplexMatrix<double>& m);
json encode_density(const DensityOperator<double>& rho);
json encode_pure(const PureState<double>& psi);
json encode_channel(const KrausChannel<double>& channel);

std::complex<double> parse_complex(const json& j, const std::string& context);
ComplexMatrix<double> parse_matrix(const json& j, const std::string& context);
DensityOperator<double> parse_density(const json& j,
                                      const std::string& context);
PureState<double> parse_pure(const json& j, const std::string& context);
KrausChannel<double> parse_channel(const json& j, const std::string& context);

// Named problem definitions loadable from a JSON file.
struct ProblemFile {
  std::string schema_version = "1";
  std::map<std::string, DensityOperator<double>> states;
  std::map<std::string, PureState<double>> pure_states;
  std::map<std::string, KrausChannel<double>> channels;
  std::optional<std::pair<double, double>> priors;
};

ProblemFile parse_problem(const json& j);
ProblemFile load_problem_file(const std::string& path);

// A state reference resolved from builtins or a problem file. The pure
// form is retained when the source was pure (builtin kets, pure_states
// entries) so pure-only operations can insist on it.
struct ResolvedState {
  DensityOperator<double> density;
  std::optional<PureState<double>> pure;
  std::string description;
};

// Builtin names: ket0 |0>, ket1 |1>, plus |+>, minus |->,
// max-entangled:<d>, mixed:<d>; channels: identity:<d>, depolarizing:<d>.
// Builtins win over problem-file entries of the same name.
ResolvedState resolve_state(const std::string& name, const ProblemFile* file);
KrausChannel<double> resolve_channel(const std::string& name,
                                     const ProblemFile* file);

}  // namespace discrimkit::io
