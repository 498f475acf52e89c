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

#include <cmath>
#include <optional>

#include "discrimkit/io.hpp"

namespace discrimkit::io {

namespace {

PureState<double> qubit_ket(std::complex<double> a0, std::complex<double> a1) {
  ComplexVector<double> v(2);
  v << a0, a1;
  return PureState<double>::normalized(std::move(v));
}

// Splits "name:<d>" and parses the dimension.
std::optional<Eigen::Index> parametric_dim(const std::string& name,
                                           const std::string& prefix) {
  if (name.size() <= prefix.size() + 1 || name.rfind(prefix + ":", 0) != 0) {
    return std::nullopt;
  }
  const std::string arg = name.substr(prefix.size() + 1);
  std::size_t used = 0;
  long d = 0;
  try {
    d = std::stol(arg, &used);
  } catch (const std::exception&) {
    throw ValidationError("invalid dimension in '" + name + "'");
  }
  if (used != arg.size() || d < 1) {
    throw ValidationError("invalid dimension in '" + name + "'");
  }
  return static_cast<Eigen::Index>(d);
}

std::optional<ResolvedState> builtin_state(const std::string& name) {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  if (name == "ket0" || name == "|0>") {
    return ResolvedState{qubit_ket(1, 0).to_density(), qubit_ket(1, 0), "|0>"};
  }
  if (name == "ket1" || name == "|1>") {
    return ResolvedState{qubit_ket(0, 1).to_density(), qubit_ket(0, 1), "|1>"};
  }
  if (name == "plus" || name == "|+>") {
    const auto psi = qubit_ket(inv_sqrt2, inv_sqrt2);
    return ResolvedState{psi.to_density(), psi, "|+>"};
  }
  if (name == "minus" || name == "|->") {
    const auto psi = qubit_ket(inv_sqrt2, -inv_sqrt2);
    return ResolvedState{psi.to_density(), psi, "|->"};
  }
  if (const auto d = parametric_dim(name, "max-entangled")) {
    const auto psi = maximally_entangled_state<double>(*d);
    return ResolvedState{psi.to_density(), psi,
                         "max-entangled(" + std::to_string(*d) + ")"};
  }
  if (const auto d = parametric_dim(name, "mixed")) {
    return ResolvedState{maximally_mixed<double>(*d), std::nullopt,
                         "I/" + std::to_string(*d)};
  }
  return std::nullopt;
}

}  // namespace

ResolvedState resolve_state(const std::string& name, const ProblemFile* file) {
  if (auto builtin = builtin_state(name)) return *builtin;
  if (file != nullptr) {
    if (const auto it = file->pure_states.find(name);
        it != file->pure_states.end()) {
      return ResolvedState{it->second.to_density(), it->second, name};
    }
    if (const auto it = file->states.find(name); it != file->states.end()) {
      return ResolvedState{it->second, std::nullopt, name};
    }
  }
  throw ValidationError("unknown state '" + name + "'");
}

KrausChannel<double> resolve_channel(const std::string& name,
                                     const ProblemFile* file) {
  if (const auto d = parametric_dim(name, "identity")) {
    return identity_channel<double>(*d);
  }
  if (const auto d = parametric_dim(name, "depolarizing")) {
    if (*d < 2) throw ValidationError("depolarizing channel needs dim >= 2");
    return depolarizing_channel<double>(*d);
  }
  if (file != nullptr) {
    if (const auto it = file->channels.find(name);
        it != file->channels.end()) {
      return it->second;
    }
  }
  throw ValidationError("unknown channel '" + name + "'");
}

}  // namespace discrimkit::io
