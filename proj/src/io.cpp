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

#include "discrimkit/io.hpp"

#include <cmath>
#include <fstream>
#include <vector>

namespace discrimkit::io {

json encode_complex(std::complex<double> z) {
  return json::array({z.real(), z.imag()});
}

json encode_matrix(const ComplexMatrix<double>& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      row.push_back(encode_complex(m(i, j)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

json encode_density(const DensityOperator<double>& rho) {
  return json{{"dim", rho.dim()}, {"matrix", encode_matrix(rho.matrix())}};
}

json encode_pure(const PureState<double>& psi) {
  json amps = json::array();
  for (Eigen::Index i = 0; i < psi.dim(); ++i) {
    amps.push_back(encode_complex(psi.amplitudes()(i)));
  }
  return json{{"amplitudes", std::move(amps)}};
}

json encode_channel(const KrausChannel<double>& channel) {
  json kraus = json::array();
  for (const auto& k : channel.kraus_ops()) kraus.push_back(encode_matrix(k));
  return json{{"kraus", std::move(kraus)}};
}

std::complex<double> parse_complex(const json& j, const std::string& context) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() ||
      !j[1].is_number()) {
    throw ValidationError(context + ": complex entry must be a [re, im] pair");
  }
  const double re = j[0].get<double>();
  const double im = j[1].get<double>();
  if (!std::isfinite(re) || !std::isfinite(im)) {
    throw ValidationError(context + ": complex entry must be finite");
  }
  return {re, im};
}

ComplexMatrix<double> parse_matrix(const json& j, const std::string& context) {
  if (!j.is_array() || j.empty()) {
    throw ValidationError(context + ": matrix must be a non-empty array of rows");
  }
  const std::size_t rows = j.size();
  if (!j[0].is_array() || j[0].empty()) {
    throw ValidationError(context + ": matrix rows must be non-empty arrays");
  }
  const std::size_t cols = j[0].size();
  ComplexMatrix<double> m(static_cast<Eigen::Index>(rows),
                          static_cast<Eigen::Index>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) {
      throw ValidationError(context + ": matrix rows must have equal length");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) =
          parse_complex(j[i][c], context);
    }
  }
  return m;
}

DensityOperator<double> parse_density(const json& j,
                                      const std::string& context) {
  if (!j.is_object() || !j.contains("matrix")) {
    throw ValidationError(context +
                          ": density operator must be {\"dim\", \"matrix\"}");
  }
  ComplexMatrix<double> m = parse_matrix(j.at("matrix"), context);
  if (j.contains("dim")) {
    if (!j.at("dim").is_number_integer() ||
        j.at("dim").get<Eigen::Index>() != m.rows()) {
      throw ValidationError(context + ": dim does not match the matrix size");
    }
  }
  try {
    return DensityOperator<double>(std::move(m));
  } catch (const DomainError& e) {
    throw ValidationError(context + ": " + e.what());
  }
}

PureState<double> parse_pure(const json& j, const std::string& context) {
  if (!j.is_object() || !j.contains("amplitudes") ||
      !j.at("amplitudes").is_array() || j.at("amplitudes").empty()) {
    throw ValidationError(
        context + ": pure state must be {\"amplitudes\": [[re, im], ...]}");
  }
  const auto& amps = j.at("amplitudes");
  ComplexVector<double> v(static_cast<Eigen::Index>(amps.size()));
  for (std::size_t i = 0; i < amps.size(); ++i) {
    v(static_cast<Eigen::Index>(i)) = parse_complex(amps[i], context);
  }
  try {
    return PureState<double>(std::move(v));
  } catch (const DomainError& e) {
    throw ValidationError(context + ": " + e.what());
  }
}

KrausChannel<double> parse_channel(const json& j, const std::string& context) {
  if (!j.is_object() || !j.contains("kraus") || !j.at("kraus").is_array() ||
      j.at("kraus").empty()) {
    throw ValidationError(context +
                          ": channel must be {\"kraus\": [matrix, ...]}");
  }
  std::vector<ComplexMatrix<double>> kraus;
  kraus.reserve(j.at("kraus").size());
  for (std::size_t k = 0; k < j.at("kraus").size(); ++k) {
    kraus.push_back(parse_matrix(j.at("kraus")[k],
                                 context + " kraus[" + std::to_string(k) + "]"));
  }
  try {
    return KrausChannel<double>(std::move(kraus));
  } catch (const DomainError& e) {
    throw ValidationError(context + ": " + e.what());
  }
}

ProblemFile parse_problem(const json& j) {
  if (!j.is_object()) {
    throw ValidationError("problem file: top level must be an object");
  }
  ProblemFile out;
  if (j.contains("schema_version")) {
    if (!j.at("schema_version").is_string()) {
      throw ValidationError("problem file: schema_version must be a string");
    }
    out.schema_version = j.at("schema_version").get<std::string>();
    if (out.schema_version != "1") {
      throw ValidationError("problem file: unsupported schema_version '" +
                            out.schema_version + "'");
    }
  }
  if (j.contains("states")) {
    for (const auto& [name, value] : j.at("states").items()) {
      out.states.emplace(name, parse_density(value, "state '" + name + "'"));
    }
  }
  if (j.contains("pure_states")) {
    for (const auto& [name, value] : j.at("pure_states").items()) {
      out.pure_states.emplace(name,
                              parse_pure(value, "pure state '" + name + "'"));
    }
  }
  if (j.contains("channels")) {
    for (const auto& [name, value] : j.at("channels").items()) {
      out.channels.emplace(name,
                           parse_channel(value, "channel '" + name + "'"));
    }
  }
  if (j.contains("priors")) {
    const auto& p = j.at("priors");
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() ||
        !p[1].is_number()) {
      throw ValidationError("problem file: priors must be [prior0, prior1]");
    }
    const double p0 = p[0].get<double>();
    const double p1 = p[1].get<double>();
    if (p0 < 0 || p1 < 0 || std::abs(p0 + p1 - 1.0) > 1e-12) {
      throw ValidationError("problem file: priors must be in [0, 1] and sum to 1");
    }
    out.priors = {p0, p1};
  }
  return out;
}

ProblemFile load_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ValidationError("problem file: cannot open '" + path + "'");
  }
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ValidationError("problem file: invalid JSON in '" + path +
                          "': " + e.what());
  }
  return parse_problem(j);
}

}  // namespace discrimkit::io
