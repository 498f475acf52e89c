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
#include <cstdint>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "discrimkit/io.hpp"
#include "discrimkit/render.hpp"
#include "discrimkit/strategies.hpp"

namespace {

using namespace discrimkit;
using io::json;
using io::OutputFormat;
using io::Row;

// Exit codes: 0 success, 1 domain/resource error, 2 input validation error.
constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitValidation = 2;

struct CommonOpts {
  std::string format = "table";
  std::string file;
  std::optional<double> prior0;

  void attach(CLI::App* cmd, bool with_prior) {
    cmd->add_option("--format", format, "Output format: table, json or csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    cmd->add_option("--file", file, "Problem file with named states/channels");
    if (with_prior) {
      cmd->add_option("--prior0", prior0,
                      "Prior probability of hypothesis 0 (default 0.5)");
    }
  }
};

struct LoadedProblem {
  std::optional<io::ProblemFile> file;
  const io::ProblemFile* get() const { return file ? &*file : nullptr; }
};

LoadedProblem load_problem(const CommonOpts& opts) {
  LoadedProblem out;
  if (!opts.file.empty()) out.file = io::load_problem_file(opts.file);
  return out;
}

double effective_prior0(const CommonOpts& opts, const LoadedProblem& problem) {
  double p0 = 0.5;
  if (problem.file && problem.file->priors) p0 = problem.file->priors->first;
  if (opts.prior0) p0 = *opts.prior0;
  if (!(p0 >= 0.0 && p0 <= 1.0)) {
    throw io::ValidationError("prior0 must lie in [0, 1]");
  }
  return p0;
}

void emit(const CommonOpts& opts, const std::vector<Row>& rows,
          const json& report) {
  switch (io::parse_format(opts.format)) {
    case OutputFormat::table:
      std::cout << io::render_table(rows);
      break;
    case OutputFormat::csv:
      std::cout << io::render_csv(rows);
      break;
    case OutputFormat::json:
      std::cout << report.dump(2) << '\n';
      break;
  }
}

json eigenvalues_json(const ComplexMatrix<double>& m) {
  const auto sd = spectral_decompose(m);
  json out = json::array();
  for (Eigen::Index k = 0; k < sd.eigenvalues.size(); ++k) {
    out.push_back(sd.eigenvalues(k));
  }
  return out;
}

std::string eigenvalues_text(const ComplexMatrix<double>& m) {
  const auto sd = spectral_decompose(m);
  std::string out;
  for (Eigen::Index k = 0; k < sd.eigenvalues.size(); ++k) {
    if (k > 0) out += ' ';
    out += io::format_sig6(sd.eigenvalues(k));
  }
  return out;
}

int run_discriminate(const CommonOpts& opts, const std::string& name0,
                     const std::string& name1, bool unambiguous) {
  const LoadedProblem problem = load_problem(opts);
  const io::ResolvedState s0 = io::resolve_state(name0, problem.get());
  const io::ResolvedState s1 = io::resolve_state(name1, problem.get());
  const double prior0 = effective_prior0(opts, problem);

  json report{{"command", "discriminate"},
              {"schema_version", "1"},
              {"state0", s0.description},
              {"state1", s1.description},
              {"prior0", prior0}};
  std::vector<Row> rows{{"state0", s0.description},
                        {"state1", s1.description},
                        {"prior0", prior0}};

  if (unambiguous) {
    if (!s0.pure || !s1.pure) {
      throw DomainError(
          "unambiguous discrimination requires pure states (mixed-state "
          "input rejected)");
    }
    const auto res = unambiguous_discrimination(*s0.pure, *s1.pure, prior0);
    rows.emplace_back("q0", res.q0);
    rows.emplace_back("q1", res.q1);
    rows.emplace_back("inconclusive_probability", res.inconclusive_probability);
    json povm{{"elements", json::array()}};
    for (const auto& e : res.povm.elements()) {
      povm["elements"].push_back(io::encode_matrix(e));
    }
    report["result"] = {{"q0", res.q0},
                        {"q1", res.q1},
                        {"inconclusive_probability",
                         res.inconclusive_probability},
                        {"povm", std::move(povm)}};
  } else {
    const BinaryEnsemble<double> ensemble(s0.density, s1.density, prior0);
    const auto res = optimal_discrimination(ensemble);
    rows.emplace_back("error_probability", res.error_probability);
    rows.emplace_back("type1_error", res.type1_error);
    rows.emplace_back("type2_error", res.type2_error);
    json povm{{"elements", json::array()}, {"eigenvalues", json::array()}};
    for (std::size_t k = 0; k < res.povm.size(); ++k) {
      const auto& e = res.povm.element(k);
      povm["elements"].push_back(io::encode_matrix(e));
      povm["eigenvalues"].push_back(eigenvalues_json(e));
      rows.emplace_back("povm_e" + std::to_string(k) + "_eigenvalues",
                        eigenvalues_text(e));
    }
    report["result"] = {{"error_probability", res.error_probability},
                        {"type1_error", res.type1_error},
                        {"type2_error", res.type2_error},
                        {"povm", std::move(povm)}};
  }
  emit(opts, rows, report);
  return kExitOk;
}

int run_bounds(const CommonOpts& opts, const std::string& name0,
               const std::string& name1, int copies) {
  const LoadedProblem problem = load_problem(opts);
  const io::ResolvedState s0 = io::resolve_state(name0, problem.get());
  const io::ResolvedState s1 = io::resolve_state(name1, problem.get());
  const BinaryEnsemble<double> ensemble(s0.density, s1.density, 0.5);
  // The command insists on an exact value, so the cap is enforced up front
  // (the library report would merely omit it).
  checked_power_dim(static_cast<std::size_t>(ensemble.dim()), copies,
                    dim_cap(), "bounds");
  const auto report = bound_report(ensemble, copies);

  std::vector<Row> rows{{"state0", s0.description},
                        {"state1", s1.description},
                        {"m_copies", static_cast<double>(report.m_copies)}};
  json result{{"m_copies", report.m_copies}};
  if (report.exact_error) {
    rows.emplace_back("exact_error", *report.exact_error);
    result["exact_error"] = io::json_number(*report.exact_error);
  }
  const std::vector<std::pair<std::string, double>> bounds{
      {"fidelity_lower", report.fidelity_lower},
      {"fidelity_upper", report.fidelity_upper},
      {"bhattacharya_lower", report.bhattacharya_lower},
      {"bhattacharya_upper", report.bhattacharya_upper},
      {"qcb_upper", report.qcb_upper},
      {"chernoff_exponent", report.chernoff_exponent},
      {"optimal_s", report.optimal_s}};
  for (const auto& [name, value] : bounds) {
    rows.emplace_back(name, value);
    result[name] = io::json_number(value);
  }
  const json out{{"command", "bounds"},
                 {"schema_version", "1"},
                 {"state0", s0.description},
                 {"state1", s1.description},
                 {"result", result}};
  emit(opts, rows, out);
  return kExitOk;
}

int run_simulate(const CommonOpts& opts, const std::string& name0,
                 const std::string& name1, const std::string& strategy_name,
                 int copies, std::int64_t trials, std::uint64_t seed,
                 int threads, const std::string& povm_choice) {
  const LoadedProblem problem = load_problem(opts);
  const io::ResolvedState s0 = io::resolve_state(name0, problem.get());
  const io::ResolvedState s1 = io::resolve_state(name1, problem.get());
  const double prior0 = effective_prior0(opts, problem);
  const BinaryEnsemble<double> ensemble(s0.density, s1.density, prior0);

  StrategySpec<double> spec{StrategyKind::collective, copies, std::nullopt};
  if (strategy_name == "fixed") {
    spec.kind = StrategyKind::fixed_individual;
    std::string choice = povm_choice;
    if (choice == "auto") choice = s0.pure ? "projector0" : "helstrom";
    if (choice == "projector0") {
      if (!s0.pure) {
        throw DomainError(
            "fixed strategy with projector0 POVM requires a pure state0");
      }
      const Eigen::Index d = ensemble.dim();
      ComplexMatrix<double> e0 = s0.pure->to_density().matrix();
      ComplexMatrix<double> e1 = ComplexMatrix<double>::Identity(d, d) - e0;
      spec.fixed_povm = Povm<double>({std::move(e0), std::move(e1)});
    } else {
      spec.fixed_povm = optimal_discrimination(ensemble).povm;
    }
  } else if (strategy_name == "adaptive") {
    spec.kind = StrategyKind::adaptive_local;
  }

  const SimulationConfig<double> config{trials, seed, ensemble, threads};
  const auto report = simulate(spec, config);

  std::vector<Row> rows{
      {"state0", s0.description},
      {"state1", s1.description},
      {"strategy", strategy_name},
      {"m_copies", static_cast<double>(copies)},
      {"trials", static_cast<double>(report.trials)},
      {"seed", std::to_string(report.seed)},
      {"threads", static_cast<double>(threads)},
      {"empirical_error", report.empirical_error},
      {"standard_error", report.standard_error}};
  json result{{"strategy", strategy_name},
              {"m_copies", copies},
              {"trials", report.trials},
              {"seed", report.seed},
              {"threads", threads},
              {"empirical_error", report.empirical_error},
              {"standard_error", report.standard_error}};
  if (report.analytic_error) {
    rows.emplace_back("analytic_error", *report.analytic_error);
    result["analytic_error"] = *report.analytic_error;
  }
  const json out{{"command", "simulate"},
                 {"schema_version", "1"},
                 {"state0", s0.description},
                 {"state1", s1.description},
                 {"prior0", prior0},
                 {"result", result}};
  emit(opts, rows, out);
  return kExitOk;
}

int run_channel(const CommonOpts& opts, const std::string& name0,
                const std::string& name1, const std::string& probe_name,
                Eigen::Index ancilla_dim) {
  const LoadedProblem problem = load_problem(opts);
  const KrausChannel<double> phi0 = io::resolve_channel(name0, problem.get());
  const KrausChannel<double> phi1 = io::resolve_channel(name1, problem.get());
  const double prior0 = effective_prior0(opts, problem);
  if (std::abs(prior0 - 0.5) > 1e-12) {
    throw DomainError(
        "channel discrimination is defined at equal channel priors");
  }

  ProbeResult<double> res = [&] {
    if (probe_name == "search") {
      return best_unentangled_probe(phi0, phi1);
    }
    if (probe_name == "entangled-search") {
      const Eigen::Index anc =
          ancilla_dim > 0 ? ancilla_dim : phi0.input_dim();
      return best_entangled_probe(phi0, phi1, anc);
    }
    const io::ResolvedState probe = io::resolve_state(probe_name, problem.get());
    const Eigen::Index d = phi0.input_dim();
    if (probe.density.dim() == d) {
      return discriminate_with_probe(phi0, phi1, probe.density, false);
    }
    if (probe.density.dim() % d == 0) {
      return discriminate_with_probe(phi0, phi1, probe.density, true, d,
                                     probe.density.dim() / d);
    }
    throw DomainError("probe dimension mismatch: channel input " +
                      std::to_string(d) + ", probe " +
                      std::to_string(probe.density.dim()));
  }();

  const std::string description =
      probe_name == "search" || probe_name == "entangled-search"
          ? probe_name + " result"
          : probe_name;
  std::vector<Row> rows{
      {"channel0", name0},
      {"channel1", name1},
      {"probe", description},
      {"used_ancilla", std::string(res.used_ancilla ? "yes" : "no")},
      {"heuristic", std::string(res.heuristic ? "yes" : "no")},
      {"achieved_norm", res.achieved_norm},
      {"error_probability", res.error_probability}};
  const json out{{"command", "channel"},
                 {"schema_version", "1"},
                 {"channel0", name0},
                 {"channel1", name1},
                 {"result",
                  {{"probe", io::encode_density(res.probe)},
                   {"probe_description", description},
                   {"error_probability", res.error_probability},
                   {"used_ancilla", res.used_ancilla},
                   {"heuristic", res.heuristic},
                   {"achieved_norm", res.achieved_norm}}}};
  emit(opts, rows, out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "discrimkit - optimal discrimination of quantum states and channels"};
  app.require_subcommand(1);

  std::function<int()> action;

  // discriminate
  auto* discriminate = app.add_subcommand(
      "discriminate", "Minimum-error or unambiguous discrimination");
  {
    auto opts = std::make_shared<CommonOpts>();
    auto name0 = std::make_shared<std::string>();
    auto name1 = std::make_shared<std::string>();
    auto unambiguous = std::make_shared<bool>(false);
    discriminate->add_option("--state0", *name0, "First hypothesis state")
        ->required();
    discriminate->add_option("--state1", *name1, "Second hypothesis state")
        ->required();
    discriminate->add_flag("--unambiguous", *unambiguous,
                           "Zero-error scheme with inconclusive outcome "
                           "(pure states only)");
    opts->attach(discriminate, true);
    discriminate->callback([&action, opts, name0, name1, unambiguous] {
      action = [=] {
        return run_discriminate(*opts, *name0, *name1, *unambiguous);
      };
    });
  }

  // bounds
  auto* bounds = app.add_subcommand(
      "bounds", "Multi-copy error bounds (equal priors)");
  {
    auto opts = std::make_shared<CommonOpts>();
    auto name0 = std::make_shared<std::string>();
    auto name1 = std::make_shared<std::string>();
    auto copies = std::make_shared<int>(1);
    bounds->add_option("--state0", *name0, "First hypothesis state")
        ->required();
    bounds->add_option("--state1", *name1, "Second hypothesis state")
        ->required();
    bounds->add_option("--copies", *copies, "Number of copies M")
        ->required()
        ->check(CLI::PositiveNumber);
    opts->attach(bounds, false);
    bounds->callback([&action, opts, name0, name1, copies] {
      action = [=] { return run_bounds(*opts, *name0, *name1, *copies); };
    });
  }

  // simulate
  auto* simulate_cmd = app.add_subcommand(
      "simulate", "Monte Carlo simulation of a measurement strategy");
  {
    auto opts = std::make_shared<CommonOpts>();
    auto name0 = std::make_shared<std::string>();
    auto name1 = std::make_shared<std::string>();
    auto strategy = std::make_shared<std::string>();
    auto copies = std::make_shared<int>(1);
    auto trials = std::make_shared<std::int64_t>(10000);
    auto seed = std::make_shared<std::uint64_t>(1);
    auto threads = std::make_shared<int>(1);
    auto povm_choice = std::make_shared<std::string>("auto");
    simulate_cmd->add_option("--state0", *name0, "First hypothesis state")
        ->required();
    simulate_cmd->add_option("--state1", *name1, "Second hypothesis state")
        ->required();
    simulate_cmd
        ->add_option("--strategy", *strategy,
                     "Strategy: fixed, adaptive or collective")
        ->required()
        ->check(CLI::IsMember({"fixed", "adaptive", "collective"}));
    simulate_cmd->add_option("--copies", *copies, "Number of copies M")
        ->check(CLI::PositiveNumber);
    simulate_cmd->add_option("--trials", *trials, "Number of trials")
        ->check(CLI::PositiveNumber);
    simulate_cmd->add_option("--seed", *seed, "RNG seed");
    simulate_cmd
        ->add_option("--threads", *threads,
                     "Worker threads (results are thread-count independent)")
        ->check(CLI::PositiveNumber);
    simulate_cmd
        ->add_option("--fixed-povm", *povm_choice,
                     "Single-copy POVM for the fixed strategy")
        ->check(CLI::IsMember({"auto", "projector0", "helstrom"}));
    opts->attach(simulate_cmd, true);
    simulate_cmd->callback([&action, opts, name0, name1, strategy, copies,
                            trials, seed, threads, povm_choice] {
      action = [=] {
        return run_simulate(*opts, *name0, *name1, *strategy, *copies,
                            *trials, *seed, *threads, *povm_choice);
      };
    });
  }

  // channel
  auto* channel = app.add_subcommand(
      "channel", "Binary channel discrimination with a probe state");
  {
    auto opts = std::make_shared<CommonOpts>();
    auto name0 = std::make_shared<std::string>();
    auto name1 = std::make_shared<std::string>();
    auto probe = std::make_shared<std::string>();
    auto ancilla = std::make_shared<Eigen::Index>(0);
    channel->add_option("--channel0", *name0, "First channel")->required();
    channel->add_option("--channel1", *name1, "Second channel")->required();
    channel
        ->add_option("--probe", *probe,
                     "Named probe state, 'search' or 'entangled-search'")
        ->required();
    channel->add_option("--ancilla-dim", *ancilla,
                        "Ancilla dimension for entangled-search "
                        "(default: channel input dimension)");
    opts->attach(channel, true);
    channel->callback([&action, opts, name0, name1, probe, ancilla] {
      action = [=] { return run_channel(*opts, *name0, *name1, *probe,
                                        *ancilla); };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    return action();
  } catch (const io::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitDomain;
  }
}
