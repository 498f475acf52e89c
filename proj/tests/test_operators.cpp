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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_helpers.hpp"

using dk::ComplexMatrix;
using dk::ComplexVector;
using dk::DensityOperator;

namespace {

DensityOperator<double> diag_density(double p0, double p1) {
  ComplexMatrix<double> m = ComplexMatrix<double>::Zero(2, 2);
  m(0, 0) = p0;
  m(1, 1) = p1;
  return DensityOperator<double>(std::move(m));
}

}  // namespace

TEST_CASE("density operator validation names the violated invariant") {
  ComplexMatrix<double> bad_trace = ComplexMatrix<double>::Identity(2, 2);
  CHECK_THROWS_WITH_AS(DensityOperator<double>{bad_trace},
                       doctest::Contains("unit trace"), dk::DomainError);

  ComplexMatrix<double> not_herm(2, 2);
  not_herm << 0.5, 0.4, -0.4, 0.5;
  CHECK_THROWS_WITH_AS(DensityOperator<double>{not_herm},
                       doctest::Contains("Hermitian"), dk::DomainError);

  ComplexMatrix<double> not_psd(2, 2);
  not_psd << 1.5, 0.0, 0.0, -0.5;
  CHECK_THROWS_WITH_AS(DensityOperator<double>{not_psd},
                       doctest::Contains("positive semidefinite"),
                       dk::DomainError);
}

TEST_CASE("pure state validation") {
  ComplexVector<double> v(2);
  v << 1.0, 1.0;
  CHECK_THROWS_WITH_AS(dk::PureState<double>{v},
                       doctest::Contains("unit norm"), dk::DomainError);
  CHECK(dk::PureState<double>::normalized(v).dim() == 2);
}

TEST_CASE("fidelity known values") {
  dk::SplitMix64 g(11);
  const auto rho = dk::random_density<double>(3, g);
  CHECK(dk::fidelity(rho, rho) == doctest::Approx(1.0).epsilon(1e-12));

  CHECK(dk::fidelity(ket0().to_density(), ket_plus().to_density()) ==
        doctest::Approx(0.5).epsilon(1e-12));

  // Commuting case: (sum_i sqrt(p_i q_i))^2 = (2 sqrt(0.1875))^2 = 0.75.
  CHECK(dk::fidelity(diag_density(0.75, 0.25), diag_density(0.25, 0.75)) ==
        doctest::Approx(0.75).epsilon(1e-12));

  CHECK_THROWS_WITH_AS(
      dk::fidelity(ket0().to_density(), dk::maximally_mixed<double>(3)),
      doctest::Contains("dimension mismatch"), dk::DomainError);
}

TEST_CASE("fidelity is symmetric and bounds the trace distance") {
  dk::SplitMix64 g(13);
  for (const Eigen::Index dim : {2, 3, 4}) {
    for (int rep = 0; rep < 100; ++rep) {
      const auto rho0 = dk::random_density<double>(dim, g);
      const auto rho1 = dk::random_density<double>(dim, g);
      const double f01 = dk::fidelity(rho0, rho1);
      const double f10 = dk::fidelity(rho1, rho0);
      CHECK(std::abs(f01 - f10) <= 1e-9);
      const double half_dist =
          0.5 * dk::trace_norm((rho1.matrix() - rho0.matrix()).eval());
      CHECK(1.0 - std::sqrt(f01) <= half_dist + 1e-9);
      CHECK(half_dist <= std::sqrt(1.0 - f01) + 1e-9);
    }
  }
}

TEST_CASE("fidelity is multiplicative under tensor powers") {
  dk::SplitMix64 g(17);
  const auto rho0 = dk::random_density<double>(2, g);
  const auto rho1 = dk::random_density<double>(2, g);
  const double f = dk::fidelity(rho0, rho1);
  for (const int copies : {1, 2, 3}) {
    const double f_m = dk::fidelity(dk::tensor_power(rho0, copies),
                                    dk::tensor_power(rho1, copies));
    CHECK(f_m == doctest::Approx(std::pow(f, copies)).epsilon(1e-8));
  }
}

TEST_CASE("fractional_power") {
  const auto rho = diag_density(0.25, 0.75);
  const auto half = dk::fractional_power(rho, 0.5);
  CHECK(half(0, 0).real() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(half(1, 1).real() ==
        doctest::Approx(0.8660254037844386).epsilon(1e-12));

  // A pure state is a projector: rho^s = rho for every s.
  const auto proj = ket_plus().to_density();
  for (const double s : {0.0, 0.3, 1.0}) {
    CHECK(dk::max_abs(
              (dk::fractional_power(proj, s) - proj.matrix()).eval()) <=
          1e-12);
  }

  CHECK(dk::max_abs((dk::fractional_power(rho, 1.0) - rho.matrix()).eval()) <=
        1e-12);
  CHECK_THROWS_WITH_AS(dk::fractional_power(rho, 1.5),
                       doctest::Contains("[0, 1]"), dk::DomainError);
  CHECK_THROWS_AS(dk::fractional_power(rho, -0.1), dk::DomainError);

  // Support projector: Tr(rho^0 rho) = Tr(rho) for full-rank rho.
  dk::SplitMix64 g(19);
  const auto full = dk::random_density<double>(3, g);
  const auto p0 = dk::fractional_power(full, 0.0);
  CHECK((p0 * full.matrix()).trace().real() ==
        doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("tensor_power basics") {
  dk::SplitMix64 g(23);
  const auto rho = dk::random_density<double>(2, g);

  CHECK(dk::max_abs(
            (dk::tensor_power(rho, 1).matrix() - rho.matrix()).eval()) == 0.0);

  const auto proj00 = dk::tensor_power(ket0().to_density(), 2);
  REQUIRE(proj00.dim() == 4);
  CHECK(proj00.matrix()(0, 0).real() == doctest::Approx(1.0));
  CHECK(dk::max_abs(proj00.matrix()) == doctest::Approx(1.0));

  CHECK_THROWS_WITH_AS(dk::tensor_power(rho, 13, 4096),
                       doctest::Contains("8192"), dk::ResourceError);
}

TEST_CASE("tensor product expectation factorizes") {
  dk::SplitMix64 g(29);
  for (int rep = 0; rep < 10; ++rep) {
    const auto rho = dk::random_density<double>(2, g);
    const auto sigma = dk::random_density<double>(2, g);
    const auto a = random_hermitian(2, g);
    const auto b = random_hermitian(2, g);
    const auto joint = dk::kron(rho.matrix(), sigma.matrix());
    const double lhs = (joint * dk::kron(a, b)).trace().real();
    const double rhs = (rho.matrix() * a).trace().real() *
                       (sigma.matrix() * b).trace().real();
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
  }
}

TEST_CASE("partial_trace") {
  dk::SplitMix64 g(31);
  const auto rho = dk::random_density<double>(2, g);
  const auto sigma = dk::random_density<double>(3, g);
  const auto joint = DensityOperator<double>::trusted(
      dk::kron(rho.matrix(), sigma.matrix()));

  const auto back = dk::partial_trace(joint, 2, 3, dk::Subsystem::A);
  CHECK(dk::max_abs((back.matrix() - rho.matrix()).eval()) <= 1e-12);
  const auto other = dk::partial_trace(joint, 2, 3, dk::Subsystem::B);
  CHECK(dk::max_abs((other.matrix() - sigma.matrix()).eval()) <= 1e-12);

  // Maximally entangled qubit pair reduces to I/2 on either side.
  const auto me = dk::maximally_entangled_state<double>(2).to_density();
  const auto reduced = dk::partial_trace(me, 2, 2, dk::Subsystem::B);
  CHECK(dk::max_abs((reduced.matrix() -
                     dk::maximally_mixed<double>(2).matrix())
                        .eval()) <= 1e-12);

  // Trace is preserved on random bipartite states.
  const auto big = dk::random_density<double>(6, g);
  for (const auto keep : {dk::Subsystem::A, dk::Subsystem::B}) {
    CHECK(dk::partial_trace(big, 2, 3, keep).matrix().trace().real() ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("random density operators always satisfy the type invariants") {
  dk::SplitMix64 g(37);
  for (const Eigen::Index dim : {2, 3, 4, 5}) {
    for (int rep = 0; rep < 20; ++rep) {
      // The checked constructor inside random_density re-validates; check()
      // again to make the contract explicit.
      CHECK_NOTHROW(dk::random_density<double>(dim, g).check());
    }
  }
}

TEST_CASE("POVM validation and outcome probabilities") {
  using dk::Povm;
  const ComplexMatrix<double> id = ComplexMatrix<double>::Identity(2, 2);
  CHECK_THROWS_WITH_AS(Povm<double>({(0.5 * id).eval(), (0.4 * id).eval()}),
                       doctest::Contains("completeness"), dk::DomainError);
  ComplexMatrix<double> neg(2, 2);
  neg << 1.5, 0.0, 0.0, -0.5;
  CHECK_THROWS_WITH_AS(Povm<double>({neg, (id - neg).eval()}),
                       doctest::Contains("positive semidefinite"),
                       dk::DomainError);

  // An inconsistent (non-normalizing) element set is an internal error when
  // feeding the sampler, not a silent renormalization.
  const auto broken =
      Povm<double>::trusted({(0.4 * id).eval(), (0.4 * id).eval()});
  CHECK_THROWS_AS(broken.outcome_probabilities(ket0().to_density()),
                  std::logic_error);

  const Povm<double> fair({(0.5 * id).eval(), (0.5 * id).eval()});
  const auto p = fair.outcome_probabilities(ket0().to_density());
  CHECK(p(0) == doctest::Approx(0.5));
  CHECK(p.sum() == doctest::Approx(1.0));
}

TEST_CASE("maximally entangled state") {
  const auto psi = dk::maximally_entangled_state<double>(3);
  REQUIRE(psi.dim() == 9);
  CHECK(std::abs(psi.amplitudes()(0)) ==
        doctest::Approx(1.0 / std::sqrt(3.0)));
  CHECK(std::abs(psi.amplitudes()(4)) ==
        doctest::Approx(1.0 / std::sqrt(3.0)));
  CHECK(std::abs(psi.amplitudes()(1)) == doctest::Approx(0.0));
}
