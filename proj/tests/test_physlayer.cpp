// Copyright 2026 The purecav Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <array>
#include <cmath>

#include "doctest.h"
#include "purecav/error.hpp"
#include "purecav/physlayer.hpp"
#include "purecav/spinchain.hpp"

using namespace purecav;

namespace {

ErrorCode ladder_error(const std::vector<double> &mults) {
    try {
        ladder_C(default_params_C(), mults);
    } catch (const Error &e) {
        return e.code();
    }
    return static_cast<ErrorCode>(0);
}

}  // namespace

TEST_CASE("effective couplings") {
    CHECK(j2_from(appendix_a_params(1.0, 8.0, 2.0)) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(j3_from(appendix_c_params(1.0, 1.0, 10.0, 5.0)) == doctest::Approx(1.25e-4).epsilon(1e-15));
    const DriveParams c = default_params_C();
    CHECK(effective_C(c).coupling == doctest::Approx(j3_from(c)).epsilon(1e-15));
    CHECK(j2_from(appendix_a_params(2.0, 8.0, 2.0)) == doctest::Approx(2.0));
    CHECK(j2_from(appendix_a_params(1.0, 16.0, 2.0)) == doctest::Approx(2.0));
    CHECK(j2_from(appendix_a_params(1.0, 8.0, 4.0)) == doctest::Approx(0.5));
    CHECK_THROWS_AS(j3_from(appendix_c_params(1.0, 1.0, 10.0, -5.0)), Error);
    const DriveParams a = appendix_a_params(1.0, 40.0, 400.0);
    CHECK(a.delta_l == doctest::Approx(-400.0));
}

TEST_CASE("full Hamiltonians are Hermitian at every time") {
    const FullModel a = full_hamiltonian_A(default_params_A(), 3);
    const FullModel c = full_hamiltonian_C(default_params_C(), 2);
    for (double t : {0.0, 0.13, 7.5}) {
        CHECK(is_hermitian(a.hamiltonian.at(t)));
        CHECK(is_hermitian(c.hamiltonian.at(t)));
    }
    CHECK(is_hermitian(a.hamiltonian.rotating_generator()));
    CHECK(a.atoms == 2);
    CHECK(c.atoms == 3);
    DriveParams bad = default_params_A();
    bad.delta = -1.0;
    CHECK_THROWS_AS(full_hamiltonian_A(bad, 3), Error);
}

TEST_CASE("switching off the laser leaves only cavity coupling") {
    DriveParams p = default_params_A();
    p.omega = 0.0;
    const FullModel m = full_hamiltonian_A(p, 2);
    const ComplexMatrix h = m.hamiltonian.at(0.3);
    // Without the drive nothing moves atom 1 out of |1>.
    const Eigen::Index cav = 3;
    const Eigen::Index per_atom = 3 * cav;
    double offdiag = 0.0;
    for (Eigen::Index r = 0; r < h.rows(); ++r) {
        for (Eigen::Index c = 0; c < h.cols(); ++c) {
            if (((r / per_atom) == 1) != ((c / per_atom) == 1)) {
                offdiag = std::max(offdiag, std::abs(h(r, c)));
            }
        }
    }
    CHECK(offdiag < 1e-15);
}

TEST_CASE("exact-frame and RK4 routes agree") {
    const DriveParams p = default_params_C();
    const std::array<std::size_t, 3> digits{1, 0, 0};
    const Ket psi0 = Ket::basis(Dims{2, 2, 2}, digits);
    const FullModel full = full_hamiltonian_C(p, 3);
    const EffectiveModel eff{effective_C(p).matrix, 3, 0};
    VerifyOptions rk;
    rk.method = VerifyOptions::Method::Rk4;
    rk.samples = 200;
    const VerificationReport e = verify_effective(full, eff, psi0, 50.0);
    const VerificationReport r = verify_effective(full, eff, psi0, 50.0, rk);
    CHECK(std::abs(e.trace_distance - r.trace_distance) < 1e-6);
    CHECK(std::abs(e.excited_population_max - r.excited_population_max) < 1e-4);
}

TEST_CASE("detuning ladders") {
    const LadderResult c = ladder_C(default_params_C(), {1.0, 2.0, 4.0});
    REQUIRE(c.rows.size() == 3);
    CHECK(c.distances_decreasing);
    CHECK(c.excitation_decreasing);
    CHECK(c.warnings.empty());
    CHECK(c.rows[0].report.trace_distance == doctest::Approx(7.517e-4).epsilon(1e-3));
    CHECK(c.rows[2].report.trace_distance == doctest::Approx(5.737e-5).epsilon(1e-3));
    CHECK(c.rows[2].report.params.delta == doctest::Approx(40.0));

    const LadderResult a = ladder_A(default_params_A(), {1.0, 2.0, 4.0});
    CHECK(a.distances_decreasing);
    CHECK(a.excitation_decreasing);
    CHECK(a.rows[2].report.trace_distance == doctest::Approx(0.01979).epsilon(1e-3));
    CHECK(a.rows[2].report.trace_distance <= 0.05);
}

TEST_CASE("ladder guards") {
    CHECK(ladder_error({}) == ErrorCode::Usage);
    CHECK(ladder_error({1.0, -2.0}) == ErrorCode::Usage);
    const LadderResult weak = ladder_A(appendix_a_params(1.0, 5.0, 400.0), {1.0});
    CHECK_FALSE(weak.warnings.empty());
}

TEST_CASE("distribution fidelity") {
    CHECK(distribution_fidelity(0.5, 100.0, std::acos(0.99)) == doctest::Approx(0.80326533).epsilon(1e-8));
    CHECK(distribution_fidelity(1.0, 50.0, 1.2) == 1.0);
    CHECK(distribution_fidelity(0.3, 50.0, 0.0) == 1.0);
    const double expected = 0.5 * (1.0 + std::exp(-0.1 * 10.0 * (1.0 - std::cos(1.0))));
    CHECK(distribution_fidelity(0.9, 10.0, 1.0) == doctest::Approx(expected).epsilon(1e-14));
    CHECK(distribution_pair(0.9, 10.0, 1.0).f() == doctest::Approx(expected).epsilon(1e-14));
    CHECK_THROWS_AS(distribution_fidelity(0.0, 10.0, 1.0), Error);
}
