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
#include <complex>
#include <cstdlib>
#include <numbers>

#include "doctest.h"
#include "purecav/error.hpp"
#include "purecav/qcore.hpp"

using namespace purecav;

namespace {

ComplexMatrix random_density(int dim, unsigned seed) {
    std::srand(seed);
    ComplexMatrix a = ComplexMatrix::Random(dim, dim);
    ComplexMatrix rho = a * a.adjoint();
    return rho / rho.trace().real();
}

template <typename F>
ErrorCode code_of(F &&f) {
    try {
        f();
    } catch (const Error &e) {
        return e.code();
    }
    return static_cast<ErrorCode>(0);
}

}  // namespace

TEST_CASE("basis kets follow most-significant-first ordering") {
    const std::array<std::size_t, 3> digits{1, 0, 2};
    const Ket k = Ket::basis(Dims{2, 2, 3}, digits);
    CHECK(k.dim() == 12);
    CHECK(std::abs(k.amplitudes(1 * 6 + 0 * 3 + 2) - Complex(1.0)) < 1e-15);
    CHECK(k.is_normalized());
}

TEST_CASE("density operator invariants are enforced") {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 0) = 0.5;
    CHECK(code_of([&] { DensityOperator(m, Dims{2}); }) == ErrorCode::InvalidArgument);
    m(1, 1) = 0.5;
    m(0, 1) = 0.3;
    CHECK(code_of([&] { DensityOperator(m, Dims{2}); }) == ErrorCode::NotHermitian);
    m(0, 1) = 0.0;
    m(0, 0) = 1.2;
    m(1, 1) = -0.2;
    CHECK(code_of([&] { DensityOperator(m, Dims{2}); }) == ErrorCode::NotPositive);
    CHECK(code_of([&] { DensityOperator(ComplexMatrix::Identity(4, 4) / 4.0, Dims{2}); }) ==
          ErrorCode::DimensionMismatch);
    CHECK(code_of([&] { DensityOperator::normalized(UnnormalizedDensity(ComplexMatrix::Zero(2, 2), Dims{2})); }) ==
          ErrorCode::NullOutcome);
}

TEST_CASE("partial trace of a product state returns the factors") {
    const ComplexMatrix a = random_density(2, 3);
    const ComplexMatrix b = random_density(3, 5);
    const ComplexMatrix c = random_density(2, 7);
    const ComplexMatrix abc = tensor(tensor(a, b), c);
    const Dims dims{2, 3, 2};
    const std::array<std::size_t, 1> keep_b{1};
    const std::array<std::size_t, 2> keep_ac{0, 2};
    CHECK(max_abs(partial_trace(abc, dims, keep_b) - b) < 1e-13);
    CHECK(max_abs(partial_trace(abc, dims, keep_ac) - tensor(a, c)) < 1e-13);
    CHECK(std::abs(partial_trace(abc, dims, std::span<const std::size_t>{})(0, 0) - Complex(1.0)) < 1e-13);
}

TEST_CASE("subsystem permutation moves tensor factors") {
    const ComplexMatrix a = random_density(2, 11);
    const ComplexMatrix b = random_density(3, 13);
    const ComplexMatrix c = random_density(2, 17);
    const std::array<std::size_t, 3> order{2, 0, 1};
    const ComplexMatrix p = permute_subsystems(tensor(tensor(a, b), c), Dims{2, 3, 2}, order);
    CHECK(max_abs(p - tensor(tensor(c, a), b)) < 1e-13);
}

TEST_CASE("projection keeps the remaining subsystems in order") {
    const ComplexMatrix a = random_density(2, 19);
    const ComplexMatrix b = random_density(2, 23);
    const ComplexMatrix c = random_density(2, 29);
    const DensityOperator rho(tensor(tensor(a, b), c), Dims{2, 2, 2});
    const std::array<std::size_t, 1> one{1};
    const std::array<std::size_t, 1> on{1};
    const ProjectionResult r = project(rho, Ket::basis(Dims{2}, one), on);
    CHECK(std::abs(r.probability - b(1, 1).real()) < 1e-13);
    CHECK_FALSE(r.null_outcome);
    CHECK(max_abs(r.state.matrix() - b(1, 1) * tensor(a, c)) < 1e-13);
}

TEST_CASE("projection onto an unpopulated outcome is flagged") {
    ComplexMatrix excited = ComplexMatrix::Zero(2, 2);
    excited(1, 1) = 1.0;
    const DensityOperator e(excited, Dims{2});
    const std::array<std::size_t, 1> zero{0};
    const std::array<std::size_t, 1> site{0};
    const ProjectionResult n = project(e, Ket::basis(Dims{2}, zero), site);
    CHECK(n.null_outcome);
    CHECK(n.probability < 1e-14);
}

TEST_CASE("trace distance and Bell fidelity") {
    using namespace bell;
    const ComplexMatrix pp = projector(phi_plus());
    const ComplexMatrix pm = projector(phi_minus());
    CHECK(std::abs(trace_distance(pp, pm) - 1.0) < 1e-14);
    CHECK(std::abs(trace_distance(pp, 0.5 * (pp + pm)) - 0.5) < 1e-14);
    CHECK(std::abs(bell_fidelity(DensityOperator(pp, Dims{2, 2})) - 1.0) < 1e-14);
    CHECK(std::abs(bell_fidelity(DensityOperator(projector(psi_minus()), Dims{2, 2}))) < 1e-14);
    // Bell vectors are orthonormal.
    const std::array<ComplexVector, 4> v{phi_plus(), phi_minus(), psi_plus(), psi_minus()};
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            CHECK(std::abs(v[i].dot(v[j]) - Complex(i == j ? 1.0 : 0.0)) < 1e-15);
        }
    }
}

TEST_CASE("Hermitian exponential against a Pauli rotation") {
    const double t = 0.37;
    const ComplexMatrix u = expm_hermitian(pauli::x(), t);
    ComplexMatrix expected(2, 2);
    expected << std::cos(t), Complex(0.0, -std::sin(t)), Complex(0.0, -std::sin(t)), std::cos(t);
    CHECK(max_abs(u - expected) < 1e-14);
    CHECK(is_unitary(u));
    const HermitianPropagator prop(pauli::z());
    CHECK(max_abs(prop.unitary(t) - expm_hermitian(pauli::z(), t)) < 1e-14);
}

TEST_CASE("Pauli algebra and site embedding") {
    const Complex i(0.0, 1.0);
    CHECK(max_abs(pauli::x() * pauli::y() - i * pauli::z()) < 1e-15);
    const ComplexMatrix z1 = pauli::on_site(pauli::z(), 1, 3);
    CHECK(max_abs(z1 - tensor(tensor(pauli::identity(2), pauli::z()), pauli::identity(2))) < 1e-15);
}

TEST_CASE("purity and eigenvalues") {
    const DensityOperator mixed(ComplexMatrix::Identity(4, 4) / 4.0, Dims{2, 2});
    CHECK(std::abs(mixed.purity() - 0.25) < 1e-15);
    const DensityOperator pure = DensityOperator::pure(Ket::from_amplitudes(bell::phi_plus(), Dims{2, 2}));
    CHECK(std::abs(pure.purity() - 1.0) < 1e-14);
    CHECK(min_eigenvalue(pure.matrix()) > -1e-14);
}

TEST_CASE("tensor product basics") {
    CHECK(max_abs(tensor(pauli::identity(2), pauli::identity(2)) - pauli::identity(4)) < 1e-15);
    ComplexMatrix p0 = ComplexMatrix::Zero(2, 2);
    ComplexMatrix p1 = ComplexMatrix::Zero(2, 2);
    p0(0, 0) = 1.0;
    p1(1, 1) = 1.0;
    ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
    expected(1, 1) = 1.0;
    CHECK(max_abs(tensor(p0, p1) - expected) < 1e-15);
    const ComplexMatrix pp = bell::projector(bell::phi_plus());
    const ComplexMatrix pp2 = tensor(pp, pp);
    CHECK(std::abs(pp2.trace() - Complex(1.0)) < 1e-14);
    CHECK(max_abs(pp2 * pp2 - pp2) < 1e-14);
}

TEST_CASE("marginals of a Bell state") {
    const DensityOperator phi(bell::projector(bell::phi_plus()), Dims{2, 2});
    for (std::size_t q : {0u, 1u}) {
        const std::array<std::size_t, 1> keep{q};
        CHECK(max_abs(partial_trace(phi, keep).matrix() - 0.5 * pauli::identity(2)) < 1e-15);
    }
    const std::array<std::size_t, 1> bad{2};
    CHECK(code_of([&] { partial_trace(phi, bad); }) == ErrorCode::InvalidArgument);
    const std::array<std::size_t, 2> dup{0, 0};
    CHECK(code_of([&] { partial_trace(phi, dup); }) == ErrorCode::InvalidArgument);

    const std::array<std::size_t, 1> zero{0};
    const std::array<std::size_t, 1> second{1};
    const ProjectionResult r = project(phi, Ket::basis(Dims{2}, zero), second);
    CHECK(r.probability == doctest::Approx(0.5).epsilon(1e-15));
    ComplexMatrix half0 = ComplexMatrix::Zero(2, 2);
    half0(0, 0) = 0.5;
    CHECK(max_abs(r.state.matrix() - half0) < 1e-15);

    const DensityOperator rho(random_density(8, 31), Dims{2, 2, 2});
    const std::array<std::size_t, 2> on{0, 2};
    double total = 0.0;
    for (std::size_t a = 0; a < 2; ++a) {
        for (std::size_t b = 0; b < 2; ++b) {
            const std::array<std::size_t, 2> digits{a, b};
            total += project(rho, Ket::basis(Dims{2, 2}, digits), on).probability;
        }
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    const std::array<std::size_t, 1> keep_mid{1};
    CHECK(partial_trace(rho, keep_mid).trace() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("exponential edge cases") {
    CHECK(max_abs(expm_hermitian(pauli::z(), std::numbers::pi) + pauli::identity(2)) < 1e-14);
    const ComplexMatrix h = random_density(5, 37) - ComplexMatrix::Identity(5, 5) * 0.2;
    CHECK(max_abs(expm_hermitian(h, 0.0) - pauli::identity(5)) < 1e-14);
    CHECK(is_unitary(expm_hermitian(h, 3.7)));
    ComplexMatrix skew = pauli::x();
    skew(0, 1) = 2.0;
    CHECK(code_of([&] { expm_hermitian(skew, 1.0); }) == ErrorCode::NotHermitian);
    const DensityOperator one_qubit(0.5 * pauli::identity(2), Dims{2});
    CHECK(code_of([&] { bell_fidelity(one_qubit); }) == ErrorCode::DimensionMismatch);
}
