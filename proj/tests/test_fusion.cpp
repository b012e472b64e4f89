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


#include <cmath>
#include <complex>

#include "doctest.h"
#include "oracles.hpp"
#include "purecav/error.hpp"
#include "purecav/fusion.hpp"
#include "purecav/states.hpp"

using namespace purecav;

namespace {

oracle::Vec coherent(std::complex<double> alpha, int n_max) {
    oracle::Vec v(n_max + 1);
    double fact = 1.0;
    for (int n = 0; n <= n_max; ++n) {
        if (n > 0) {
            fact *= n;
        }
        v(n) = std::exp(-0.5 * std::norm(alpha)) * std::pow(alpha, n) / std::sqrt(fact);
    }
    return v;
}

DensityOperator plus_plus() {
    const oracle::Vec pp = oracle::node_u_basis().col(0);
    return DensityOperator(oracle::proj(pp), Dims{2, 2});
}

DensityOperator zero_zero() {
    ComplexMatrix m = ComplexMatrix::Zero(4, 4);
    m(0, 0) = 1.0;
    return DensityOperator(m, Dims{2, 2});
}

}  // namespace

TEST_CASE("model parameters") {
    const LindbladModel m = make_model(2.0, 1.0);
    CHECK(std::abs(m.alpha_ss() - Complex(0.0, 4.0)) < 1e-15);
    CHECK(m.n_max == default_fock_cutoff(4.0));
    CHECK(default_fock_cutoff(4.0) == 44);
    CHECK(default_fock_cutoff(0.0) == 4);
    CHECK(m.strong_ratio() == 2.0);
    CHECK_THROWS_AS(make_model(1.0, 0.0), Error);
    CHECK_THROWS_AS(make_model(-1.0, 1.0), Error);
}

TEST_CASE("cavity operators") {
    const std::size_t n = 6;
    const ComplexMatrix a = annihilation(n);
    const ComplexMatrix comm = a * a.adjoint() - a.adjoint() * a;
    for (std::size_t k = 0; k < n; ++k) {
        CHECK(std::abs(comm(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)) - Complex(1.0)) < 1e-14);
    }
    const ComplexVector c = coherent_state(Complex(0.3, -0.4), 30);
    CHECK(std::abs(c.norm() - 1.0) < 1e-14);
    const oracle::Vec o = coherent(Complex(0.3, -0.4), 30);
    CHECK((c - o).norm() < 1e-12);
    const ComplexVector ac = annihilation(30) * c;
    CHECK((ac - Complex(0.3, -0.4) * c).head(29).norm() < 1e-12);
}

TEST_CASE("fusion Hamiltonian") {
    const std::size_t n = 3;
    const ComplexMatrix h = build_fusion_hamiltonian(0.7, n);
    const ComplexMatrix a = annihilation(n);
    const ComplexMatrix xsum = pauli::on_site(pauli::x(), 0, 2) + pauli::on_site(pauli::x(), 1, 2);
    const ComplexMatrix expected = 0.35 * tensor(xsum, ComplexMatrix(a + a.adjoint()));
    CHECK(max_abs(h - expected) < 1e-15);
}

TEST_CASE("fusion Hamiltonian structure") {
    const double j2 = 0.6;
    const std::size_t n = 4;
    const ComplexMatrix h = build_fusion_hamiltonian(j2, n);
    CHECK(is_hermitian(h, 1e-12));
    const ComplexMatrix x1 = tensor(pauli::on_site(pauli::x(), 0, 2), pauli::identity(n + 1));
    const ComplexMatrix x2 = tensor(pauli::on_site(pauli::x(), 1, 2), pauli::identity(n + 1));
    CHECK(max_abs(h * x1 - x1 * h) < 1e-14);
    CHECK(max_abs(h * x2 - x2 * h) < 1e-14);
    const oracle::Vec pp = oracle::node_u_basis().col(0);
    oracle::Vec v0 = oracle::Vec::Zero(5);
    oracle::Vec v1 = oracle::Vec::Zero(5);
    v0(0) = 1.0;
    v1(1) = 1.0;
    const Complex elem = (oracle::kron(pp, v1).adjoint() * h * oracle::kron(pp, v0))(0, 0);
    CHECK(std::abs(elem - Complex(j2)) < 1e-14);
}

TEST_CASE("bare cavity decay") {
    const std::size_t n = 3;
    const SparseMatrix zero(static_cast<Eigen::Index>(n + 1), static_cast<Eigen::Index>(n + 1));
    std::vector<SparseMatrix> c{ComplexMatrix(std::sqrt(0.7) * annihilation(n)).sparseView()};
    const LindbladSystem sys(zero, c, Dims{n + 1}, {0});
    ComplexMatrix rho = ComplexMatrix::Zero(4, 4);
    rho(1, 1) = 1.0;
    EvolveReport rep;
    const ComplexMatrix out = evolve(sys, rho, 2.0, 0.005, {}, &rep);
    CHECK(out(1, 1).real() == doctest::Approx(std::exp(-1.4)).epsilon(1e-9));
    CHECK(rep.max_trace_drift < 1e-8);
}

TEST_CASE("vacuum conditioning") {
    const LindbladModel m = make_model(1.0, 1.0);
    const SteadyStateResult pp = condition_on_vacuum(analytic_steady_state(plus_plus(), m), m.alpha_ss());
    // The Fock cutoff renormalizes the coherent state at the 1e-9 level.
    CHECK(pp.no_photon_probability == doctest::Approx(std::exp(-4.0)).epsilon(1e-9));
    const oracle::Vec pm = oracle::node_u_basis().col(2);
    const DensityOperator in(oracle::proj(pm), Dims{2, 2});
    const SteadyStateResult r = condition_on_vacuum(analytic_steady_state(in, m), m.alpha_ss());
    CHECK(r.no_photon_probability == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(max_abs(r.conditional_state.matrix() - in.matrix()) < 1e-12);
    CHECK(r.conditional_state.trace() == doctest::Approx(1.0).epsilon(1e-12));
    // Coherences between the u = 1 and u = -1 sectors vanish.
    const oracle::Mat u = oracle::kron(oracle::node_u_basis(), oracle::Mat::Identity(static_cast<Eigen::Index>(m.n_max + 1), static_cast<Eigen::Index>(m.n_max + 1)));
    const oracle::Mat inu = u.adjoint() * analytic_steady_state(zero_zero(), m).matrix() * u;
    const Eigen::Index c = static_cast<Eigen::Index>(m.n_max + 1);
    CHECK(inu.block(0, c, c, c).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("u-eigenstate drives the cavity to a coherent state") {
    const LindbladModel m = make_model(0.5, 1.0);
    EvolveReport rep;
    const DensityOperator out = evolve_node(m, plus_plus(), 20.0, {}, &rep);
    const int nc = static_cast<int>(m.n_max);
    const oracle::Mat expected =
        oracle::kron(oracle::proj(oracle::node_u_basis().col(0)), oracle::proj(coherent(-m.alpha_ss(), nc)));
    CHECK(trace_distance(out.matrix(), expected) < 1e-4);
    CHECK(rep.max_trace_drift < 1e-8);
    CHECK(rep.min_eigenvalue > -1e-7);
    CHECK(rep.max_tail_population < 1e-6);
}

TEST_CASE("numeric steady state against the analytic form") {
    const LindbladModel m = make_model(1.0, 1.0);
    const DensityOperator num = evolve_node(m, zero_zero(), 20.0);
    const DensityOperator ana = analytic_steady_state(zero_zero(), m);
    CHECK(trace_distance(num.matrix(), ana.matrix()) < 1e-4);
    const SteadyStateResult c = condition_on_vacuum(ana, m.alpha_ss());
    // |00> has weight 1/4 on each u state; only u = 0 states and damped |++>, |--> survive.
    CHECK(c.no_photon_probability == doctest::Approx(0.5 + 0.5 * std::exp(-4.0)).epsilon(1e-9));
}

TEST_CASE("weak coupling is rejected by the analytic steady state") {
    const LindbladModel m = make_model(0.1, 1.0);
    try {
        analytic_steady_state(zero_zero(), m);
        FAIL("expected a threshold error");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::ThresholdViolation);
    }
}

TEST_CASE("a too small Fock cutoff is detected") {
    const LindbladModel m = make_model(2.0, 1.0, 4);
    try {
        evolve_node(m, plus_plus(), 5.0);
        FAIL("expected a truncation error");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::TruncationOverflow);
    }
}

TEST_CASE("node maps") {
    const NodeMap a = analytic_node_map(2.0);
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            const double expected = oracle::kU[i] == oracle::kU[j] ? std::exp(-2.0 * oracle::kU[i] * oracle::kU[j]) : 0.0;
            CHECK(std::abs(a.m(i, j) - Complex(expected)) < 1e-15);
        }
    }
    const NodeMap n = numeric_node_map(make_model(1.0, 1.0), 20.0);
    const NodeMap b = analytic_node_map(4.0);
    CHECK((n.m - b.m).cwiseAbs().maxCoeff() < 1e-4);
}

TEST_CASE("sequential fusion at finite amplitude") {
    for (double alpha_sq : {1.0, 4.0, 9.0}) {
        const LindbladModel m = make_model(0.5 * std::sqrt(alpha_sq), 1.0);
        for (double f : {0.6, 0.75, 0.9}) {
            const oracle::Mat raw = oracle::conditioned_fusion(f, alpha_sq);
            const double p = raw.trace().real();
            const FusionResult r = sequential_fusion(f, m);
            CHECK(r.probability == doctest::Approx(p).epsilon(1e-12));
            CHECK(max_abs(r.state.matrix() - raw / p) < 1e-12);
        }
    }
    const FusionResult big = sequential_fusion(0.75, make_model(2.0, 1.0));
    CHECK(trace_distance(big.state.matrix(), fused_state_appB(0.75).matrix()) < 1e-3);
}

TEST_CASE("joint two-node evolution equals node-by-node maps") {
    const LindbladModel m = make_model(0.125, 1.0, 4);
    const double t = 2.5;
    const FusionResult joint = joint_fusion(0.8, m, t);
    const NodeMap map = numeric_node_map(m, t);
    const FusionResult seq = sequential_fusion(0.8, map, map);
    CHECK(trace_distance(joint.state.matrix(), seq.state.matrix()) < 1e-10);
    CHECK(joint.probability == doctest::Approx(seq.probability).epsilon(1e-10));
}
