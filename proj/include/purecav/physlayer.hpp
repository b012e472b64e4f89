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


// Full three-level atom-cavity-laser models, their effective reductions, and the
// entanglement-distribution fidelity.
//
// Level order of each atom: 0 = |0>, 1 = |1>, 2 = |e>. Full-model layout: atoms then cavity.

#ifndef PURECAV_PHYSLAYER_HPP
#define PURECAV_PHYSLAYER_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "purecav/qcore.hpp"
#include "purecav/spinchain.hpp"
#include "purecav/states.hpp"

namespace purecav {

struct DriveParams {
    double g = 1.0;
    double omega = 1.0;
    double delta = 1.0;
    double delta_l = 0.0;
    double delta_c = 0.0;
    double w0 = 0.0;
    double w1 = 0.0;
    double we = 0.0;
    double wl = 0.0;
    double wp = 0.0;
    double wc = 0.0;
};

/// Two-atom setup with Delta_L = Delta_C = -Delta.
DriveParams appendix_a_params(double g, double omega, double delta);

/// Three-atom setup with Delta = Delta_L - Delta_C.
DriveParams appendix_c_params(double g, double omega, double delta_l, double delta);

/// H(t) = D + exp(iKt) W exp(-iKt) with D and K diagonal.
struct TimeDependentHamiltonian {
    ComplexMatrix diagonal;
    ComplexMatrix coupling;
    RealVector frame;
    Dims dims;

    ComplexMatrix at(double t) const;
    /// Time-independent generator D + W + K of the co-rotating state exp(-iKt) psi(t).
    ComplexMatrix rotating_generator() const;
};

struct FullModel {
    TimeDependentHamiltonian hamiltonian;
    std::size_t atoms;
    std::size_t n_max;
};

FullModel full_hamiltonian_A(const DriveParams &p, std::size_t n_max);
FullModel full_hamiltonian_C(const DriveParams &p, std::size_t n_max);

double j2_from(const DriveParams &p);
double j3_from(const DriveParams &p);

/// Effective dynamics on qubits, optionally with the cavity mode (n_max > 0).
struct EffectiveModel {
    ComplexMatrix h;
    std::size_t atoms;
    std::size_t n_max;
};

/// (J2/2)(a + a^dag)(X1 + X2) with J2 = g Omega / (4 Delta).
EffectiveModel effective_A(const DriveParams &p, std::size_t n_max);

/// effective_A plus the commuting single-atom term (Omega^2 / (4 Delta)) (X1 + X2).
EffectiveModel effective_A_comparator(const DriveParams &p, std::size_t n_max);

/// XY ring with J3 = g^2 Omega^2 / (16 Delta_L^2 Delta).
XYRingHamiltonian effective_C(const DriveParams &p);

struct VerificationReport {
    DriveParams params;
    double gate_time = 0.0;
    double trace_distance = 0.0;
    double excited_population_max = 0.0;
    double leakage = 0.0;  // population outside the qubit subspace at the final time
};

struct VerifyOptions {
    enum class Method { Exact, Rk4 };
    Method method = Method::Exact;
    double dt = 0.0;  // RK4 step; 0 selects 0.02 / (largest |frame| or coupling scale)
    int samples = 2000;
    double norm_tolerance = 1e-6;
};

/// Evolves psi0 (qubits, cavity in vacuum) under both models and compares atom states.
VerificationReport verify_effective(const FullModel &full, const EffectiveModel &eff, const Ket &psi0, double t,
                                    const VerifyOptions &opt = {});

struct LadderRow {
    double multiplier;
    VerificationReport report;
};

struct LadderResult {
    std::vector<LadderRow> rows;
    std::vector<std::string> warnings;
    bool distances_decreasing = false;
    bool excitation_decreasing = false;
};

inline constexpr double kStrongDrivingRatio = 10.0;

/// Base g = 1, Omega = 40, Delta = 400 with Delta scaled; T = 1 / J2; |00> start.
DriveParams default_params_A();
/// Base g = Omega = 1, Delta_L = 20, Delta = 10 with both detunings scaled; T = gate_time(0, J3); |100> start.
DriveParams default_params_C();

LadderResult ladder_A(const DriveParams &base, const std::vector<double> &multipliers, std::size_t n_max = 20);
LadderResult ladder_C(const DriveParams &base, const std::vector<double> &multipliers, std::size_t n_max = 3);

/// (1 + exp(-(1 - eta) alpha^2 (1 - cos theta))) / 2.
double distribution_fidelity(double eta, double alpha_sq, double theta);
BellDiagonalPair distribution_pair(double eta, double alpha_sq, double theta);

}  // namespace purecav

#endif
