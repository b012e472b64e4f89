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

#include "purecav/states.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "purecav/error.hpp"

namespace purecav {

namespace {

const Dims kTwoQubits{2, 2};
const Dims kFourQubits{2, 2, 2, 2};
constexpr std::array<std::size_t, 4> kCrossToNode{0, 2, 1, 3};

ComplexMatrix bell_columns() {
    ComplexMatrix b(4, 4);
    b.col(0) = bell::phi_plus();
    b.col(1) = bell::phi_minus();
    b.col(2) = bell::psi_plus();
    b.col(3) = bell::psi_minus();
    return b;
}

}  // namespace

void require_above_threshold(double f) {
    require(std::isfinite(f) && f > 0.5 && f <= 1.0, ErrorCode::ThresholdViolation,
            "pair fidelity " + std::to_string(f) + " is outside (0.5, 1]");
}

BellDiagonalPair::BellDiagonalPair(double f) : f_(f) {
    require_above_threshold(f);
}

DensityOperator BellDiagonalPair::state() const {
    return rank_two_state(f_);
}

DensityOperator rank_two_state(double f) {
    require_above_threshold(f);
    return permanent_state(PermanentState{f, 0.0});
}

double fused_cross_coefficient(double f) {
    return (2.0 * f - 1.0) / (2.0 * (1.0 - 2.0 * f + 2.0 * f * f));
}

DensityOperator fused_state(double f) {
    require_above_threshold(f);
    const ComplexVector a = tensor(bell::phi_minus(), bell::phi_minus());
    const ComplexVector b = tensor(bell::psi_minus(), bell::psi_minus());
    const double c = fused_cross_coefficient(f);
    ComplexMatrix m = 0.5 * (a * a.adjoint() + b * b.adjoint()) + c * (a * b.adjoint() + b * a.adjoint());
    return DensityOperator(std::move(m), kFourQubits);
}

DensityOperator fused_state_appB(double f) {
    require_above_threshold(f);
    const double norm = 2.0 - 4.0 * f + 4.0 * f * f;
    const ComplexVector pp = tensor(bell::phi_plus(), bell::phi_plus());
    const ComplexVector ss = tensor(bell::psi_plus(), bell::psi_plus());
    const ComplexVector pm = tensor(bell::phi_minus(), bell::phi_minus());
    const ComplexVector sm = tensor(bell::psi_minus(), bell::psi_minus());
    const ComplexMatrix plus = pp * pp.adjoint() + ss * ss.adjoint() - ss * pp.adjoint() - pp * ss.adjoint();
    const ComplexMatrix minus = pm * pm.adjoint() + sm * sm.adjoint() - sm * pm.adjoint() - pm * sm.adjoint();
    const ComplexMatrix cross = (f * f / norm) * plus + ((f - 1.0) * (f - 1.0) / norm) * minus;
    // Built in the order (1A, 1B, 2A, 2B); swap the middle qubits.
    return DensityOperator(permute_subsystems(cross, kFourQubits, kCrossToNode), kFourQubits);
}

DensityOperator permanent_state(const PermanentState &p) {
    require(p.F >= 0.0 && p.F <= 1.0, ErrorCode::InvalidArgument, "permanent-state weight outside [0, 1]");
    require(p.G * p.G <= p.F * (1.0 - p.F) + 1e-12, ErrorCode::NotPositive,
            "off-diagonal coefficient violates positivity");
    const ComplexVector a = bell::phi_plus();
    const ComplexVector b = bell::phi_minus();
    ComplexMatrix m = p.F * a * a.adjoint() + (1.0 - p.F) * b * b.adjoint() + p.G * (a * b.adjoint() + b * a.adjoint());
    return DensityOperator(std::move(m), kTwoQubits);
}

ComplexMatrix bell_basis_matrix(const ComplexMatrix &rho) {
    require(rho.rows() == 4 && rho.cols() == 4, ErrorCode::DimensionMismatch, "Bell basis needs a two-qubit matrix");
    const ComplexMatrix b = bell_columns();
    return b.adjoint() * rho * b;
}

PermanentState permanent_coefficients(const DensityOperator &rho) {
    const ComplexMatrix m = bell_basis_matrix(rho.matrix());
    return PermanentState{m(0, 0).real(), m(0, 1).real()};
}

double rank_two_deviation(const DensityOperator &rho) {
    const ComplexMatrix m = bell_basis_matrix(rho.matrix());
    double worst = 0.0;
    for (Eigen::Index i = 0; i < 4; ++i) {
        for (Eigen::Index j = 0; j < 4; ++j) {
            if (i != j || i >= 2) {
                worst = std::max(worst, std::abs(m(i, j)));
            }
        }
    }
    return worst;
}

}  // namespace purecav
