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

// Named states of the protocol. Four-qubit states use the order (1A, 2A, 1B, 2B).

#ifndef PURECAV_STATES_HPP
#define PURECAV_STATES_HPP

#include "purecav/qcore.hpp"

namespace purecav {

/// A rank-two pair f Phi+ + (1-f) Phi-, above the purification threshold.
class BellDiagonalPair {
   public:
    explicit BellDiagonalPair(double f);

    double f() const {
        return f_;
    }
    DensityOperator state() const;

   private:
    double f_;
};

/// Permanent-pair state F Phi+ + (1-F) Phi- + G (|phi+><phi-| + h.c.).
struct PermanentState {
    double F = 1.0;
    double G = 0.0;
};

void require_above_threshold(double f);

DensityOperator rank_two_state(double f);

/// Cross coefficient (2f-1) / (2(1-2f+2f^2)) of the fused state.
double fused_cross_coefficient(double f);

/// Fused four-qubit state written with phi-/psi- pairs inside each node.
DensityOperator fused_state(double f);

/// The same state written with phi+/psi+ pairs across nodes (1A,1B), (2A,2B).
DensityOperator fused_state_appB(double f);

DensityOperator permanent_state(const PermanentState &p);

/// Extracts (Re <phi+|rho|phi+>, Re <phi+|rho|phi->).
PermanentState permanent_coefficients(const DensityOperator &rho);

/// Largest magnitude among Bell-basis elements outside the {Phi+, Phi-} diagonal.
double rank_two_deviation(const DensityOperator &rho);

/// The two-qubit state expressed in the Bell basis (phi+, phi-, psi+, psi-).
ComplexMatrix bell_basis_matrix(const ComplexMatrix &rho);

}  // namespace purecav

#endif
