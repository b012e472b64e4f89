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

// The purification gate: a three-site periodic isotropic XY ring.

#ifndef PURECAV_SPINCHAIN_HPP
#define PURECAV_SPINCHAIN_HPP

#include <array>
#include <cstddef>
#include <vector>

#include "purecav/qcore.hpp"

namespace purecav {

inline constexpr std::size_t kRingSites = 3;

/// Which ring site carries each role (temporary 1, temporary 2, permanent).
struct SiteLayout {
    std::size_t temporary1 = 0;
    std::size_t temporary2 = 1;
    std::size_t permanent = 2;

    std::array<std::size_t, 3> sites() const {
        return {temporary1, temporary2, permanent};
    }
};

inline constexpr SiteLayout kDefaultLayout{};

struct XYRingHamiltonian {
    double coupling = 1.0;
    ComplexMatrix matrix;
};

/// (J/2) sum_i (X_i X_{i+1} + Y_i Y_{i+1}) with X_4 = X_1.
XYRingHamiltonian build_xy(double coupling);

/// Gate duration (2 pi / 3)(n + 1/2) / J. Every n gives the same swap-like map on the ring.
double gate_time(int n, double coupling);

ComplexMatrix gate_unitary(const XYRingHamiltonian &h, int n);

/// Eigenvalues from free fermions; sorted ascending.
std::vector<double> analytic_spectrum(double coupling);

/// U_A(T) (x) U_B(T) on (ring A, ring B).
ComplexMatrix composite_gate(const XYRingHamiltonian &ha, const XYRingHamiltonian &hb, int n);

/// sum_i (I - Z_i)/2 over the given number of qubits.
ComplexMatrix excitation_number(std::size_t sites);

/// Operator that cyclically relabels ring sites i -> i+1.
ComplexMatrix cyclic_shift(std::size_t sites);

}  // namespace purecav

#endif
