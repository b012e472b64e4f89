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

#include "purecav/spinchain.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include "purecav/error.hpp"

namespace purecav {

XYRingHamiltonian build_xy(double coupling) {
    require(std::isfinite(coupling) && coupling > 0.0, ErrorCode::InvalidArgument, "XY coupling must be positive");
    const std::size_t n = kRingSites;
    ComplexMatrix h = ComplexMatrix::Zero(8, 8);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = (i + 1) % n;
        h += pauli::on_site(pauli::x(), i, n) * pauli::on_site(pauli::x(), j, n);
        h += pauli::on_site(pauli::y(), i, n) * pauli::on_site(pauli::y(), j, n);
    }
    return XYRingHamiltonian{coupling, 0.5 * coupling * h};
}

double gate_time(int n, double coupling) {
    require(n >= 0, ErrorCode::InvalidArgument, "gate index must be nonnegative");
    require(coupling > 0.0, ErrorCode::InvalidArgument, "XY coupling must be positive");
    return (2.0 * std::numbers::pi / 3.0) * (n + 0.5) / coupling;
}

ComplexMatrix gate_unitary(const XYRingHamiltonian &h, int n) {
    return expm_hermitian(h.matrix, gate_time(n, h.coupling));
}

std::vector<double> analytic_spectrum(double coupling) {
    require(coupling > 0.0, ErrorCode::InvalidArgument, "XY coupling must be positive");
    const int n = static_cast<int>(kRingSites);
    std::vector<double> energies;
    // Occupation patterns over the three momenta; the boundary twist depends on fermion parity.
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        const int count = std::popcount(mask);
        const double shift = (count % 2 == 1) ? 0.0 : 0.5;
        double e = 0.0;
        for (int m = 0; m < n; ++m) {
            if (mask & (1u << m)) {
                e += 2.0 * coupling * std::cos(2.0 * std::numbers::pi * (m + shift) / n);
            }
        }
        energies.push_back(e);
    }
    std::sort(energies.begin(), energies.end());
    return energies;
}

ComplexMatrix composite_gate(const XYRingHamiltonian &ha, const XYRingHamiltonian &hb, int n) {
    require(ha.coupling == hb.coupling, ErrorCode::InvalidArgument, "composite gate needs equal couplings");
    const ComplexMatrix u = gate_unitary(ha, n);
    return tensor(u, u);
}

ComplexMatrix excitation_number(std::size_t sites) {
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << sites);
    ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
    for (Eigen::Index idx = 0; idx < dim; ++idx) {
        out(idx, idx) = static_cast<double>(std::popcount(static_cast<unsigned long>(idx)));
    }
    return out;
}

ComplexMatrix cyclic_shift(std::size_t sites) {
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << sites);
    ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
    for (Eigen::Index idx = 0; idx < dim; ++idx) {
        // bit of site s sits at position sites-1-s
        Eigen::Index img = 0;
        for (std::size_t s = 0; s < sites; ++s) {
            const auto bit = (idx >> (sites - 1 - s)) & 1;
            const std::size_t t = (s + 1) % sites;
            img |= bit << (sites - 1 - t);
        }
        out(img, idx) = 1.0;
    }
    return out;
}

}  // namespace purecav
