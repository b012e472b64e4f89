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

// Dense complex linear algebra and quantum-state primitives.
//
// Subsystem convention: the list of subsystem dimensions is the tensor order, and the first
// subsystem is the most significant digit of a basis index. For qubits, |q0 q1 ...> maps to
// index q0*2^(n-1) + q1*2^(n-2) + ... .

#ifndef PURECAV_QCORE_HPP
#define PURECAV_QCORE_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace purecav {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Dims = std::vector<std::size_t>;

inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kPositivityTol = -1e-9;

std::size_t total_dimension(const Dims &dims);

bool is_hermitian(const ComplexMatrix &a, double tol = kHermitianTol);
bool is_unitary(const ComplexMatrix &a, double tol = kHermitianTol);

/// Largest element-wise magnitude of a.
double max_abs(const ComplexMatrix &a);

/// Kronecker product; the result's subsystem order is (a, b).
ComplexMatrix tensor(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexVector tensor(const ComplexVector &a, const ComplexVector &b);

/// Eigenvalues (ascending) of a Hermitian matrix.
RealVector hermitian_eigenvalues(const ComplexMatrix &h);
double min_eigenvalue(const ComplexMatrix &h);

/// exp(-i * scale * t * h) through the eigendecomposition of the Hermitian matrix h.
ComplexMatrix expm_hermitian(const ComplexMatrix &h, double t, double scale = 1.0);

/// Cached eigendecomposition for repeated exponentials of the same generator.
class HermitianPropagator {
   public:
    explicit HermitianPropagator(const ComplexMatrix &h);

    ComplexMatrix unitary(double t) const;
    ComplexVector apply(const ComplexVector &psi, double t) const;
    const RealVector &energies() const {
        return energies_;
    }
    const ComplexMatrix &eigenvectors() const {
        return vectors_;
    }

   private:
    RealVector energies_;
    ComplexMatrix vectors_;
};

/// A normalized or unnormalized state vector with its subsystem layout.
struct Ket {
    ComplexVector amplitudes;
    Dims dims;

    std::size_t dim() const {
        return static_cast<std::size_t>(amplitudes.size());
    }
    double norm() const {
        return amplitudes.norm();
    }
    bool is_normalized(double tol = 1e-12) const;

    /// Computational basis ket |digits> over the given subsystem dimensions.
    static Ket basis(const Dims &dims, std::span<const std::size_t> digits);
    static Ket from_amplitudes(ComplexVector amplitudes, Dims dims);
};

/// Density matrix with trace not pinned to one (conditional states before normalization).
class UnnormalizedDensity {
   public:
    UnnormalizedDensity(ComplexMatrix matrix, Dims dims);

    const ComplexMatrix &matrix() const {
        return matrix_;
    }
    const Dims &dims() const {
        return dims_;
    }
    double trace() const;

   private:
    ComplexMatrix matrix_;
    Dims dims_;
};

/// A physical density operator: Hermitian, unit trace, positive semidefinite.
class DensityOperator {
   public:
    /// Validates every invariant; throws purecav::Error on violation.
    DensityOperator(ComplexMatrix matrix, Dims dims);

    /// Normalizes by the trace first. Throws NullOutcome when the trace vanishes.
    static DensityOperator normalized(const UnnormalizedDensity &rho);
    static DensityOperator pure(const Ket &psi);

    const ComplexMatrix &matrix() const {
        return matrix_;
    }
    const Dims &dims() const {
        return dims_;
    }
    std::size_t dim() const {
        return static_cast<std::size_t>(matrix_.rows());
    }
    std::size_t subsystem_count() const {
        return dims_.size();
    }
    double trace() const;
    double purity() const;

    UnnormalizedDensity as_unnormalized() const {
        return UnnormalizedDensity(matrix_, dims_);
    }

   private:
    ComplexMatrix matrix_;
    Dims dims_;
};

DensityOperator tensor(const DensityOperator &a, const DensityOperator &b);

/// Reorders subsystems: position p of the result holds subsystem order[p] of the input.
ComplexMatrix permute_subsystems(const ComplexMatrix &m, const Dims &dims, std::span<const std::size_t> order);
DensityOperator permute_subsystems(const DensityOperator &rho, std::span<const std::size_t> order);

/// Partial trace keeping the listed subsystems (in their original relative order).
ComplexMatrix partial_trace(const ComplexMatrix &m, const Dims &dims, std::span<const std::size_t> keep);
DensityOperator partial_trace(const DensityOperator &rho, std::span<const std::size_t> keep);

/// Result of contracting selected subsystems with an outcome ket.
struct ProjectionResult {
    UnnormalizedDensity state;
    double probability;
    bool null_outcome;
};

/// <out| rho |out> on the subsystems `on` (ket digits follow the order of `on`).
ProjectionResult project(const UnnormalizedDensity &rho, const Ket &outcome, std::span<const std::size_t> on);
ProjectionResult project(const DensityOperator &rho, const Ket &outcome, std::span<const std::size_t> on);

/// 0.5 * ||a - b||_1 for Hermitian a, b.
double trace_distance(const ComplexMatrix &a, const ComplexMatrix &b);

namespace bell {
ComplexVector phi_plus();
ComplexVector phi_minus();
ComplexVector psi_plus();
ComplexVector psi_minus();
ComplexMatrix projector(const ComplexVector &v);
}  // namespace bell

/// Tr[Phi+ rho] for a two-qubit state.
double bell_fidelity(const DensityOperator &rho);

namespace pauli {
ComplexMatrix identity(std::size_t dim);
ComplexMatrix x();
ComplexMatrix y();
ComplexMatrix z();
/// Embeds a single-site operator at `site` of `sites` identical subsystems of dimension op.rows().
ComplexMatrix on_site(const ComplexMatrix &op, std::size_t site, std::size_t sites);
}  // namespace pauli

}  // namespace purecav

#endif
