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

#include "purecav/qcore.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include <Eigen/Eigenvalues>

#include "purecav/error.hpp"

namespace purecav {

namespace {

// Strides of a mixed-radix index, most significant subsystem first.
std::vector<std::size_t> strides_of(const Dims &dims) {
    std::vector<std::size_t> s(dims.size(), 1);
    for (std::size_t i = dims.size(); i-- > 1;) {
        s[i - 1] = s[i] * dims[i];
    }
    return s;
}

void check_square(const ComplexMatrix &m, const Dims &dims) {
    require(m.rows() == m.cols(), ErrorCode::DimensionMismatch, "matrix is not square");
    require(static_cast<std::size_t>(m.rows()) == total_dimension(dims), ErrorCode::DimensionMismatch,
            "matrix size does not match subsystem dimensions");
}

void check_subset(std::span<const std::size_t> idx, std::size_t n, bool allow_empty) {
    require(allow_empty || !idx.empty(), ErrorCode::InvalidArgument, "empty subsystem set");
    std::vector<bool> seen(n, false);
    for (std::size_t i : idx) {
        require(i < n, ErrorCode::InvalidArgument, "subsystem index " + std::to_string(i) + " out of range");
        require(!seen[i], ErrorCode::InvalidArgument, "repeated subsystem index " + std::to_string(i));
        seen[i] = true;
    }
}

}  // namespace

std::size_t total_dimension(const Dims &dims) {
    return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

bool is_hermitian(const ComplexMatrix &a, double tol) {
    if (a.rows() != a.cols()) {
        return false;
    }
    return max_abs(a - a.adjoint()) <= tol;
}

bool is_unitary(const ComplexMatrix &a, double tol) {
    if (a.rows() != a.cols()) {
        return false;
    }
    return max_abs(a.adjoint() * a - ComplexMatrix::Identity(a.rows(), a.cols())) <= tol;
}

double max_abs(const ComplexMatrix &a) {
    return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

ComplexMatrix tensor(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

ComplexVector tensor(const ComplexVector &a, const ComplexVector &b) {
    ComplexVector out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        out.segment(i * b.size(), b.size()) = a(i) * b;
    }
    return out;
}

RealVector hermitian_eigenvalues(const ComplexMatrix &h) {
    require(is_hermitian(h), ErrorCode::NotHermitian, "eigenvalues requested for a non-Hermitian matrix");
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h, Eigen::EigenvaluesOnly);
    return es.eigenvalues();
}

double min_eigenvalue(const ComplexMatrix &h) {
    return hermitian_eigenvalues(h).minCoeff();
}

HermitianPropagator::HermitianPropagator(const ComplexMatrix &h) {
    require(is_hermitian(h), ErrorCode::NotHermitian, "generator is not Hermitian");
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
    energies_ = es.eigenvalues();
    vectors_ = es.eigenvectors();
}

ComplexMatrix HermitianPropagator::unitary(double t) const {
    ComplexVector phases(energies_.size());
    for (Eigen::Index k = 0; k < energies_.size(); ++k) {
        phases(k) = std::exp(Complex(0.0, -energies_(k) * t));
    }
    return vectors_ * phases.asDiagonal() * vectors_.adjoint();
}

ComplexVector HermitianPropagator::apply(const ComplexVector &psi, double t) const {
    ComplexVector c = vectors_.adjoint() * psi;
    for (Eigen::Index k = 0; k < energies_.size(); ++k) {
        c(k) *= std::exp(Complex(0.0, -energies_(k) * t));
    }
    return vectors_ * c;
}

ComplexMatrix expm_hermitian(const ComplexMatrix &h, double t, double scale) {
    return HermitianPropagator(h).unitary(scale * t);
}

bool Ket::is_normalized(double tol) const {
    return std::abs(norm() - 1.0) <= tol;
}

Ket Ket::basis(const Dims &dims, std::span<const std::size_t> digits) {
    require(digits.size() == dims.size(), ErrorCode::DimensionMismatch, "digit count does not match subsystems");
    std::size_t index = 0;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        require(digits[i] < dims[i], ErrorCode::InvalidArgument, "basis digit out of range");
        index = index * dims[i] + digits[i];
    }
    ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(total_dimension(dims)));
    v(static_cast<Eigen::Index>(index)) = 1.0;
    return Ket{std::move(v), dims};
}

Ket Ket::from_amplitudes(ComplexVector amplitudes, Dims dims) {
    require(static_cast<std::size_t>(amplitudes.size()) == total_dimension(dims), ErrorCode::DimensionMismatch,
            "amplitude count does not match subsystem dimensions");
    return Ket{std::move(amplitudes), std::move(dims)};
}

UnnormalizedDensity::UnnormalizedDensity(ComplexMatrix matrix, Dims dims)
    : matrix_(std::move(matrix)), dims_(std::move(dims)) {
    check_square(matrix_, dims_);
    require(is_hermitian(matrix_), ErrorCode::NotHermitian, "density matrix is not Hermitian");
}

double UnnormalizedDensity::trace() const {
    return matrix_.trace().real();
}

DensityOperator::DensityOperator(ComplexMatrix matrix, Dims dims) : matrix_(std::move(matrix)), dims_(std::move(dims)) {
    check_square(matrix_, dims_);
    require(is_hermitian(matrix_), ErrorCode::NotHermitian, "density matrix is not Hermitian");
    require(std::abs(trace() - 1.0) <= kTraceTol, ErrorCode::InvalidArgument,
            "density matrix trace " + std::to_string(trace()) + " differs from 1");
    // Symmetrize so later eigen-solvers see an exactly Hermitian input.
    matrix_ = 0.5 * (matrix_ + matrix_.adjoint()).eval();
    require(min_eigenvalue(matrix_) >= kPositivityTol, ErrorCode::NotPositive, "density matrix is not positive");
}

DensityOperator DensityOperator::normalized(const UnnormalizedDensity &rho) {
    const double tr = rho.trace();
    require(tr > 1e-300, ErrorCode::NullOutcome, "cannot normalize a state with vanishing trace");
    return DensityOperator(rho.matrix() / tr, rho.dims());
}

DensityOperator DensityOperator::pure(const Ket &psi) {
    require(psi.is_normalized(), ErrorCode::InvalidArgument, "ket is not normalized");
    return DensityOperator(psi.amplitudes * psi.amplitudes.adjoint(), psi.dims);
}

double DensityOperator::trace() const {
    return matrix_.trace().real();
}

double DensityOperator::purity() const {
    return (matrix_ * matrix_).trace().real();
}

DensityOperator tensor(const DensityOperator &a, const DensityOperator &b) {
    Dims dims = a.dims();
    dims.insert(dims.end(), b.dims().begin(), b.dims().end());
    return DensityOperator(tensor(a.matrix(), b.matrix()), std::move(dims));
}

ComplexMatrix permute_subsystems(const ComplexMatrix &m, const Dims &dims, std::span<const std::size_t> order) {
    check_square(m, dims);
    const std::size_t n = dims.size();
    require(order.size() == n, ErrorCode::InvalidArgument, "permutation length does not match subsystems");
    check_subset(order, n, true);

    Dims new_dims(n);
    for (std::size_t p = 0; p < n; ++p) {
        new_dims[p] = dims[order[p]];
    }
    const auto old_strides = strides_of(dims);
    const std::size_t total = total_dimension(dims);

    // map[new index] = old index
    std::vector<Eigen::Index> map(total);
    std::vector<std::size_t> digit(n, 0);
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t old = 0;
        for (std::size_t p = 0; p < n; ++p) {
            old += digit[p] * old_strides[order[p]];
        }
        map[idx] = static_cast<Eigen::Index>(old);
        for (std::size_t p = n; p-- > 0;) {
            if (++digit[p] < new_dims[p]) {
                break;
            }
            digit[p] = 0;
        }
    }
    ComplexMatrix out(m.rows(), m.cols());
    for (std::size_t c = 0; c < total; ++c) {
        for (std::size_t r = 0; r < total; ++r) {
            out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = m(map[r], map[c]);
        }
    }
    return out;
}

DensityOperator permute_subsystems(const DensityOperator &rho, std::span<const std::size_t> order) {
    Dims new_dims(order.size());
    for (std::size_t p = 0; p < order.size() && order[p] < rho.dims().size(); ++p) {
        new_dims[p] = rho.dims()[order[p]];
    }
    return DensityOperator(permute_subsystems(rho.matrix(), rho.dims(), order), std::move(new_dims));
}

ComplexMatrix partial_trace(const ComplexMatrix &m, const Dims &dims, std::span<const std::size_t> keep) {
    check_square(m, dims);
    const std::size_t n = dims.size();
    check_subset(keep, n, true);
    std::vector<std::size_t> kept(keep.begin(), keep.end());
    std::sort(kept.begin(), kept.end());
    std::vector<std::size_t> traced;
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::binary_search(kept.begin(), kept.end(), i)) {
            traced.push_back(i);
        }
    }
    // Bring kept subsystems to the front, then sum diagonal blocks of the traced part.
    std::vector<std::size_t> order = kept;
    order.insert(order.end(), traced.begin(), traced.end());
    const ComplexMatrix p = permute_subsystems(m, dims, order);
    std::size_t dk = 1;
    for (std::size_t i : kept) {
        dk *= dims[i];
    }
    const std::size_t dt = total_dimension(dims) / dk;
    ComplexMatrix out = ComplexMatrix::Zero(static_cast<Eigen::Index>(dk), static_cast<Eigen::Index>(dk));
    for (std::size_t i = 0; i < dk; ++i) {
        for (std::size_t j = 0; j < dk; ++j) {
            Complex s = 0.0;
            for (std::size_t k = 0; k < dt; ++k) {
                s += p(static_cast<Eigen::Index>(i * dt + k), static_cast<Eigen::Index>(j * dt + k));
            }
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = s;
        }
    }
    return out;
}

DensityOperator partial_trace(const DensityOperator &rho, std::span<const std::size_t> keep) {
    ComplexMatrix m = partial_trace(rho.matrix(), rho.dims(), keep);
    std::vector<std::size_t> kept(keep.begin(), keep.end());
    std::sort(kept.begin(), kept.end());
    Dims dims;
    for (std::size_t i : kept) {
        dims.push_back(rho.dims()[i]);
    }
    // Renormalize away round-off only; the trace is preserved analytically.
    const double tr = m.trace().real();
    return DensityOperator(m / tr, std::move(dims));
}

ProjectionResult project(const UnnormalizedDensity &rho, const Ket &outcome, std::span<const std::size_t> on) {
    const Dims &dims = rho.dims();
    const std::size_t n = dims.size();
    check_subset(on, n, false);
    require(outcome.dims.size() == on.size(), ErrorCode::DimensionMismatch,
            "outcome ket subsystem count does not match the selected subsystems");
    for (std::size_t p = 0; p < on.size(); ++p) {
        require(outcome.dims[p] == dims[on[p]], ErrorCode::DimensionMismatch,
                "outcome ket dimension does not match the selected subsystem");
    }
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < n; ++i) {
        if (std::find(on.begin(), on.end(), i) == on.end()) {
            rest.push_back(i);
        }
    }
    std::vector<std::size_t> order(on.begin(), on.end());
    order.insert(order.end(), rest.begin(), rest.end());
    const ComplexMatrix p = permute_subsystems(rho.matrix(), dims, order);
    const auto dsel = static_cast<Eigen::Index>(outcome.dim());
    const Eigen::Index drest = p.rows() / dsel;

    // <out| (x) I acting on the permuted matrix.
    ComplexMatrix left = ComplexMatrix::Zero(drest, p.cols());
    for (Eigen::Index a = 0; a < dsel; ++a) {
        const Complex c = std::conj(outcome.amplitudes(a));
        if (c != Complex(0.0)) {
            left += c * p.middleRows(a * drest, drest);
        }
    }
    ComplexMatrix out = ComplexMatrix::Zero(drest, drest);
    for (Eigen::Index b = 0; b < dsel; ++b) {
        const Complex c = outcome.amplitudes(b);
        if (c != Complex(0.0)) {
            out += c * left.middleCols(b * drest, drest);
        }
    }
    out = 0.5 * (out + out.adjoint()).eval();
    Dims rdims;
    for (std::size_t i : rest) {
        rdims.push_back(dims[i]);
    }
    if (rdims.empty()) {
        rdims.push_back(1);
    }
    const double prob = out.trace().real();
    return ProjectionResult{UnnormalizedDensity(std::move(out), std::move(rdims)), prob, !(prob > 1e-14)};
}

ProjectionResult project(const DensityOperator &rho, const Ket &outcome, std::span<const std::size_t> on) {
    return project(rho.as_unnormalized(), outcome, on);
}

double trace_distance(const ComplexMatrix &a, const ComplexMatrix &b) {
    require(a.rows() == b.rows() && a.cols() == b.cols(), ErrorCode::DimensionMismatch,
            "trace distance of matrices with different shapes");
    ComplexMatrix d = a - b;
    d = 0.5 * (d + d.adjoint()).eval();
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(d, Eigen::EigenvaluesOnly);
    return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

namespace bell {

namespace {
ComplexVector two(Complex a00, Complex a01, Complex a10, Complex a11) {
    ComplexVector v(4);
    v << a00, a01, a10, a11;
    return v / std::sqrt(2.0);
}
}  // namespace

ComplexVector phi_plus() {
    return two(1, 0, 0, 1);
}
ComplexVector phi_minus() {
    return two(1, 0, 0, -1);
}
ComplexVector psi_plus() {
    return two(0, 1, 1, 0);
}
ComplexVector psi_minus() {
    return two(0, 1, -1, 0);
}
ComplexMatrix projector(const ComplexVector &v) {
    return v * v.adjoint();
}

}  // namespace bell

double bell_fidelity(const DensityOperator &rho) {
    require(rho.dim() == 4, ErrorCode::DimensionMismatch, "Bell fidelity needs a two-qubit state");
    const ComplexVector p = bell::phi_plus();
    return (p.adjoint() * rho.matrix() * p)(0, 0).real();
}

namespace pauli {

ComplexMatrix identity(std::size_t dim) {
    return ComplexMatrix::Identity(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
}

ComplexMatrix x() {
    ComplexMatrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

ComplexMatrix y() {
    ComplexMatrix m(2, 2);
    m << 0, Complex(0, -1), Complex(0, 1), 0;
    return m;
}

ComplexMatrix z() {
    ComplexMatrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

ComplexMatrix on_site(const ComplexMatrix &op, std::size_t site, std::size_t sites) {
    require(site < sites, ErrorCode::InvalidArgument, "site index out of range");
    const auto d = static_cast<std::size_t>(op.rows());
    ComplexMatrix out = ComplexMatrix::Identity(1, 1);
    for (std::size_t s = 0; s < sites; ++s) {
        out = tensor(out, s == site ? op : identity(d));
    }
    return out;
}

}  // namespace pauli

}  // namespace purecav
