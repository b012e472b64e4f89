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


// Fusion block: two driven atoms in a decaying cavity, vacuum conditioning, and the
// two-node sequential procedure that yields the fused four-qubit state.
//
// Single-node layout: (atom 1, atom 2, cavity) with the cavity truncated at n_max photons.

#ifndef PURECAV_FUSION_HPP
#define PURECAV_FUSION_HPP

#include <array>
#include <cstddef>
#include <vector>

#include <Eigen/SparseCore>

#include "purecav/qcore.hpp"

namespace purecav {

using SparseMatrix = Eigen::SparseMatrix<Complex, Eigen::RowMajor>;
using RowMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

inline constexpr double kDefaultStrongRatio = 0.5;

struct LindbladModel {
    double j2 = 1.0;
    double kappa = 1.0;
    std::size_t n_max = 0;

    Complex alpha_ss() const;
    /// j2 / kappa; the fusion analysis assumes it is not small.
    double strong_ratio() const {
        return j2 / kappa;
    }
};

/// ceil(|a|^2 + 6|a| + 4).
std::size_t default_fock_cutoff(double alpha_abs);

/// Validated model; n_max = 0 selects default_fock_cutoff(|alpha_ss|).
LindbladModel make_model(double j2, double kappa, std::size_t n_max = 0);

/// Cavity annihilation operator on {0..n_max}.
ComplexMatrix annihilation(std::size_t n_max);

/// Normalized coherent state truncated to {0..n_max}.
ComplexVector coherent_state(Complex alpha, std::size_t n_max);

/// (J2/2)(a + a^dag)(X1 + X2) on (atom, atom, cavity).
ComplexMatrix build_fusion_hamiltonian(double j2, std::size_t n_max);

/// Generic Lindblad generator: -i[H, rho] + sum_c (c rho c^dag - {c^dag c, rho}/2).
class LindbladSystem {
   public:
    LindbladSystem(SparseMatrix h, std::vector<SparseMatrix> collapse, Dims dims, std::vector<std::size_t> modes);

    /// out = L(rho) for Hermitian rho.
    void rhs(const RowMatrix &rho, RowMatrix &out) const;
    ComplexMatrix rhs(const ComplexMatrix &rho) const;
    const Dims &dims() const {
        return dims_;
    }
    /// Largest population on the top Fock level of any monitored mode.
    double tail_population(const ComplexMatrix &rho) const;

   private:
    SparseMatrix h_;
    std::vector<SparseMatrix> collapse_;
    SparseMatrix drift_;  // -iH - (1/2) sum c^dag c
    mutable RowMatrix work_a_;
    mutable RowMatrix work_b_;
    Dims dims_;
    std::vector<std::size_t> modes_;
};

struct EvolveOptions {
    /// Fixed step; 0 selects min(0.01/kappa, 0.01/j2) style defaults from the caller.
    double dt = 0.0;
    bool richardson = false;
    double tail_tolerance = 1e-6;
    double trace_tolerance = 1e-8;
    double positivity_tolerance = -1e-7;
    int checkpoints = 20;
};

struct EvolveReport {
    double dt = 0.0;
    std::size_t steps = 0;
    double max_trace_drift = 0.0;
    double min_eigenvalue = 0.0;
    double max_tail_population = 0.0;
    double richardson_error = 0.0;
    double residual = 0.0;  // max |L rho| at the final time
};

/// Fixed-step RK4. Throws TruncationOverflow, NumericalInstability on checkpoint failures.
ComplexMatrix evolve(const LindbladSystem &sys, const ComplexMatrix &rho0, double t_final, double dt,
                     const EvolveOptions &opt = {}, EvolveReport *report = nullptr);

LindbladSystem single_node_system(const LindbladModel &m);

/// Two independent nodes on (1A, 2A, 1B, 2B, cavity A, cavity B).
LindbladSystem joint_system(const LindbladModel &m);

double default_step(const LindbladModel &m);

/// Evolves an atom state with the cavity in vacuum.
DensityOperator evolve_node(const LindbladModel &m, const DensityOperator &atoms, double t_final,
                            const EvolveOptions &opt = {}, EvolveReport *report = nullptr);

/// Integrates to kappa t = 20, then continues until max |L rho| < tol (kappa t <= 60).
DensityOperator evolve_to_steady_state(const LindbladModel &m, const DensityOperator &atoms, double tol = 1e-6,
                                       EvolveReport *report = nullptr);

/// u-basis of one node: |++>, |-->, |+->, |-+> with X1 + X2 eigenvalues 2u.
ComplexMatrix u_basis();
inline constexpr std::array<int, 4> kU{1, -1, 0, 0};

/// Steady state sum rho_ij delta(u_i,u_j) |u_i><u_j| (x) |-u_i a><-u_j a|.
DensityOperator analytic_steady_state(const DensityOperator &atoms, const LindbladModel &m,
                                      double min_ratio = kDefaultStrongRatio);

struct SteadyStateResult {
    DensityOperator conditional_state;
    double no_photon_probability;
    Complex alpha_ss;
};

/// <vac| rho |vac> on the last subsystem, normalized.
SteadyStateResult condition_on_vacuum(const DensityOperator &state, Complex alpha_ss = 0.0);

/// Multipliers m_ij acting on u-basis elements of a node's atoms after vacuum conditioning.
struct NodeMap {
    Eigen::Matrix4cd m;
};

/// delta(u_i,u_j) exp(-|a|^2 u_i u_j).
NodeMap analytic_node_map(double alpha_sq);

/// The same multipliers read off a numeric evolution to time t.
NodeMap numeric_node_map(const LindbladModel &m, double t_final, const EvolveOptions &opt = {},
                         EvolveReport *report = nullptr);

/// Applies a node map to qubits (0,1) when node == 0, or (2,3) when node == 1, of a 16x16 matrix.
ComplexMatrix apply_node_map(const ComplexMatrix &rho, const NodeMap &map, int node);

struct FusionResult {
    DensityOperator state;  // (1A, 2A, 1B, 2B)
    double probability;
};

/// Two separate pairs conditioned node by node with the given maps.
FusionResult sequential_fusion(double f, const NodeMap &node_a, const NodeMap &node_b);

/// Steady-state sequential fusion at amplitude |alpha_ss| of the model.
FusionResult sequential_fusion(double f, const LindbladModel &m);

/// Joint two-node evolution from separate pairs, both cavities conditioned on vacuum.
FusionResult joint_fusion(double f, const LindbladModel &m, double t_final, const EvolveOptions &opt = {},
                          EvolveReport *report = nullptr);

}  // namespace purecav

#endif
