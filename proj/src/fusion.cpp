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


#include "purecav/fusion.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "purecav/error.hpp"
#include "purecav/purify.hpp"
#include "purecav/states.hpp"

namespace purecav {

namespace {

ComplexMatrix product_operator(const std::vector<ComplexMatrix> &factors) {
    ComplexMatrix out = ComplexMatrix::Identity(1, 1);
    for (const auto &f : factors) {
        out = tensor(out, f);
    }
    return out;
}

SparseMatrix sparse(const ComplexMatrix &m) {
    return m.sparseView(Complex(1.0), 1e-300);
}

ComplexMatrix vacuum_projector(std::size_t n_max) {
    ComplexMatrix p = ComplexMatrix::Zero(static_cast<Eigen::Index>(n_max + 1), static_cast<Eigen::Index>(n_max + 1));
    p(0, 0) = 1.0;
    return p;
}

// Orthonormal u-basis columns in the computational basis of two qubits.
ComplexMatrix make_u_basis() {
    const double s = 1.0 / std::sqrt(2.0);
    ComplexVector plus(2);
    plus << s, s;
    ComplexVector minus(2);
    minus << s, -s;
    ComplexMatrix u(4, 4);
    u.col(0) = tensor(plus, plus);
    u.col(1) = tensor(minus, minus);
    u.col(2) = tensor(plus, minus);
    u.col(3) = tensor(minus, plus);
    return u;
}

}  // namespace

Complex LindbladModel::alpha_ss() const {
    return Complex(0.0, 2.0 * j2 / kappa);
}

std::size_t default_fock_cutoff(double alpha_abs) {
    return static_cast<std::size_t>(std::ceil(alpha_abs * alpha_abs + 6.0 * alpha_abs + 4.0));
}

LindbladModel make_model(double j2, double kappa, std::size_t n_max) {
    require(std::isfinite(j2) && j2 > 0.0, ErrorCode::InvalidArgument, "j2 must be positive");
    require(std::isfinite(kappa) && kappa > 0.0, ErrorCode::InvalidArgument, "kappa must be positive");
    LindbladModel m{j2, kappa, n_max};
    if (m.n_max == 0) {
        m.n_max = default_fock_cutoff(std::abs(m.alpha_ss()));
    }
    return m;
}

ComplexMatrix annihilation(std::size_t n_max) {
    require(n_max >= 1, ErrorCode::InvalidArgument, "Fock cutoff must be at least 1");
    const auto d = static_cast<Eigen::Index>(n_max + 1);
    ComplexMatrix a = ComplexMatrix::Zero(d, d);
    for (Eigen::Index n = 1; n < d; ++n) {
        a(n - 1, n) = std::sqrt(static_cast<double>(n));
    }
    return a;
}

ComplexVector coherent_state(Complex alpha, std::size_t n_max) {
    const auto d = static_cast<Eigen::Index>(n_max + 1);
    ComplexVector v(d);
    v(0) = 1.0;
    for (Eigen::Index n = 1; n < d; ++n) {
        v(n) = v(n - 1) * alpha / std::sqrt(static_cast<double>(n));
    }
    return v / v.norm();
}

ComplexMatrix build_fusion_hamiltonian(double j2, std::size_t n_max) {
    const ComplexMatrix a = annihilation(n_max);
    const ComplexMatrix i2 = pauli::identity(2);
    const ComplexMatrix sx = tensor(pauli::x(), i2) + tensor(i2, pauli::x());
    return 0.5 * j2 * tensor(sx, ComplexMatrix(a + a.adjoint()));
}

LindbladSystem::LindbladSystem(SparseMatrix h, std::vector<SparseMatrix> collapse, Dims dims,
                               std::vector<std::size_t> modes)
    : h_(std::move(h)), collapse_(std::move(collapse)), dims_(std::move(dims)), modes_(std::move(modes)) {
    const auto d = static_cast<Eigen::Index>(total_dimension(dims_));
    require(h_.rows() == d && h_.cols() == d, ErrorCode::DimensionMismatch, "Hamiltonian does not match dims");
    SparseMatrix decay(d, d);
    for (const auto &c : collapse_) {
        require(c.rows() == d && c.cols() == d, ErrorCode::DimensionMismatch, "collapse operator does not match dims");
        const SparseMatrix cd = c.adjoint();
        decay = SparseMatrix(decay + SparseMatrix(cd * c));
    }
    drift_ = SparseMatrix(Complex(0.0, -1.0) * h_ - Complex(0.5) * decay);
    drift_.makeCompressed();
    for (std::size_t m : modes_) {
        require(m < dims_.size(), ErrorCode::InvalidArgument, "mode index out of range");
    }
}

namespace {

// out = s * x, row by row so each update is a contiguous axpy.
void sparse_times(const SparseMatrix &s, const RowMatrix &x, RowMatrix &out) {
    out.setZero(s.rows(), x.cols());
    for (Eigen::Index i = 0; i < s.outerSize(); ++i) {
        for (SparseMatrix::InnerIterator it(s, i); it; ++it) {
            out.row(i) += it.value() * x.row(it.col());
        }
    }
}

}  // namespace

void LindbladSystem::rhs(const RowMatrix &rho, RowMatrix &out) const {
    sparse_times(drift_, rho, work_a_);
    out = work_a_ + work_a_.adjoint();
    for (const auto &c : collapse_) {
        sparse_times(c, rho, work_a_);
        work_b_ = work_a_.adjoint();
        sparse_times(c, work_b_, work_a_);
        out += work_a_.adjoint();
    }
}

ComplexMatrix LindbladSystem::rhs(const ComplexMatrix &rho) const {
    RowMatrix out;
    rhs(RowMatrix(rho), out);
    return ComplexMatrix(out);
}

double LindbladSystem::tail_population(const ComplexMatrix &rho) const {
    double worst = 0.0;
    const std::size_t total = total_dimension(dims_);
    for (std::size_t mode : modes_) {
        std::size_t stride = 1;
        for (std::size_t s = mode + 1; s < dims_.size(); ++s) {
            stride *= dims_[s];
        }
        const std::size_t top = dims_[mode] - 1;
        double pop = 0.0;
        for (std::size_t idx = 0; idx < total; ++idx) {
            if ((idx / stride) % dims_[mode] == top) {
                pop += rho(static_cast<Eigen::Index>(idx), static_cast<Eigen::Index>(idx)).real();
            }
        }
        worst = std::max(worst, pop);
    }
    return worst;
}

namespace {

RowMatrix rk4_run(const LindbladSystem &sys, const RowMatrix &rho0, double t_final, double dt,
                  const EvolveOptions &opt, EvolveReport &rep) {
    const auto steps = static_cast<std::size_t>(std::max(1.0, std::ceil(t_final / dt - 1e-9)));
    const double h = t_final / static_cast<double>(steps);
    const std::size_t every = std::max<std::size_t>(1, steps / static_cast<std::size_t>(std::max(1, opt.checkpoints)));
    const double tr0 = rho0.trace().real();
    rep.dt = h;
    rep.steps = steps;
    rep.min_eigenvalue = min_eigenvalue(ComplexMatrix(rho0));
    RowMatrix rho = rho0;
    RowMatrix k, acc, stage;
    for (std::size_t s = 1; s <= steps; ++s) {
        sys.rhs(rho, k);
        acc = k;
        stage = rho + (0.5 * h) * k;
        sys.rhs(stage, k);
        acc += 2.0 * k;
        stage = rho + (0.5 * h) * k;
        sys.rhs(stage, k);
        acc += 2.0 * k;
        stage = rho + h * k;
        sys.rhs(stage, k);
        acc += k;
        rho += (h / 6.0) * acc;
        if (s % every == 0 || s == steps) {
            rho = 0.5 * (rho + rho.adjoint()).eval();
            require(rho.allFinite(), ErrorCode::NumericalInstability, "Lindblad integration diverged");
            const ComplexMatrix snapshot(rho);
            const double drift = std::abs(snapshot.trace().real() - tr0);
            rep.max_trace_drift = std::max(rep.max_trace_drift, drift);
            require(drift <= opt.trace_tolerance, ErrorCode::NumericalInstability,
                    "trace drift " + std::to_string(drift) + " exceeds tolerance");
            const double tail = sys.tail_population(snapshot);
            rep.max_tail_population = std::max(rep.max_tail_population, tail);
            require(tail <= opt.tail_tolerance, ErrorCode::TruncationOverflow,
                    "top Fock level population " + std::to_string(tail) + " exceeds tolerance; raise n_max");
            const double ev = min_eigenvalue(snapshot);
            rep.min_eigenvalue = std::min(rep.min_eigenvalue, ev);
            require(ev >= opt.positivity_tolerance, ErrorCode::NumericalInstability,
                    "state lost positivity during integration");
        }
    }
    return rho;
}

}  // namespace

ComplexMatrix evolve(const LindbladSystem &sys, const ComplexMatrix &rho0, double t_final, double dt,
                     const EvolveOptions &opt, EvolveReport *report) {
    require(t_final >= 0.0 && std::isfinite(t_final), ErrorCode::InvalidArgument, "final time must be nonnegative");
    require(dt > 0.0, ErrorCode::InvalidArgument, "step must be positive");
    const auto d = static_cast<Eigen::Index>(total_dimension(sys.dims()));
    require(rho0.rows() == d && rho0.cols() == d, ErrorCode::DimensionMismatch, "initial state does not match system");
    EvolveReport rep;
    if (t_final == 0.0) {
        if (report != nullptr) {
            *report = rep;
        }
        return rho0;
    }
    const RowMatrix start(rho0);
    RowMatrix rho = rk4_run(sys, start, t_final, dt, opt, rep);
    if (opt.richardson) {
        EvolveReport fine;
        RowMatrix half = rk4_run(sys, start, t_final, 0.5 * rep.dt, opt, fine);
        rep.richardson_error = ComplexMatrix(half - rho).cwiseAbs().maxCoeff();
        rep.dt = fine.dt;
        rep.steps = fine.steps;
        rho = std::move(half);
    }
    RowMatrix l;
    sys.rhs(rho, l);
    rep.residual = ComplexMatrix(l).cwiseAbs().maxCoeff();
    if (report != nullptr) {
        *report = rep;
    }
    return ComplexMatrix(rho);
}

LindbladSystem single_node_system(const LindbladModel &m) {
    const Dims dims{2, 2, m.n_max + 1};
    const ComplexMatrix a = tensor(pauli::identity(4), annihilation(m.n_max));
    return LindbladSystem(sparse(build_fusion_hamiltonian(m.j2, m.n_max)), {sparse(std::sqrt(m.kappa) * a)}, dims,
                          {2});
}

LindbladSystem joint_system(const LindbladModel &m) {
    const std::size_t c = m.n_max + 1;
    const Dims dims{2, 2, 2, 2, c, c};
    const ComplexMatrix i2 = pauli::identity(2);
    const ComplexMatrix ic = pauli::identity(c);
    const ComplexMatrix a = annihilation(m.n_max);
    const ComplexMatrix q = a + a.adjoint();
    const ComplexMatrix x = pauli::x();
    ComplexMatrix h = product_operator({x, i2, i2, i2, q, ic}) + product_operator({i2, x, i2, i2, q, ic}) +
                      product_operator({i2, i2, x, i2, ic, q}) + product_operator({i2, i2, i2, x, ic, q});
    h *= 0.5 * m.j2;
    const double rk = std::sqrt(m.kappa);
    std::vector<SparseMatrix> collapse{sparse(rk * product_operator({i2, i2, i2, i2, a, ic})),
                                       sparse(rk * product_operator({i2, i2, i2, i2, ic, a}))};
    return LindbladSystem(sparse(h), std::move(collapse), dims, {4, 5});
}

double default_step(const LindbladModel &m) {
    return std::min(0.01 / m.kappa, 0.01 / m.j2);
}

DensityOperator evolve_node(const LindbladModel &m, const DensityOperator &atoms, double t_final,
                            const EvolveOptions &opt, EvolveReport *report) {
    require(atoms.dim() == 4, ErrorCode::DimensionMismatch, "node atoms must be two qubits");
    const LindbladSystem sys = single_node_system(m);
    const ComplexMatrix rho0 = tensor(atoms.matrix(), vacuum_projector(m.n_max));
    const double dt = opt.dt > 0.0 ? opt.dt : default_step(m);
    ComplexMatrix rho = evolve(sys, rho0, t_final, dt, opt, report);
    return DensityOperator(rho / rho.trace().real(), sys.dims());
}

DensityOperator evolve_to_steady_state(const LindbladModel &m, const DensityOperator &atoms, double tol,
                                       EvolveReport *report) {
    const LindbladSystem sys = single_node_system(m);
    const double dt = default_step(m);
    EvolveOptions opt;
    EvolveReport rep;
    ComplexMatrix rho = evolve(sys, tensor(atoms.matrix(), vacuum_projector(m.n_max)), 20.0 / m.kappa, dt, opt, &rep);
    double kt = 20.0;
    while (rep.residual >= tol && kt < 60.0) {
        EvolveReport more;
        rho = evolve(sys, rho, 5.0 / m.kappa, dt, opt, &more);
        rep.steps += more.steps;
        rep.max_trace_drift = std::max(rep.max_trace_drift, more.max_trace_drift);
        rep.max_tail_population = std::max(rep.max_tail_population, more.max_tail_population);
        rep.min_eigenvalue = std::min(rep.min_eigenvalue, more.min_eigenvalue);
        rep.residual = more.residual;
        kt += 5.0;
    }
    require(rep.residual < tol, ErrorCode::NumericalInstability, "no steady state reached by kappa t = 60");
    if (report != nullptr) {
        *report = rep;
    }
    return DensityOperator(rho / rho.trace().real(), sys.dims());
}

ComplexMatrix u_basis() {
    static const ComplexMatrix u = make_u_basis();
    return u;
}

DensityOperator analytic_steady_state(const DensityOperator &atoms, const LindbladModel &m, double min_ratio) {
    require(atoms.dim() == 4, ErrorCode::DimensionMismatch, "node atoms must be two qubits");
    require(m.strong_ratio() >= min_ratio, ErrorCode::ThresholdViolation,
            "j2/kappa below the strong-coupling minimum");
    const ComplexMatrix ub = u_basis();
    const ComplexMatrix r = ub.adjoint() * atoms.matrix() * ub;
    const Complex alpha = m.alpha_ss();
    std::array<ComplexVector, 4> field;
    for (std::size_t i = 0; i < 4; ++i) {
        field[i] = coherent_state(-static_cast<double>(kU[i]) * alpha, m.n_max);
    }
    const auto dc = static_cast<Eigen::Index>(m.n_max + 1);
    ComplexMatrix out = ComplexMatrix::Zero(4 * dc, 4 * dc);
    for (Eigen::Index i = 0; i < 4; ++i) {
        for (Eigen::Index j = 0; j < 4; ++j) {
            if (kU[static_cast<std::size_t>(i)] != kU[static_cast<std::size_t>(j)]) {
                continue;
            }
            const ComplexMatrix atom = ub.col(i) * ub.col(j).adjoint();
            const ComplexMatrix cav = field[static_cast<std::size_t>(i)] * field[static_cast<std::size_t>(j)].adjoint();
            out += r(i, j) * tensor(atom, cav);
        }
    }
    return DensityOperator(std::move(out), Dims{2, 2, m.n_max + 1});
}

SteadyStateResult condition_on_vacuum(const DensityOperator &state, Complex alpha_ss) {
    const Dims &dims = state.dims();
    require(dims.size() >= 2, ErrorCode::DimensionMismatch, "conditioning needs atoms and a cavity");
    const std::size_t cav = dims.size() - 1;
    const std::array<std::size_t, 1> on{cav};
    const std::array<std::size_t, 1> digit{0};
    const ProjectionResult pr = project(state, Ket::basis(Dims{dims[cav]}, digit), on);
    require(!pr.null_outcome, ErrorCode::NullOutcome, "no-photon outcome has vanishing probability");
    return SteadyStateResult{DensityOperator::normalized(pr.state), pr.probability, alpha_ss};
}

NodeMap analytic_node_map(double alpha_sq) {
    require(alpha_sq >= 0.0, ErrorCode::InvalidArgument, "|alpha|^2 must be nonnegative");
    NodeMap map{Eigen::Matrix4cd::Zero()};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            if (kU[static_cast<std::size_t>(i)] == kU[static_cast<std::size_t>(j)]) {
                const double uu = kU[static_cast<std::size_t>(i)] * kU[static_cast<std::size_t>(j)];
                map.m(i, j) = std::exp(-alpha_sq * uu);
            }
        }
    }
    return map;
}

NodeMap numeric_node_map(const LindbladModel &m, double t_final, const EvolveOptions &opt, EvolveReport *report) {
    // |00> is the uniform superposition of the u-basis, so every block is populated.
    const ComplexVector zero = Ket::basis(Dims{2, 2}, std::array<std::size_t, 2>{0, 0}).amplitudes;
    const DensityOperator start(zero * zero.adjoint(), Dims{2, 2});
    const DensityOperator evolved = evolve_node(m, start, t_final, opt, report);
    const std::array<std::size_t, 1> on{2};
    const std::array<std::size_t, 1> digit{0};
    const ProjectionResult pr = project(evolved, Ket::basis(Dims{m.n_max + 1}, digit), on);
    const ComplexMatrix ub = u_basis();
    const ComplexMatrix r = ub.adjoint() * pr.state.matrix() * ub;
    return NodeMap{Eigen::Matrix4cd(4.0 * r)};
}

ComplexMatrix apply_node_map(const ComplexMatrix &rho, const NodeMap &map, int node) {
    require(rho.rows() == 16 && rho.cols() == 16, ErrorCode::DimensionMismatch, "node map needs a four-qubit matrix");
    require(node == 0 || node == 1, ErrorCode::InvalidArgument, "node must be 0 or 1");
    const ComplexMatrix ub = u_basis();
    const ComplexMatrix id = pauli::identity(4);
    const ComplexMatrix t = node == 0 ? tensor(ub, id) : tensor(id, ub);
    ComplexMatrix r = t.adjoint() * rho * t;
    for (Eigen::Index a = 0; a < 16; ++a) {
        for (Eigen::Index b = 0; b < 16; ++b) {
            const Eigen::Index i = node == 0 ? a / 4 : a % 4;
            const Eigen::Index j = node == 0 ? b / 4 : b % 4;
            r(a, b) *= map.m(i, j);
        }
    }
    return t * r * t.adjoint();
}

FusionResult sequential_fusion(double f, const NodeMap &node_a, const NodeMap &node_b) {
    const DensityOperator start = separate_pairs(f);
    ComplexMatrix r = apply_node_map(start.matrix(), node_a, 0);
    r = apply_node_map(r, node_b, 1);
    r = 0.5 * (r + r.adjoint()).eval();
    const double p = r.trace().real();
    require(p > 1e-300, ErrorCode::NullOutcome, "fusion has vanishing no-photon probability");
    return FusionResult{DensityOperator(r / p, Dims{2, 2, 2, 2}), p};
}

FusionResult sequential_fusion(double f, const LindbladModel &m) {
    const NodeMap map = analytic_node_map(std::norm(m.alpha_ss()));
    return sequential_fusion(f, map, map);
}

FusionResult joint_fusion(double f, const LindbladModel &m, double t_final, const EvolveOptions &opt,
                          EvolveReport *report) {
    const LindbladSystem sys = joint_system(m);
    const ComplexMatrix vac = vacuum_projector(m.n_max);
    const ComplexMatrix rho0 = tensor(separate_pairs(f).matrix(), tensor(vac, vac));
    const double dt = opt.dt > 0.0 ? opt.dt : default_step(m);
    const ComplexMatrix rho = evolve(sys, rho0, t_final, dt, opt, report);
    const UnnormalizedDensity evolved(0.5 * (rho + rho.adjoint()), sys.dims());
    const std::array<std::size_t, 2> on{4, 5};
    const std::array<std::size_t, 2> digits{0, 0};
    const ProjectionResult pr = project(evolved, Ket::basis(Dims{m.n_max + 1, m.n_max + 1}, digits), on);
    require(!pr.null_outcome, ErrorCode::NullOutcome, "fusion has vanishing no-photon probability");
    return FusionResult{DensityOperator::normalized(pr.state), pr.probability};
}

}  // namespace purecav
