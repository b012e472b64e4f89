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


#include "purecav/physlayer.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "purecav/error.hpp"
#include "purecav/fusion.hpp"

namespace purecav {

namespace {

constexpr std::size_t kLevels = 3;
constexpr std::size_t kExcited = 2;

ComplexMatrix level_op(std::size_t i, std::size_t j) {
    ComplexMatrix m = ComplexMatrix::Zero(kLevels, kLevels);
    m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = 1.0;
    return m;
}

// Operator on atom k of `atoms` three-level atoms, tensored with a cavity operator.
ComplexMatrix atom_cavity(const ComplexMatrix &atom_op, std::size_t k, std::size_t atoms, const ComplexMatrix &cav) {
    ComplexMatrix out = ComplexMatrix::Identity(1, 1);
    for (std::size_t s = 0; s < atoms; ++s) {
        out = tensor(out, s == k ? atom_op : pauli::identity(kLevels));
    }
    return tensor(out, cav);
}

double scale_of(double x) {
    return std::max(1.0, std::abs(x));
}

Dims full_dims(std::size_t atoms, std::size_t n_max) {
    Dims d(atoms, kLevels);
    d.push_back(n_max + 1);
    return d;
}

RealVector excited_frame(std::size_t atoms, std::size_t n_max, double rate) {
    const Dims dims = full_dims(atoms, n_max);
    const std::size_t total = total_dimension(dims);
    RealVector k(static_cast<Eigen::Index>(total));
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t rest = idx / (n_max + 1);
        int excited = 0;
        for (std::size_t s = 0; s < atoms; ++s) {
            excited += (rest % kLevels == kExcited) ? 1 : 0;
            rest /= kLevels;
        }
        k(static_cast<Eigen::Index>(idx)) = rate * excited;
    }
    return k;
}

struct AtomIndexing {
    std::vector<Eigen::Index> qubit_row;  // full index -> qubit basis index, or -1 outside the qubit subspace
    std::vector<Eigen::Index> photon;     // full index -> photon number
    std::vector<bool> excited;
};

AtomIndexing index_full(std::size_t atoms, std::size_t n_max) {
    const std::size_t c = n_max + 1;
    const std::size_t total = total_dimension(full_dims(atoms, n_max));
    AtomIndexing ix;
    ix.qubit_row.resize(total);
    ix.photon.resize(total);
    ix.excited.resize(total);
    for (std::size_t idx = 0; idx < total; ++idx) {
        ix.photon[idx] = static_cast<Eigen::Index>(idx % c);
        std::size_t rest = idx / c;
        std::vector<std::size_t> digits(atoms);
        for (std::size_t s = atoms; s-- > 0;) {
            digits[s] = rest % kLevels;
            rest /= kLevels;
        }
        bool any_e = false;
        Eigen::Index q = 0;
        for (std::size_t s = 0; s < atoms; ++s) {
            any_e = any_e || digits[s] == kExcited;
            q = 2 * q + static_cast<Eigen::Index>(digits[s] & 1u);
        }
        ix.excited[idx] = any_e;
        ix.qubit_row[idx] = any_e ? -1 : q;
    }
    return ix;
}

ComplexVector embed_qubits(const Ket &psi0, std::size_t atoms, std::size_t n_max) {
    const std::size_t total = total_dimension(full_dims(atoms, n_max));
    const AtomIndexing ix = index_full(atoms, n_max);
    ComplexVector out = ComplexVector::Zero(static_cast<Eigen::Index>(total));
    for (std::size_t idx = 0; idx < total; ++idx) {
        if (ix.qubit_row[idx] >= 0 && ix.photon[idx] == 0) {
            out(static_cast<Eigen::Index>(idx)) = psi0.amplitudes(ix.qubit_row[idx]);
        }
    }
    return out;
}

// Unnormalized atom state on the qubit subspace with the cavity traced out.
ComplexMatrix reduce_full(const ComplexVector &psi, const AtomIndexing &ix, std::size_t atoms, std::size_t n_max) {
    const auto q = static_cast<Eigen::Index>(std::size_t{1} << atoms);
    ComplexMatrix m = ComplexMatrix::Zero(q, static_cast<Eigen::Index>(n_max + 1));
    for (Eigen::Index idx = 0; idx < psi.size(); ++idx) {
        const auto i = static_cast<std::size_t>(idx);
        if (ix.qubit_row[i] >= 0) {
            m(ix.qubit_row[i], ix.photon[i]) = psi(idx);
        }
    }
    return m * m.adjoint();
}

double excited_population(const ComplexVector &psi, const AtomIndexing &ix) {
    double p = 0.0;
    for (Eigen::Index idx = 0; idx < psi.size(); ++idx) {
        if (ix.excited[static_cast<std::size_t>(idx)]) {
            p += std::norm(psi(idx));
        }
    }
    return p;
}

ComplexVector apply_frame(const ComplexVector &v, const RealVector &k, double t) {
    ComplexVector out(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        out(i) = std::exp(Complex(0.0, k(i) * t)) * v(i);
    }
    return out;
}

ComplexMatrix effective_reduced(const EffectiveModel &eff, const Ket &psi0, double t) {
    ComplexVector start = psi0.amplitudes;
    if (eff.n_max > 0) {
        ComplexVector vac = ComplexVector::Zero(static_cast<Eigen::Index>(eff.n_max + 1));
        vac(0) = 1.0;
        start = tensor(start, vac);
    }
    const ComplexVector psi = HermitianPropagator(eff.h).apply(start, t);
    if (eff.n_max == 0) {
        return psi * psi.adjoint();
    }
    const auto q = static_cast<Eigen::Index>(std::size_t{1} << eff.atoms);
    const auto c = static_cast<Eigen::Index>(eff.n_max + 1);
    ComplexMatrix m(q, c);
    for (Eigen::Index i = 0; i < q; ++i) {
        for (Eigen::Index n = 0; n < c; ++n) {
            m(i, n) = psi(i * c + n);
        }
    }
    return m * m.adjoint();
}

}  // namespace

DriveParams appendix_a_params(double g, double omega, double delta) {
    DriveParams p;
    p.g = g;
    p.omega = omega;
    p.delta = delta;
    p.delta_l = -delta;
    p.delta_c = -delta;
    return p;
}

DriveParams appendix_c_params(double g, double omega, double delta_l, double delta) {
    DriveParams p;
    p.g = g;
    p.omega = omega;
    p.delta = delta;
    p.delta_l = delta_l;
    p.delta_c = delta_l - delta;
    return p;
}

ComplexMatrix TimeDependentHamiltonian::at(double t) const {
    ComplexMatrix out = coupling;
    for (Eigen::Index i = 0; i < out.rows(); ++i) {
        for (Eigen::Index j = 0; j < out.cols(); ++j) {
            out(i, j) *= std::exp(Complex(0.0, (frame(i) - frame(j)) * t));
        }
    }
    return diagonal + out;
}

ComplexMatrix TimeDependentHamiltonian::rotating_generator() const {
    ComplexMatrix g = diagonal + coupling;
    g.diagonal() += frame.cast<Complex>();
    return g;
}

FullModel full_hamiltonian_A(const DriveParams &p, std::size_t n_max) {
    require(p.delta > 0.0, ErrorCode::InvalidArgument, "detuning Delta must be positive");
    require(p.wc == p.wp, ErrorCode::InvalidArgument, "cavity and probe frequencies must coincide");
    require(std::abs(p.delta_l + p.delta) <= 1e-12 * scale_of(p.delta) &&
                std::abs(p.delta_c + p.delta) <= 1e-12 * scale_of(p.delta),
            ErrorCode::InvalidArgument, "two-atom setup needs Delta_L = Delta_C = -Delta");
    require(n_max >= 1, ErrorCode::InvalidArgument, "Fock cutoff must be at least 1");
    const std::size_t atoms = 2;
    const ComplexMatrix a = annihilation(n_max);
    const ComplexMatrix ic = pauli::identity(n_max + 1);
    const std::size_t dim = total_dimension(full_dims(atoms, n_max));
    ComplexMatrix v = ComplexMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t k = 0; k < atoms; ++k) {
        v += (0.5 * p.g) * atom_cavity(level_op(kExcited, 0), k, atoms, a);
        v += (0.5 * p.omega) * atom_cavity(level_op(kExcited, 1) + level_op(kExcited, 0), k, atoms, ic);
    }
    v *= Complex(0.0, -1.0);
    TimeDependentHamiltonian h{ComplexMatrix::Zero(v.rows(), v.cols()), v + v.adjoint(),
                               excited_frame(atoms, n_max, -p.delta), full_dims(atoms, n_max)};
    return FullModel{std::move(h), atoms, n_max};
}

FullModel full_hamiltonian_C(const DriveParams &p, std::size_t n_max) {
    require(p.delta > 0.0, ErrorCode::InvalidArgument, "detuning Delta must be positive");
    require(p.delta_l != 0.0, ErrorCode::InvalidArgument, "laser detuning must be nonzero");
    require(std::abs(p.delta - (p.delta_l - p.delta_c)) <= 1e-12 * scale_of(p.delta_l),
            ErrorCode::InvalidArgument, "three-atom setup needs Delta = Delta_L - Delta_C");
    require(n_max >= 1, ErrorCode::InvalidArgument, "Fock cutoff must be at least 1");
    const std::size_t atoms = 3;
    const ComplexMatrix a = annihilation(n_max);
    const ComplexMatrix ic = pauli::identity(n_max + 1);
    const std::size_t dim = total_dimension(full_dims(atoms, n_max));
    ComplexMatrix v = ComplexMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t k = 0; k < atoms; ++k) {
        v += (0.5 * p.g) * atom_cavity(level_op(kExcited, 0), k, atoms, a);
        v += (0.5 * p.omega) * atom_cavity(level_op(kExcited, 1), k, atoms, ic);
    }
    v *= Complex(0.0, -1.0);
    ComplexMatrix photons = p.delta * tensor(pauli::identity(27), ComplexMatrix(a.adjoint() * a));
    TimeDependentHamiltonian h{std::move(photons), v + v.adjoint(), excited_frame(atoms, n_max, p.delta_l),
                               full_dims(atoms, n_max)};
    return FullModel{std::move(h), atoms, n_max};
}

double j2_from(const DriveParams &p) {
    require(p.delta > 0.0, ErrorCode::InvalidArgument, "detuning Delta must be positive");
    return p.g * p.omega / (4.0 * p.delta);
}

double j3_from(const DriveParams &p) {
    require(p.delta > 0.0, ErrorCode::InvalidArgument, "detuning Delta must be positive");
    require(p.delta_l != 0.0, ErrorCode::InvalidArgument, "laser detuning must be nonzero");
    return p.g * p.g * p.omega * p.omega / (16.0 * p.delta_l * p.delta_l * p.delta);
}

EffectiveModel effective_A(const DriveParams &p, std::size_t n_max) {
    return EffectiveModel{build_fusion_hamiltonian(j2_from(p), n_max), 2, n_max};
}

EffectiveModel effective_A_comparator(const DriveParams &p, std::size_t n_max) {
    EffectiveModel m = effective_A(p, n_max);
    const ComplexMatrix i2 = pauli::identity(2);
    const ComplexMatrix sx = tensor(pauli::x(), i2) + tensor(i2, pauli::x());
    m.h += (p.omega * p.omega / (4.0 * p.delta)) * tensor(sx, pauli::identity(n_max + 1));
    return m;
}

XYRingHamiltonian effective_C(const DriveParams &p) {
    return build_xy(j3_from(p));
}

VerificationReport verify_effective(const FullModel &full, const EffectiveModel &eff, const Ket &psi0, double t,
                                    const VerifyOptions &opt) {
    require(eff.atoms == full.atoms, ErrorCode::DimensionMismatch, "models describe different atom counts");
    require(psi0.dim() == (std::size_t{1} << full.atoms), ErrorCode::DimensionMismatch,
            "initial ket must live on the qubit space");
    require(psi0.is_normalized(), ErrorCode::InvalidArgument, "initial ket is not normalized");
    require(t >= 0.0 && std::isfinite(t), ErrorCode::InvalidArgument, "time must be nonnegative");
    const TimeDependentHamiltonian &h = full.hamiltonian;
    const AtomIndexing ix = index_full(full.atoms, full.n_max);
    const ComplexVector start = embed_qubits(psi0, full.atoms, full.n_max);

    VerificationReport rep;
    rep.gate_time = t;
    ComplexVector psi;
    if (opt.method == VerifyOptions::Method::Exact) {
        const HermitianPropagator prop(h.rotating_generator());
        const int samples = std::max(1, opt.samples);
        for (int s = 0; s <= samples; ++s) {
            const double ts = t * s / samples;
            rep.excited_population_max =
                std::max(rep.excited_population_max, excited_population(prop.apply(start, ts), ix));
        }
        psi = apply_frame(prop.apply(start, t), h.frame, t);
    } else {
        double scale = h.frame.cwiseAbs().maxCoeff();
        scale = std::max(scale, h.coupling.cwiseAbs().maxCoeff());
        scale = std::max(scale, h.diagonal.cwiseAbs().maxCoeff());
        const double dt0 = opt.dt > 0.0 ? opt.dt : 0.02 / std::max(scale, 1e-300);
        const auto steps = static_cast<std::size_t>(std::max(1.0, std::ceil(t / dt0)));
        const double dt = t / static_cast<double>(steps);
        // i psi' = H(t) psi with H(t) = D + P(t) W P(t)^*, P(t) = exp(iKt).
        auto deriv = [&](double time, const ComplexVector &x) {
            const ComplexVector y = h.coupling * apply_frame(x, h.frame, -time);
            return ComplexVector(Complex(0.0, -1.0) * (h.diagonal * x + apply_frame(y, h.frame, time)));
        };
        psi = start;
        for (std::size_t s = 0; s < steps; ++s) {
            const double ts = dt * static_cast<double>(s);
            const ComplexVector k1 = deriv(ts, psi);
            const ComplexVector k2 = deriv(ts + 0.5 * dt, psi + 0.5 * dt * k1);
            const ComplexVector k3 = deriv(ts + 0.5 * dt, psi + 0.5 * dt * k2);
            const ComplexVector k4 = deriv(ts + dt, psi + dt * k3);
            psi += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
            const double drift = std::abs(psi.norm() - 1.0);
            require(std::isfinite(drift) && drift <= opt.norm_tolerance, ErrorCode::NumericalInstability,
                    "Schrodinger integration lost norm; reduce the step");
            rep.excited_population_max = std::max(rep.excited_population_max, excited_population(psi, ix));
        }
    }
    const ComplexMatrix reduced = reduce_full(psi, ix, full.atoms, full.n_max);
    const double kept = reduced.trace().real();
    require(kept > 1e-12, ErrorCode::NullOutcome, "no population left in the qubit subspace");
    rep.leakage = std::max(0.0, 1.0 - kept);
    rep.trace_distance = trace_distance(reduced / kept, effective_reduced(eff, psi0, t));
    return rep;
}

DriveParams default_params_A() {
    return appendix_a_params(1.0, 40.0, 400.0);
}

DriveParams default_params_C() {
    return appendix_c_params(1.0, 1.0, 20.0, 10.0);
}

namespace {

void finish_ladder(LadderResult &r) {
    r.distances_decreasing = true;
    r.excitation_decreasing = true;
    for (std::size_t i = 1; i < r.rows.size(); ++i) {
        r.distances_decreasing =
            r.distances_decreasing && r.rows[i].report.trace_distance < r.rows[i - 1].report.trace_distance;
        r.excitation_decreasing = r.excitation_decreasing && r.rows[i].report.excited_population_max <
                                                                 r.rows[i - 1].report.excited_population_max;
    }
}

void check_multipliers(const std::vector<double> &m) {
    require(!m.empty(), ErrorCode::Usage, "ladder needs at least one multiplier");
    for (double x : m) {
        require(std::isfinite(x) && x > 0.0, ErrorCode::Usage, "ladder multipliers must be positive");
    }
}

}  // namespace

LadderResult ladder_A(const DriveParams &base, const std::vector<double> &multipliers, std::size_t n_max) {
    check_multipliers(multipliers);
    LadderResult out;
    if (base.omega < kStrongDrivingRatio * base.g) {
        out.warnings.push_back("Omega below the strong-driving guard (10 g); the reduction may not hold");
    }
    const std::array<std::size_t, 2> zeros{0, 0};
    const Ket psi0 = Ket::basis(Dims{2, 2}, zeros);
    for (double m : multipliers) {
        const DriveParams p = appendix_a_params(base.g, base.omega, base.delta * m);
        const double t = 1.0 / j2_from(p);
        VerificationReport rep =
            verify_effective(full_hamiltonian_A(p, n_max), effective_A_comparator(p, n_max), psi0, t);
        rep.params = p;
        out.rows.push_back(LadderRow{m, rep});
    }
    finish_ladder(out);
    return out;
}

LadderResult ladder_C(const DriveParams &base, const std::vector<double> &multipliers, std::size_t n_max) {
    check_multipliers(multipliers);
    LadderResult out;
    if (base.delta_l < kStrongDrivingRatio * base.g || base.delta < kStrongDrivingRatio * base.g) {
        out.warnings.push_back("detunings below 10 g; the dispersive reduction may not hold");
    }
    const std::array<std::size_t, 3> digits{1, 0, 0};
    const Ket psi0 = Ket::basis(Dims{2, 2, 2}, digits);
    for (double m : multipliers) {
        const DriveParams p = appendix_c_params(base.g, base.omega, base.delta_l * m, base.delta * m);
        const XYRingHamiltonian xy = effective_C(p);
        const double t = gate_time(0, xy.coupling);
        VerificationReport rep = verify_effective(full_hamiltonian_C(p, n_max), EffectiveModel{xy.matrix, 3, 0}, psi0, t);
        rep.params = p;
        out.rows.push_back(LadderRow{m, rep});
    }
    finish_ladder(out);
    return out;
}

double distribution_fidelity(double eta, double alpha_sq, double theta) {
    require(eta > 0.0 && eta <= 1.0, ErrorCode::InvalidArgument, "transmission eta must lie in (0, 1]");
    require(alpha_sq >= 0.0 && std::isfinite(alpha_sq), ErrorCode::InvalidArgument, "alpha^2 must be nonnegative");
    require(std::isfinite(theta), ErrorCode::InvalidArgument, "theta must be finite");
    return 0.5 * (1.0 + std::exp(-(1.0 - eta) * alpha_sq * (1.0 - std::cos(theta))));
}

BellDiagonalPair distribution_pair(double eta, double alpha_sq, double theta) {
    return BellDiagonalPair(distribution_fidelity(eta, alpha_sq, theta));
}

}  // namespace purecav
