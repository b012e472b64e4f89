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


#include "purecav/purify.hpp"

#include <cmath>
#include <string>

#include "purecav/error.hpp"

namespace purecav {

namespace {

const Dims kQubits2{2, 2};
const Dims kQubits4{2, 2, 2, 2};
const Dims kQubits6{2, 2, 2, 2, 2, 2};

// Index of each role in the product temporaries (x) perm.
enum Role : std::size_t { k1A = 0, k2A = 1, k1B = 2, k2B = 3, kPA = 4, kPB = 5 };

void check_layout(const SiteLayout &l) {
    const auto s = l.sites();
    require(s[0] < kRingSites && s[1] < kRingSites && s[2] < kRingSites && s[0] != s[1] && s[1] != s[2] &&
                s[0] != s[2],
            ErrorCode::InvalidArgument, "site layout must assign three distinct ring sites");
}

double poly(std::initializer_list<double> c, double x) {
    double r = 0.0;
    for (auto it = std::rbegin(c); it != std::rend(c); ++it) {
        r = r * x + *it;
    }
    return r;
}

}  // namespace

std::string_view scheme_name(Scheme s) {
    return s == Scheme::Original ? "original" : "modified";
}

Scheme parse_scheme(std::string_view name) {
    if (name == "original") {
        return Scheme::Original;
    }
    if (name == "modified") {
        return Scheme::Modified;
    }
    fail(ErrorCode::Usage, "unknown scheme '" + std::string(name) + "' (expected original or modified)");
}

double RoundResult::rejected_probability() const {
    double r = 0.0;
    for (unsigned b = 0; b < 16; ++b) {
        if (!outcome_accepted(b)) {
            r += outcome_probabilities[b];
        }
    }
    return r;
}

bool outcome_accepted(unsigned bits) {
    return bits == 0b0101 || bits == 0b1010;
}

DensityOperator separate_pairs(double f) {
    const DensityOperator pair = rank_two_state(f);
    static constexpr std::array<std::size_t, 4> order{0, 2, 1, 3};
    return permute_subsystems(tensor(pair, pair), order);
}

RoundResult purification_round(const DensityOperator &temporaries, const DensityOperator &perm,
                               const RoundOptions &opt) {
    require(temporaries.dims() == kQubits4, ErrorCode::DimensionMismatch, "temporaries must be four qubits");
    require(perm.dims() == kQubits2, ErrorCode::DimensionMismatch, "permanent pair must be two qubits");
    check_layout(opt.layout);

    // position in ring order -> role
    std::array<std::size_t, 6> order{};
    order[opt.layout.temporary1] = k1A;
    order[opt.layout.temporary2] = k2A;
    order[opt.layout.permanent] = kPA;
    order[3 + opt.layout.temporary1] = k1B;
    order[3 + opt.layout.temporary2] = k2B;
    order[3 + opt.layout.permanent] = kPB;
    const std::array<std::size_t, 4> measured{opt.layout.temporary1, opt.layout.temporary2, 3 + opt.layout.temporary1,
                                              3 + opt.layout.temporary2};

    const ComplexMatrix joint = permute_subsystems(tensor(temporaries.matrix(), perm.matrix()), kQubits6, order);
    const XYRingHamiltonian h = build_xy(opt.coupling);
    const ComplexMatrix u = composite_gate(h, h, opt.n);
    const UnnormalizedDensity evolved(u * joint * u.adjoint(), kQubits6);

    std::array<double, 16> probs{};
    ComplexMatrix accepted = ComplexMatrix::Zero(4, 4);
    for (unsigned bits = 0; bits < 16; ++bits) {
        const std::array<std::size_t, 4> digits{(bits >> 3) & 1u, (bits >> 2) & 1u, (bits >> 1) & 1u, bits & 1u};
        const ProjectionResult pr = project(evolved, Ket::basis(kQubits4, digits), measured);
        probs[bits] = pr.probability;
        if (outcome_accepted(bits)) {
            accepted += pr.state.matrix();
        }
    }
    const double p = accepted.trace().real();
    require(p > 1e-14, ErrorCode::NullOutcome, "purification round has zero success probability");
    DensityOperator post(accepted / p, kQubits2);
    const PermanentState c = permanent_coefficients(post);
    return RoundResult{std::move(post), p, c.F, c.G, probs};
}

RoundResult round_original(double f, const DensityOperator &perm, int n) {
    return purification_round(separate_pairs(f), perm, RoundOptions{n, 1.0, kDefaultLayout});
}

RoundResult round_modified(double f, const DensityOperator &perm, int n) {
    return purification_round(fused_state(f), perm, RoundOptions{n, 1.0, kDefaultLayout});
}

double closed_form_original(double f, double fp) {
    const double num = fp - 16.0 * (fp - 2.0) * f + 32.0 * (3.0 * fp - 1.0) * f * f;
    const double den = 81.0 + 32.0 * f * f - 80.0 * fp + 16.0 * (10.0 * fp - 7.0) * f;
    return num / den;
}

double closed_form_modified(double f, double fp) {
    const double num = (25.0 - 50.0 * f + 194.0 * f * f) * fp;
    const double den = 169.0 + 194.0 * f * f - 144.0 * fp + (288.0 * fp - 338.0) * f;
    return num / den;
}

double closed_form(Scheme s, double f, double fp) {
    return s == Scheme::Original ? closed_form_original(f, fp) : closed_form_modified(f, fp);
}

FidelitySequence iterate(Scheme s, double f, int rounds) {
    require(rounds >= 1, ErrorCode::InvalidArgument, "at least one round is required");
    require(f >= 0.5 && f <= 1.0, ErrorCode::ThresholdViolation, "pair fidelity outside [0.5, 1]");
    FidelitySequence seq{s, f, {}};
    double F = f;
    for (int k = 0; k < rounds; ++k) {
        F = closed_form(s, f, F);
        seq.values.push_back(F);
    }
    return seq;
}

double fixed_point_original(double f) {
    const double num =
        f * poly({70859.0, -377904.0, 950112.0, -1368064.0, 1278976.0, -671744.0, 294912.0}, f);
    const double den = poly({177147.0, -1051072.0, 2792896.0, -4204544.0, 3904512.0, -2162688.0, 720896.0}, f);
    return num / den;
}

double fixed_point_modified(double f) {
    const double q = 25.0 - 50.0 * f + 194.0 * f * f;
    const double den = poly(
        {4826809.0, -33772038.0, 103411314.0, -179097440.0, 189095940.0, -119456664.0, 39818888.0}, f);
    return f * q * q * q / den;
}

double fhat(Scheme s, double f, int n) {
    require(n >= 0, ErrorCode::InvalidArgument, "round count must be nonnegative");
    if (n == 0) {
        return 0.0;
    }
    return iterate(s, f, n).values.back() - f;
}

RoundResult init_round(double f, int n) {
    const ComplexVector zero = Ket::basis(kQubits2, std::array<std::size_t, 2>{0, 0}).amplitudes;
    const DensityOperator ground(zero * zero.adjoint(), kQubits2);
    return purification_round(separate_pairs(f), ground, RoundOptions{n, 1.0, kDefaultLayout});
}

PermanentState init_closed_form(double f) {
    const double den = 82.0 - 64.0 * f + 64.0 * f * f;
    return PermanentState{(1.0 + 48.0 * f + 32.0 * f * f) / den, (9.0 - 32.0 * f + 32.0 * f * f) / den};
}

PermanentState init_three_rounds_closed_form(double f) {
    static constexpr std::array<double, 9> d{195493577.0,  1442887766.0, 4716352898.0, 8883640864.0, 10517241220.0,
                                             7944708952.0, 3738576328.0, 934577152.0,  233644288.0};
    double den = 0.0;
    double fk = 1.0;
    for (std::size_t i = 0; i < d.size(); ++i) {
        den += ((i % 2 == 0) ? 1.0 : -1.0) * d[i] * fk;
        fk *= f;
    }
    den *= 2.0;
    const double q = 25.0 - 50.0 * f + 194.0 * f * f;
    const double r = 1.0 - 2.0 * f + 2.0 * f * f;
    const double F = (1.0 + 48.0 * f + 32.0 * f * f) * q * q * q / den;
    const double G = 274625.0 * (9.0 - 32.0 * f + 32.0 * f * f) * r * r * r / den;
    return PermanentState{F, G};
}

InitSequence init_then_iterate(double f, int rounds, int n) {
    require(rounds >= 0, ErrorCode::InvalidArgument, "round count must be nonnegative");
    InitSequence seq;
    RoundResult r = init_round(f, n);
    seq.F.push_back(r.F_out);
    seq.G.push_back(r.G_out);
    seq.success.push_back(r.success_probability);
    const DensityOperator temps = fused_state(f);
    for (int k = 0; k < rounds; ++k) {
        r = purification_round(temps, r.post_state, RoundOptions{n, 1.0, kDefaultLayout});
        seq.F.push_back(r.F_out);
        seq.G.push_back(r.G_out);
        seq.success.push_back(r.success_probability);
    }
    return seq;
}

}  // namespace purecav
