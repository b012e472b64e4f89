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


#include "purecav/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>

#include "purecav/error.hpp"
#include "purecav/fusion.hpp"
#include "purecav/harness.hpp"
#include "purecav/physlayer.hpp"
#include "purecav/purify.hpp"
#include "purecav/spinchain.hpp"
#include "purecav/states.hpp"

namespace purecav {

namespace {

constexpr double kOracleTol = 1e-9;
constexpr double kModifiedAt075 = 0.92170;
constexpr double kModifiedAt075Tol = 1e-5;
constexpr double kModifiedF3At08 = 0.99774;
constexpr double kModifiedF3Tol = 1e-4;
constexpr double kOriginalF3At08 = 0.904;
constexpr double kOriginalF3Tol = 2e-3;
constexpr double kSaturationTol = 5e-3;
constexpr double kG3Low = 0.002;
constexpr double kG3High = 0.006;
constexpr double kSteadyStateTol = 1e-4;
constexpr double kSteadyStateKappaT = 20.0;
constexpr double kSteadyStateBudget = 120.0;
constexpr double kFusionLimitTol = 1e-3;
constexpr double kFusedFormTol = 1e-10;
constexpr double kLadderCeiling = 0.05;
constexpr double kGateTol = 1e-10;
constexpr double kDistributionValue = 0.80327;
constexpr double kDistributionTol = 1e-5;
constexpr double kMcWidths = 3.0;
constexpr double kOriginalBudget = 30.0;

std::vector<double> grid() {
    return f_grid(0.55, 1.0, 0.05);
}

std::string fmt(const char *pattern, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, pattern, a, b, c);
    return buf;
}

using Check = std::function<bool(std::string &)>;

bool oracle_grid(Scheme s, std::string &detail) {
    double worst = 0.0;
    for (double f : grid()) {
        for (double fp : grid()) {
            const DensityOperator perm = rank_two_state(fp);
            const RoundResult r = s == Scheme::Original ? round_original(f, perm) : round_modified(f, perm);
            worst = std::max(worst, std::abs(r.F_out - closed_form(s, f, fp)));
        }
    }
    detail = fmt("max |brute force - closed form| = %.2e over 100 grid points", worst);
    return worst <= kOracleTol;
}

bool criterion1(std::string &detail) {
    const auto t0 = std::chrono::steady_clock::now();
    const bool ok = oracle_grid(Scheme::Original, detail);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    detail += fmt("; %.2f s (budget %.0f s)", secs, kOriginalBudget);
    return ok && secs < kOriginalBudget;
}

bool criterion2(std::string &detail) {
    const bool ok = oracle_grid(Scheme::Modified, detail);
    const double v = closed_form_modified(0.75, 0.75);
    detail += fmt("; F(0.75, 0.75) = %.7f", v);
    return ok && std::abs(v - kModifiedAt075) <= kModifiedAt075Tol;
}

bool criterion3(std::string &detail) {
    const double fm = iterate(Scheme::Modified, 0.8, 3).values.back();
    const double fo = iterate(Scheme::Original, 0.8, 3).values.back();
    double worst = 0.0;
    for (double f : f_grid(0.75, 1.0, 0.05)) {
        const auto v = iterate(Scheme::Modified, f, 4).values;
        worst = std::max(worst, std::abs(v[3] - v[2]));
    }
    detail = fmt("modified F3(0.8) = %.6f, original F3(0.8) = %.6f, ", fm, fo) +
             fmt("max |F4 - F3| (f >= 0.75) = %.2e", worst);
    return std::abs(fm - kModifiedF3At08) <= kModifiedF3Tol && std::abs(fo - kOriginalF3At08) <= kOriginalF3Tol &&
           worst < kSaturationTol;
}

bool criterion4(std::string &detail) {
    double margin = 1.0;
    for (double f : f_grid(0.55, 0.95, 0.05)) {
        margin = std::min(margin, closed_form_modified(f, f) - closed_form_original(f, f));
    }
    detail = fmt("min F_mod(f,f) - F_orig(f,f) over interior grid = %.4e", margin);
    return margin > 0.0;
}

bool criterion5(std::string &detail) {
    double w0 = 0.0;
    double w3 = 0.0;
    double gmin = 1.0;
    double gmax = 0.0;
    for (double f : grid()) {
        const InitSequence seq = init_then_iterate(f, 3);
        const PermanentState c0 = init_closed_form(f);
        const PermanentState c3 = init_three_rounds_closed_form(f);
        w0 = std::max({w0, std::abs(seq.F[0] - c0.F), std::abs(seq.G[0] - c0.G)});
        w3 = std::max({w3, std::abs(seq.F[3] - c3.F), std::abs(seq.G[3] - c3.G)});
        if (f <= 0.95 + 1e-12) {
            gmin = std::min(gmin, seq.G[3]);
            gmax = std::max(gmax, seq.G[3]);
        }
    }
    detail = fmt("init max error %.2e, after 3 rounds %.2e, ", w0, w3) + fmt("G3 in [%.5f, %.5f]", gmin, gmax);
    return w0 <= kOracleTol && w3 <= kOracleTol && gmin >= kG3Low && gmax <= kG3High;
}

bool criterion6(std::string &detail) {
    const auto t0 = std::chrono::steady_clock::now();
    // |00> is the uniform superposition of the four u-basis states.
    const std::array<std::size_t, 2> zeros{0, 0};
    const DensityOperator start = DensityOperator::pure(Ket::basis(Dims{2, 2}, zeros));
    double steady = 0.0;
    for (double alpha : {2.0, 3.0}) {
        const LindbladModel m = make_model(0.5 * alpha, 1.0);
        const DensityOperator num = evolve_node(m, start, kSteadyStateKappaT / m.kappa);
        steady = std::max(steady, trace_distance(num.matrix(), analytic_steady_state(start, m).matrix()));
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    double limit = 0.0;
    for (double f : {0.6, 0.75, 0.9}) {
        const FusionResult r = sequential_fusion(f, make_model(2.0, 1.0));
        limit = std::max(limit, trace_distance(r.state.matrix(), fused_state_appB(f).matrix()));
    }
    double forms = 0.0;
    for (double f : grid()) {
        forms = std::max(forms, max_abs(fused_state(f).matrix() - fused_state_appB(f).matrix()));
    }
    detail = fmt("steady-state distance %.2e (%.1f s), ", steady, secs) +
             fmt("|alpha|=4 distance to fused form %.2e, ", limit) + fmt("fused forms differ by %.2e", forms);
    return steady <= kSteadyStateTol && secs < kSteadyStateBudget && limit < kFusionLimitTol && forms <= kFusedFormTol;
}

bool criterion7(std::string &detail) {
    const std::vector<double> ladder{1.0, 2.0, 4.0};
    const LadderResult a = ladder_A(default_params_A(), ladder);
    const LadderResult c = ladder_C(default_params_C(), ladder);
    std::ostringstream os;
    os << "A:";
    for (const auto &r : a.rows) {
        os << fmt(" %.3e/%.2e", r.report.trace_distance, r.report.excited_population_max);
    }
    os << " C:";
    for (const auto &r : c.rows) {
        os << fmt(" %.3e/%.2e", r.report.trace_distance, r.report.excited_population_max);
    }
    detail = os.str();
    return a.distances_decreasing && a.excitation_decreasing && c.distances_decreasing && c.excitation_decreasing &&
           a.rows.back().report.trace_distance <= kLadderCeiling &&
           c.rows.back().report.trace_distance <= kLadderCeiling;
}

bool criterion8(std::string &detail) {
    const auto analytic = analytic_spectrum(1.0);
    const RealVector numeric = hermitian_eigenvalues(build_xy(1.0).matrix);
    double spec = 0.0;
    for (std::size_t k = 0; k < analytic.size(); ++k) {
        spec = std::max(spec, std::abs(analytic[k] - numeric(static_cast<Eigen::Index>(k))));
    }
    double ninv = 0.0;
    double rank2 = 0.0;
    for (double f : {0.6, 0.75, 0.9}) {
        for (Scheme s : {Scheme::Original, Scheme::Modified}) {
            const DensityOperator temps = s == Scheme::Original ? separate_pairs(f) : fused_state(f);
            const DensityOperator perm = rank_two_state(0.7);
            const RoundResult r0 = purification_round(temps, perm, RoundOptions{0, 1.0, kDefaultLayout});
            rank2 = std::max(rank2, rank_two_deviation(r0.post_state));
            for (int n : {1, 2}) {
                const RoundResult rn = purification_round(temps, perm, RoundOptions{n, 1.0, kDefaultLayout});
                ninv = std::max({ninv, max_abs(rn.post_state.matrix() - r0.post_state.matrix()),
                                 std::abs(rn.success_probability - r0.success_probability)});
            }
        }
    }
    detail = fmt("spectrum error %.2e, n-variation %.2e, ", spec, ninv) + fmt("rank-two leakage %.2e", rank2);
    return spec <= kGateTol && ninv <= kGateTol && rank2 < kGateTol;
}

bool criterion9(std::string &detail) {
    const double v = distribution_fidelity(0.5, 100.0, std::acos(0.99));
    const double lossless = distribution_fidelity(1.0, 100.0, 0.7);
    const double aligned = distribution_fidelity(0.5, 100.0, 0.0);
    detail = fmt("f = %.7f, eta=1 -> %.17g, theta=0 -> %.17g", v, lossless, aligned);
    return std::abs(v - kDistributionValue) <= kDistributionTol && lossless == 1.0 && aligned == 1.0;
}

bool criterion10(std::string &detail) {
    SweepConfig sc;
    sc.seed = 7;
    const bool same_csv = sweep_csv(sc) == sweep_csv(sc);
    ResourceConfig rc;
    rc.trials = 100000;
    rc.seed = 12345;
    const ResourceEstimate e1 = estimate_resources(rc);
    const ResourceEstimate e2 = estimate_resources(rc);
    const bool same_mc = e1.expected_temporary_pairs == e2.expected_temporary_pairs && e1.half_width == e2.half_width;
    const double gap = std::abs(e1.expected_temporary_pairs - e1.analytic_pairs);
    ResourceConfig unit = rc;
    unit.force_p = 1.0;
    const ResourceEstimate e3 = estimate_resources(unit);
    detail = fmt("MC %.3f vs analytic %.3f (3 half-widths = %.3f), ", e1.expected_temporary_pairs, e1.analytic_pairs,
                 kMcWidths * e1.half_width) +
             fmt("p=1 pairs %.17g (expected %.0f)", e3.expected_temporary_pairs, 2.0 * unit.rounds) +
             (same_csv ? ", sweep CSV stable" : ", sweep CSV differs") + (same_mc ? ", MC stable" : ", MC differs");
    return same_csv && same_mc && gap <= kMcWidths * e1.half_width &&
           e3.expected_temporary_pairs == 2.0 * unit.rounds && e3.analytic_pairs == 2.0 * unit.rounds;
}

struct Entry {
    const char *title;
    Check check;
};

const std::vector<Entry> &entries() {
    static const std::vector<Entry> list{
        {"original-scheme round equals its closed form", criterion1},
        {"modified-scheme round equals its closed form", criterion2},
        {"three-round saturation", criterion3},
        {"modified scheme dominates the original", criterion4},
        {"initialization round and off-diagonal decay", criterion5},
        {"fusion steady state and fused-state limit", criterion6},
        {"effective-Hamiltonian detuning ladders", criterion7},
        {"gate spectrum, gate-index invariance, rank-two closure", criterion8},
        {"distribution fidelity", criterion9},
        {"harness determinism and resource estimates", criterion10},
    };
    return list;
}

}  // namespace

CriterionResult run_criterion(int id) {
    require(id >= 1 && id <= kCriterionCount, ErrorCode::InvalidArgument, "unknown criterion");
    const Entry &e = entries()[static_cast<std::size_t>(id - 1)];
    CriterionResult r{id, e.title, false, "", 0.0};
    const auto t0 = std::chrono::steady_clock::now();
    try {
        r.passed = e.check(r.detail);
    } catch (const std::exception &ex) {
        r.passed = false;
        r.detail = std::string("error: ") + ex.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

std::vector<CriterionResult> run_acceptance(const std::vector<int> &ids) {
    std::vector<CriterionResult> out;
    if (ids.empty()) {
        for (int id = 1; id <= kCriterionCount; ++id) {
            out.push_back(run_criterion(id));
        }
    } else {
        for (int id : ids) {
            out.push_back(run_criterion(id));
        }
    }
    return out;
}

}  // namespace purecav
