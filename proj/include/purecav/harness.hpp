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


// Figure-data sweeps, resource estimates, and report builders used by the CLI.

#ifndef PURECAV_HARNESS_HPP
#define PURECAV_HARNESS_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "purecav/physlayer.hpp"
#include "purecav/purify.hpp"

namespace purecav {

/// Runs body(i) for i in [0, n) on up to `workers` threads (0 = hardware concurrency).
/// Each index writes its own slot, so results do not depend on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)> &body, unsigned workers = 0);

/// "%.12g" in the C locale.
std::string format_number(double x);

struct SweepConfig {
    Scheme scheme = Scheme::Modified;
    double f_min = 0.55;
    double f_max = 1.0;
    double f_step = 0.05;
    int rounds = 3;
    int n = 0;
    bool init = false;
    std::uint64_t seed = 0;
    unsigned workers = 0;
};

void validate(const SweepConfig &c);
std::vector<double> f_grid(double f_min, double f_max, double f_step);

struct SweepRow {
    double f;
    std::vector<double> F;        // F_1 ... F_n
    double fhat;                  // F_n - f
    std::optional<double> G;      // G_n when the initialization round is used
    std::vector<double> success;  // P_succ_1 ... P_succ_n
};

std::vector<SweepRow> run_sweep(const SweepConfig &c);
std::string sweep_csv(const SweepConfig &c, const std::vector<SweepRow> &rows);
std::string sweep_csv(const SweepConfig &c);

enum class RestartPolicy { Init, Round1 };
RestartPolicy parse_restart(const std::string &s);

struct ResourceConfig {
    Scheme scheme = Scheme::Modified;
    double f = 0.8;
    int rounds = 4;  // stage count, including the initialization round when enabled
    std::uint64_t trials = 100000;
    std::uint64_t seed = 1;
    bool init = true;
    bool fusion = true;
    double alpha_sq = 16.0;  // |alpha_ss|^2 used for the fusion success probability
    RestartPolicy restart = RestartPolicy::Init;
    std::optional<double> force_p;  // debug: overrides every success probability
    unsigned workers = 0;
};

struct Stage {
    std::string name;
    double success;
    double pairs_per_attempt;  // expected, including fusion retries
    bool fused;
};

struct ResourceEstimate {
    double expected_temporary_pairs = 0.0;
    double expected_rounds_attempted = 0.0;
    std::uint64_t trials = 0;
    double half_width = 0.0;  // 95% half-width of the pair estimate
    double rounds_half_width = 0.0;
    double analytic_pairs = 0.0;
    double analytic_rounds = 0.0;
    double fusion_success = 1.0;
    std::vector<Stage> stages;
    std::vector<std::string> notes;
};

std::vector<Stage> build_stages(const ResourceConfig &c, double *fusion_success = nullptr);

/// Restart recursion D_k = (D_{k-1} + c_k) / p_k from the restart stage.
double analytic_expectation(const std::vector<Stage> &stages, RestartPolicy restart, bool count_rounds);

ResourceEstimate estimate_resources(const ResourceConfig &c);

struct FusionReport {
    double alpha_abs = 0.0;
    double no_photon_probability = 0.0;
    double trace_distance = 0.0;  // conditioned state vs the cross-node closed form
    double kappa_t = 0.0;
    bool numeric = false;
    std::vector<std::string> warnings;
};

/// kappa_t > 0 integrates the master equation to that kappa t; 0 uses the steady-state maps.
FusionReport fusion_report(double j2, double kappa, double f, double kappa_t);

std::string ladder_csv(const LadderResult &r);

}  // namespace purecav

#endif
