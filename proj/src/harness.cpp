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


#include "purecav/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <thread>

#include "purecav/error.hpp"
#include "purecav/fusion.hpp"
#include "purecav/states.hpp"

namespace purecav {

void parallel_for(std::size_t n, const std::function<void(std::size_t)> &body, unsigned workers) {
    if (workers == 0) {
        workers = std::max(1u, std::thread::hardware_concurrency());
    }
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, n));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) {
            body(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(n);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) {
                try {
                    body(i);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    }
    for (auto &t : pool) {
        t.join();
    }
    // Report the first failure by index, not by completion order.
    for (auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

std::string format_number(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

void validate(const SweepConfig &c) {
    require(std::isfinite(c.f_min) && std::isfinite(c.f_max) && c.f_min > 0.5 && c.f_min <= c.f_max && c.f_max <= 1.0,
            ErrorCode::Usage, "f range must satisfy 0.5 < f_min <= f_max <= 1");
    require(std::isfinite(c.f_step) && c.f_step > 0.0, ErrorCode::Usage, "f step must be positive");
    require(c.rounds >= 1, ErrorCode::Usage, "rounds must be at least 1");
    require(c.n >= 0, ErrorCode::Usage, "gate index must be nonnegative");
    require(!(c.init && c.scheme == Scheme::Original), ErrorCode::Usage,
            "the initialization round belongs to the modified scheme");
}

std::vector<double> f_grid(double f_min, double f_max, double f_step) {
    const auto count = static_cast<std::size_t>(std::floor((f_max - f_min) / f_step + 1e-9)) + 1;
    std::vector<double> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        double v = std::round((f_min + static_cast<double>(i) * f_step) * 1e12) / 1e12;
        out.push_back(std::min(v, f_max));
    }
    return out;
}

std::vector<SweepRow> run_sweep(const SweepConfig &c) {
    validate(c);
    const std::vector<double> grid = f_grid(c.f_min, c.f_max, c.f_step);
    std::vector<SweepRow> rows(grid.size());
    parallel_for(
        grid.size(),
        [&](std::size_t i) {
            const double f = grid[i];
            SweepRow row{f, {}, 0.0, std::nullopt, {}};
            const RoundOptions opt{c.n, 1.0, kDefaultLayout};
            const DensityOperator temps = c.scheme == Scheme::Original ? separate_pairs(f) : fused_state(f);
            if (c.init) {
                const InitSequence seq = init_then_iterate(f, c.rounds, c.n);
                row.F.assign(seq.F.begin() + 1, seq.F.end());
                row.success.assign(seq.success.begin() + 1, seq.success.end());
                row.G = seq.G.back();
            } else {
                DensityOperator perm = rank_two_state(f);
                for (int k = 0; k < c.rounds; ++k) {
                    RoundResult r = purification_round(temps, perm, opt);
                    row.F.push_back(r.F_out);
                    row.success.push_back(r.success_probability);
                    perm = std::move(r.post_state);
                }
            }
            row.fhat = row.F.back() - f;
            rows[i] = std::move(row);
        },
        c.workers);
    return rows;
}

std::string sweep_csv(const SweepConfig &c, const std::vector<SweepRow> &rows) {
    std::ostringstream os;
    os << "# purecav sweep scheme=" << scheme_name(c.scheme) << " rounds=" << c.rounds << " n=" << c.n
       << " init=" << (c.init ? "true" : "false") << " f_min=" << format_number(c.f_min)
       << " f_max=" << format_number(c.f_max) << " f_step=" << format_number(c.f_step) << " seed=" << c.seed << "\n";
    os << "f";
    for (int k = 1; k <= c.rounds; ++k) {
        os << ",F" << k;
    }
    os << ",fhat_" << c.rounds;
    if (c.init) {
        os << ",G_" << c.rounds;
    }
    for (int k = 1; k <= c.rounds; ++k) {
        os << ",P_succ_" << k;
    }
    os << "\n";
    for (const auto &r : rows) {
        os << format_number(r.f);
        for (double v : r.F) {
            os << ',' << format_number(v);
        }
        os << ',' << format_number(r.fhat);
        if (c.init) {
            os << ',' << format_number(r.G.value_or(0.0));
        }
        for (double v : r.success) {
            os << ',' << format_number(v);
        }
        os << "\n";
    }
    return os.str();
}

std::string sweep_csv(const SweepConfig &c) {
    return sweep_csv(c, run_sweep(c));
}

RestartPolicy parse_restart(const std::string &s) {
    if (s == "init") {
        return RestartPolicy::Init;
    }
    if (s == "round1") {
        return RestartPolicy::Round1;
    }
    fail(ErrorCode::Usage, "unknown restart policy '" + s + "' (expected init or round1)");
}

std::vector<Stage> build_stages(const ResourceConfig &c, double *fusion_success) {
    require(c.rounds >= 1, ErrorCode::Usage, "rounds must be at least 1");
    require(!(c.init && c.scheme == Scheme::Original), ErrorCode::Usage,
            "the initialization round belongs to the modified scheme");
    require_above_threshold(c.f);
    const bool fused = c.scheme == Scheme::Modified && c.fusion;
    double p_fuse = 1.0;
    if (fused) {
        const NodeMap map = analytic_node_map(c.alpha_sq);
        p_fuse = sequential_fusion(c.f, map, map).probability;
    }
    if (c.force_p) {
        require(*c.force_p > 0.0 && *c.force_p <= 1.0, ErrorCode::Usage, "forced probability must lie in (0, 1]");
        p_fuse = *c.force_p;
    }
    if (fusion_success != nullptr) {
        *fusion_success = p_fuse;
    }

    std::vector<double> success;
    if (c.init) {
        const InitSequence seq = init_then_iterate(c.f, c.rounds - 1);
        success = seq.success;
    } else {
        const DensityOperator temps = c.scheme == Scheme::Original ? separate_pairs(c.f) : fused_state(c.f);
        DensityOperator perm = rank_two_state(c.f);
        for (int k = 0; k < c.rounds; ++k) {
            RoundResult r = purification_round(temps, perm);
            success.push_back(r.success_probability);
            perm = std::move(r.post_state);
        }
    }
    std::vector<Stage> stages;
    for (int k = 0; k < c.rounds; ++k) {
        const bool is_init = c.init && k == 0;
        const bool stage_fused = fused && !is_init;
        const double p = c.force_p ? *c.force_p : success[static_cast<std::size_t>(k)];
        const std::string name = is_init ? "init" : "round" + std::to_string(c.init ? k : k + 1);
        stages.push_back(Stage{name, p, stage_fused ? 2.0 / p_fuse : 2.0, stage_fused});
    }
    return stages;
}

double analytic_expectation(const std::vector<Stage> &stages, RestartPolicy restart, bool count_rounds) {
    const std::size_t r = (restart == RestartPolicy::Round1 && stages.size() > 1) ? 1 : 0;
    double total = 0.0;
    // Stages before the restart point repeat only themselves.
    for (std::size_t k = 0; k < r; ++k) {
        total += (count_rounds ? 1.0 : stages[k].pairs_per_attempt) / stages[k].success;
    }
    double d = 0.0;
    for (std::size_t k = r; k < stages.size(); ++k) {
        d = (d + (count_rounds ? 1.0 : stages[k].pairs_per_attempt)) / stages[k].success;
    }
    return total + d;
}

namespace {

struct Moments {
    double n = 0.0;
    double sum = 0.0;
    double sumsq = 0.0;
    double rsum = 0.0;
    double rsumsq = 0.0;
};

double uniform(std::mt19937_64 &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

ResourceEstimate estimate_resources(const ResourceConfig &c) {
    require(c.trials >= 100, ErrorCode::Usage, "at least 100 trials are required");
    ResourceEstimate est;
    est.stages = build_stages(c, &est.fusion_success);
    est.trials = c.trials;
    est.analytic_pairs = analytic_expectation(est.stages, c.restart, false);
    est.analytic_rounds = analytic_expectation(est.stages, c.restart, true);

    const std::size_t restart_at = (c.restart == RestartPolicy::Round1 && est.stages.size() > 1) ? 1 : 0;
    constexpr std::uint64_t kChunk = 1024;
    const std::uint64_t chunks = (c.trials + kChunk - 1) / kChunk;
    std::vector<Moments> parts(chunks);
    parallel_for(
        chunks,
        [&](std::size_t chunk) {
            std::seed_seq seq{static_cast<std::uint32_t>(c.seed), static_cast<std::uint32_t>(c.seed >> 32),
                              static_cast<std::uint32_t>(chunk), static_cast<std::uint32_t>(chunk >> 32)};
            std::mt19937_64 rng(seq);
            const std::uint64_t begin = chunk * kChunk;
            const std::uint64_t end = std::min(c.trials, begin + kChunk);
            Moments m;
            for (std::uint64_t t = begin; t < end; ++t) {
                double pairs = 0.0;
                double attempts = 0.0;
                std::size_t stage = 0;
                while (stage < est.stages.size()) {
                    const Stage &s = est.stages[stage];
                    if (s.fused) {
                        // A failed fusion consumes its two pairs and is retried.
                        do {
                            pairs += 2.0;
                        } while (uniform(rng) >= est.fusion_success);
                    } else {
                        pairs += 2.0;
                    }
                    attempts += 1.0;
                    if (uniform(rng) < s.success) {
                        ++stage;
                    } else if (stage >= restart_at) {
                        stage = restart_at;
                    }
                }
                m.n += 1.0;
                m.sum += pairs;
                m.sumsq += pairs * pairs;
                m.rsum += attempts;
                m.rsumsq += attempts * attempts;
            }
            parts[chunk] = m;
        },
        c.workers);
    Moments tot;
    for (const auto &m : parts) {
        tot.n += m.n;
        tot.sum += m.sum;
        tot.sumsq += m.sumsq;
        tot.rsum += m.rsum;
        tot.rsumsq += m.rsumsq;
    }
    const double mean = tot.sum / tot.n;
    const double var = std::max(0.0, (tot.sumsq - tot.n * mean * mean) / (tot.n - 1.0));
    const double rmean = tot.rsum / tot.n;
    const double rvar = std::max(0.0, (tot.rsumsq - tot.n * rmean * rmean) / (tot.n - 1.0));
    est.expected_temporary_pairs = mean;
    est.expected_rounds_attempted = rmean;
    est.half_width = 1.96 * std::sqrt(var / tot.n);
    est.rounds_half_width = 1.96 * std::sqrt(rvar / tot.n);
    if (c.scheme == Scheme::Modified && c.fusion) {
        est.notes.push_back("assumption: a failed fusion consumes its two temporary pairs and is retried");
    }
    est.notes.push_back(c.restart == RestartPolicy::Init ? "restart policy: failed rounds restart from the first stage"
                                                         : "restart policy: failed rounds restart from round 1");
    return est;
}

FusionReport fusion_report(double j2, double kappa, double f, double kappa_t) {
    require(kappa_t >= 0.0 && std::isfinite(kappa_t), ErrorCode::Usage, "kappa t must be nonnegative");
    const LindbladModel m = make_model(j2, kappa);
    FusionReport rep;
    rep.alpha_abs = std::abs(m.alpha_ss());
    rep.kappa_t = kappa_t;
    if (m.strong_ratio() < kDefaultStrongRatio) {
        rep.warnings.push_back("strong-coupling assumption violated: |alpha_ss| < 1, fusion output is far from the "
                               "fused state");
    }
    NodeMap map;
    if (kappa_t > 0.0) {
        rep.numeric = true;
        map = numeric_node_map(m, kappa_t / kappa);
    } else {
        map = analytic_node_map(std::norm(m.alpha_ss()));
    }
    const FusionResult fr = sequential_fusion(f, map, map);
    rep.no_photon_probability = fr.probability;
    rep.trace_distance = trace_distance(fr.state.matrix(), fused_state_appB(f).matrix());
    return rep;
}

std::string ladder_csv(const LadderResult &r) {
    std::ostringstream os;
    os << "multiplier,g,omega,delta,delta_l,gate_time,trace_distance,excited_population_max,leakage\n";
    for (const auto &row : r.rows) {
        const auto &p = row.report.params;
        os << format_number(row.multiplier) << ',' << format_number(p.g) << ',' << format_number(p.omega) << ','
           << format_number(p.delta) << ',' << format_number(p.delta_l) << ',' << format_number(row.report.gate_time)
           << ',' << format_number(row.report.trace_distance) << ','
           << format_number(row.report.excited_population_max) << ',' << format_number(row.report.leakage) << "\n";
    }
    return os.str();
}

}  // namespace purecav
