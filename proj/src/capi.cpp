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


#include "purecav/purecav.h"

#include <algorithm>
#include <exception>
#include <memory>
#include <new>
#include <sstream>
#include <string>
#include <vector>

#include "purecav/acceptance.hpp"
#include "purecav/error.hpp"
#include "purecav/harness.hpp"
#include "purecav/physlayer.hpp"
#include "purecav/purify.hpp"
#include "purecav/spinchain.hpp"
#include "purecav/states.hpp"

struct purecav_text {
    std::string data;
};

struct purecav_ladder {
    purecav::LadderResult result;
};

struct purecav_selftest {
    std::vector<purecav::CriterionResult> results;
};

namespace {

thread_local std::string last_error;

template <typename F>
purecav_status guarded(F &&body) {
    last_error.clear();
    try {
        body();
        return PURECAV_OK;
    } catch (const purecav::Error &e) {
        last_error = e.what();
        return static_cast<purecav_status>(static_cast<int>(e.code()));
    } catch (const std::bad_alloc &) {
        last_error = "out of memory";
        return PURECAV_INTERNAL;
    } catch (const std::exception &e) {
        last_error = e.what();
        return PURECAV_INTERNAL;
    } catch (...) {
        last_error = "unknown error";
        return PURECAV_INTERNAL;
    }
}

void need(const void *p, const char *what) {
    purecav::require(p != nullptr, purecav::ErrorCode::InvalidArgument, std::string(what) + " is null");
}

purecav::Scheme to_scheme(purecav_scheme s) {
    switch (s) {
        case PURECAV_SCHEME_ORIGINAL:
            return purecav::Scheme::Original;
        case PURECAV_SCHEME_MODIFIED:
            return purecav::Scheme::Modified;
    }
    purecav::fail(purecav::ErrorCode::InvalidArgument, "unknown scheme");
}

purecav::RestartPolicy to_restart(purecav_restart r) {
    switch (r) {
        case PURECAV_RESTART_INIT:
            return purecav::RestartPolicy::Init;
        case PURECAV_RESTART_ROUND1:
            return purecav::RestartPolicy::Round1;
    }
    purecav::fail(purecav::ErrorCode::InvalidArgument, "unknown restart policy");
}

void emit(purecav_text **out, std::string s) {
    if (out != nullptr) {
        *out = new purecav_text{std::move(s)};
    }
}

void copy_out(const std::vector<double> &v, double *out, std::size_t len) {
    need(out, "output array");
    purecav::require(len >= v.size(), purecav::ErrorCode::InvalidArgument, "output array too short");
    std::copy(v.begin(), v.end(), out);
}

}  // namespace

extern "C" {

const char *purecav_version(void) {
    return "1.0.0";
}

const char *purecav_last_error(void) {
    return last_error.c_str();
}

const char *purecav_status_name(purecav_status status) {
    switch (status) {
        case PURECAV_OK:
            return "ok";
        case PURECAV_INVALID_ARGUMENT:
            return "invalid argument";
        case PURECAV_THRESHOLD_VIOLATION:
            return "threshold violation";
        case PURECAV_DIMENSION_MISMATCH:
            return "dimension mismatch";
        case PURECAV_NOT_HERMITIAN:
            return "not hermitian";
        case PURECAV_NOT_POSITIVE:
            return "not positive";
        case PURECAV_NULL_OUTCOME:
            return "null outcome";
        case PURECAV_TRUNCATION_OVERFLOW:
            return "truncation overflow";
        case PURECAV_NUMERICAL_INSTABILITY:
            return "numerical instability";
        case PURECAV_USAGE:
            return "usage";
        case PURECAV_IO:
            return "io";
        case PURECAV_INTERNAL:
            return "internal";
    }
    return "unknown";
}

purecav_status purecav_parse_scheme(const char *name, purecav_scheme *out) {
    return guarded([&] {
        need(name, "name");
        need(out, "out");
        *out = purecav::parse_scheme(name) == purecav::Scheme::Original ? PURECAV_SCHEME_ORIGINAL
                                                                          : PURECAV_SCHEME_MODIFIED;
    });
}

purecav_status purecav_parse_restart(const char *name, purecav_restart *out) {
    return guarded([&] {
        need(name, "name");
        need(out, "out");
        *out = purecav::parse_restart(name) == purecav::RestartPolicy::Init ? PURECAV_RESTART_INIT
                                                                             : PURECAV_RESTART_ROUND1;
    });
}

const char *purecav_text_data(const purecav_text *text) {
    return text == nullptr ? "" : text->data.c_str();
}

size_t purecav_text_size(const purecav_text *text) {
    return text == nullptr ? 0 : text->data.size();
}

void purecav_text_free(purecav_text *text) {
    delete text;
}

purecav_status purecav_closed_form(purecav_scheme scheme, double f, double f_perm, double *out) {
    return guarded([&] {
        need(out, "out");
        *out = purecav::closed_form(to_scheme(scheme), f, f_perm);
    });
}

purecav_status purecav_simulate_round(purecav_scheme scheme, double f, double f_perm, int n, double *fidelity,
                                      double *success) {
    return guarded([&] {
        const purecav::DensityOperator perm = purecav::rank_two_state(f_perm);
        const purecav::RoundResult r = to_scheme(scheme) == purecav::Scheme::Original
                                           ? purecav::round_original(f, perm, n)
                                           : purecav::round_modified(f, perm, n);
        if (fidelity != nullptr) {
            *fidelity = r.F_out;
        }
        if (success != nullptr) {
            *success = r.success_probability;
        }
    });
}

purecav_status purecav_iterate(purecav_scheme scheme, double f, int rounds, double *out, size_t out_len) {
    return guarded([&] { copy_out(purecav::iterate(to_scheme(scheme), f, rounds).values, out, out_len); });
}

purecav_status purecav_init_sequence(double f, int rounds, int n, double *fidelity, double *coherence,
                                     double *success, size_t out_len) {
    return guarded([&] {
        const purecav::InitSequence s = purecav::init_then_iterate(f, rounds, n);
        copy_out(s.F, fidelity, out_len);
        if (coherence != nullptr) {
            copy_out(s.G, coherence, out_len);
        }
        if (success != nullptr) {
            copy_out(s.success, success, out_len);
        }
    });
}

purecav_status purecav_gate_time(int n, double coupling, double *out) {
    return guarded([&] {
        need(out, "out");
        *out = purecav::gate_time(n, coupling);
    });
}

purecav_status purecav_distribution_fidelity(double eta, double alpha_sq, double theta, double *out) {
    return guarded([&] {
        need(out, "out");
        *out = purecav::distribution_fidelity(eta, alpha_sq, theta);
    });
}

void purecav_sweep_config_init(purecav_sweep_config *config) {
    if (config == nullptr) {
        return;
    }
    const purecav::SweepConfig d;
    *config = purecav_sweep_config{PURECAV_SCHEME_MODIFIED, d.f_min, d.f_max, d.f_step, d.rounds,
                                   d.n, d.init ? 1 : 0, d.seed, d.workers};
}

purecav_status purecav_sweep(const purecav_sweep_config *config, purecav_text **csv) {
    return guarded([&] {
        need(config, "config");
        need(csv, "csv");
        purecav::SweepConfig c;
        c.scheme = to_scheme(config->scheme);
        c.f_min = config->f_min;
        c.f_max = config->f_max;
        c.f_step = config->f_step;
        c.rounds = config->rounds;
        c.n = config->n;
        c.init = config->init != 0;
        c.seed = config->seed;
        c.workers = config->workers;
        emit(csv, purecav::sweep_csv(c));
    });
}

void purecav_resource_config_init(purecav_resource_config *config) {
    if (config == nullptr) {
        return;
    }
    const purecav::ResourceConfig d;
    *config = purecav_resource_config{PURECAV_SCHEME_MODIFIED, d.f,        d.rounds,    d.trials,
                                      d.seed,                  d.init ? 1 : 0, d.fusion ? 1 : 0, d.alpha_sq,
                                      PURECAV_RESTART_INIT,    0,          1.0,         d.workers};
}

purecav_status purecav_resources(const purecav_resource_config *config, purecav_resource_estimate *out,
                                 purecav_text **report) {
    return guarded([&] {
        need(config, "config");
        need(out, "out");
        purecav::ResourceConfig c;
        c.scheme = to_scheme(config->scheme);
        c.f = config->f;
        c.rounds = config->rounds;
        c.trials = config->trials;
        c.seed = config->seed;
        c.init = config->init != 0;
        c.fusion = config->fusion != 0;
        c.alpha_sq = config->alpha_sq;
        c.restart = to_restart(config->restart);
        if (config->force_p_enabled != 0) {
            c.force_p = config->force_p;
        }
        c.workers = config->workers;
        const purecav::ResourceEstimate e = purecav::estimate_resources(c);
        *out = purecav_resource_estimate{e.expected_temporary_pairs, e.expected_rounds_attempted, e.trials,
                                         e.half_width,               e.rounds_half_width,         e.analytic_pairs,
                                         e.analytic_rounds,          e.fusion_success};
        if (report != nullptr) {
            std::ostringstream os;
            for (const auto &s : e.stages) {
                os << "stage " << s.name << " success=" << purecav::format_number(s.success)
                   << " pairs_per_attempt=" << purecav::format_number(s.pairs_per_attempt)
                   << (s.fused ? " fused" : "") << '\n';
            }
            for (const auto &n : e.notes) {
                os << "note: " << n << '\n';
            }
            emit(report, os.str());
        }
    });
}

purecav_status purecav_fusion(double j2, double kappa, double f, double kappa_t, purecav_fusion_report *out,
                              purecav_text **warnings) {
    return guarded([&] {
        need(out, "out");
        const purecav::FusionReport r = purecav::fusion_report(j2, kappa, f, kappa_t);
        *out = purecav_fusion_report{r.alpha_abs, r.no_photon_probability, r.trace_distance, r.kappa_t,
                                     r.numeric ? 1 : 0};
        if (warnings != nullptr) {
            std::string w;
            for (const auto &s : r.warnings) {
                w += s + '\n';
            }
            emit(warnings, std::move(w));
        }
    });
}

purecav_status purecav_default_drive(purecav_appendix which, purecav_drive *out) {
    return guarded([&] {
        need(out, "out");
        purecav::require(which == PURECAV_APPENDIX_A || which == PURECAV_APPENDIX_C,
                         purecav::ErrorCode::InvalidArgument, "unknown appendix");
        const purecav::DriveParams p =
            which == PURECAV_APPENDIX_A ? purecav::default_params_A() : purecav::default_params_C();
        *out = purecav_drive{p.g, p.omega, p.delta, p.delta_l};
    });
}

purecav_status purecav_ladder_run(purecav_appendix which, const purecav_drive *base, const double *multipliers,
                                  size_t count, size_t n_max, purecav_ladder **out) {
    return guarded([&] {
        need(out, "out");
        purecav::require(which == PURECAV_APPENDIX_A || which == PURECAV_APPENDIX_C,
                         purecav::ErrorCode::InvalidArgument, "unknown appendix");
        purecav::require(count == 0 || multipliers != nullptr, purecav::ErrorCode::InvalidArgument,
                         "multipliers is null");
        const std::vector<double> mults(multipliers, multipliers + count);
        purecav::DriveParams p;
        if (base == nullptr) {
            p = which == PURECAV_APPENDIX_A ? purecav::default_params_A() : purecav::default_params_C();
        } else if (which == PURECAV_APPENDIX_A) {
            p = purecav::appendix_a_params(base->g, base->omega, base->delta);
        } else {
            p = purecav::appendix_c_params(base->g, base->omega, base->delta_l, base->delta);
        }
        auto holder = std::make_unique<purecav_ladder>();
        if (which == PURECAV_APPENDIX_A) {
            holder->result = purecav::ladder_A(p, mults, n_max == 0 ? 20 : n_max);
        } else {
            holder->result = purecav::ladder_C(p, mults, n_max == 0 ? 3 : n_max);
        }
        *out = holder.release();
    });
}

size_t purecav_ladder_size(const purecav_ladder *ladder) {
    return ladder == nullptr ? 0 : ladder->result.rows.size();
}

purecav_status purecav_ladder_get(const purecav_ladder *ladder, size_t index, purecav_ladder_row *row) {
    return guarded([&] {
        need(ladder, "ladder");
        need(row, "row");
        purecav::require(index < ladder->result.rows.size(), purecav::ErrorCode::InvalidArgument,
                         "row index out of range");
        const purecav::LadderRow &r = ladder->result.rows[index];
        const purecav::DriveParams &p = r.report.params;
        *row = purecav_ladder_row{r.multiplier,           p.g,
                                  p.omega,                p.delta,
                                  p.delta_l,              r.report.gate_time,
                                  r.report.trace_distance, r.report.excited_population_max,
                                  r.report.leakage};
    });
}

int purecav_ladder_monotone(const purecav_ladder *ladder) {
    return ladder != nullptr && ladder->result.distances_decreasing && ladder->result.excitation_decreasing ? 1 : 0;
}

size_t purecav_ladder_warning_count(const purecav_ladder *ladder) {
    return ladder == nullptr ? 0 : ladder->result.warnings.size();
}

const char *purecav_ladder_warning(const purecav_ladder *ladder, size_t index) {
    if (ladder == nullptr || index >= ladder->result.warnings.size()) {
        return nullptr;
    }
    return ladder->result.warnings[index].c_str();
}

purecav_status purecav_ladder_csv(const purecav_ladder *ladder, purecav_text **csv) {
    return guarded([&] {
        need(ladder, "ladder");
        need(csv, "csv");
        emit(csv, purecav::ladder_csv(ladder->result));
    });
}

void purecav_ladder_free(purecav_ladder *ladder) {
    delete ladder;
}

purecav_status purecav_selftest_run(const int *ids, size_t count, purecav_selftest **out) {
    return guarded([&] {
        need(out, "out");
        purecav::require(count == 0 || ids != nullptr, purecav::ErrorCode::InvalidArgument, "ids is null");
        const std::vector<int> list(ids, ids + count);
        for (int id : list) {
            purecav::require(id >= 1 && id <= purecav::kCriterionCount, purecav::ErrorCode::Usage,
                             "criterion id out of range: " + std::to_string(id));
        }
        auto holder = std::make_unique<purecav_selftest>();
        holder->results = purecav::run_acceptance(list);
        *out = holder.release();
    });
}

size_t purecav_selftest_size(const purecav_selftest *suite) {
    return suite == nullptr ? 0 : suite->results.size();
}

purecav_status purecav_selftest_get(const purecav_selftest *suite, size_t index, purecav_criterion *out) {
    return guarded([&] {
        need(suite, "suite");
        need(out, "out");
        purecav::require(index < suite->results.size(), purecav::ErrorCode::InvalidArgument,
                         "criterion index out of range");
        const purecav::CriterionResult &r = suite->results[index];
        *out = purecav_criterion{r.id, r.passed ? 1 : 0, r.seconds, r.title.c_str(), r.detail.c_str()};
    });
}

void purecav_selftest_free(purecav_selftest *suite) {
    delete suite;
}

}  // extern "C"
