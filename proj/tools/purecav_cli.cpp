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


// purecav command-line front end. Links only against the C interface.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "purecav/purecav.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

std::string num(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

struct Failure {
    int code;
};

void check(purecav_status s) {
    if (s == PURECAV_OK) {
        return;
    }
    std::cerr << "purecav: " << purecav_status_name(s) << ": " << purecav_last_error() << '\n';
    const bool usage = s == PURECAV_USAGE || s == PURECAV_INVALID_ARGUMENT || s == PURECAV_THRESHOLD_VIOLATION;
    throw Failure{usage ? kExitUsage : kExitFailure};
}

struct Text {
    purecav_text *p = nullptr;
    ~Text() {
        purecav_text_free(p);
    }
    std::string str() const {
        return std::string(purecav_text_data(p), purecav_text_size(p));
    }
};

void write_output(const std::string &path, const std::string &body) {
    if (path.empty() || path == "-") {
        std::cout << body;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    out << body;
    out.close();
    if (!out) {
        std::cerr << "purecav: cannot write " << path << '\n';
        throw Failure{kExitFailure};
    }
}

std::string env_name(const std::string &flag) {
    std::string s = "PURECAV_";
    for (char c : flag) {
        s += c == '-' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    }
    return s;
}

template <typename T>
CLI::Option *opt(CLI::App *app, const std::string &flag, T &value, const std::string &help) {
    return app->add_option("--" + flag, value, help)->envname(env_name(flag))->capture_default_str();
}

// Flat key=value lines; a key names a flag of the subcommand without the leading dashes.
// Values only fill options that the command line and environment left unset.
void apply_config(CLI::App *app, const std::string &path) {
    if (path.empty()) {
        return;
    }
    std::ifstream in(path);
    if (!in) {
        throw CLI::FileError::Missing(path);
    }
    std::string line;
    while (std::getline(in, line)) {
        const std::string trimmed = CLI::detail::trim_copy(line);
        if (trimmed.empty() || trimmed[0] == '#' || trimmed[0] == ';') {
            continue;
        }
        const auto eq = trimmed.find('=');
        if (eq == std::string::npos) {
            throw CLI::ConversionError("config line without '=': " + trimmed);
        }
        const std::string key = CLI::detail::trim_copy(trimmed.substr(0, eq));
        const std::string value = CLI::detail::trim_copy(trimmed.substr(eq + 1));
        if (key == "config") {
            continue;
        }
        CLI::Option *o = app->get_option("--" + key);
        if (o->count() == 0) {
            o->add_result(value);
            o->run_callback();
        }
    }
}

purecav_scheme scheme_of(const std::string &s) {
    purecav_scheme out{};
    check(purecav_parse_scheme(s.c_str(), &out));
    return out;
}

struct SweepArgs {
    std::string scheme = "modified";
    double f_min = 0.55;
    double f_max = 1.0;
    double f_step = 0.05;
    int rounds = 3;
    int n = 0;
    bool init = false;
    std::uint64_t seed = 0;
    unsigned workers = 0;
    std::string out;
};

int run_sweep(const SweepArgs &a) {
    purecav_sweep_config c;
    purecav_sweep_config_init(&c);
    c.scheme = scheme_of(a.scheme);
    c.f_min = a.f_min;
    c.f_max = a.f_max;
    c.f_step = a.f_step;
    c.rounds = a.rounds;
    c.n = a.n;
    c.init = a.init ? 1 : 0;
    c.seed = a.seed;
    c.workers = a.workers;
    Text csv;
    check(purecav_sweep(&c, &csv.p));
    write_output(a.out, csv.str());
    return kExitOk;
}

struct FusionArgs {
    double j2 = 2.0;
    double kappa = 1.0;
    double f = 0.75;
    double kappa_t = 0.0;
    double max_distance = -1.0;
    std::string out;
};

int run_fusion(const FusionArgs &a) {
    purecav_fusion_report r{};
    Text warnings;
    check(purecav_fusion(a.j2, a.kappa, a.f, a.kappa_t, &r, &warnings.p));
    std::cerr << warnings.str();
    std::ostringstream os;
    os << "alpha_ss_abs=" << num(r.alpha_abs) << '\n'
       << "no_photon_probability=" << num(r.no_photon_probability) << '\n'
       << "trace_distance=" << num(r.trace_distance) << '\n'
       << "method=" << (r.numeric ? "master-equation" : "steady-state") << '\n';
    if (r.numeric) {
        os << "kappa_t=" << num(r.kappa_t) << '\n';
    }
    write_output(a.out, os.str());
    if (a.max_distance >= 0.0 && r.trace_distance > a.max_distance) {
        std::cerr << "purecav: trace distance " << num(r.trace_distance) << " exceeds " << num(a.max_distance)
                  << '\n';
        return kExitFailure;
    }
    return kExitOk;
}

struct AppendixArgs {
    std::string which = "A";
    std::vector<double> ladder{1.0, 2.0, 4.0};
    double g = 0.0;
    double omega = 0.0;
    double delta = 0.0;
    double delta_l = 0.0;
    std::size_t n_max = 0;
    std::string out;
};

struct Ladder {
    purecav_ladder *p = nullptr;
    ~Ladder() {
        purecav_ladder_free(p);
    }
};

int run_appendix(const AppendixArgs &a, CLI::App *sub) {
    purecav_appendix which{};
    if (a.which == "A" || a.which == "a") {
        which = PURECAV_APPENDIX_A;
    } else if (a.which == "C" || a.which == "c") {
        which = PURECAV_APPENDIX_C;
    } else {
        std::cerr << "purecav: --which must be A or C\n";
        return kExitUsage;
    }
    purecav_drive base{};
    check(purecav_default_drive(which, &base));
    if (sub->get_option("--g")->count() > 0) {
        base.g = a.g;
    }
    if (sub->get_option("--omega")->count() > 0) {
        base.omega = a.omega;
    }
    if (sub->get_option("--delta")->count() > 0) {
        base.delta = a.delta;
    }
    if (sub->get_option("--delta-l")->count() > 0) {
        base.delta_l = a.delta_l;
    }
    Ladder ladder;
    check(purecav_ladder_run(which, &base, a.ladder.data(), a.ladder.size(), a.n_max, &ladder.p));
    for (std::size_t i = 0; i < purecav_ladder_warning_count(ladder.p); ++i) {
        std::cerr << "warning: " << purecav_ladder_warning(ladder.p, i) << '\n';
    }
    std::printf("%-10s %-14s %-14s %-14s\n", "multiplier", "trace_dist", "max_excited", "leakage");
    for (std::size_t i = 0; i < purecav_ladder_size(ladder.p); ++i) {
        purecav_ladder_row row{};
        check(purecav_ladder_get(ladder.p, i, &row));
        std::printf("%-10s %-14.6e %-14.6e %-14.6e\n", num(row.multiplier).c_str(), row.trace_distance,
                    row.excited_population_max, row.leakage);
    }
    if (!a.out.empty()) {
        Text csv;
        check(purecav_ladder_csv(ladder.p, &csv.p));
        write_output(a.out, csv.str());
    }
    if (purecav_ladder_monotone(ladder.p) == 0) {
        std::cerr << "purecav: trace distance or excited population is not strictly decreasing\n";
        return kExitFailure;
    }
    std::printf("monotone decrease: yes\n");
    return kExitOk;
}

struct ResourceArgs {
    std::string scheme = "modified";
    double f = 0.8;
    int rounds = 4;
    std::uint64_t trials = 100000;
    std::uint64_t seed = 1;
    bool init = true;
    bool fusion = true;
    double alpha_sq = 16.0;
    std::string restart = "init";
    double force_p = -1.0;
    unsigned workers = 0;
    std::string out;
};

int run_resources(const ResourceArgs &a) {
    purecav_resource_config c;
    purecav_resource_config_init(&c);
    c.scheme = scheme_of(a.scheme);
    c.f = a.f;
    c.rounds = a.rounds;
    c.trials = a.trials;
    c.seed = a.seed;
    c.init = a.init ? 1 : 0;
    c.fusion = a.fusion ? 1 : 0;
    c.alpha_sq = a.alpha_sq;
    check(purecav_parse_restart(a.restart.c_str(), &c.restart));
    if (a.force_p >= 0.0) {
        c.force_p_enabled = 1;
        c.force_p = a.force_p;
    }
    c.workers = a.workers;
    purecav_resource_estimate e{};
    Text report;
    check(purecav_resources(&c, &e, &report.p));
    std::ostringstream os;
    os << "# purecav resources scheme=" << a.scheme << " f=" << num(a.f) << " rounds=" << a.rounds
       << " trials=" << a.trials << " seed=" << a.seed << " init=" << (a.init ? 1 : 0)
       << " fusion=" << (a.fusion ? 1 : 0) << " restart-from=" << a.restart << '\n'
       << "expected_temporary_pairs=" << num(e.expected_temporary_pairs) << '\n'
       << "half_width=" << num(e.half_width) << '\n'
       << "analytic_pairs=" << num(e.analytic_pairs) << '\n'
       << "expected_rounds_attempted=" << num(e.expected_rounds_attempted) << '\n'
       << "rounds_half_width=" << num(e.rounds_half_width) << '\n'
       << "analytic_rounds=" << num(e.analytic_rounds) << '\n'
       << "fusion_success=" << num(e.fusion_success) << '\n'
       << "trials=" << e.trials << '\n';
    std::istringstream lines(report.str());
    for (std::string line; std::getline(lines, line);) {
        os << "# " << line << '\n';
    }
    write_output(a.out, os.str());
    const double gap = std::abs(e.expected_temporary_pairs - e.analytic_pairs);
    if (gap > 3.0 * e.half_width && gap > 1e-12) {
        std::cerr << "purecav: Monte Carlo and analytic expectations differ by more than 3 half-widths\n";
        return kExitFailure;
    }
    return kExitOk;
}

struct Suite {
    purecav_selftest *p = nullptr;
    ~Suite() {
        purecav_selftest_free(p);
    }
};

int run_selftest(const std::vector<int> &ids, const std::string &out) {
    Suite suite;
    check(purecav_selftest_run(ids.data(), ids.size(), &suite.p));
    std::ostringstream os;
    bool all = true;
    for (std::size_t i = 0; i < purecav_selftest_size(suite.p); ++i) {
        purecav_criterion c{};
        check(purecav_selftest_get(suite.p, i, &c));
        all = all && c.passed != 0;
        char head[64];
        std::snprintf(head, sizeof head, "[%s] criterion %2d (%.2f s) ", c.passed ? "PASS" : "FAIL", c.id, c.seconds);
        os << head << c.title << ": " << c.detail << '\n';
    }
    os << (all ? "all criteria passed\n" : "some criteria failed\n");
    write_output(out, os.str());
    return all ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"purecav: cavity-QED entanglement purification simulator"};
    app.set_version_flag("--version", std::string(purecav_version()));
    app.require_subcommand(1);

    SweepArgs sweep;
    std::string sweep_config;
    CLI::App *s = app.add_subcommand("sweep", "Fidelity-map sweep over the initial fidelity, written as CSV");
    s->add_option("--config", sweep_config, "flat key=value file mirroring the flags");
    opt(s, "scheme", sweep.scheme, "original | modified");
    opt(s, "f-min", sweep.f_min, "smallest initial fidelity");
    opt(s, "f-max", sweep.f_max, "largest initial fidelity");
    opt(s, "f-step", sweep.f_step, "grid step");
    opt(s, "rounds", sweep.rounds, "purification rounds");
    opt(s, "n", sweep.n, "gate index");
    s->add_flag("--init", sweep.init, "start from the initialization round (modified only)")
        ->envname(env_name("init"));
    opt(s, "seed", sweep.seed, "recorded in the header comment");
    opt(s, "workers", sweep.workers, "worker threads (0 = all cores)");
    opt(s, "out", sweep.out, "CSV path (default stdout)");

    FusionArgs fusion;
    std::string fusion_config;
    CLI::App *fu = app.add_subcommand("fusion", "Cavity fusion block report");
    fu->add_option("--config", fusion_config, "flat key=value file mirroring the flags");
    opt(fu, "j2", fusion.j2, "cavity drive coupling J2");
    opt(fu, "kappa", fusion.kappa, "cavity decay rate");
    opt(fu, "f", fusion.f, "fidelity of each input pair");
    opt(fu, "kappa-t", fusion.kappa_t, "integrate the master equation to this kappa*t (0 = steady-state maps)");
    opt(fu, "max-distance", fusion.max_distance, "fail when the trace distance exceeds this (negative = off)");
    opt(fu, "out", fusion.out, "report path (default stdout)");

    AppendixArgs appendix;
    std::string appendix_config;
    CLI::App *ap = app.add_subcommand("verify-appendix", "Full vs effective Hamiltonian over a detuning ladder");
    ap->add_option("--config", appendix_config, "flat key=value file mirroring the flags");
    opt(ap, "which", appendix.which, "A (two atoms, cavity drive) | C (three atoms, XY ring)");
    opt(ap, "ladder", appendix.ladder, "detuning multipliers")->delimiter(',')->expected(1, -1);
    opt(ap, "g", appendix.g, "atom-cavity coupling (default per setup)");
    opt(ap, "omega", appendix.omega, "laser Rabi frequency (default per setup)");
    opt(ap, "delta", appendix.delta, "detuning Delta (default per setup)");
    opt(ap, "delta-l", appendix.delta_l, "laser detuning Delta_L, setup C (default per setup)");
    opt(ap, "n-max", appendix.n_max, "photon cutoff (0 = default per setup)");
    opt(ap, "out", appendix.out, "CSV path");

    ResourceArgs res;
    std::string res_config;
    CLI::App *r = app.add_subcommand("resources", "Expected temporary-pair cost with restart on failure");
    r->add_option("--config", res_config, "flat key=value file mirroring the flags");
    opt(r, "scheme", res.scheme, "original | modified");
    opt(r, "f", res.f, "initial fidelity of the temporary pairs");
    opt(r, "rounds", res.rounds, "stages, including the initialization round when enabled");
    opt(r, "trials", res.trials, "Monte Carlo trials (>= 100)");
    opt(r, "seed", res.seed, "RNG seed");
    r->add_flag("--init,!--no-init", res.init, "use the initialization round")->envname(env_name("init"));
    r->add_flag("--fusion,!--no-fusion", res.fusion, "include the fusion success probability")
        ->envname(env_name("fusion"));
    opt(r, "alpha-sq", res.alpha_sq, "|alpha_ss|^2 of the fusion block");
    opt(r, "restart-from", res.restart, "init | round1");
    opt(r, "force-p", res.force_p, "debug: force every success probability (negative = off)");
    opt(r, "workers", res.workers, "worker threads (0 = all cores)");
    opt(r, "out", res.out, "report path (default stdout)");

    std::vector<int> criteria;
    std::string selftest_out;
    CLI::App *st = app.add_subcommand("selftest", "Run the acceptance suite");
    st->add_option("--criteria", criteria, "criterion ids (default all)")->delimiter(',');
    st->add_option("--out", selftest_out, "report path (default stdout)");

    try {
        app.parse(argc, argv);
        apply_config(s, sweep_config);
        apply_config(fu, fusion_config);
        apply_config(ap, appendix_config);
        apply_config(r, res_config);
    } catch (const CLI::Error &e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (s->parsed()) {
            return run_sweep(sweep);
        }
        if (fu->parsed()) {
            return run_fusion(fusion);
        }
        if (ap->parsed()) {
            return run_appendix(appendix, ap);
        }
        if (r->parsed()) {
            return run_resources(res);
        }
        return run_selftest(criteria, selftest_out);
    } catch (const Failure &f) {
        return f.code;
    }
}
