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


#include <cmath>
#include <cstring>
#include <numbers>
#include <string>

#include "doctest.h"
#include "purecav/purecav.h"

TEST_CASE("status names and version") {
    CHECK(std::string(purecav_version()).size() > 0);
    CHECK(std::string(purecav_status_name(PURECAV_OK)) == "ok");
    CHECK(std::string(purecav_status_name(PURECAV_USAGE)) == "usage");
}

TEST_CASE("scalar entry points") {
    double v = 0.0;
    REQUIRE(purecav_closed_form(PURECAV_SCHEME_MODIFIED, 0.75, 0.75, &v) == PURECAV_OK);
    CHECK(v == doctest::Approx(0.921701112878).epsilon(1e-11));
    double fid = 0.0;
    double succ = 0.0;
    REQUIRE(purecav_simulate_round(PURECAV_SCHEME_ORIGINAL, 0.75, 0.75, 1, &fid, &succ) == PURECAV_OK);
    CHECK(fid == doctest::Approx(0.85));
    CHECK(succ == doctest::Approx(5.0 / 18.0));
    REQUIRE(purecav_gate_time(0, 1.0, &v) == PURECAV_OK);
    CHECK(v == doctest::Approx(std::numbers::pi / 3));
    REQUIRE(purecav_distribution_fidelity(0.5, 100.0, std::acos(0.99), &v) == PURECAV_OK);
    CHECK(v == doctest::Approx(0.80326533).epsilon(1e-8));
}

TEST_CASE("errors carry a status and message") {
    double v = 0.0;
    CHECK(purecav_closed_form(PURECAV_SCHEME_MODIFIED, 0.75, 0.75, nullptr) == PURECAV_INVALID_ARGUMENT);
    CHECK(std::strlen(purecav_last_error()) > 0);
    CHECK(purecav_simulate_round(PURECAV_SCHEME_MODIFIED, 0.4, 0.75, 0, &v, nullptr) ==
          PURECAV_THRESHOLD_VIOLATION);
    CHECK(purecav_closed_form(static_cast<purecav_scheme>(7), 0.8, 0.8, &v) == PURECAV_INVALID_ARGUMENT);
    purecav_scheme s{};
    CHECK(purecav_parse_scheme("bogus", &s) == PURECAV_USAGE);
    CHECK(purecav_parse_scheme("original", &s) == PURECAV_OK);
    CHECK(s == PURECAV_SCHEME_ORIGINAL);
    CHECK(std::string(purecav_last_error()).empty());
}

TEST_CASE("sequences") {
    double f[3];
    REQUIRE(purecav_iterate(PURECAV_SCHEME_MODIFIED, 0.8, 3, f, 3) == PURECAV_OK);
    CHECK(f[2] == doctest::Approx(0.997739090448).epsilon(1e-11));
    CHECK(purecav_iterate(PURECAV_SCHEME_MODIFIED, 0.8, 3, f, 2) == PURECAV_INVALID_ARGUMENT);
    double F[4], G[4], P[4];
    REQUIRE(purecav_init_sequence(0.75, 3, 0, F, G, P, 4) == PURECAV_OK);
    CHECK(F[0] == doctest::Approx(11.0 / 14.0));
    CHECK(G[0] == doctest::Approx(3.0 / 70.0));
    CHECK(P[0] == doctest::Approx(35.0 / 162.0));
}

TEST_CASE("sweep through the C interface") {
    purecav_sweep_config c;
    purecav_sweep_config_init(&c);
    CHECK(c.rounds == 3);
    purecav_text *csv = nullptr;
    REQUIRE(purecav_sweep(&c, &csv) == PURECAV_OK);
    const std::string text(purecav_text_data(csv), purecav_text_size(csv));
    CHECK(text.find("f,F1,F2,F3,fhat_3") != std::string::npos);
    purecav_text_free(csv);
    c.f_min = 0.2;
    CHECK(purecav_sweep(&c, &csv) == PURECAV_USAGE);
}

TEST_CASE("resources through the C interface") {
    purecav_resource_config c;
    purecav_resource_config_init(&c);
    c.trials = 5000;
    c.force_p_enabled = 1;
    c.force_p = 1.0;
    purecav_resource_estimate e{};
    purecav_text *report = nullptr;
    REQUIRE(purecav_resources(&c, &e, &report) == PURECAV_OK);
    CHECK(e.expected_temporary_pairs == 2.0 * c.rounds);
    CHECK(std::string(purecav_text_data(report)).find("stage init") != std::string::npos);
    purecav_text_free(report);
    c.trials = 10;
    CHECK(purecav_resources(&c, &e, nullptr) == PURECAV_USAGE);
}

TEST_CASE("fusion through the C interface") {
    purecav_fusion_report r{};
    purecav_text *w = nullptr;
    REQUIRE(purecav_fusion(2.0, 1.0, 0.75, 0.0, &r, &w) == PURECAV_OK);
    CHECK(r.alpha_abs == doctest::Approx(4.0));
    CHECK(r.trace_distance < 1e-3);
    CHECK(purecav_text_size(w) == 0);
    purecav_text_free(w);
}

TEST_CASE("ladder handle") {
    const double mults[] = {1.0, 2.0, 4.0};
    purecav_ladder *l = nullptr;
    REQUIRE(purecav_ladder_run(PURECAV_APPENDIX_C, nullptr, mults, 3, 0, &l) == PURECAV_OK);
    CHECK(purecav_ladder_size(l) == 3);
    CHECK(purecav_ladder_monotone(l) == 1);
    purecav_ladder_row row{};
    REQUIRE(purecav_ladder_get(l, 2, &row) == PURECAV_OK);
    CHECK(row.multiplier == 4.0);
    CHECK(row.trace_distance < 1e-4);
    CHECK(purecav_ladder_get(l, 3, &row) == PURECAV_INVALID_ARGUMENT);
    CHECK(purecav_ladder_warning(l, 0) == nullptr);
    purecav_ladder_free(l);
    l = nullptr;
    CHECK(purecav_ladder_run(PURECAV_APPENDIX_A, nullptr, mults, 0, 0, &l) == PURECAV_USAGE);
    CHECK(l == nullptr);
}

TEST_CASE("selftest handle") {
    const int ids[] = {9, 4};
    purecav_selftest *s = nullptr;
    REQUIRE(purecav_selftest_run(ids, 2, &s) == PURECAV_OK);
    REQUIRE(purecav_selftest_size(s) == 2);
    purecav_criterion c{};
    REQUIRE(purecav_selftest_get(s, 0, &c) == PURECAV_OK);
    CHECK(c.id == 9);
    CHECK(c.passed == 1);
    CHECK(std::strlen(c.title) > 0);
    purecav_selftest_free(s);
    const int bad[] = {11};
    CHECK(purecav_selftest_run(bad, 1, &s) == PURECAV_USAGE);
}
