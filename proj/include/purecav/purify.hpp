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


// Purification rounds by direct six-qubit simulation, and the closed-form fidelity maps.
//
// Six-qubit order during a round: (1A, 2A, PA, 1B, 2B, PB) for the default site layout.
// Temporary qubits enter in the order (1A, 2A, 1B, 2B); the permanent pair as (PA, PB).

#ifndef PURECAV_PURIFY_HPP
#define PURECAV_PURIFY_HPP

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "purecav/qcore.hpp"
#include "purecav/spinchain.hpp"
#include "purecav/states.hpp"

namespace purecav {

enum class Scheme { Original, Modified };

std::string_view scheme_name(Scheme s);
Scheme parse_scheme(std::string_view name);

struct RoundOptions {
    int n = 0;
    double coupling = 1.0;
    SiteLayout layout = kDefaultLayout;
};

struct RoundResult {
    DensityOperator post_state;
    double success_probability;
    double F_out;
    double G_out;
    /// Indexed by the measured bits (1A, 2A, 1B, 2B) read as a binary number, 1A most significant.
    std::array<double, 16> outcome_probabilities;

    double rejected_probability() const;
};

/// Outcome bits (1A, 2A, 1B, 2B) that herald success: 0101 and 1010.
bool outcome_accepted(unsigned bits);

/// Two independent rank-two pairs (1A,1B) and (2A,2B), returned in the order (1A, 2A, 1B, 2B).
DensityOperator separate_pairs(double f);

/// One round for arbitrary four-qubit temporaries and a two-qubit permanent pair.
/// Throws NullOutcome when no accepted branch has weight.
RoundResult purification_round(const DensityOperator &temporaries, const DensityOperator &perm,
                               const RoundOptions &opt = {});

RoundResult round_original(double f, const DensityOperator &perm, int n = 0);
RoundResult round_modified(double f, const DensityOperator &perm, int n = 0);

/// Closed-form output fidelity of one round; arguments in [0.5, 1].
double closed_form_original(double f, double fp);
double closed_form_modified(double f, double fp);
double closed_form(Scheme s, double f, double fp);

struct FidelitySequence {
    Scheme scheme;
    double f;
    std::vector<double> values;  // F_1 ... F_n
};

/// F_k = F(f, F_{k-1}) with F_0 = f.
FidelitySequence iterate(Scheme s, double f, int rounds);

/// Three-round polynomials for the start F_0 = f.
double fixed_point_original(double f);
double fixed_point_modified(double f);

/// F_n - f.
double fhat(Scheme s, double f, int n);

/// Modified-scheme initialization: permanent atoms in |00>, temporaries unfused.
RoundResult init_round(double f, int n = 0);

/// Closed-form (F_0, G_0) of the initialization round.
PermanentState init_closed_form(double f);

/// Closed-form (F_3, G_3) after initialization plus three modified rounds.
PermanentState init_three_rounds_closed_form(double f);

struct InitSequence {
    std::vector<double> F;  // F_0 ... F_n
    std::vector<double> G;
    std::vector<double> success;  // P_0 ... P_n
};

/// Initialization round followed by `rounds` simulated modified rounds.
InitSequence init_then_iterate(double f, int rounds, int n = 0);

}  // namespace purecav

#endif
