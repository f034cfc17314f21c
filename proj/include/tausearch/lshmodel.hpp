// Copyright 2026 tausearch developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>

namespace tausearch {

enum class Scheme { One, Two };

/// Closed-form sensitivity quantities for one scheme at one (k, theta_d)
/// operating point. Scheme One concatenates two item-presence projections
/// (m = 2) and lives in Jaccard-distance space, r = 1 - P1; Scheme Two uses
/// a single rank-order projection (m = 1) with r = theta_d directly.
struct SensitivityModel {
    std::uint32_t k = 0;
    double theta_d = 0.0;
    Scheme scheme = Scheme::One;
    unsigned m = 2;
    double c = 2.0;   // approximation factor, > 1
    double r = 0.0;   // near radius in the scheme's native distance
    double p1 = 0.0;  // collision probability inside the near ball
    double p2 = 0.0;  // collision bound outside the c*r ball
};

SensitivityModel make_sensitivity_model(std::uint32_t k, double theta_d,
                                        Scheme scheme, double c);

/// Scheme 1 near collision probability: the Jaccard similarity floor
/// mu / (2k - mu) with the real-valued overlap floor mu = k - sqrt(theta_d).
/// The analytic model keeps mu real; query-time pruning is what uses the
/// integer ceiling.
double p1_scheme1(std::uint32_t k, double theta_d);

/// Scheme 2 near collision probability: 1 - theta_d / k^2.
double p1_scheme2(std::uint32_t k, double theta_d);

/// Far collision bound 1 - c * (1 - p1), clamped into [0, 1]. Strictly below
/// p1 whenever p1 < 1 and c > 1.
double p2_of(double p1, double c);

/// Probability of becoming a candidate under l lookups of m-fold
/// concatenations: 1 - (1 - p1^m)^l. Non-decreasing in l and in p1.
double candidate_probability(double p1, unsigned m, unsigned l);

/// Scheme 1 single-lookup candidate probability,
/// (k - sqrt(theta_d))^2 / (k + sqrt(theta_d))^2.
double f1(std::uint32_t k, double theta_d);

/// Scheme 2 single-lookup candidate probability, 1 - theta_d / k^2.
double f2(std::uint32_t k, double theta_d);

/// f1 / f2 in closed form: k^2 (k - sqrt(theta_d)) / (k + sqrt(theta_d))^3,
/// which never exceeds 1. Requires theta_d < k^2.
double f_ratio(std::uint32_t k, double theta_d);

}  // namespace tausearch
