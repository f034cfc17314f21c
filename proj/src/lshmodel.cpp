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

#include "tausearch/lshmodel.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace tausearch {

double p1_scheme1(std::uint32_t k, double theta_d) {
    assert(theta_d >= 0.0 && theta_d <= static_cast<double>(k) * k);
    const double overlap_floor = static_cast<double>(k) - std::sqrt(theta_d);
    return overlap_floor / (2.0 * k - overlap_floor);
}

double p1_scheme2(std::uint32_t k, double theta_d) {
    assert(theta_d >= 0.0 && theta_d <= static_cast<double>(k) * k);
    return 1.0 - theta_d / (static_cast<double>(k) * k);
}

double p2_of(double p1, double c) {
    assert(p1 >= 0.0 && p1 <= 1.0);
    assert(c > 1.0);
    return std::clamp(1.0 - c * (1.0 - p1), 0.0, 1.0);
}

double candidate_probability(double p1, unsigned m, unsigned l) {
    assert(p1 >= 0.0 && p1 <= 1.0);
    assert(m >= 1 && l >= 1);
    return 1.0 - std::pow(1.0 - std::pow(p1, static_cast<double>(m)),
                          static_cast<double>(l));
}

double f1(std::uint32_t k, double theta_d) {
    const double root = std::sqrt(theta_d);
    const double near = static_cast<double>(k) - root;
    const double far = static_cast<double>(k) + root;
    return (near * near) / (far * far);
}

double f2(std::uint32_t k, double theta_d) {
    return 1.0 - theta_d / (static_cast<double>(k) * k);
}

double f_ratio(std::uint32_t k, double theta_d) {
    assert(theta_d < static_cast<double>(k) * k);
    const double root = std::sqrt(theta_d);
    const double far = static_cast<double>(k) + root;
    return static_cast<double>(k) * k * (static_cast<double>(k) - root) /
           (far * far * far);
}

SensitivityModel make_sensitivity_model(std::uint32_t k, double theta_d,
                                        Scheme scheme, double c) {
    SensitivityModel model;
    model.k = k;
    model.theta_d = theta_d;
    model.scheme = scheme;
    model.c = c;
    if (scheme == Scheme::One) {
        model.m = 2;
        model.p1 = p1_scheme1(k, theta_d);
        model.r = 1.0 - model.p1;
    } else {
        model.m = 1;
        model.p1 = p1_scheme2(k, theta_d);
        model.r = theta_d;
    }
    model.p2 = p2_of(model.p1, c);
    return model;
}

}  // namespace tausearch
