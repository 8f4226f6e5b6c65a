// Copyright 2026 The tcps-sim Authors
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

#include "tcps/special_functions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace tcps {

namespace {

void check_parameter(double t, const char *who) {
    if (!(t >= 0.0 && t < 1.0)) {
        throw std::domain_error(std::string(who) + ": parameter t must lie in [0, 1)");
    }
}

}  // namespace

double elliptic_K(double t) {
    check_parameter(t, "elliptic_K");
    double a = 1.0;
    double b = std::sqrt(1.0 - t);
    for (int i = 0; i < 64 && std::abs(a - b) > 1e-16 * a; ++i) {
        const double next_a = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = next_a;
    }
    return std::numbers::pi / (2.0 * a);
}

double elliptic_series(double t) {
    check_parameter(t, "elliptic_series");
    // Term ratio ((2n-1)/(2n))^2 t.
    double term = 1.0;
    double sum = 0.0;
    for (int n = 1; n < 100000; ++n) {
        const double r = (2.0 * n - 1.0) / (2.0 * n);
        term *= r * r * t;
        sum += term;
        if (term <= 1e-17 * sum) {
            break;
        }
    }
    return sum;
}

double elliptic_K_asymptotic(double t) {
    check_parameter(t, "elliptic_K_asymptotic");
    const double pi = std::numbers::pi;
    return pi / 2.0 + (pi / 8.0) * t / (1.0 - t) - (pi / 16.0) * t * t / (1.0 - t);
}

}  // namespace tcps
