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

#pragma once

#include <span>

namespace tcps::harness {

double mean(std::span<const double> xs);
/// Unbiased sample variance; requires at least two values.
double sample_variance(std::span<const double> xs);

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double slope_se = 0.0;  // 0 when there are only two points
    double r_squared = 0.0;
};

/// Ordinary least squares y = intercept + slope x; at least two distinct x.
LinearFit fit_line(std::span<const double> x, std::span<const double> y);
/// fit_line on (log x, log y); all values must be positive.
LinearFit fit_loglog(std::span<const double> x, std::span<const double> y);

}  // namespace tcps::harness
