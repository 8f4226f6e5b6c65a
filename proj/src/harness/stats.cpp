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

#include "tcps/harness/stats.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace tcps::harness {

double mean(std::span<const double> xs) {
    if (xs.empty()) {
        throw std::invalid_argument("mean: empty sample");
    }
    double s = 0.0;
    for (double x : xs) {
        s += x;
    }
    return s / static_cast<double>(xs.size());
}

double sample_variance(std::span<const double> xs) {
    if (xs.size() < 2) {
        throw std::invalid_argument("sample_variance: need at least two values");
    }
    const double m = mean(xs);
    double s = 0.0;
    for (double x : xs) {
        s += (x - m) * (x - m);
    }
    return s / static_cast<double>(xs.size() - 1);
}

LinearFit fit_line(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw std::invalid_argument("fit_line: need at least two (x, y) pairs");
    }
    const double n = static_cast<double>(x.size());
    const double mx = mean(x);
    const double my = mean(y);
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx == 0.0) {
        throw std::invalid_argument("fit_line: x values are all equal");
    }
    LinearFit f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    double rss = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = y[i] - f.intercept - f.slope * x[i];
        rss += r * r;
    }
    if (x.size() > 2) {
        f.slope_se = std::sqrt(rss / (n - 2.0) / sxx);
    }
    f.r_squared = syy > 0.0 ? 1.0 - rss / syy : 1.0;
    return f;
}

LinearFit fit_loglog(std::span<const double> x, std::span<const double> y) {
    std::vector<double> lx(x.size()), ly(y.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0.0)) {
            throw std::invalid_argument("fit_loglog: x must be positive");
        }
        lx[i] = std::log(x[i]);
    }
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (!(y[i] > 0.0)) {
            throw std::invalid_argument("fit_loglog: y must be positive");
        }
        ly[i] = std::log(y[i]);
    }
    return fit_line(lx, ly);
}

}  // namespace tcps::harness
