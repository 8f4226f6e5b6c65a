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

namespace tcps {

/// Complete elliptic integral of the first kind in parameter form,
/// K(t) = int_0^{pi/2} dtheta / sqrt(1 - t sin^2 theta), via the
/// arithmetic-geometric mean. Requires t in [0, 1).
double elliptic_K(double t);

/// sum_{n>=1} ((2n)!)^2 t^n / (2^{4n} (n!)^4), which equals (2/pi) K(t) - 1.
/// Summed term by term until the increment drops below 1e-17 relative.
double elliptic_series(double t);

/// pi/2 + (pi/8) t/(1-t) - (pi/16) t^2/(1-t).
double elliptic_K_asymptotic(double t);

}  // namespace tcps
