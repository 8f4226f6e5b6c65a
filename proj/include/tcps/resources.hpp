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

#include <algorithm>
#include <cstdint>

namespace tcps {

/// Counters in units of state preparations (t_prep) and measurement events.
/// Each preparation lands in exactly one component bucket, so
/// state_preparations() is the sum of the buckets.
struct ResourceLedger {
    std::uint64_t boundary_preparations = 0;
    std::uint64_t sign_resolution_preparations = 0;
    std::uint64_t encoding_preparations = 0;
    std::uint64_t correction_preparations = 0;
    std::uint64_t qee_preparations = 0;

    std::uint64_t projective_measurements = 0;
    std::uint64_t nisq_memory_interactions = 0;
    std::uint64_t encoding_repetitions = 0;
    /// Longest stretch of preparations, within one repetition, during which
    /// the memory qubit has to hold its phase.
    std::uint64_t memory_coherence_proxy = 0;

    std::uint64_t state_preparations() const noexcept {
        return boundary_preparations + sign_resolution_preparations + encoding_preparations +
               correction_preparations + qee_preparations;
    }

    ResourceLedger &operator+=(const ResourceLedger &o) noexcept {
        boundary_preparations += o.boundary_preparations;
        sign_resolution_preparations += o.sign_resolution_preparations;
        encoding_preparations += o.encoding_preparations;
        correction_preparations += o.correction_preparations;
        qee_preparations += o.qee_preparations;
        projective_measurements += o.projective_measurements;
        nisq_memory_interactions += o.nisq_memory_interactions;
        encoding_repetitions += o.encoding_repetitions;
        memory_coherence_proxy = std::max(memory_coherence_proxy, o.memory_coherence_proxy);
        return *this;
    }

    friend bool operator==(const ResourceLedger &, const ResourceLedger &) = default;
};

}  // namespace tcps
